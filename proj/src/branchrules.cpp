#include "lierep/branchrules.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

#include "lierep/embedded_data.hpp"

namespace lierep {

namespace {

struct ParseError {
    std::string message;
};

IndexExpr parse_index(std::string_view text)
{
    IndexExpr e;
    std::size_t pos = 0;
    if (text.empty())
        throw ParseError{"empty index expression"};
    while (pos < text.size()) {
        std::int64_t sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            throw ParseError{"expected + or - in index '" + std::string(text) + "'"};
        }
        std::int64_t value = 0;
        bool digits = false;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            digits = true;
            ++pos;
        }
        char var = 0;
        if (pos < text.size() && (text[pos] == 'n' || text[pos] == 'i'))
            var = text[pos++];
        if (!digits && !var)
            throw ParseError{"malformed index '" + std::string(text) + "'"};
        if (!digits)
            value = 1;
        value *= sign;
        if (var == 'n')
            e.n_coeff += value;
        else if (var == 'i')
            e.i_coeff += value;
        else
            e.constant += value;
    }
    return e;
}

std::pair<IndexExpr, std::int64_t> parse_bound(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return {parse_index(text), 1};
    auto den_text = text.substr(slash + 1);
    if (den_text.empty() || !std::all_of(den_text.begin(), den_text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError{"malformed bound '" + std::string(text) + "'"};
    std::int64_t den = std::stoll(std::string(den_text));
    if (den <= 0)
        throw ParseError{"non-positive denominator in '" + std::string(text) + "'"};
    return {parse_index(text.substr(0, slash)), den};
}

IndexRange parse_range(const std::string& text)
{
    static const std::regex re(R"(^(.+?)(<=|<)i(<=|<)(.+)$)");
    std::smatch m;
    if (!std::regex_match(text, m, re))
        throw ParseError{"malformed range '" + text + "' (expected e.g. 1<=i<n/2)"};
    IndexRange r;
    std::tie(r.lo, r.lo_den) = parse_bound(m[1].str());
    std::tie(r.hi, r.hi_den) = parse_bound(m[4].str());
    r.lo_strict = m[2].str() == "<";
    r.hi_strict = m[3].str() == "<";
    if (r.lo.i_coeff || r.hi.i_coeff)
        throw ParseError{"range bounds may not depend on i"};
    return r;
}

// "<expr>[^p]"
ShiftSpec parse_shift(const std::string& token)
{
    ShiftSpec s;
    std::string expr = token;
    if (auto caret = token.rfind('^'); caret != std::string::npos) {
        auto p = token.substr(caret + 1);
        if (p.empty() || !std::all_of(p.begin(), p.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError{"malformed multiplicity in '" + token + "'"};
        s.mult = BigInt(p);
        if (s.mult == 0)
            throw ParseError{"zero multiplicity in '" + token + "'"};
        expr = token.substr(0, caret);
    }
    if (!expr.empty() && expr.front() == '[') {
        try {
            s.literal = parse_weight(expr);
        } catch (const std::exception& e) {
            throw ParseError{e.what()};
        }
        return s;
    }
    static const std::regex term_re(R"(([+-]?)(\d*)w\(([^)]*)\))");
    std::size_t consumed = 0;
    for (auto it = std::sregex_iterator(expr.begin(), expr.end(), term_re); it != std::sregex_iterator(); ++it) {
        const auto& m = *it;
        if (static_cast<std::size_t>(m.position()) != consumed)
            throw ParseError{"malformed weight expression '" + expr + "'"};
        if (consumed != 0 && m[1].str().empty())
            throw ParseError{"missing sign between terms in '" + expr + "'"};
        FundamentalTerm t;
        t.coeff = m[2].str().empty() ? 1 : std::stoll(m[2].str());
        if (m[1].str() == "-")
            t.coeff = -t.coeff;
        t.index = parse_index(m[3].str());
        s.terms.push_back(t);
        consumed += static_cast<std::size_t>(m.length());
    }
    if (consumed != expr.size() || s.terms.empty())
        throw ParseError{"malformed weight expression '" + expr + "'"};
    return s;
}

std::vector<std::string> split_ws(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;)
        out.push_back(tok);
    return out;
}

// "D5", "E6", or the pair "D n".
void parse_system(const std::vector<std::string>& tok, ClosedFormRule& rule)
{
    if (tok.size() == 3 && tok[1] == "D" && tok[2] == "n") {
        rule.series = Series::D;
        rule.fixed_rank.reset();
        rule.min_rank = 3;
        return;
    }
    if (tok.size() != 2 || tok[1].size() < 2)
        throw ParseError{"system expects e.g. 'E6' or 'D n'"};
    switch (tok[1][0]) {
    case 'A': rule.series = Series::A; break;
    case 'D': rule.series = Series::D; break;
    case 'E': rule.series = Series::E; break;
    default: throw ParseError{"unsupported series in '" + tok[1] + "'"};
    }
    rule.fixed_rank = std::stoi(tok[1].substr(1));
    root_system(rule.series, *rule.fixed_rank);  // validates
}

std::int64_t param_value(const RuleParams& p, const std::string& name, const std::string& rule)
{
    auto it = p.find(name);
    if (it == p.end())
        throw std::invalid_argument("rule " + rule + ": missing parameter '" + name + "'");
    return it->second;
}

}  // namespace

std::vector<std::int64_t> IndexRange::values(std::int64_t n) const
{
    // i is admissible iff lo_num/lo_den (<|<=) i (<|<=) hi_num/hi_den.
    const std::int64_t lo_num = lo.eval(n), hi_num = hi.eval(n);
    std::vector<std::int64_t> out;
    for (std::int64_t i = -4 * (std::abs(lo_num) + 1); i <= 4 * (std::abs(hi_num) + 1); ++i) {
        const std::int64_t left = i * lo_den, right = i * hi_den;
        bool ok_lo = lo_strict ? lo_num < left : lo_num <= left;
        bool ok_hi = hi_strict ? right < hi_num : right <= hi_num;
        if (ok_lo && ok_hi)
            out.push_back(i);
    }
    return out;
}

std::vector<Weight> ShiftSpec::expand(std::int64_t rank) const
{
    if (literal) {
        if (static_cast<std::int64_t>(literal->rank()) != rank)
            throw std::invalid_argument("offset " + literal->to_string() + " does not have rank " + std::to_string(rank));
        return {*literal};
    }
    std::vector<std::int64_t> is = range ? range->values(rank) : std::vector<std::int64_t>{0};
    std::vector<Weight> out;
    for (auto i : is) {
        Weight w = Weight::zero(static_cast<std::size_t>(rank));
        for (const auto& t : terms) {
            auto k = t.index.eval(rank, i);
            if (k < 1 || k > rank)
                throw std::invalid_argument("fundamental weight index " + std::to_string(k) + " out of range at n=" +
                                            std::to_string(rank) + ", i=" + std::to_string(i));
            w[static_cast<std::size_t>(k - 1)] += t.coeff;
        }
        out.push_back(std::move(w));
    }
    return out;
}

const RootSystem& ClosedFormRule::system(const RuleParams& p) const
{
    if (fixed_rank)
        return root_system(series, *fixed_rank);
    auto n = param_value(p, "n", id);
    if (n < min_rank)
        throw std::invalid_argument("rule " + id + " needs n >= " + std::to_string(min_rank) + ", got " + std::to_string(n));
    return root_system(series, static_cast<int>(n));
}

Weight ClosedFormRule::factor_weight(const RuleParams& p) const
{
    const auto& rs = system(p);
    auto ws = factor.expand(rs.rank());
    if (ws.size() != 1)
        throw std::logic_error("rule " + id + ": factor must be a single weight");
    return ws.front();
}

Weight ClosedFormRule::family_weight(const RuleParams& p) const
{
    const auto& rs = system(p);
    Weight w = Weight::zero(static_cast<std::size_t>(rs.rank()));
    for (const auto& fp : family) {
        auto v = param_value(p, fp.name, id);
        if (v < 0)
            throw std::invalid_argument("rule " + id + ": parameter " + fp.name + " must be non-negative");
        auto k = fp.position.eval(rs.rank());
        if (k < 1 || k > rs.rank())
            throw std::invalid_argument("rule " + id + ": family coordinate out of range");
        w[static_cast<std::size_t>(k - 1)] += v;
    }
    return w;
}

RuleBook RuleBook::parse(std::string_view text, std::string source)
{
    RuleBook book;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    std::optional<ClosedFormRule> current;
    auto fail = [&](const std::string& msg) {
        return std::invalid_argument(source + ":" + std::to_string(lineno) + ": " + msg);
    };
    try {
        while (std::getline(in, raw)) {
            ++lineno;
            if (auto hash = raw.find('#'); hash != std::string::npos)
                raw.erase(hash);
            auto tok = split_ws(raw);
            if (tok.empty())
                continue;
            const auto& key = tok[0];
            if (!current) {
                if (key == "format") {
                    if (tok.size() != 2)
                        throw ParseError{"format expects a version number"};
                    book.version_ = std::stoi(tok[1]);
                    if (book.version_ != 1)
                        throw ParseError{"unsupported rule file format " + tok[1]};
                } else if (key == "rule") {
                    if (tok.size() != 2)
                        throw ParseError{"rule expects an identifier"};
                    current.emplace();
                    current->id = tok[1];
                    current->source = source;
                    current->line = lineno;
                } else {
                    throw ParseError{"unexpected '" + key + "' outside a rule"};
                }
                continue;
            }
            ClosedFormRule& r = *current;
            auto check_rank = [&r](const ShiftSpec& sp) {
                if (r.fixed_rank && sp.literal && sp.literal->rank() != static_cast<std::size_t>(*r.fixed_rank))
                    throw ParseError{"weight " + sp.literal->to_string() + " does not have rank " +
                                     std::to_string(*r.fixed_rank)};
            };
            if (key == "end") {
                if (r.family.empty() || (!r.factor.literal && r.factor.terms.empty()))
                    throw ParseError{"rule " + r.id + " lacks family or factor"};
                for (const auto& other : book.rules_)
                    if (other.id == r.id)
                        throw ParseError{"duplicate rule id " + r.id};
                book.rules_.push_back(std::move(r));
                current.reset();
            } else if (key == "system") {
                parse_system(tok, r);
            } else if (key == "min-n") {
                if (tok.size() != 2)
                    throw ParseError{"min-n expects an integer"};
                r.min_rank = std::stoi(tok[1]);
            } else if (key == "params") {
                r.params.assign(tok.begin() + 1, tok.end());
            } else if (key == "family") {
                for (std::size_t k = 1; k < tok.size(); ++k) {
                    auto at = tok[k].find('@');
                    if (at == std::string::npos)
                        throw ParseError{"family entries read <param>@<index>"};
                    FamilyParam fp{tok[k].substr(0, at), parse_index(tok[k].substr(at + 1))};
                    if (std::find(r.params.begin(), r.params.end(), fp.name) == r.params.end())
                        throw ParseError{"family parameter '" + fp.name + "' is not declared in params"};
                    if (r.fixed_rank && fp.position.n_coeff == 0 && fp.position.i_coeff == 0 &&
                        (fp.position.constant < 1 || fp.position.constant > *r.fixed_rank))
                        throw ParseError{"family index " + std::to_string(fp.position.constant) + " out of range"};
                    r.family.push_back(std::move(fp));
                }
            } else if (key == "factor") {
                if (tok.size() != 2)
                    throw ParseError{"factor expects one weight"};
                r.factor = parse_shift(tok[1]);
                r.factor.line = lineno;
                check_rank(r.factor);
            } else if (key == "trivial-family") {
                if (tok.size() != 2 || tok[1] != "factor")
                    throw ParseError{"expected 'trivial-family factor'"};
                r.trivial_family_is_factor = true;
            } else if (key == "claim") {
                if (tok.size() != 2 || tok[1] != "multiplicity-free")
                    throw ParseError{"unknown claim"};
                r.claims_multiplicity_free = true;
            } else if (key == "nu") {
                if (tok.size() != 2 && !(tok.size() == 4 && tok[2] == "for"))
                    throw ParseError{"nu expects '<weight>[^p] [for <range>]'"};
                auto s = parse_shift(tok[1]);
                if (tok.size() == 4) {
                    if (s.literal)
                        throw ParseError{"ranges apply to symbolic weights only"};
                    s.range = parse_range(tok[3]);
                }
                s.line = lineno;
                check_rank(s);
                r.shifts.push_back(std::move(s));
            } else if (key == "sub") {
                if (tok.size() != 3)
                    throw ParseError{"sub expects '<cond> <weight>[^p]'"};
                Correction c;
                std::stringstream conds(tok[1]);
                for (std::string cond; std::getline(conds, cond, '|');) {
                    if (cond.size() < 3 || cond.substr(cond.size() - 2) != "=0")
                        throw ParseError{"condition '" + cond + "' must read <param>=0"};
                    c.zero_params.push_back(cond.substr(0, cond.size() - 2));
                }
                c.shift = parse_shift(tok[2]);
                c.shift.line = lineno;
                check_rank(c.shift);
                for (const auto& z : c.zero_params)
                    if (std::find(r.params.begin(), r.params.end(), z) == r.params.end())
                        throw ParseError{"condition on undeclared parameter '" + z + "'"};
                r.corrections.push_back(std::move(c));
            } else {
                throw ParseError{"unknown directive '" + key + "'"};
            }
        }
        if (current)
            throw ParseError{"rule " + current->id + " is missing 'end'"};
    } catch (const ParseError& e) {
        throw fail(e.message);
    } catch (const std::invalid_argument& e) {
        throw fail(e.what());
    } catch (const std::out_of_range& e) {
        throw fail(e.what());
    }
    if (book.version_ == 0)
        throw std::invalid_argument(source + ": missing 'format' line");
    return book;
}

RuleBook RuleBook::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open rule file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

const RuleBook& RuleBook::builtin()
{
    static const RuleBook book = parse(embedded::rules_text, "data/rules.txt");
    return book;
}

const ClosedFormRule& RuleBook::find(std::string_view id) const
{
    for (const auto& r : rules_)
        if (r.id == id)
            return r;
    std::string known;
    for (const auto& r : rules_)
        known += (known.empty() ? "" : ", ") + r.id;
    throw std::invalid_argument("unknown rule '" + std::string(id) + "' (known: " + known + ")");
}

Decomposition closed_form(const ClosedFormRule& rule, const RuleParams& params)
{
    for (const auto& name : rule.params) {
        auto v = param_value(params, name, rule.id);
        if (v < 0)
            throw std::invalid_argument("rule " + rule.id + ": parameter " + name + " must be non-negative");
    }
    const RootSystem& rs = rule.system(params);
    const Weight factor = rule.factor_weight(params);
    const Weight family = rule.family_weight(params);
    Decomposition out{&rs, factor, family, {}};

    if (rule.trivial_family_is_factor && family.is_zero()) {
        out.components.emplace(factor, 1);
        return out;
    }

    WeightMap acc;
    for (const auto& s : rule.shifts)
        for (const auto& nu : s.expand(rs.rank())) {
            Weight target = family + nu;
            if (target.is_dominant())
                acc[target] += s.mult;
        }
    for (const auto& c : rule.corrections) {
        bool applies = false;
        for (const auto& name : c.zero_params)
            applies = applies || param_value(params, name, rule.id) == 0;
        if (!applies)
            continue;
        for (const auto& nu : c.shift.expand(rs.rank())) {
            Weight target = family + nu;
            if (!target.is_dominant())
                continue;
            auto& slot = acc[target];
            slot -= c.shift.mult;
            if (slot < 0)
                throw std::runtime_error(rule.source + ":" + std::to_string(c.shift.line) + ": correction drives " +
                                         target.to_string() + " negative at " + format_params(params));
        }
    }
    for (auto& [w, m] : acc)
        if (m > 0)
            out.components.emplace(w, m);
    return out;
}

bool RuleReport::all_match() const
{
    return mismatches() == 0;
}

std::size_t RuleReport::mismatches() const
{
    std::size_t n = 0;
    for (const auto& p : points)
        n += p.match ? 0 : 1;
    return n;
}

RuleReport verify_rule(const ClosedFormRule& rule, const std::vector<RuleParams>& grid)
{
    RuleReport report{rule.id, {}};
    for (const auto& params : grid) {
        RulePointResult point;
        point.params = params;
        const RootSystem& rs = rule.system(params);
        point.computed = tensor_decompose(rs, rule.factor_weight(params), rule.family_weight(params));
        try {
            point.predicted = closed_form(rule, params);
        } catch (const std::runtime_error& e) {
            point.note = e.what();
        }
        if (point.predicted) {
            point.match = point.predicted->components == point.computed.components;
            if (!point.match)
                point.note = "closed form differs from the tensor engine";
            else if (rule.claims_multiplicity_free && point.computed.max_multiplicity() > 1) {
                point.match = false;
                point.note = "rule claims multiplicity-free but the product has multiplicity " +
                             point.computed.max_multiplicity().str();
            }
        }
        report.points.push_back(std::move(point));
    }
    return report;
}

std::vector<RuleParams> parameter_grid(const ClosedFormRule& rule, std::int64_t bound, const RuleParams& fixed)
{
    std::vector<RuleParams> grid{fixed};
    for (const auto& name : rule.params) {
        if (fixed.count(name))
            continue;
        std::vector<RuleParams> next;
        for (const auto& g : grid)
            for (std::int64_t v = 0; v <= bound; ++v) {
                auto p = g;
                p[name] = v;
                next.push_back(std::move(p));
            }
        grid = std::move(next);
    }
    return grid;
}

std::string format_params(const RuleParams& p)
{
    std::string out;
    for (const auto& [k, v] : p)
        out += (out.empty() ? "" : ",") + k + "=" + std::to_string(v);
    return out;
}

}  // namespace lierep
