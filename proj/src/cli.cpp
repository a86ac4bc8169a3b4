#include "lierep/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <optional>
#include <sstream>

#include "lierep/branchrules.hpp"
#include "lierep/json_io.hpp"
#include "lierep/weyl.hpp"

namespace lierep::cli {

namespace {

using nlohmann::json;
namespace jio = lierep::json;

struct Options {
    std::string format = "text";
    std::string rules_path, pairs_path;

    std::string type, weight, left, right;
    bool dominant_only = false, oracle = false, check = false;

    std::string rule_id, rule_params, rule_n;
    bool list_rules = false;
    std::int64_t bound = -1;

    std::string pair_id, module, xi, source = "hpz", group = "2,3,4,5", suite = "all";
    int max_level = 8;
    bool printed = false;
};

struct Context {
    Options opt;
    std::ostringstream out;
    std::optional<RuleBook> rules;
    std::optional<PairBook> pairs;

    bool as_json() const { return opt.format == "json"; }
    const RuleBook& rule_book()
    {
        if (opt.rules_path.empty())
            return RuleBook::builtin();
        if (!rules)
            rules = RuleBook::load(opt.rules_path);
        return *rules;
    }
    const PairBook& pair_book()
    {
        if (opt.pairs_path.empty())
            return PairBook::builtin();
        if (!pairs)
            pairs = PairBook::load(opt.pairs_path);
        return *pairs;
    }
    void emit(const json& j) { out << j.dump() << "\n"; }
};

std::vector<int> parse_positions(const std::string& text)
{
    std::vector<int> out;
    for (auto v : parse_weight(text))
        out.push_back(static_cast<int>(v));
    return out;
}

RuleParams parse_params(const std::string& text)
{
    RuleParams p;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
            throw std::invalid_argument("parameter '" + item + "' must read name=value");
        std::size_t pos = 0;
        const auto value_text = item.substr(eq + 1);
        const auto v = std::stoll(value_text, &pos);
        if (pos != value_text.size())
            throw std::invalid_argument("parameter '" + item + "' has a non-integer value");
        p[item.substr(0, eq)] = v;
    }
    return p;
}

// "5" or "4..7"
std::vector<std::int64_t> parse_n_range(const std::string& text)
{
    auto dots = text.find("..");
    std::int64_t lo = 0, hi = 0;
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoll(text);
        } else {
            lo = std::stoll(text.substr(0, dots));
            hi = std::stoll(text.substr(dots + 2));
        }
    } catch (const std::logic_error&) {
        throw std::invalid_argument("--n expects N or LO..HI, got '" + text + "'");
    }
    if (lo > hi)
        throw std::invalid_argument("empty range for --n");
    std::vector<std::int64_t> out;
    for (auto n = lo; n <= hi; ++n)
        out.push_back(n);
    return out;
}

std::string ktype_text(const Weight& ss, std::int64_t central)
{
    return KType{ss, central}.to_string();
}

std::string positions_text(const std::vector<std::int64_t>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

void print_decomposition(Context& cx, const Decomposition& d)
{
    if (cx.as_json()) {
        auto j = jio::from_decomposition(d);
        j["dimension"] = jio::from_bigint(d.dimension());
        cx.emit(j);
        return;
    }
    cx.out << d.system->name() << ": " << d.left.to_string() << " x " << d.right.to_string() << "\n";
    for (const auto& [w, m] : d.components)
        cx.out << "  " << w.to_string() << " x" << m.str() << "\n";
    cx.out << d.components.size() << " components, dimension " << d.dimension().str() << "\n";
}

void print_series(Context& cx, const KCharacterSeries& s, const std::string& title)
{
    if (cx.as_json()) {
        cx.emit(jio::from_series(s));
        return;
    }
    cx.out << title << "\n";
    for (const auto& [l, entries] : s.levels) {
        const auto c = s.central_at(l);
        cx.out << "level " << l << "  central " << c << "  dim " << s.level_dimension(l).str() << "\n";
        for (const auto& [w, m] : entries)
            cx.out << "  " << ktype_text(w, c) << " x" << m.str() << "\n";
    }
}

int cmd_roots(Context& cx)
{
    const auto& rs = root_system(cx.opt.type);
    if (cx.as_json()) {
        json roots = json::array();
        for (const auto& r : rs.positive_roots())
            roots.push_back({{"simple", r.simple}, {"weight", jio::from_weight(r.fundamental)}, {"height", r.height}});
        cx.emit({{"system", jio::system_json(rs)}, {"roots", roots}});
        return ok;
    }
    cx.out << rs.name() << ": " << rs.positive_roots().size() << " positive roots, |W| = " << rs.weyl_group_order().str()
           << "\n";
    for (const auto& r : rs.positive_roots())
        cx.out << "  height " << r.height << "  simple " << Weight(r.simple).to_string() << "  weight "
               << r.fundamental.to_string() << "\n";
    return ok;
}

int cmd_dominant(Context& cx)
{
    const auto& rs = root_system(cx.opt.type);
    const auto input = parse_rational_list(cx.opt.weight);
    auto r = to_dominant_rational(rs, input);
    if (cx.as_json()) {
        cx.emit({{"system", jio::system_json(rs)},
                 {"input", jio::from_weight(integral_weight(input))},
                 {"dominant", jio::from_weight(r.dominant)},
                 {"sign", r.sign},
                 {"reflections", r.reflections}});
        return ok;
    }
    cx.out << "dominant " << r.dominant.to_string() << "  sign " << (r.sign > 0 ? "+1" : r.sign < 0 ? "-1" : "0")
           << "  reflections " << r.reflections << "\n";
    return ok;
}

int cmd_dim(Context& cx)
{
    const auto& rs = root_system(cx.opt.type);
    const auto w = parse_weight(cx.opt.weight);
    const auto d = weyl_dimension(rs, w);
    if (cx.as_json())
        cx.emit({{"system", jio::system_json(rs)}, {"weight", jio::from_weight(w)}, {"dim", jio::from_bigint(d)}});
    else
        cx.out << d.str() << "\n";
    return ok;
}

int cmd_weights(Context& cx)
{
    const auto& rs = root_system(cx.opt.type);
    const auto w = parse_weight(cx.opt.weight);
    WeightMap entries;
    BigInt total = weyl_dimension(rs, w);
    if (cx.opt.dominant_only)
        entries = *dominant_weight_multiplicities(rs, w);
    else
        entries = full_weight_multiset(rs, w)->entries;
    if (cx.as_json()) {
        json ws = json::array();
        for (const auto& [mu, m] : entries)
            ws.push_back({{"weight", jio::from_weight(mu)}, {"mult", jio::from_bigint(m)}});
        cx.emit({{"system", jio::system_json(rs)},
                 {"highest", jio::from_weight(w)},
                 {"dim", jio::from_bigint(total)},
                 {"weights", ws}});
        return ok;
    }
    cx.out << rs.name() << " " << w.to_string() << ": dim " << total.str() << ", " << entries.size()
           << (cx.opt.dominant_only ? " dominant" : " distinct") << " weights\n";
    for (const auto& [mu, m] : entries)
        cx.out << "  " << mu.to_string() << " x" << m.str() << "\n";
    return ok;
}

int cmd_tensor(Context& cx)
{
    const auto& rs = root_system(cx.opt.type);
    const auto l = parse_weight(cx.opt.left);
    const auto r = parse_weight(cx.opt.right);
    if (cx.opt.check) {
        auto a = tensor_decompose(rs, l, r);
        auto b = tensor_oracle(rs, l, r);
        print_decomposition(cx, a);
        const bool same = a.components == b.components;
        if (!cx.as_json())
            cx.out << (same ? "oracle agrees" : "ORACLE DISAGREES") << "\n";
        return same ? ok : mismatch;
    }
    print_decomposition(cx, cx.opt.oracle ? tensor_oracle(rs, l, r) : tensor_decompose(rs, l, r));
    return ok;
}

std::vector<RuleParams> rule_grid(Context& cx, const ClosedFormRule& rule)
{
    const bool rank_free = !rule.fixed_rank;
    const std::int64_t bound = cx.opt.bound >= 0 ? cx.opt.bound : rank_free ? 2 : 3;
    std::vector<RuleParams> grid;
    if (rank_free) {
        const auto ns = parse_n_range(cx.opt.rule_n.empty() ? "4..7" : cx.opt.rule_n);
        for (auto n : ns) {
            if (n < rule.min_rank)
                throw std::invalid_argument("rule " + rule.id + " needs n >= " + std::to_string(rule.min_rank));
            auto part = parameter_grid(rule, bound, {{"n", n}});
            grid.insert(grid.end(), part.begin(), part.end());
        }
    } else {
        grid = parameter_grid(rule, bound);
    }
    return grid;
}

json point_json(const RulePointResult& p)
{
    json j = {{"params", p.params}, {"match", p.match}, {"computed", jio::from_decomposition(p.computed)}};
    if (p.predicted)
        j["predicted"] = jio::from_decomposition(*p.predicted);
    if (!p.note.empty())
        j["note"] = p.note;
    return j;
}

int cmd_rule(Context& cx)
{
    const auto& book = cx.rule_book();
    if (cx.opt.list_rules || cx.opt.rule_id.empty()) {
        if (cx.as_json()) {
            json ids = json::array();
            for (const auto& r : book.rules())
                ids.push_back({{"id", r.id}, {"params", r.params}});
            cx.emit({{"rules", ids}});
        } else {
            for (const auto& r : book.rules()) {
                cx.out << r.id << "  params";
                if (!r.fixed_rank)
                    cx.out << " n";
                for (const auto& p : r.params)
                    cx.out << " " << p;
                cx.out << "\n";
            }
        }
        return ok;
    }
    const auto& rule = book.find(cx.opt.rule_id);
    if (!cx.opt.rule_params.empty()) {
        auto report = verify_rule(rule, {parse_params(cx.opt.rule_params)});
        const auto& p = report.points.front();
        if (cx.as_json()) {
            cx.emit(point_json(p));
        } else {
            cx.out << rule.id << " at " << format_params(p.params) << "\n";
            if (p.predicted) {
                cx.out << "predicted:\n";
                for (const auto& [w, m] : p.predicted->components)
                    cx.out << "  " << w.to_string() << " x" << m.str() << "\n";
            }
            cx.out << "computed:\n";
            for (const auto& [w, m] : p.computed.components)
                cx.out << "  " << w.to_string() << " x" << m.str() << "\n";
            cx.out << (p.match ? "MATCH" : "MISMATCH: " + p.note) << "\n";
        }
        return p.match ? ok : mismatch;
    }
    auto report = verify_rule(rule, rule_grid(cx, rule));
    if (cx.as_json()) {
        json pts = json::array();
        for (const auto& p : report.points)
            if (!p.match)
                pts.push_back(point_json(p));
        cx.emit({{"rule", rule.id},
                 {"points", report.points.size()},
                 {"mismatches", report.mismatches()},
                 {"failures", pts}});
    } else {
        for (const auto& p : report.points)
            if (!p.match)
                cx.out << "  mismatch at " << format_params(p.params) << ": " << p.note << "\n";
        cx.out << rule.id << ": " << report.points.size() << " points, " << report.mismatches() << " mismatches\n";
    }
    return report.all_match() ? ok : mismatch;
}

int cmd_schmid(Context& cx)
{
    const auto& pair = cx.pair_book().find(cx.opt.pair_id);
    const auto comps = schmid_components(pair, cx.opt.max_level);
    KCharacterSeries s;
    s.pair = &pair;
    s.max_level = cx.opt.max_level;
    for (int l = 0; l <= cx.opt.max_level; ++l)
        s.levels[l];
    for (const auto& c : comps)
        s.levels[c.level][c.ktype.ss] += 1;
    print_series(cx, s,
                 "S(p^-) for " + pair.id + ", degrees 0.." + std::to_string(cx.opt.max_level) + ", dim p^- = " +
                     std::to_string(pair.dim_p_minus));
    return ok;
}

int cmd_kspectrum(Context& cx)
{
    if (!cx.opt.xi.empty()) {
        const auto& pair = cx.pair_book().find(cx.opt.pair_id.empty() ? "EIII" : cx.opt.pair_id);
        const auto xi = parse_ktype(cx.opt.xi, static_cast<std::size_t>(pair.k_rank));
        auto s = verma_k_character(pair, xi, cx.opt.max_level);
        print_series(cx, s, "N(" + xi.to_string() + " - delta_n) on " + pair.id);
        return ok;
    }
    if (cx.opt.module.empty())
        throw std::invalid_argument("kspectrum needs --module or --xi");
    const auto id = canonical_module_id(cx.opt.module);
    auto data = dirac_registry(id);
    if (cx.opt.printed)
        data = data.as_printed();
    const auto& pair = cx.pair_book().find(data.pair_id);
    const std::string range = ", levels 0.." + std::to_string(cx.opt.max_level);
    if (cx.opt.source == "closed") {
        print_series(cx, closed_form_spectrum(pair, id, cx.opt.max_level),
                     id + " on " + pair.id + range + " (closed form " + closed_form_family(id).describe() + ")");
    } else {
        print_series(cx, hpz_k_spectrum(pair, data, cx.opt.max_level), id + " on " + pair.id + range + " (hpz)");
    }
    return ok;
}

json ledger_list(const std::vector<std::pair<KType, Multiplicity>>& v)
{
    json a = json::array();
    for (const auto& [k, m] : v)
        a.push_back({{"ss", jio::from_weight(k.ss)}, {"central", k.central}, {"mult", jio::from_bigint(m)}});
    return a;
}

int cmd_report(Context& cx)
{
    const auto id = canonical_module_id(cx.opt.module);
    auto data = dirac_registry(id);
    if (cx.opt.printed)
        data = data.as_printed();
    const auto& pair = cx.pair_book().find(data.pair_id);
    const auto r = cancellation_report(pair, data, cx.opt.max_level, parse_positions(cx.opt.group));
    std::vector<std::int64_t> grouping(r.grouping.begin(), r.grouping.end());

    if (cx.as_json()) {
        json levels = json::array();
        for (const auto& lvl : r.levels) {
            json buckets = json::array();
            for (const auto& b : lvl.buckets)
                buckets.push_back({{"key", b.key},
                                   {"positive", ledger_list(b.positive)},
                                   {"negative", ledger_list(b.negative)},
                                   {"matched", ledger_list(b.matched)},
                                   {"leftover", ledger_list(b.leftover)},
                                   {"cancels", b.cancels()}});
            levels.push_back({{"level", lvl.level}, {"central", lvl.central}, {"buckets", buckets}});
        }
        cx.emit({{"module", id},
                 {"pair", pair.id},
                 {"grouping", r.grouping},
                 {"delta_n", pair.delta_n},
                 {"levels", levels}});
        return ok;
    }

    // Table-style listing: centrals before the delta_n shift.
    const auto shift = pair.delta_n;
    auto line = [&](char tag, const std::pair<KType, Multiplicity>& e) {
        cx.out << "    " << tag << " " << ktype_text(e.first.ss, e.first.central + shift) << " x" << e.second.str()
               << "\n";
    };
    cx.out << id << " on " << pair.id << ", grouping " << positions_text(grouping) << ", levels 0.." << r.max_level
           << "; K-types shown before the delta_n shift (central + " << shift << ")\n";
    for (const auto& lvl : r.levels) {
        cx.out << "level " << lvl.level << "  central " << lvl.central + shift << "\n";
        for (const auto& b : lvl.buckets) {
            cx.out << "  bucket " << positions_text(b.key) << (b.cancels() ? "  cancels" : "  leftover") << "\n";
            for (const auto& e : b.positive)
                line('+', e);
            for (const auto& e : b.negative)
                line('-', e);
            for (const auto& e : b.leftover)
                line('=', e);
        }
    }
    cx.out << "summary\n";
    for (const auto& key : r.keys()) {
        bool cancels = true;
        std::size_t n = 0;
        for (const auto* b : r.bucket(key)) {
            cancels = cancels && b->cancels();
            n += b->leftover.size();
        }
        cx.out << "  bucket " << positions_text(key) << ": "
               << (cancels ? "cancels completely" : std::to_string(n) + " leftover K-types") << "\n";
    }
    return ok;
}

int cmd_verify(Context& cx)
{
    const auto& suite = cx.opt.suite;
    json checks = json::array();
    bool pass = true;
    auto record = [&](const std::string& name, bool good, const std::string& detail) {
        pass = pass && good;
        checks.push_back({{"name", name}, {"pass", good}, {"detail", detail}});
        if (!cx.as_json())
            cx.out << (good ? "ok    " : "FAIL  ") << name << "  " << detail << "\n";
    };
    if (suite == "spectra" || suite == "all") {
        std::vector<std::string> ids;
        if (!cx.opt.module.empty())
            ids.push_back(canonical_module_id(cx.opt.module));
        else
            ids = registry_ids();
        for (const auto& id : ids) {
            const auto& pair = cx.pair_book().find(dirac_registry(id).pair_id);
            auto r = verify_spectrum(pair, id, cx.opt.max_level);
            std::string detail = std::to_string(r.computed.size()) + " K-types to level " +
                                 std::to_string(r.max_level) + (r.multiplicity_free ? ", multiplicity-free" : "");
            if (!r.note.empty())
                detail += "; " + r.note;
            record("spectrum " + id, r.ok(), detail);
        }
    }
    if (suite == "rules" || suite == "all") {
        const auto& book = cx.rule_book();
        for (const auto& rule : book.rules()) {
            if (!cx.opt.rule_id.empty() && rule.id != cx.opt.rule_id)
                continue;
            auto r = verify_rule(rule, rule_grid(cx, rule));
            record("rule " + rule.id, r.all_match(),
                   std::to_string(r.points.size()) + " points, " + std::to_string(r.mismatches()) + " mismatches");
        }
    }
    if (checks.empty())
        throw std::invalid_argument("nothing to verify for suite '" + suite + "'");
    if (cx.as_json())
        cx.emit({{"suite", suite}, {"pass", pass}, {"checks", checks}});
    else
        cx.out << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? ok : mismatch;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args)
{
    CommandResult result;
    Context cx;
    auto& o = cx.opt;

    CLI::App app{"Exact representation engine for simply-laced Lie algebras", "lierep"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--rules", o.rules_path, "Rule table file (default: built-in data/rules.txt)");
    app.add_option("--pairs", o.pairs_path, "Pair record file (default: built-in data/pairs.txt)");

    std::vector<std::pair<CLI::App*, std::function<int(Context&)>>> commands;
    auto sub = [&](const char* name, const char* help, std::function<int(Context&)> fn) {
        auto* s = app.add_subcommand(name, help);
        commands.emplace_back(s, std::move(fn));
        return s;
    };

    auto* roots = sub("roots", "Positive roots of a root system", cmd_roots);
    roots->add_option("--type", o.type, "E6, E7, D5, A2, ...")->required();

    auto* dom = sub("dominant", "Dominant conjugate with sign", cmd_dominant);
    dom->add_option("--type", o.type)->required();
    dom->add_option("--weight", o.weight, "comma-separated coordinates")->required();

    auto* dim = sub("dim", "Weyl dimension", cmd_dim);
    dim->add_option("--type", o.type)->required();
    dim->add_option("--weight", o.weight)->required();

    auto* wts = sub("weights", "Weights with multiplicities", cmd_weights);
    wts->add_option("--type", o.type)->required();
    wts->add_option("--weight", o.weight)->required();
    wts->add_flag("--dominant-only", o.dominant_only, "Dominant weights only");

    auto* ten = sub("tensor", "Tensor product decomposition", cmd_tensor);
    ten->add_option("--type", o.type)->required();
    ten->add_option("--left", o.left)->required();
    ten->add_option("--right", o.right)->required();
    ten->add_flag("--oracle", o.oracle, "Use the peeling oracle");
    ten->add_flag("--check", o.check, "Compute both ways and compare");

    auto* rule = sub("rule", "Closed-form branching rules", cmd_rule);
    rule->add_option("--id", o.rule_id, "Rule identifier");
    rule->add_flag("--list", o.list_rules, "List rule identifiers");
    rule->add_option("--params", o.rule_params, "Single point, e.g. a=2,f=1 or n=5,a1=1,an1=0");
    rule->add_option("--n", o.rule_n, "Rank or rank range for D_n rules (default 4..7)");
    rule->add_option("--bound", o.bound, "Grid bound per parameter (default 2 for D_n rules, else 3)");

    auto* sch = sub("schmid", "Schmid decomposition of S(p^-)", cmd_schmid);
    sch->add_option("--pair", o.pair_id, "EIII or EVII")->required();
    sch->add_option("--max-level", o.max_level)->check(CLI::NonNegativeNumber);

    auto* ks = sub("kspectrum", "K-spectrum of a registry module or of one N(xi - delta_n)", cmd_kspectrum);
    ks->add_option("--module", o.module, "E6_L_minus3zeta, E6_L_mu, E7_pi1, E7_pi2 or an alias");
    ks->add_option("--pair", o.pair_id, "Pair for --xi (default EIII)");
    ks->add_option("--xi", o.xi, "K-type [n_1,...,n_r,c]");
    ks->add_option("--max-level", o.max_level)->check(CLI::NonNegativeNumber);
    ks->add_option("--source", o.source, "hpz or closed")->check(CLI::IsMember({"hpz", "closed"}));
    ks->add_flag("--printed", o.printed, "Use the Dirac data exactly as printed, errata undone");

    auto* rep = sub("report", "Cancellation ledger by coordinate buckets", cmd_report);
    rep->add_option("--module", o.module)->required();
    rep->add_option("--max-level", o.max_level)->check(CLI::NonNegativeNumber);
    rep->add_option("--group", o.group, "1-based K_ss positions (default 2,3,4,5)");
    rep->add_flag("--printed", o.printed, "Use the Dirac data exactly as printed, errata undone");

    auto* ver = sub("verify", "Check engine results against closed forms", cmd_verify);
    ver->add_option("--suite", o.suite, "spectra, rules or all")->check(CLI::IsMember({"spectra", "rules", "all"}));
    ver->add_option("--module", o.module);
    ver->add_option("--max-level", o.max_level)->check(CLI::NonNegativeNumber);
    ver->add_option("--rule", o.rule_id);
    ver->add_option("--n", o.rule_n);
    ver->add_option("--bound", o.bound);

    std::vector<std::string> storage{"lierep"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage)
        argv.push_back(s.data());

    std::ostringstream err;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream out;
        const int code = app.exit(e, out, err);
        result.out = out.str();
        result.err = err.str();
        result.status = code == 0 ? ok : usage;
        return result;
    }

    try {
        for (auto& [s, fn] : commands)
            if (s->parsed())
                result.status = fn(cx);
    } catch (const GuardExceeded& e) {
        err << "resource guard: " << e.what() << "\n";
        result.status = guard;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        result.status = usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        result.status = usage;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << "\n";
        result.status = mismatch;
    }
    result.out = cx.out.str();
    result.err = err.str();
    return result;
}

}  // namespace lierep::cli
