#include "lierep/hermitian.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include "lierep/embedded_data.hpp"
#include "lierep/weights.hpp"

namespace lierep {

std::string KType::to_string() const
{
    std::string s = ss.to_string();
    s.pop_back();
    if (ss.rank() > 0)
        s += ',';
    return s + std::to_string(central) + "]";
}

KType parse_ktype(std::string_view text, std::size_t ss_rank)
{
    Weight all = parse_weight(text);
    if (all.rank() != ss_rank + 1)
        throw std::invalid_argument("K-type '" + std::string(text) + "' needs " + std::to_string(ss_rank + 1) +
                                    " coordinates");
    std::vector<std::int64_t> ss(all.begin(), all.end() - 1);
    return KType{Weight(std::move(ss)), all[ss_rank]};
}

std::int64_t HermitianPair::level_step() const
{
    if (schmid.empty())
        throw std::logic_error("pair " + id + " has no Schmid generators");
    return -schmid.front().ktype.central / schmid.front().degree;
}

Weight HermitianPair::to_branch_labels(const Weight& k_ss) const
{
    if (k_ss.rank() != display_permutation.size())
        throw std::invalid_argument("weight " + k_ss.to_string() + " has wrong rank for K of " + id);
    Weight out = Weight::zero(k_ss.rank());
    for (std::size_t j = 0; j < k_ss.rank(); ++j)
        out[static_cast<std::size_t>(display_permutation[j] - 1)] = k_ss[j];
    return out;
}

Weight HermitianPair::from_branch_labels(const Weight& branch) const
{
    if (branch.rank() != display_permutation.size())
        throw std::invalid_argument("weight " + branch.to_string() + " has wrong rank for K of " + id);
    Weight out = Weight::zero(branch.rank());
    for (std::size_t j = 0; j < branch.rank(); ++j)
        out[j] = branch[static_cast<std::size_t>(display_permutation[j] - 1)];
    return out;
}

BigInt HermitianPair::dimension(const KType& kt) const
{
    return weyl_dimension(k_system(), to_branch_labels(kt.ss));
}

namespace {

struct ParseError {
    std::string message;
};

std::vector<std::string> split_ws(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;)
        out.push_back(tok);
    return out;
}

std::string rest_of_line(const std::string& line, const std::string& key)
{
    auto pos = line.find(key);
    pos = line.find_first_not_of(" \t", pos + key.size());
    if (pos == std::string::npos)
        return {};
    auto end = line.find_last_not_of(" \t\r");
    return line.substr(pos, end - pos + 1);
}

void validate(const HermitianPair& p)
{
    if (p.k_rank == 0)
        throw ParseError{"pair " + p.id + " lacks k-system"};
    const auto& ks = p.k_system();
    std::vector<int> sorted = p.display_permutation;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expect(static_cast<std::size_t>(p.k_rank));
    std::iota(expect.begin(), expect.end(), 1);
    if (sorted != expect)
        throw ParseError{"display-permutation of " + p.id + " is not a permutation of 1.." + std::to_string(p.k_rank)};
    if (p.schmid.empty())
        throw ParseError{"pair " + p.id + " has no schmid generators"};
    const auto& first = p.schmid.front();
    if (first.ktype.central >= 0 || first.ktype.central % first.degree != 0)
        throw ParseError{"schmid generator " + first.ktype.to_string() + " has an unusable central coordinate"};
    const auto step = p.level_step();
    BigInt degree_one = 0;
    for (const auto& g : p.schmid) {
        if (g.degree < 1)
            throw ParseError{"schmid degree must be positive"};
        if (g.ktype.central != -step * g.degree)
            throw ParseError{"schmid generator " + g.ktype.to_string() + " breaks central step " +
                             std::to_string(step) + " per degree"};
        if (!g.ktype.ss.is_dominant())
            throw ParseError{"schmid generator " + g.ktype.to_string() + " is not dominant"};
        if (g.degree == 1)
            degree_one += weyl_dimension(ks, p.to_branch_labels(g.ktype.ss));
    }
    if (degree_one != p.dim_p_minus)
        throw ParseError{"degree-1 schmid generators of " + p.id + " have dimension " + degree_one.str() +
                         ", dim-p-minus says " + std::to_string(p.dim_p_minus)};
}

}  // namespace

PairBook PairBook::parse(std::string_view text, std::string source)
{
    PairBook book;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    std::optional<HermitianPair> current;
    auto fail = [&](const std::string& msg) {
        return std::invalid_argument(source + ":" + std::to_string(lineno) + ": " + msg);
    };
    auto expect_args = [](const std::vector<std::string>& tok, std::size_t n) {
        if (tok.size() != n + 1)
            throw ParseError{tok[0] + " expects " + std::to_string(n) + " argument(s)"};
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
                    expect_args(tok, 1);
                    book.version_ = std::stoi(tok[1]);
                    if (book.version_ != 1)
                        throw ParseError{"unsupported pair file format " + tok[1]};
                } else if (key == "pair") {
                    expect_args(tok, 1);
                    current.emplace();
                    current->id = tok[1];
                } else {
                    throw ParseError{"unexpected '" + key + "' outside a pair"};
                }
                continue;
            }
            HermitianPair& p = *current;
            if (key == "end") {
                validate(p);
                for (const auto& other : book.pairs_)
                    if (other.id == p.id)
                        throw ParseError{"duplicate pair id " + p.id};
                book.pairs_.push_back(std::move(p));
                current.reset();
            } else if (key == "group") {
                expect_args(tok, 1);
                p.group = tok[1];
            } else if (key == "k-system") {
                expect_args(tok, 1);
                const auto& rs = root_system(tok[1]);
                p.k_series = rs.series();
                p.k_rank = rs.rank();
            } else if (key == "display-permutation") {
                expect_args(tok, 1);
                p.display_permutation.clear();
                for (auto v : parse_weight(tok[1]))
                    p.display_permutation.push_back(static_cast<int>(v));
            } else if (key == "zeta-scale") {
                expect_args(tok, 1);
                p.zeta_scale = std::stoll(tok[1]);
            } else if (key == "delta-n") {
                expect_args(tok, 1);
                p.delta_n = std::stoll(tok[1]);
            } else if (key == "dim-p-minus") {
                expect_args(tok, 1);
                p.dim_p_minus = std::stoll(tok[1]);
            } else if (key == "schmid") {
                if (tok.size() != 4 || tok[2] != "degree")
                    throw ParseError{"schmid expects '<ktype> degree <d>'"};
                if (p.k_rank == 0)
                    throw ParseError{"k-system must precede schmid"};
                p.schmid.push_back({parse_ktype(tok[1], static_cast<std::size_t>(p.k_rank)), std::stoi(tok[3])});
            } else if (key == "meta") {
                if (tok.size() < 2)
                    throw ParseError{"meta expects a key"};
                p.meta.emplace_back(tok[1], rest_of_line(raw, tok[1]));
            } else {
                throw ParseError{"unknown directive '" + key + "'"};
            }
        }
        if (current)
            throw ParseError{"pair " + current->id + " is missing 'end'"};
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

PairBook PairBook::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open pair file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

const PairBook& PairBook::builtin()
{
    static const PairBook book = parse(embedded::pairs_text, "data/pairs.txt");
    return book;
}

const HermitianPair& PairBook::find(std::string_view id) const
{
    for (const auto& p : pairs_)
        if (p.id == id)
            return p;
    throw std::invalid_argument("unknown pair '" + std::string(id) + "'");
}

std::string PairBook::to_text() const
{
    std::ostringstream out;
    out << "format " << version_ << "\n";
    for (const auto& p : pairs_) {
        out << "\npair " << p.id << "\n";
        out << "  group " << p.group << "\n";
        out << "  k-system " << p.k_system().name() << "\n";
        out << "  display-permutation ";
        for (std::size_t j = 0; j < p.display_permutation.size(); ++j)
            out << (j ? "," : "") << p.display_permutation[j];
        out << "\n";
        out << "  zeta-scale " << p.zeta_scale << "\n";
        out << "  delta-n " << p.delta_n << "\n";
        out << "  dim-p-minus " << p.dim_p_minus << "\n";
        for (const auto& g : p.schmid)
            out << "  schmid " << g.ktype.to_string() << " degree " << g.degree << "\n";
        for (const auto& [k, v] : p.meta)
            out << "  meta " << k << (v.empty() ? "" : " ") << v << "\n";
        out << "end\n";
    }
    return out.str();
}

const HermitianPair& pair_data(std::string_view id)
{
    return PairBook::builtin().find(id);
}

std::vector<SchmidComponent> schmid_components(const HermitianPair& pair, int max_level)
{
    if (max_level < 0)
        throw std::invalid_argument("max_level must be non-negative");
    const std::size_t g = pair.schmid.size();
    std::vector<SchmidComponent> out;
    std::vector<std::int64_t> e(g, 0);
    // odometer over exponent vectors with sum e_i * degree_i <= max_level
    auto level_of = [&] {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < g; ++i)
            s += e[i] * pair.schmid[i].degree;
        return s;
    };
    while (true) {
        const auto lvl = level_of();
        SchmidComponent c;
        c.exponents = e;
        c.level = static_cast<int>(lvl);
        c.ktype.ss = Weight::zero(static_cast<std::size_t>(pair.k_rank));
        for (std::size_t i = 0; i < g; ++i) {
            c.ktype.ss += e[i] * pair.schmid[i].ktype.ss;
            c.ktype.central += e[i] * pair.schmid[i].ktype.central;
        }
        out.push_back(std::move(c));
        std::size_t i = 0;
        for (; i < g; ++i) {
            ++e[i];
            if (level_of() <= max_level)
                break;
            e[i] = 0;
        }
        if (i == g)
            break;
    }
    std::sort(out.begin(), out.end(), [](const SchmidComponent& a, const SchmidComponent& b) {
        return std::tie(a.level, a.exponents) < std::tie(b.level, b.exponents);
    });
    return out;
}

}  // namespace lierep
