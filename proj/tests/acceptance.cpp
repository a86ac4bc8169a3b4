// Acceptance criteria A1-A7; one line per criterion, non-zero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "ledger_rows.hpp"
#include "lierep/branchrules.hpp"
#include "lierep/hpz.hpp"
#include "reference_data.hpp"
#include "test_support.hpp"

using namespace lierep;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            if (pass)
                detail << "first failure: " << what << "; ";
            pass = false;
        }
    }
};

// Every tensor product computed here also has to conserve dimension (A7).
std::size_t tensor_calls = 0;
std::size_t tensor_violations = 0;

Decomposition checked(const Decomposition& d)
{
    ++tensor_calls;
    if (d.dimension() != weyl_dimension(*d.system, d.left) * weyl_dimension(*d.system, d.right))
        ++tensor_violations;
    return d;
}

void a1(Outcome& o)
{
    auto d = checked(tensor_decompose(root_system("E6"), Weight{1, 0, 0, 0, 0, 1}, Weight{2, 0, 0, 0, 0, 2}));
    o.require(d.components == refdata::e6_adjoint_times_2_0_0_0_0_2(), "E6 [1,0,0,0,0,1] x [2,0,0,0,0,2] listing");
    o.detail << d.components.size() << " components, max multiplicity " << d.max_multiplicity();
}

void a2(Outcome& o)
{
    const auto& e6 = root_system("E6");
    o.require(weyl_dimension(e6, Weight{1, 0, 0, 0, 0, 0}) == 27, "dim E6 [1,0,0,0,0,0]");
    o.require(weyl_dimension(e6, Weight{1, 0, 0, 0, 0, 1}) == 650, "dim E6 [1,0,0,0,0,1]");
    for (int n = 4; n <= 8; ++n) {
        const auto r = static_cast<std::size_t>(n);
        for (std::size_t k : {r - 1, r})
            o.require(weyl_dimension(root_system(Series::D, n), Weight::fundamental(r, k)) == BigInt(1) << (n - 1),
                      "half-spin D" + std::to_string(n));
    }
    const auto& d5 = root_system("D5");
    const std::int64_t ladder[] = {1, 16, 126, 672};
    for (std::int64_t b = 0; b < 4; ++b)
        o.require(weyl_dimension(d5, Weight{0, 0, 0, b, 0}) == ladder[b], "D5 ladder b=" + std::to_string(b));
    o.detail << "27, 650, half-spin n=4..8, 1/16/126/672";
}

void a3(Outcome& o)
{
    std::size_t points = 0;
    for (const auto& rule : RuleBook::builtin().rules()) {
        std::vector<RuleParams> grid;
        if (rule.fixed_rank) {
            grid = parameter_grid(rule, 3);
        } else {
            for (std::int64_t n = 4; n <= 7; ++n) {
                auto part = parameter_grid(rule, 2, {{"n", n}});
                grid.insert(grid.end(), part.begin(), part.end());
            }
        }
        auto report = verify_rule(rule, grid);
        points += report.points.size();
        for (const auto& p : report.points) {
            checked(p.computed);
            o.require(p.match, rule.id + " at " + format_params(p.params) + ": " + p.note);
        }
    }
    o.detail << RuleBook::builtin().rules().size() << " rules, " << points << " grid points";
}

void a4(Outcome& o)
{
    for (const auto& id : registry_ids()) {
        auto r = verify_spectrum(id, 8);
        o.require(r.ok(), id + (r.note.empty() ? "" : ": " + r.note));
        o.detail << id << " " << r.computed.size() << " K-types; ";
    }
}

// Net engine multiplicity of a pre-shift K-type.
BigInt net(const ledger::Sides& s, const KType& k)
{
    BigInt v = 0;
    if (auto it = s.positive.find(k); it != s.positive.end())
        v += it->second;
    if (auto it = s.negative.find(k); it != s.negative.end())
        v -= it->second;
    return v;
}

void a5_e6(Outcome& o, const std::string& id, const std::vector<ledger::Row>& rows)
{
    const auto& p = pair_data("EIII");
    const int top = 20;
    auto r = cancellation_report(p, dirac_registry(id), top, {2, 3, 4, 5});
    auto engine = ledger::engine_sides(r);
    const auto lowest = ledger::lowest_central(r);
    auto table = ledger::table_sides(rows, lowest);
    o.require(engine.positive == table.positive && engine.negative == table.negative, id + " ledger rows");

    std::set<KType> module;
    for (const auto& [kt, m] : closed_form_spectrum(id, top).ktypes())
        module.insert(KType{kt.ss, kt.central + p.delta_n});

    std::size_t sampled = 0, leftovers = 0;
    for (const auto& row : rows)
        for (const auto* side : {&row.lhs, &row.rhs}) {
            if (side->empty())
                continue;
            auto coords = ledger::parse_row(*side);
            for (std::int64_t b = 0; b <= 3; ++b)
                for (std::int64_t e = 0; e <= 3; ++e) {
                    std::vector<std::int64_t> ss;
                    for (std::size_t i = 0; i + 1 < coords.size(); ++i)
                        ss.push_back(coords[i].at(b, e));
                    KType k{Weight(ss), coords.back().at(b, e)};
                    if (!k.ss.is_dominant() || k.central < lowest)
                        continue;
                    ++sampled;
                    const bool left = module.count(k) > 0;
                    leftovers += left;
                    o.require(net(engine, k) == (left ? 1 : 0), id + " member " + k.to_string());
                    o.require(!left || (row.starred && side == &row.lhs), id + " leftover outside starred row");
                }
        }
    o.detail << id << " " << sampled << " sampled members, " << leftovers << " leftovers; ";
}

void a5(Outcome& o)
{
    a5_e6(o, "E6_L_minus3zeta", ledger::wallach_e6_rows());
    a5_e6(o, "E6_L_mu", ledger::mu_e6_rows());

    const auto& p = pair_data("EVII");
    auto r = cancellation_report(p, dirac_registry("E7_pi1"), 14, {2, 3, 4, 5});
    for (const auto& t : ledger::pi1_e7_tables()) {
        auto engine = ledger::engine_sides(r, &t.bucket);
        auto table = ledger::table_sides(t, ledger::lowest_central(r));
        std::string name = "E7_pi1 bucket (" + std::to_string(t.bucket[0]) + "," + std::to_string(t.bucket[1]) + "," +
                           std::to_string(t.bucket[2]) + "," + std::to_string(t.bucket[3]) + ")";
        o.require(!engine.positive.empty(), name + " empty");
        o.require(engine.positive == table.positive && engine.negative == table.negative, name + " rows");
        const bool zero = t.bucket == std::vector<std::int64_t>{0, 0, 0, 0};
        bool cancels = true;
        for (const auto* b : r.bucket(t.bucket))
            cancels = cancels && b->cancels();
        if (!zero)
            o.require(cancels, name + " does not cancel");
    }
    o.detail << "E7_pi1 buckets (0,0,1,0), (1,0,0,1) cancel to level 14";
}

void a6(Outcome& o)
{
    const auto limits = Limits::from_env();
    auto cases = support::random_pairs({"A2", "A3", "D4", "D5"}, 25, 2, 20250101, limits.oracle);
    for (const auto& c : cases) {
        const auto& rs = root_system(c.type);
        auto k = checked(tensor_decompose(rs, c.left, c.right));
        auto p = checked(tensor_oracle(rs, c.left, c.right, limits));
        o.require(k.components == p.components, c.type + " " + c.left.to_string() + " x " + c.right.to_string());
    }
    o.detail << cases.size() << " seeded pairs";
}

void a7(Outcome& o)
{
    for (const char* id : {"EIII", "EVII"}) {
        const auto& p = pair_data(id);
        std::vector<BigInt> by_level(9);
        for (const auto& c : schmid_components(p, 8))
            by_level[static_cast<std::size_t>(c.level)] += p.dimension(c.ktype);
        for (std::uint64_t d = 0; d <= 8; ++d)
            o.require(by_level[d] == support::binomial(static_cast<std::uint64_t>(p.dim_p_minus) + d - 1, d),
                      std::string(id) + " Schmid level " + std::to_string(d));
    }
    for (const auto& id : registry_ids()) {
        const auto& d = dirac_registry(id);
        const auto& p = pair_data(d.pair_id);
        std::vector<KCharacterSeries> runs;
        for (int bound : {4, 6, 8})
            runs.push_back(hpz_k_spectrum(p, d, bound));
        for (const auto& s : runs)
            o.require(s.size() == 0 || s.min_multiplicity() >= 1, id + " negative multiplicity");
        for (const auto& s : runs)
            o.require(s.truncated(4) == runs.front(), id + " level<=4 slice changes with the bound");
    }
    o.require(tensor_violations == 0, std::to_string(tensor_violations) + " tensor calls lose dimension");
    o.detail << "Schmid binomials d<=8, non-negativity, truncation 4/6/8, " << tensor_calls
             << " tensor calls conserve dimension";
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
        {"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4}, {"A5", a5}, {"A6", a6}, {"A7", a7},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            check(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        failures += !o.pass;
        std::cout << name << (o.pass ? " PASS " : " FAIL ") << "(" << ms << " ms) " << o.detail.str() << "\n";
    }
    return failures == 0 ? 0 : 1;
}
