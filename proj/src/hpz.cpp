#include "lierep/hpz.hpp"

#include <algorithm>
#include <set>

#include "lierep/tensor.hpp"

namespace lierep {

std::int64_t KCharacterSeries::central_at(int level) const
{
    return base_central - pair->level_step() * level;
}

BigInt KCharacterSeries::level_dimension(int level) const
{
    BigInt total = 0;
    auto it = levels.find(level);
    if (it == levels.end())
        return total;
    for (const auto& [w, m] : it->second)
        total += m * weyl_dimension(pair->k_system(), pair->to_branch_labels(w));
    return total;
}

std::size_t KCharacterSeries::size() const
{
    std::size_t n = 0;
    for (const auto& [l, m] : levels)
        n += m.size();
    return n;
}

Multiplicity KCharacterSeries::max_multiplicity() const
{
    Multiplicity best = 0;
    for (const auto& [l, entries] : levels)
        for (const auto& [w, m] : entries)
            best = std::max(best, m);
    return best;
}

Multiplicity KCharacterSeries::min_multiplicity() const
{
    Multiplicity least = 0;
    bool first = true;
    for (const auto& [l, entries] : levels)
        for (const auto& [w, m] : entries) {
            if (first || m < least)
                least = m;
            first = false;
        }
    return least;
}

std::vector<std::pair<KType, Multiplicity>> KCharacterSeries::ktypes() const
{
    std::vector<std::pair<KType, Multiplicity>> out;
    for (const auto& [l, entries] : levels)
        for (const auto& [w, m] : entries)
            out.emplace_back(KType{w, central_at(l)}, m);
    return out;
}

KCharacterSeries KCharacterSeries::truncated(int level) const
{
    KCharacterSeries out = *this;
    out.max_level = std::min(level, max_level);
    out.levels.erase(out.levels.upper_bound(out.max_level), out.levels.end());
    return out;
}

namespace {

KType kt(std::vector<std::int64_t> coords)
{
    auto central = coords.back();
    coords.pop_back();
    return KType{Weight(std::move(coords)), central};
}

const std::vector<DiracCohomologyData>& registry()
{
    static const std::vector<DiracCohomologyData> data = {
        {"E6_L_minus3zeta",
         "EIII",
         {kt({0, 0, 0, 0, 0, 12}), kt({1, 0, 0, 0, 0, 3}), kt({0, 0, 0, 0, 1, -6})},
         {kt({0, 0, 0, 0, 0, -12}), kt({0, 1, 0, 0, 0, -3}), kt({0, 0, 0, 0, 1, 6})},
         {}},
        {"E6_L_mu",
         "EIII",
         {kt({0, 0, 0, 0, 1, 6}), kt({0, 1, 0, 0, 0, -3}), kt({0, 0, 0, 0, 0, -12})},
         {kt({0, 0, 0, 0, 1, -6}), kt({1, 0, 0, 0, 0, 3})},
         {{false, 1, kt({1, 0, 0, 0, 0, -3}),
           "printed central -3 leaves a negative multiplicity at [1,0,0,0,0,-27]; the companion table's "
           "N(eta) column starts from [1,0,0,0,0,3]"}}},
        {"E7_pi1",
         "EVII",
         {kt({0, 0, 0, 0, 0, 0, 15}), kt({0, 0, 0, 0, 0, 0, -15}), kt({0, 1, 0, 0, 0, 0, 9}),
          kt({0, 1, 0, 0, 0, 0, -9}), kt({1, 0, 0, 0, 0, 1, 3}), kt({1, 0, 0, 0, 0, 1, -3})},
         {kt({1, 0, 0, 0, 0, 0, 11}), kt({0, 0, 0, 0, 0, 1, -11}), kt({2, 0, 0, 0, 0, 0, 1}),
          kt({0, 0, 0, 0, 0, 2, -1}), kt({0, 0, 0, 0, 1, 0, 5}), kt({0, 0, 1, 0, 0, 0, -5})},
         {}},
        {"E7_pi2", "EVII", {kt({0, 0, 0, 0, 0, 0, 3})}, {kt({0, 0, 0, 0, 0, 0, -3})}, {}},
    };
    return data;
}

const std::vector<ClosedFormSpectrum>& families()
{
    static const std::vector<ClosedFormSpectrum> data = {
        {"E6_L_minus3zeta", "EIII", kt({0, 0, 0, 0, 0, -12}), {{"b", kt({0, 1, 0, 0, 0, -3})}}},
        {"E6_L_mu",
         "EIII",
         kt({0, 0, 0, 0, 1, -18}),
         {{"b", kt({0, 1, 0, 0, 0, -3})}, {"e", kt({0, 0, 0, 0, 1, -6})}}},
        {"E7_pi1", "EVII", kt({0, 0, 0, 0, 0, 0, -12}), {{"f", kt({0, 0, 0, 0, 0, 1, -2})}}},
        {"E7_pi2",
         "EVII",
         kt({0, 0, 0, 0, 0, 0, -24}),
         {{"a", kt({1, 0, 0, 0, 0, 0, -4})}, {"f", kt({0, 0, 0, 0, 0, 1, -2})}}},
    };
    return data;
}

struct SignedTerms {
    std::int64_t base_central = 0;
    std::map<int, WeightMap> positive, negative;
};

SignedTerms collect(const HermitianPair& pair, const DiracCohomologyData& data, int max_level, const Limits& limits)
{
    if (data.pair_id != pair.id)
        throw std::invalid_argument("module " + data.module_id + " belongs to " + data.pair_id + ", not " + pair.id);
    if (max_level < 0)
        throw std::invalid_argument("max_level must be non-negative");
    if (data.plus.empty() && data.minus.empty())
        throw std::invalid_argument("module " + data.module_id + " has no Dirac cohomology terms");
    const auto step = pair.level_step();

    SignedTerms out;
    bool first = true;
    for (const auto* list : {&data.plus, &data.minus})
        for (const auto& xi : *list) {
            const auto top = xi.central - pair.delta_n;
            if (first || top > out.base_central)
                out.base_central = top;
            first = false;
        }

    for (int sign : {1, -1}) {
        auto& target = sign > 0 ? out.positive : out.negative;
        for (const auto& xi : sign > 0 ? data.plus : data.minus) {
            const auto gap = out.base_central - (xi.central - pair.delta_n);
            if (gap % step != 0)
                throw std::invalid_argument("K-type " + xi.to_string() + " of " + data.module_id +
                                            " is off the central grid of step " + std::to_string(step));
            const auto offset = gap / step;
            if (offset > max_level)
                continue;
            auto verma = verma_k_character(pair, xi, max_level - static_cast<int>(offset), limits);
            for (auto& [lvl, entries] : verma.levels)
                for (auto& [w, m] : entries)
                    target[lvl + static_cast<int>(offset)][w] += m;
        }
    }
    return out;
}

std::string signed_term(std::int64_t c, const std::string& var, bool leading)
{
    if (c == 0)
        return {};
    std::string s;
    if (c < 0)
        s = "-";
    else if (!leading)
        s = "+";
    const auto mag = c < 0 ? -c : c;
    if (mag != 1 || var.empty())
        s += std::to_string(mag);
    return s + var;
}

}  // namespace

DiracCohomologyData DiracCohomologyData::as_printed() const
{
    DiracCohomologyData out = *this;
    for (const auto& e : errata)
        (e.in_plus ? out.plus : out.minus).at(e.index) = e.printed;
    out.errata.clear();
    return out;
}

std::string canonical_module_id(std::string_view module_id)
{
    static const std::map<std::string, std::string, std::less<>> aliases = {
        {"E6_wallach", "E6_L_minus3zeta"},
        {"E7_wallach1", "E7_pi1"},
        {"E7_wallach2", "E7_pi2"},
    };
    if (auto it = aliases.find(module_id); it != aliases.end())
        return it->second;
    for (const auto& d : registry())
        if (d.module_id == module_id)
            return d.module_id;
    std::string known;
    for (const auto& d : registry())
        known += (known.empty() ? "" : ", ") + d.module_id;
    throw std::invalid_argument("unknown module '" + std::string(module_id) + "' (known: " + known +
                                ", E6_wallach, E7_wallach1, E7_wallach2)");
}

const DiracCohomologyData& dirac_registry(std::string_view module_id)
{
    const auto id = canonical_module_id(module_id);
    for (const auto& d : registry())
        if (d.module_id == id)
            return d;
    throw std::logic_error("registry lookup failed for " + id);
}

std::vector<std::string> registry_ids()
{
    std::vector<std::string> out;
    for (const auto& d : registry())
        out.push_back(d.module_id);
    return out;
}

KCharacterSeries verma_k_character(const HermitianPair& pair, const KType& xi, int max_level, const Limits& limits)
{
    if (max_level < 0)
        throw std::invalid_argument("max_level must be non-negative");
    const auto& ks = pair.k_system();
    const Weight mu = pair.to_branch_labels(xi.ss);
    ks.require_dominant(mu);

    KCharacterSeries out;
    out.pair = &pair;
    out.base_central = xi.central - pair.delta_n;
    out.max_level = max_level;
    for (int l = 0; l <= max_level; ++l)
        out.levels[l];
    for (const auto& sigma : schmid_components(pair, max_level)) {
        auto d = tensor_decompose(ks, pair.to_branch_labels(sigma.ktype.ss), mu, limits);
        auto& slot = out.levels[sigma.level];
        for (const auto& [w, m] : d.components)
            slot[pair.from_branch_labels(w)] += m;
    }
    return out;
}

KCharacterSeries hpz_k_spectrum(const HermitianPair& pair, const DiracCohomologyData& data, int max_level,
                                const Limits& limits)
{
    auto terms = collect(pair, data, max_level, limits);
    KCharacterSeries out;
    out.pair = &pair;
    out.base_central = terms.base_central;
    out.max_level = max_level;
    for (int l = 0; l <= max_level; ++l) {
        WeightMap net = terms.positive[l];
        for (const auto& [w, m] : terms.negative[l])
            net[w] -= m;
        auto& slot = out.levels[l];
        for (auto& [w, m] : net) {
            if (m < 0)
                throw std::logic_error("negative net multiplicity " + m.str() + " at " +
                                       KType{w, out.central_at(l)}.to_string() + " in the spectrum of " +
                                       data.module_id);
            if (m > 0)
                slot.emplace(w, m);
        }
    }
    return out;
}

std::string ClosedFormSpectrum::describe() const
{
    auto coordinate = [&](std::int64_t constant, auto coeff_of) {
        std::string s;
        for (const auto& g : generators)
            s += signed_term(coeff_of(g), g.param, s.empty());
        s += signed_term(constant, "", s.empty());
        return s.empty() ? std::string("0") : s;
    };
    std::string out = "[";
    for (std::size_t i = 0; i < base.ss.rank(); ++i)
        out += coordinate(base.ss[i], [i](const Generator& g) { return g.step.ss[i]; }) + ",";
    out += coordinate(base.central, [](const Generator& g) { return g.step.central; }) + "]";
    return out;
}

const ClosedFormSpectrum& closed_form_family(std::string_view module_id)
{
    const auto id = canonical_module_id(module_id);
    for (const auto& f : families())
        if (f.module_id == id)
            return f;
    throw std::logic_error("no closed form for " + id);
}

KCharacterSeries closed_form_spectrum(std::string_view module_id, int max_level)
{
    return closed_form_spectrum(pair_data(closed_form_family(module_id).pair_id), module_id, max_level);
}

KCharacterSeries closed_form_spectrum(const HermitianPair& pair, std::string_view module_id, int max_level)
{
    if (max_level < 0)
        throw std::invalid_argument("max_level must be non-negative");
    const auto& fam = closed_form_family(module_id);
    if (fam.pair_id != pair.id)
        throw std::invalid_argument("module " + fam.module_id + " belongs to " + fam.pair_id + ", not " + pair.id);
    const auto step = pair.level_step();

    std::vector<int> degree;
    for (const auto& g : fam.generators) {
        if (g.step.central >= 0 || g.step.central % step != 0)
            throw std::logic_error("closed-form generator " + g.step.to_string() + " is off the level grid");
        degree.push_back(static_cast<int>(-g.step.central / step));
    }

    KCharacterSeries out;
    out.pair = &pair;
    out.base_central = fam.base.central;
    out.max_level = max_level;
    for (int l = 0; l <= max_level; ++l)
        out.levels[l];

    std::vector<std::int64_t> t(fam.generators.size(), 0);
    auto level_of = [&] {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < t.size(); ++i)
            s += t[i] * degree[i];
        return s;
    };
    while (true) {
        Weight w = fam.base.ss;
        for (std::size_t i = 0; i < t.size(); ++i)
            w += t[i] * fam.generators[i].step.ss;
        out.levels[static_cast<int>(level_of())][w] += 1;
        std::size_t i = 0;
        for (; i < t.size(); ++i) {
            ++t[i];
            if (level_of() <= max_level)
                break;
            t[i] = 0;
        }
        if (i == t.size())
            break;
    }
    return out;
}

SpectrumReport verify_spectrum(std::string_view module_id, int max_level, const Limits& limits)
{
    return verify_spectrum(pair_data(dirac_registry(module_id).pair_id), module_id, max_level, limits);
}

SpectrumReport verify_spectrum(const HermitianPair& pair, std::string_view module_id, int max_level,
                               const Limits& limits)
{
    SpectrumReport r;
    r.module_id = canonical_module_id(module_id);
    r.max_level = max_level;
    const auto& data = dirac_registry(r.module_id);
    r.expected = closed_form_spectrum(pair, r.module_id, max_level);
    try {
        r.computed = hpz_k_spectrum(pair, data, max_level, limits);
    } catch (const std::logic_error& e) {
        r.note = e.what();
        return r;
    }
    r.match = r.computed == r.expected;
    r.multiplicity_free = r.computed.size() > 0 && r.computed.max_multiplicity() == 1;
    if (r.computed.base_central != r.expected.base_central)
        r.note = "top central " + std::to_string(r.computed.base_central) + " differs from the closed form's " +
                 std::to_string(r.expected.base_central);
    for (int l = 0; l <= max_level; ++l) {
        SpectrumLevelCheck c;
        c.level = l;
        c.central = r.computed.central_at(l);
        const auto& got = r.computed.levels.at(l);
        const auto& want = r.expected.levels.at(l);
        c.computed_count = got.size();
        c.expected_count = want.size();
        c.computed_dimension = r.computed.level_dimension(l);
        c.expected_dimension = r.expected.level_dimension(l);
        c.match = got == want && r.computed.base_central == r.expected.base_central;
        if (!c.match && r.note.empty())
            r.note = "first difference at level " + std::to_string(l);
        r.levels.push_back(std::move(c));
    }
    if (r.match && !r.multiplicity_free)
        r.note = "spectrum matches but is not multiplicity-free";
    return r;
}

std::vector<const BucketLedger*> CancellationReport::bucket(const std::vector<std::int64_t>& key) const
{
    std::vector<const BucketLedger*> out;
    for (const auto& lvl : levels)
        for (const auto& b : lvl.buckets)
            if (b.key == key)
                out.push_back(&b);
    return out;
}

std::vector<std::vector<std::int64_t>> CancellationReport::keys() const
{
    std::set<std::vector<std::int64_t>> seen;
    for (const auto& lvl : levels)
        for (const auto& b : lvl.buckets)
            seen.insert(b.key);
    return {seen.begin(), seen.end()};
}

CancellationReport cancellation_report(const HermitianPair& pair, const DiracCohomologyData& data, int max_level,
                                       const std::vector<int>& grouping, const Limits& limits)
{
    for (int g : grouping)
        if (g < 1 || g > pair.k_rank)
            throw std::invalid_argument("grouping position " + std::to_string(g) + " outside 1.." +
                                        std::to_string(pair.k_rank));
    auto terms = collect(pair, data, max_level, limits);

    CancellationReport r;
    r.module_id = data.module_id;
    r.pair = &pair;
    r.grouping = grouping;
    r.max_level = max_level;
    r.base_central = terms.base_central;
    const auto step = pair.level_step();

    auto key_of = [&](const Weight& w) {
        std::vector<std::int64_t> k;
        for (int g : grouping)
            k.push_back(w[static_cast<std::size_t>(g - 1)]);
        return k;
    };

    for (int l = 0; l <= max_level; ++l) {
        LevelLedger ledger;
        ledger.level = l;
        ledger.central = terms.base_central - step * l;
        const auto& pos = terms.positive[l];
        const auto& neg = terms.negative[l];
        std::map<std::vector<std::int64_t>, BucketLedger> buckets;
        std::set<Weight> all;
        for (const auto& [w, m] : pos)
            all.insert(w);
        for (const auto& [w, m] : neg)
            all.insert(w);
        for (const auto& w : all) {
            auto key = key_of(w);
            auto& b = buckets[key];
            b.key = key;
            const KType k{w, ledger.central};
            Multiplicity p = 0, n = 0;
            if (auto it = pos.find(w); it != pos.end())
                p = it->second;
            if (auto it = neg.find(w); it != neg.end())
                n = it->second;
            if (p > 0)
                b.positive.emplace_back(k, p);
            if (n > 0)
                b.negative.emplace_back(k, n);
            if (p > 0 && n > 0)
                b.matched.emplace_back(k, std::min(p, n));
            if (p != n)
                b.leftover.emplace_back(k, p - n);
        }
        for (auto& [k, b] : buckets)
            ledger.buckets.push_back(std::move(b));
        r.levels.push_back(std::move(ledger));
    }
    return r;
}

}  // namespace lierep
