#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lierep/hermitian.hpp"
#include "lierep/limits.hpp"
#include "lierep/weights.hpp"

namespace lierep {

// Level-graded signed multiset of K-types. Level l holds K-types with central
// coordinate base_central - step*l; K_ss weights are in the K labelling.
struct KCharacterSeries {
    const HermitianPair* pair = nullptr;
    std::int64_t base_central = 0;
    int max_level = 0;
    std::map<int, WeightMap> levels;  // every level 0..max_level present, zero entries dropped

    std::int64_t central_at(int level) const;
    BigInt level_dimension(int level) const;
    std::size_t size() const;
    Multiplicity max_multiplicity() const;
    Multiplicity min_multiplicity() const;
    // (K-type, multiplicity) in level order, weights ascending within a level.
    std::vector<std::pair<KType, Multiplicity>> ktypes() const;
    KCharacterSeries truncated(int level) const;

    friend bool operator==(const KCharacterSeries& a, const KCharacterSeries& b)
    {
        return a.pair == b.pair && a.base_central == b.base_central && a.max_level == b.max_level &&
               a.levels == b.levels;
    }
};

// An entry whose printed value is replaced in the registry.
struct RegistryErratum {
    bool in_plus = false;
    std::size_t index = 0;
    KType printed;
    std::string reason;
};

struct DiracCohomologyData {
    std::string module_id;
    std::string pair_id;
    std::vector<KType> plus;   // H_D^+
    std::vector<KType> minus;  // H_D^-
    std::vector<RegistryErratum> errata;

    // The lists exactly as printed, errata undone.
    DiracCohomologyData as_printed() const;
};

// Canonical ids: E6_L_minus3zeta, E6_L_mu, E7_pi1, E7_pi2. Aliases
// E6_wallach, E7_wallach1, E7_wallach2 are accepted.
const DiracCohomologyData& dirac_registry(std::string_view module_id);
std::vector<std::string> registry_ids();
std::string canonical_module_id(std::string_view module_id);

// K-character of N(xi - delta_n) = S(p^-) (x) E_{xi - delta_n}, Schmid levels <= max_level.
KCharacterSeries verma_k_character(const HermitianPair& pair, const KType& xi, int max_level,
                                   const Limits& limits = Limits::from_env());

// sum_xi N(xi - delta_n) - sum_eta N(eta - delta_n), aligned by central
// coordinate; level 0 is the highest central value among the terms. Throws
// std::logic_error if a net multiplicity is negative.
KCharacterSeries hpz_k_spectrum(const HermitianPair& pair, const DiracCohomologyData& data, int max_level,
                                const Limits& limits = Limits::from_env());

// base + sum_i t_i * step_i over t_i in N, each step_i raising the level by its degree.
struct ClosedFormSpectrum {
    struct Generator {
        std::string param;
        KType step;
    };
    std::string module_id;
    std::string pair_id;
    KType base;
    std::vector<Generator> generators;

    std::string describe() const;
};

const ClosedFormSpectrum& closed_form_family(std::string_view module_id);
KCharacterSeries closed_form_spectrum(std::string_view module_id, int max_level);
// Same, attached to a caller-supplied pair record (e.g. loaded from a file).
KCharacterSeries closed_form_spectrum(const HermitianPair& pair, std::string_view module_id, int max_level);

struct SpectrumLevelCheck {
    int level = 0;
    std::int64_t central = 0;
    std::size_t computed_count = 0;
    std::size_t expected_count = 0;
    BigInt computed_dimension = 0;
    BigInt expected_dimension = 0;
    bool match = false;
};

struct SpectrumReport {
    std::string module_id;
    int max_level = 0;
    bool match = false;
    bool multiplicity_free = false;
    std::vector<SpectrumLevelCheck> levels;
    KCharacterSeries computed;
    KCharacterSeries expected;
    std::string note;

    bool ok() const { return match && multiplicity_free; }
};

// Never throws on mismatch; a negative net multiplicity is reported in `note`.
SpectrumReport verify_spectrum(std::string_view module_id, int max_level, const Limits& limits = Limits::from_env());
SpectrumReport verify_spectrum(const HermitianPair& pair, std::string_view module_id, int max_level,
                               const Limits& limits = Limits::from_env());

// Contributions at one level whose K_ss coordinates at the grouping positions
// equal `key`. Lists are (K-type, multiplicity), K-types post-shift.
struct BucketLedger {
    std::vector<std::int64_t> key;
    std::vector<std::pair<KType, Multiplicity>> positive;
    std::vector<std::pair<KType, Multiplicity>> negative;
    std::vector<std::pair<KType, Multiplicity>> matched;   // min(positive, negative) per K-type
    std::vector<std::pair<KType, Multiplicity>> leftover;  // signed net, nonzero only

    bool cancels() const { return leftover.empty(); }
};

struct LevelLedger {
    int level = 0;
    std::int64_t central = 0;
    std::vector<BucketLedger> buckets;  // ascending by key
};

struct CancellationReport {
    std::string module_id;
    const HermitianPair* pair = nullptr;
    std::vector<int> grouping;  // 1-based K_ss positions
    int max_level = 0;
    std::int64_t base_central = 0;
    std::vector<LevelLedger> levels;

    // Every ledger with this key, across levels.
    std::vector<const BucketLedger*> bucket(const std::vector<std::int64_t>& key) const;
    std::vector<std::vector<std::int64_t>> keys() const;
};

CancellationReport cancellation_report(const HermitianPair& pair, const DiracCohomologyData& data, int max_level,
                                       const std::vector<int>& grouping, const Limits& limits = Limits::from_env());

}  // namespace lierep
