#pragma once

#include <map>
#include <memory>
#include <vector>

#include "lierep/limits.hpp"
#include "lierep/rootsys.hpp"

namespace lierep {

using Multiplicity = BigInt;
using WeightMap = std::map<Weight, Multiplicity>;

// Every weight of E_lambda with its multiplicity.
struct WeightMultiset {
    WeightMap entries;
    BigInt total = 0;
};

// prod_{beta>0} (lambda+rho, beta) / (rho, beta)
BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda);

// Freudenthal multiplicities of the dominant weights of E_lambda. Results are
// memoized per (system, lambda) in a synchronized cache.
std::shared_ptr<const WeightMap> dominant_weight_multiplicities(const RootSystem& rs, const Weight& lambda);

// Union of the W-orbits of the dominant weights, each carrying its
// multiplicity. Memoized like dominant_weight_multiplicities.
std::shared_ptr<const WeightMultiset> full_weight_multiset(const RootSystem& rs, const Weight& lambda,
                                                           const Limits& limits = Limits::from_env());

// Predicted number of distinct weights (sum of orbit sizes); used by guards.
BigInt distinct_weight_count(const RootSystem& rs, const Weight& lambda);

// Drops all memoized tables (tests use this to observe cold-cache behaviour).
void clear_weight_caches();

}  // namespace lierep
