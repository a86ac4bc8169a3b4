#pragma once

#include "lierep/limits.hpp"
#include "lierep/weights.hpp"

namespace lierep {

// E_left (x) E_right as a multiset of irreducible components.
struct Decomposition {
    const RootSystem* system = nullptr;
    Weight left;
    Weight right;
    WeightMap components;  // dominant highest weight -> multiplicity (> 0)

    // sum of mult * dim over the components
    BigInt dimension() const;
    // max multiplicity; 1 means multiplicity-free
    Multiplicity max_multiplicity() const;
};

// Signed sum over the weights mu of the smaller factor:
// t(mu + other + rho) E_{ {mu + other + rho} - rho }.
Decomposition tensor_decompose(const RootSystem& rs, const Weight& left, const Weight& right,
                               const Limits& limits = Limits::from_env());

// Independent route: convolve the two weight multisets and peel off highest
// weights. Throws GuardExceeded above limits.oracle.
Decomposition tensor_oracle(const RootSystem& rs, const Weight& left, const Weight& right,
                            const Limits& limits = Limits::from_env());

}  // namespace lierep
