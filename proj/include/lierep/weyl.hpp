#pragma once

#include <cstdint>
#include <vector>

#include "lierep/limits.hpp"
#include "lierep/rootsys.hpp"

namespace lierep {

// {lambda} together with t(lambda): the dominant W-conjugate, the sign of the
// reflection word that reached it (0 when singular), and the word length.
struct SignedDominant {
    Weight dominant;
    int sign = 0;
    std::uint64_t reflections = 0;
};

// Reflects at the lowest-index negative coordinate until dominant.
SignedDominant to_dominant(const RootSystem& rs, Weight lambda);

// to_dominant for rational input; throws std::invalid_argument if any
// coordinate is non-integral.
SignedDominant to_dominant_rational(const RootSystem& rs, const std::vector<Rational>& lambda);

// |W| / |W_lambda|, the stabilizer being the parabolic subgroup on the zero
// coordinates of the dominant weight.
BigInt orbit_size(const RootSystem& rs, const Weight& dominant);

// Full W-orbit of a dominant weight, sorted. Throws GuardExceeded when the
// predicted size is above limits.orbit.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& dominant, const Limits& limits = Limits::from_env());

}  // namespace lierep
