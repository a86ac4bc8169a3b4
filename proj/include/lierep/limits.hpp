#pragma once

#include <cstdint>

namespace lierep {

// Resource ceilings. Defaults can be overridden with LIEREP_ORBIT_LIMIT and
// LIEREP_ORACLE_LIMIT.
struct Limits {
    std::uint64_t orbit = 10'000'000;   // largest Weyl orbit / weight system enumerated
    std::uint64_t oracle = 1'000'000;   // largest dim(left)*dim(right) for the peeling oracle

    static Limits from_env();
};

}  // namespace lierep
