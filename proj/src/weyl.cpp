#include "lierep/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_set>

namespace lierep {

Limits Limits::from_env()
{
    Limits l;
    auto read = [](const char* name, std::uint64_t& target) {
        if (const char* v = std::getenv(name)) {
            try {
                std::size_t pos = 0;
                auto parsed = std::stoull(v, &pos);
                if (pos == std::string(v).size() && parsed > 0)
                    target = parsed;
            } catch (const std::exception&) {
                // unparsable value: keep the default
            }
        }
    };
    read("LIEREP_ORBIT_LIMIT", l.orbit);
    read("LIEREP_ORACLE_LIMIT", l.oracle);
    return l;
}

SignedDominant to_dominant(const RootSystem& rs, Weight lambda)
{
    rs.require_rank(lambda);
    const auto& cartan = rs.cartan();
    const std::size_t n = lambda.rank();
    std::uint64_t count = 0;
    while (true) {
        std::size_t i = 0;
        while (i < n && lambda[i] >= 0)
            ++i;
        if (i == n)
            break;
        // s_i(lambda) = lambda - lambda_i * alpha_i
        const auto c = lambda[i];
        const auto& row = cartan[i];
        for (std::size_t k = 0; k < n; ++k)
            if (row[k] != 0)
                lambda[k] -= c * row[k];
        ++count;
    }
    SignedDominant out;
    out.sign = lambda.is_regular_dominant() ? (count % 2 == 0 ? 1 : -1) : 0;
    out.reflections = count;
    out.dominant = std::move(lambda);
    return out;
}

SignedDominant to_dominant_rational(const RootSystem& rs, const std::vector<Rational>& lambda)
{
    return to_dominant(rs, integral_weight(lambda));
}

BigInt orbit_size(const RootSystem& rs, const Weight& dominant)
{
    rs.require_dominant(dominant);
    std::vector<int> zeros;
    for (int i = 0; i < rs.rank(); ++i)
        if (dominant[i] == 0)
            zeros.push_back(i);
    return rs.weyl_group_order() / rs.parabolic_order(zeros);
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& dominant, const Limits& limits)
{
    const BigInt predicted = orbit_size(rs, dominant);
    if (predicted > limits.orbit)
        throw GuardExceeded("W-orbit of " + dominant.to_string() + " in " + rs.name() + " has " + predicted.str() +
                            " elements, above the limit " + std::to_string(limits.orbit));

    const auto& cartan = rs.cartan();
    const std::size_t n = dominant.rank();
    std::unordered_set<Weight, WeightHash> seen{dominant};
    std::vector<Weight> frontier{dominant};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& w : frontier) {
            for (std::size_t i = 0; i < n; ++i) {
                // Walking downward from the dominant weight reaches the whole orbit.
                if (w[i] <= 0)
                    continue;
                Weight image = w;
                const auto c = w[i];
                for (std::size_t k = 0; k < n; ++k)
                    if (cartan[i][k] != 0)
                        image[k] -= c * cartan[i][k];
                if (seen.insert(image).second)
                    next.push_back(std::move(image));
            }
        }
        frontier = std::move(next);
    }
    std::vector<Weight> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace lierep
