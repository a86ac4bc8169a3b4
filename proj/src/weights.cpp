#include "lierep/weights.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>
#include <unordered_map>

#include "lierep/weyl.hpp"

namespace lierep {

namespace {

using CacheKey = std::tuple<Series, int, Weight>;

template <class Value>
class MemoTable {
public:
    template <class Compute>
    std::shared_ptr<const Value> get(const CacheKey& key, Compute&& compute)
    {
        {
            std::lock_guard lock(mutex_);
            if (auto it = table_.find(key); it != table_.end())
                return it->second;
        }
        auto value = std::make_shared<const Value>(compute());
        std::lock_guard lock(mutex_);
        return table_.emplace(key, std::move(value)).first->second;
    }

    void clear()
    {
        std::lock_guard lock(mutex_);
        table_.clear();
    }

private:
    std::mutex mutex_;
    std::map<CacheKey, std::shared_ptr<const Value>> table_;
};

MemoTable<WeightMap>& dominant_cache()
{
    static MemoTable<WeightMap> table;
    return table;
}

MemoTable<WeightMultiset>& full_cache()
{
    static MemoTable<WeightMultiset> table;
    return table;
}

struct DominantNode {
    Weight weight;
    std::vector<std::int64_t> depth_coords;  // lambda - weight on the simple roots
    std::int64_t depth = 0;
};

WeightMap freudenthal(const RootSystem& rs, const Weight& lambda)
{
    const auto& roots = rs.positive_roots();
    const std::size_t n = static_cast<std::size_t>(rs.rank());

    // Dominant weights below lambda are connected to lambda by subtracting
    // positive roots without leaving the dominant chamber.
    std::vector<DominantNode> nodes{{lambda, std::vector<std::int64_t>(n, 0), 0}};
    std::unordered_map<Weight, std::size_t, WeightHash> index{{lambda, 0}};
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        for (const auto& beta : roots) {
            Weight nu = nodes[k].weight - beta.fundamental;
            if (!nu.is_dominant() || index.count(nu))
                continue;
            DominantNode node{nu, nodes[k].depth_coords, nodes[k].depth + beta.height};
            for (std::size_t j = 0; j < n; ++j)
                node.depth_coords[j] += beta.simple[j];
            index.emplace(nu, nodes.size());
            nodes.push_back(std::move(node));
        }
    }
    std::stable_sort(nodes.begin(), nodes.end(),
                     [](const DominantNode& a, const DominantNode& b) { return a.depth < b.depth; });

    const Weight lambda_rho2 = lambda + rs.rho() + rs.rho();
    std::unordered_map<Weight, Multiplicity, WeightHash> mult;
    mult.emplace(lambda, 1);

    for (std::size_t k = 1; k < nodes.size(); ++k) {
        const Weight& mu = nodes[k].weight;
        // (lambda+rho, lambda+rho) - (mu+rho, mu+rho) = (lambda - mu, lambda + mu + 2 rho)
        std::int64_t denom = 0;
        const Weight sum = lambda_rho2 + mu;
        for (std::size_t j = 0; j < n; ++j)
            denom += nodes[k].depth_coords[j] * sum[j];

        Multiplicity numer = 0;
        for (const auto& beta : roots) {
            Weight shifted = mu;
            while (true) {
                shifted += beta.fundamental;
                auto dom = to_dominant(rs, shifted).dominant;
                auto it = mult.find(dom);
                if (it == mult.end())
                    break;
                numer += it->second * RootSystem::pair_with_root(shifted, beta);
            }
        }
        numer *= 2;
        if (denom <= 0 || numer % denom != 0)
            throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity at " + mu.to_string());
        Multiplicity m = numer / denom;
        if (m > 0)
            mult.emplace(mu, m);
    }
    return WeightMap(mult.begin(), mult.end());
}

}  // namespace

BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda)
{
    rs.require_dominant(lambda);
    const Weight shifted = lambda + rs.rho();
    BigInt num = 1, den = 1;
    for (const auto& beta : rs.positive_roots()) {
        num *= RootSystem::pair_with_root(shifted, beta);
        den *= beta.height;  // (rho, beta) = height of beta
    }
    return num / den;
}

std::shared_ptr<const WeightMap> dominant_weight_multiplicities(const RootSystem& rs, const Weight& lambda)
{
    rs.require_dominant(lambda);
    return dominant_cache().get({rs.series(), rs.rank(), lambda}, [&] { return freudenthal(rs, lambda); });
}

BigInt distinct_weight_count(const RootSystem& rs, const Weight& lambda)
{
    BigInt count = 0;
    for (const auto& [mu, m] : *dominant_weight_multiplicities(rs, lambda))
        count += orbit_size(rs, mu);
    return count;
}

std::shared_ptr<const WeightMultiset> full_weight_multiset(const RootSystem& rs, const Weight& lambda,
                                                           const Limits& limits)
{
    rs.require_dominant(lambda);
    const BigInt predicted = distinct_weight_count(rs, lambda);
    if (predicted > limits.orbit)
        throw GuardExceeded("weight system of " + lambda.to_string() + " in " + rs.name() + " has " +
                            predicted.str() + " distinct weights, above the limit " + std::to_string(limits.orbit));
    return full_cache().get({rs.series(), rs.rank(), lambda}, [&] {
        WeightMultiset out;
        for (const auto& [mu, m] : *dominant_weight_multiplicities(rs, lambda)) {
            for (auto& w : weyl_orbit(rs, mu, limits)) {
                out.total += m;
                out.entries.emplace(std::move(w), m);
            }
        }
        return out;
    });
}

void clear_weight_caches()
{
    dominant_cache().clear();
    full_cache().clear();
}

}  // namespace lierep
