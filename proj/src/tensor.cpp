#include "lierep/tensor.hpp"

#include <unordered_map>

#include "lierep/weyl.hpp"

namespace lierep {

BigInt Decomposition::dimension() const
{
    BigInt total = 0;
    for (const auto& [w, m] : components)
        total += m * weyl_dimension(*system, w);
    return total;
}

Multiplicity Decomposition::max_multiplicity() const
{
    Multiplicity best = 0;
    for (const auto& [w, m] : components)
        if (m > best)
            best = m;
    return best;
}

Decomposition tensor_decompose(const RootSystem& rs, const Weight& left, const Weight& right, const Limits& limits)
{
    rs.require_dominant(left);
    rs.require_dominant(right);

    const bool enumerate_left = weyl_dimension(rs, left) <= weyl_dimension(rs, right);
    const Weight& small = enumerate_left ? left : right;
    const Weight& large = enumerate_left ? right : left;
    const Weight shift = large + rs.rho();

    std::unordered_map<Weight, Multiplicity, WeightHash> acc;
    for (const auto& [mu, m] : full_weight_multiset(rs, small, limits)->entries) {
        auto reduced = to_dominant(rs, mu + shift);
        if (reduced.sign == 0)
            continue;
        auto& slot = acc[reduced.dominant - rs.rho()];
        if (reduced.sign > 0)
            slot += m;
        else
            slot -= m;
    }

    Decomposition out{&rs, left, right, {}};
    for (auto& [w, m] : acc) {
        if (m < 0)
            throw std::logic_error("negative net multiplicity " + m.str() + " at " + w.to_string() + " in " +
                                   left.to_string() + " x " + right.to_string());
        if (m > 0)
            out.components.emplace(w, std::move(m));
    }
    return out;
}

Decomposition tensor_oracle(const RootSystem& rs, const Weight& left, const Weight& right, const Limits& limits)
{
    rs.require_dominant(left);
    rs.require_dominant(right);
    const BigInt product = weyl_dimension(rs, left) * weyl_dimension(rs, right);
    if (product > limits.oracle)
        throw GuardExceeded("oracle product dimension " + product.str() + " above the limit " +
                            std::to_string(limits.oracle));

    const auto a = full_weight_multiset(rs, left, limits);
    const auto b = full_weight_multiset(rs, right, limits);

    WeightMap remaining;
    for (const auto& [u, mu] : a->entries)
        for (const auto& [v, mv] : b->entries)
            remaining[u + v] += mu * mv;

    // (w, 2 rho) increases strictly along positive roots, so a weight
    // maximizing it is a highest weight of what is left.
    std::vector<std::int64_t> two_rho(static_cast<std::size_t>(rs.rank()), 0);
    for (const auto& beta : rs.positive_roots())
        for (std::size_t i = 0; i < two_rho.size(); ++i)
            two_rho[i] += beta.simple[i];
    auto height = [&](const Weight& w) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < two_rho.size(); ++i)
            s += w[i] * two_rho[i];
        return s;
    };

    Decomposition out{&rs, left, right, {}};
    while (!remaining.empty()) {
        auto top = remaining.begin();
        std::int64_t best = height(top->first);
        for (auto it = std::next(remaining.begin()); it != remaining.end(); ++it) {
            auto h = height(it->first);
            if (h > best) {
                best = h;
                top = it;
            }
        }
        const Weight highest = top->first;
        const Multiplicity m = top->second;
        if (m <= 0 || !highest.is_dominant())
            throw std::logic_error("peeling oracle met an invalid top weight " + highest.to_string());
        out.components.emplace(highest, m);
        for (const auto& [w, mw] : full_weight_multiset(rs, highest, limits)->entries) {
            auto it = remaining.find(w);
            if (it == remaining.end())
                throw std::logic_error("peeling oracle: weight " + w.to_string() + " missing from product");
            it->second -= m * mw;
            if (it->second < 0)
                throw std::logic_error("peeling oracle: negative remainder at " + w.to_string());
            if (it->second == 0)
                remaining.erase(it);
        }
    }
    return out;
}

}  // namespace lierep
