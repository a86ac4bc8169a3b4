#include "lierep/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <set>

namespace lierep {

char series_letter(Series s)
{
    switch (s) {
    case Series::A: return 'A';
    case Series::D: return 'D';
    case Series::E: return 'E';
    }
    return '?';
}

namespace {

std::vector<std::vector<int>> cartan_matrix(Series series, int n)
{
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    auto link = [&](int i, int j) {  // 1-based
        c[i - 1][j - 1] = -1;
        c[j - 1][i - 1] = -1;
    };
    for (int i = 0; i < n; ++i)
        c[i][i] = 2;
    switch (series) {
    case Series::A:
        for (int i = 1; i < n; ++i)
            link(i, i + 1);
        break;
    case Series::D:
        for (int i = 1; i < n - 1; ++i)
            link(i, i + 1);
        link(n - 2, n);
        break;
    case Series::E:
        link(1, 3);
        link(2, 4);
        for (int i = 3; i < n; ++i)
            link(i, i + 1);
        break;
    }
    return c;
}

std::vector<std::vector<Rational>> invert(const std::vector<std::vector<int>>& m)
{
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0)
            ++piv;
        if (piv == n)
            throw std::logic_error("singular Cartan matrix");
        std::swap(a[piv], a[col]);
        Rational p = a[col][col];
        for (auto& x : a[col])
            x /= p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            Rational f = a[r][col];
            for (std::size_t k = 0; k < 2 * n; ++k)
                a[r][k] -= f * a[col][k];
        }
    }
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv[i][j] = a[i][n + j];
    return inv;
}

BigInt factorial(int n)
{
    BigInt f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

// Weyl group order of a connected simply-laced diagram, identified by its
// node count and branch structure.
BigInt connected_weyl_order(const std::vector<std::vector<int>>& adj, const std::vector<int>& comp)
{
    const int k = static_cast<int>(comp.size());
    int branch = -1;
    for (int v : comp)
        if (adj[v].size() >= 3)
            branch = v;
    if (branch < 0)
        return factorial(k + 1);  // A_k

    // Arm lengths from the branch node.
    std::vector<int> arms;
    for (int start : adj[branch]) {
        int len = 0, prev = branch, cur = start;
        while (true) {
            ++len;
            int next = -1;
            for (int w : adj[cur])
                if (w != prev)
                    next = w;
            if (next < 0)
                break;
            prev = cur;
            cur = next;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() != 3)
        throw std::logic_error("unsupported Dynkin diagram component");
    if (arms[0] == 1 && arms[1] == 1) {
        BigInt order = factorial(k);  // D_k: 2^(k-1) k!
        return order << (k - 1);
    }
    if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2)
        return 51840;
    if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3)
        return 2903040;
    if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4)
        return BigInt(696729600);
    throw std::logic_error("unsupported Dynkin diagram component");
}

}  // namespace

RootSystem RootSystem::build(Series series, int rank)
{
    bool ok = (series == Series::A && rank >= 1) || (series == Series::D && rank >= 3) ||
              (series == Series::E && (rank == 6 || rank == 7));
    if (!ok)
        throw std::invalid_argument(std::string("unsupported root system ") + series_letter(series) +
                                    std::to_string(rank) +
                                    ": only simply-laced A_n (n>=1), D_n (n>=3), E6 and E7 are available");

    RootSystem rs;
    rs.series_ = series;
    rs.rank_ = rank;
    rs.cartan_ = cartan_matrix(series, rank);
    rs.form_ = invert(rs.cartan_);
    rs.rho_ = Weight::all_ones(rank);

    for (int i = 0; i < rank; ++i)
        rs.simple_roots_.emplace_back(std::vector<std::int64_t>(rs.cartan_[i].begin(), rs.cartan_[i].end()));

    // Close the simple roots under simple reflections; s_i permutes the
    // positive roots other than alpha_i.
    std::set<std::vector<std::int64_t>> seen;
    std::vector<std::vector<std::int64_t>> frontier;
    for (int i = 0; i < rank; ++i) {
        std::vector<std::int64_t> e(rank, 0);
        e[i] = 1;
        seen.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& beta : frontier) {
            for (int i = 0; i < rank; ++i) {
                std::int64_t pairing = 0;  // <beta, alpha_i^vee>
                for (int j = 0; j < rank; ++j)
                    pairing += beta[j] * rs.cartan_[j][i];
                if (pairing >= 0)
                    continue;
                auto image = beta;
                image[i] -= pairing;
                if (seen.insert(image).second)
                    next.push_back(std::move(image));
            }
        }
        frontier = std::move(next);
    }

    for (const auto& simple : seen) {
        Root r;
        r.simple = simple;
        std::vector<std::int64_t> fund(rank, 0);
        for (int j = 0; j < rank; ++j)
            for (int k = 0; k < rank; ++k)
                fund[k] += simple[j] * rs.cartan_[j][k];
        r.fundamental = Weight(std::move(fund));
        for (auto c : simple)
            r.height += c;
        rs.positive_roots_.push_back(std::move(r));
    }
    // Height order, ties broken lexicographically; the highest root ends last.
    std::sort(rs.positive_roots_.begin(), rs.positive_roots_.end(), [](const Root& a, const Root& b) {
        if (a.height != b.height)
            return a.height < b.height;
        return a.simple < b.simple;
    });
    return rs;
}

std::string RootSystem::name() const
{
    return std::string(1, series_letter(series_)) + std::to_string(rank_);
}

const Weight& RootSystem::simple_root(int i) const
{
    if (i < 1 || i > rank_)
        throw std::out_of_range("simple root index " + std::to_string(i) + " outside 1.." + std::to_string(rank_));
    return simple_roots_[static_cast<std::size_t>(i - 1)];
}

std::int64_t RootSystem::coroot_pairing(const Weight& lambda, int i) const
{
    require_rank(lambda);
    if (i < 1 || i > rank_)
        throw std::out_of_range("simple coroot index " + std::to_string(i) + " outside 1.." +
                                std::to_string(rank_));
    return lambda[static_cast<std::size_t>(i - 1)];
}

Rational RootSystem::invariant_form(const Weight& lambda, const Weight& mu) const
{
    require_rank(lambda);
    require_rank(mu);
    Rational sum = 0;
    for (int i = 0; i < rank_; ++i) {
        if (lambda[i] == 0)
            continue;
        for (int j = 0; j < rank_; ++j)
            if (mu[j] != 0)
                sum += form_[i][j] * lambda[i] * mu[j];
    }
    return sum;
}

std::int64_t RootSystem::pair_with_root(const Weight& lambda, const Root& beta)
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < beta.simple.size(); ++i)
        s += lambda[i] * beta.simple[i];
    return s;
}

BigInt RootSystem::weyl_group_order() const
{
    std::vector<int> all(static_cast<std::size_t>(rank_));
    for (int i = 0; i < rank_; ++i)
        all[i] = i;
    return parabolic_order(all);
}

BigInt RootSystem::parabolic_order(const std::vector<int>& nodes) const
{
    std::vector<char> in(static_cast<std::size_t>(rank_), 0);
    for (int v : nodes) {
        if (v < 0 || v >= rank_)
            throw std::out_of_range("node index out of range");
        in[v] = 1;
    }
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            if (i != j && in[i] && in[j] && cartan_[i][j] != 0)
                adj[i].push_back(j);

    BigInt order = 1;
    std::vector<char> visited(static_cast<std::size_t>(rank_), 0);
    for (int s = 0; s < rank_; ++s) {
        if (!in[s] || visited[s])
            continue;
        std::vector<int> comp{s};
        visited[s] = 1;
        for (std::size_t k = 0; k < comp.size(); ++k)
            for (int w : adj[comp[k]])
                if (!visited[w]) {
                    visited[w] = 1;
                    comp.push_back(w);
                }
        order *= connected_weyl_order(adj, comp);
    }
    return order;
}

void RootSystem::require_rank(const Weight& lambda) const
{
    if (static_cast<int>(lambda.rank()) != rank_)
        throw std::invalid_argument("weight " + lambda.to_string() + " has " + std::to_string(lambda.rank()) +
                                    " coordinates; " + name() + " needs " + std::to_string(rank_));
}

void RootSystem::require_dominant(const Weight& lambda) const
{
    require_rank(lambda);
    if (!lambda.is_dominant())
        throw std::invalid_argument("weight " + lambda.to_string() + " is not dominant integral for " + name());
}

const RootSystem& root_system(Series series, int rank)
{
    static std::mutex mutex;
    static std::map<std::pair<Series, int>, std::unique_ptr<const RootSystem>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{series, rank}];
    if (!slot)
        slot = std::make_unique<const RootSystem>(RootSystem::build(series, rank));
    return *slot;
}

const RootSystem& root_system(std::string_view type)
{
    auto fail = [&] {
        return std::invalid_argument("cannot parse root system type '" + std::string(type) +
                                     "' (expected e.g. A2, D5, E6)");
    };
    if (type.size() < 2)
        throw fail();
    char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
    Series s;
    switch (letter) {
    case 'A': s = Series::A; break;
    case 'D': s = Series::D; break;
    case 'E': s = Series::E; break;
    default:
        throw std::invalid_argument("unsupported root system series '" + std::string(1, type[0]) +
                                    "': only simply-laced A, D, E are available");
    }
    auto digits = type.substr(1);
    if (digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw fail();
    return root_system(s, std::stoi(std::string(digits)));
}

}  // namespace lierep
