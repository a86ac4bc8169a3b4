#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lierep/weight.hpp"

namespace lierep {

enum class Series { A, D, E };

char series_letter(Series s);

// A positive root, kept in both coordinate systems.
struct Root {
    std::vector<std::int64_t> simple;  // coefficients on alpha_1..alpha_l
    Weight fundamental;                // the same root in the fundamental-weight basis
    std::int64_t height = 0;
};

// Simply-laced root system of type A_n (n>=1), D_n (n>=3), E6 or E7, built
// from its Cartan matrix. Labelling follows Bourbaki: D_n has the fork at
// nodes n-1, n; E_n has the chain 1-3-4-...-n with node 2 attached to node 4.
// Immutable after construction.
class RootSystem {
public:
    // Throws std::invalid_argument for anything outside A_n, D_n, E6, E7.
    static RootSystem build(Series series, int rank);

    Series series() const noexcept { return series_; }
    int rank() const noexcept { return rank_; }
    std::string name() const;

    const std::vector<std::vector<int>>& cartan() const noexcept { return cartan_; }
    const std::vector<Root>& positive_roots() const noexcept { return positive_roots_; }
    const Root& highest_root() const noexcept { return positive_roots_.back(); }
    const Weight& rho() const noexcept { return rho_; }

    // Symmetric bilinear form on the fundamental-weight basis (inverse
    // Cartan matrix); roots have squared length 2.
    const std::vector<std::vector<Rational>>& form() const noexcept { return form_; }

    // alpha_i in the fundamental-weight basis (row i of the Cartan matrix), 1-based.
    const Weight& simple_root(int i) const;

    // <lambda, alpha_i^vee>, 1-based i.
    std::int64_t coroot_pairing(const Weight& lambda, int i) const;

    Rational invariant_form(const Weight& lambda, const Weight& mu) const;

    // (lambda, beta) for a root beta; integral because roots are coroots here.
    static std::int64_t pair_with_root(const Weight& lambda, const Root& beta);

    // Order of the Weyl group and of the parabolic subgroup generated by the
    // simple reflections in `nodes` (0-based).
    BigInt weyl_group_order() const;
    BigInt parabolic_order(const std::vector<int>& nodes) const;

    // Validates rank and dominance; used at every public entry point taking
    // a highest weight.
    void require_rank(const Weight& lambda) const;
    void require_dominant(const Weight& lambda) const;

private:
    RootSystem() = default;

    Series series_ = Series::A;
    int rank_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<Root> positive_roots_;
    std::vector<Weight> simple_roots_;
    Weight rho_;
    std::vector<std::vector<Rational>> form_;
};

// Process-wide immutable instance for (series, rank); built on first use.
const RootSystem& root_system(Series series, int rank);

// Parses "E6", "D5", "A2" (case-insensitive letter).
const RootSystem& root_system(std::string_view type);

}  // namespace lierep
