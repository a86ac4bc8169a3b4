#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lierep/tensor.hpp"

namespace lierep {

// Index of a fundamental weight, linear in the rank n and a range variable i.
struct IndexExpr {
    std::int64_t constant = 0;
    std::int64_t n_coeff = 0;
    std::int64_t i_coeff = 0;

    std::int64_t eval(std::int64_t n, std::int64_t i = 0) const { return constant + n_coeff * n + i_coeff * i; }
};

// `lo (<|<=) i (<|<=) hi`, bounds being (linear in n) / denominator.
struct IndexRange {
    IndexExpr lo, hi;
    std::int64_t lo_den = 1, hi_den = 1;
    bool lo_strict = false, hi_strict = false;

    std::vector<std::int64_t> values(std::int64_t n) const;
};

struct FundamentalTerm {
    std::int64_t coeff = 1;
    IndexExpr index;
};

// One offset line of a rule: a literal vector or a sum of fundamental
// weights, with multiplicity and an optional range over i.
struct ShiftSpec {
    std::optional<Weight> literal;
    std::vector<FundamentalTerm> terms;
    Multiplicity mult = 1;
    std::optional<IndexRange> range;
    int line = 0;

    // All offsets this line stands for at rank n.
    std::vector<Weight> expand(std::int64_t rank) const;
};

struct Correction {
    std::vector<std::string> zero_params;  // applies when any of these is zero
    ShiftSpec shift;
};

struct FamilyParam {
    std::string name;
    IndexExpr position;
};

// Parameter assignment, e.g. {"n":5, "a1":2, "an1":0} or {"a":2, "f":2}.
using RuleParams = std::map<std::string, std::int64_t>;

struct ClosedFormRule {
    std::string id;
    Series series = Series::E;
    std::optional<int> fixed_rank;  // unset: D_n with n taken from params
    int min_rank = 1;
    std::vector<std::string> params;
    std::vector<FamilyParam> family;
    ShiftSpec factor;
    bool trivial_family_is_factor = false;
    bool claims_multiplicity_free = false;
    std::vector<ShiftSpec> shifts;
    std::vector<Correction> corrections;
    std::string source;
    int line = 0;

    const RootSystem& system(const RuleParams& p) const;
    Weight factor_weight(const RuleParams& p) const;
    Weight family_weight(const RuleParams& p) const;
};

class RuleBook {
public:
    // Throws std::invalid_argument with "source:line" on malformed input.
    static RuleBook parse(std::string_view text, std::string source);
    static RuleBook load(const std::string& path);
    // Rules compiled into the library from data/rules.txt.
    static const RuleBook& builtin();

    const ClosedFormRule& find(std::string_view id) const;
    const std::vector<ClosedFormRule>& rules() const noexcept { return rules_; }
    int format_version() const noexcept { return version_; }

private:
    std::vector<ClosedFormRule> rules_;
    int version_ = 0;
};

// The rule's predicted E_factor (x) E_family after the dominance filter and
// the zero-parameter corrections. Throws std::invalid_argument on missing or
// negative parameters, std::runtime_error if corrections drive a
// multiplicity negative.
Decomposition closed_form(const ClosedFormRule& rule, const RuleParams& params);

struct RulePointResult {
    RuleParams params;
    bool match = false;
    std::optional<Decomposition> predicted;
    Decomposition computed;
    std::string note;  // failure description, empty on match
};

struct RuleReport {
    std::string rule_id;
    std::vector<RulePointResult> points;

    bool all_match() const;
    std::size_t mismatches() const;
};

// Compares closed_form with tensor_decompose at every grid point. Mismatches,
// including a violated multiplicity-free claim, are recorded, not thrown.
RuleReport verify_rule(const ClosedFormRule& rule, const std::vector<RuleParams>& grid);

// Cartesian grid: each named parameter over [0, bound], plus fixed values.
std::vector<RuleParams> parameter_grid(const ClosedFormRule& rule, std::int64_t bound, const RuleParams& fixed = {});

std::string format_params(const RuleParams& p);

}  // namespace lierep
