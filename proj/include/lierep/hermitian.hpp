#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lierep/rootsys.hpp"

namespace lierep {

// Irreducible representation of K = K_ss . U(1): a K_ss-dominant weight in
// the K labelling together with the central coordinate (coefficient of
// zeta / zeta-scale).
struct KType {
    Weight ss;
    std::int64_t central = 0;

    friend auto operator<=>(const KType&, const KType&) = default;
    friend bool operator==(const KType&, const KType&) = default;

    // "[n_1,...,n_r,c]"
    std::string to_string() const;
};

// Parses "[n_1,...,n_r,c]" for a K_ss of rank r.
KType parse_ktype(std::string_view text, std::size_t ss_rank);

struct SchmidGenerator {
    KType ktype;
    int degree = 1;

    friend bool operator==(const SchmidGenerator&, const SchmidGenerator&) = default;
};

struct HermitianPair {
    std::string id;     // "EIII", "EVII"
    std::string group;  // "E6(-14)"
    Series k_series = Series::D;
    int k_rank = 0;
    std::vector<int> display_permutation;  // K coordinate j is k-system coordinate display_permutation[j-1]
    std::int64_t zeta_scale = 1;
    std::int64_t delta_n = 0;
    std::int64_t dim_p_minus = 0;
    std::vector<SchmidGenerator> schmid;
    std::vector<std::pair<std::string, std::string>> meta;

    const RootSystem& k_system() const { return root_system(k_series, k_rank); }
    // Central drop per unit of Schmid degree.
    std::int64_t level_step() const;
    Weight to_branch_labels(const Weight& k_ss) const;
    Weight from_branch_labels(const Weight& branch) const;
    BigInt dimension(const KType& kt) const;

    friend bool operator==(const HermitianPair&, const HermitianPair&) = default;
};

class PairBook {
public:
    // Throws std::invalid_argument with "source:line" on malformed or
    // inconsistent records.
    static PairBook parse(std::string_view text, std::string source);
    static PairBook load(const std::string& path);
    static const PairBook& builtin();

    const HermitianPair& find(std::string_view id) const;
    const std::vector<HermitianPair>& pairs() const noexcept { return pairs_; }
    // Serializes back to the record format; parse(to_text()) reproduces the book.
    std::string to_text() const;

    friend bool operator==(const PairBook&, const PairBook&) = default;

private:
    std::vector<HermitianPair> pairs_;
    int version_ = 0;
};

// Builtin record for "EIII" or "EVII".
const HermitianPair& pair_data(std::string_view id);

// One component of S(p^-): exponents on the generators, the resulting
// K-type (sum of generators) and its degree.
struct SchmidComponent {
    std::vector<std::int64_t> exponents;
    KType ktype;
    int level = 0;
};

// All components of degree <= max_level, ordered by level then exponents.
std::vector<SchmidComponent> schmid_components(const HermitianPair& pair, int max_level);

}  // namespace lierep
