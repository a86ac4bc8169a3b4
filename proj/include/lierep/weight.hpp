#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lierep {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when a computation would exceed a configured size ceiling
// (orbit enumeration, oracle product size).
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Integral weight in the fundamental-weight basis: [n_1, ..., n_l] stands
// for n_1*w_1 + ... + n_l*w_l.
class Weight {
public:
    using value_type = std::int64_t;

    Weight() = default;
    explicit Weight(std::vector<value_type> coords) : coords_(std::move(coords)) {}
    Weight(std::initializer_list<value_type> coords) : coords_(coords) {}

    static Weight zero(std::size_t rank) { return Weight(std::vector<value_type>(rank, 0)); }
    static Weight fundamental(std::size_t rank, std::size_t index);
    static Weight all_ones(std::size_t rank) { return Weight(std::vector<value_type>(rank, 1)); }

    std::size_t rank() const noexcept { return coords_.size(); }
    value_type operator[](std::size_t i) const { return coords_[i]; }
    value_type& operator[](std::size_t i) { return coords_[i]; }
    std::span<const value_type> coords() const noexcept { return coords_; }
    auto begin() const noexcept { return coords_.begin(); }
    auto end() const noexcept { return coords_.end(); }

    bool is_dominant() const noexcept;
    bool is_regular_dominant() const noexcept;
    bool is_zero() const noexcept;

    Weight& operator+=(const Weight& other);
    Weight& operator-=(const Weight& other);
    Weight& operator*=(value_type scalar);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(value_type s, Weight a) { return a *= s; }
    Weight operator-() const;

    // Lexicographic on coordinates; output ordering relies on this.
    friend auto operator<=>(const Weight&, const Weight&) = default;
    friend bool operator==(const Weight&, const Weight&) = default;

    // "[1,0,-1]"
    std::string to_string() const;

private:
    std::vector<value_type> coords_;
};

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept;
};

// Parses "1,0,-2" or "[1,0,-2]". Entries of the form p/q are accepted
// syntactically and rejected unless they reduce to integers.
Weight parse_weight(std::string_view text);

// Parses a comma-separated list of rationals; used where the caller needs to
// distinguish non-integral input from malformed input.
std::vector<Rational> parse_rational_list(std::string_view text);

// Converts exact rationals to an integral weight; throws std::invalid_argument
// naming the first non-integral coordinate.
Weight integral_weight(const std::vector<Rational>& coords);

// Checked conversion for values headed into int64 arithmetic.
std::int64_t to_int64(const BigInt& value);

}  // namespace lierep
