#include "lierep/weight.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace lierep {

Weight Weight::fundamental(std::size_t rank, std::size_t index)
{
    if (index < 1 || index > rank)
        throw std::out_of_range("fundamental weight index " + std::to_string(index) +
                                " outside 1.." + std::to_string(rank));
    Weight w = zero(rank);
    w[index - 1] = 1;
    return w;
}

bool Weight::is_dominant() const noexcept
{
    return std::all_of(coords_.begin(), coords_.end(), [](value_type c) { return c >= 0; });
}

bool Weight::is_regular_dominant() const noexcept
{
    return std::all_of(coords_.begin(), coords_.end(), [](value_type c) { return c > 0; });
}

bool Weight::is_zero() const noexcept
{
    return std::all_of(coords_.begin(), coords_.end(), [](value_type c) { return c == 0; });
}

Weight& Weight::operator+=(const Weight& other)
{
    if (other.rank() != rank())
        throw std::invalid_argument("weight rank mismatch: " + to_string() + " + " + other.to_string());
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += other.coords_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& other)
{
    if (other.rank() != rank())
        throw std::invalid_argument("weight rank mismatch: " + to_string() + " - " + other.to_string());
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] -= other.coords_[i];
    return *this;
}

Weight& Weight::operator*=(value_type scalar)
{
    for (auto& c : coords_)
        c *= scalar;
    return *this;
}

Weight Weight::operator-() const
{
    Weight w = *this;
    w *= -1;
    return w;
}

std::string Weight::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(coords_[i]);
    }
    out += ']';
    return out;
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto c : w)
        h = (h ^ static_cast<std::size_t>(c)) * 0x100000001b3ULL;
    return h;
}

std::vector<Rational> parse_rational_list(std::string_view text)
{
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; }), s.end());
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']')
            throw std::invalid_argument("unbalanced brackets in weight '" + std::string(text) + "'");
        s = s.substr(1, s.size() - 2);
    }
    if (s.empty())
        throw std::invalid_argument("empty weight");

    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            throw std::invalid_argument("empty coordinate in weight '" + std::string(text) + "'");
        auto bad = [&] {
            return std::invalid_argument("malformed coordinate '" + item + "' in weight '" +
                                         std::string(text) + "'");
        };
        auto slash = item.find('/');
        auto check_int = [&](const std::string& t) {
            std::size_t start = (t.size() > 1 && t[0] == '-') ? 1 : 0;
            if (t.empty() || start == t.size() ||
                !std::all_of(t.begin() + static_cast<std::ptrdiff_t>(start), t.end(),
                             [](char c) { return c >= '0' && c <= '9'; }))
                throw bad();
        };
        if (slash == std::string::npos) {
            check_int(item);
            out.emplace_back(BigInt(item));
        } else {
            std::string num = item.substr(0, slash), den = item.substr(slash + 1);
            check_int(num);
            check_int(den);
            BigInt d(den);
            if (d == 0)
                throw std::invalid_argument("zero denominator in weight '" + std::string(text) + "'");
            out.emplace_back(BigInt(num), d);
        }
    }
    if (s.back() == ',')
        throw std::invalid_argument("trailing comma in weight '" + std::string(text) + "'");
    return out;
}

Weight integral_weight(const std::vector<Rational>& coords)
{
    std::vector<Weight::value_type> out;
    out.reserve(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (boost::multiprecision::denominator(coords[i]) != 1)
            throw std::invalid_argument("coordinate " + std::to_string(i + 1) + " = " + coords[i].str() +
                                        " is not an integer");
        out.push_back(to_int64(boost::multiprecision::numerator(coords[i])));
    }
    return Weight(std::move(out));
}

Weight parse_weight(std::string_view text)
{
    return integral_weight(parse_rational_list(text));
}

std::int64_t to_int64(const BigInt& value)
{
    if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("value " + value.str() + " exceeds 64-bit range");
    return static_cast<std::int64_t>(value);
}

}  // namespace lierep
