#include <doctest.h>

#include <set>

#include "lierep/weyl.hpp"
#include "printers.hpp"
#include "test_support.hpp"

using namespace lierep;

TEST_CASE("weight parsing")
{
    CHECK(parse_weight("1,0,-2") == Weight{1, 0, -2});
    CHECK(parse_weight("[1, 0, -2]") == Weight{1, 0, -2});
    CHECK(parse_weight("4/2,0") == Weight{2, 0});
    CHECK_THROWS_AS(parse_weight("1/2,0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight("+1,0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight("99999999999999999999,0"), std::exception);
    CHECK(Weight{1, 0, -2}.to_string() == "[1,0,-2]");
}

TEST_CASE("weight arithmetic and ordering")
{
    Weight a{1, 2, 3}, b{0, 1, -1};
    CHECK(a + b == Weight{1, 3, 2});
    CHECK(a - b == Weight{1, 1, 4});
    CHECK(2 * b == Weight{0, 2, -2});
    CHECK(-b == Weight{0, -1, 1});
    CHECK(b < a);
    CHECK(Weight{0, 0, 1} < Weight{0, 1, 0});
    CHECK(Weight{1, 0}.is_dominant());
    CHECK_FALSE(Weight{1, 0}.is_regular_dominant());
    CHECK(Weight::fundamental(3, 2) == Weight{0, 1, 0});
}

TEST_CASE("root system sizes")
{
    CHECK(root_system(Series::D, 5).positive_roots().size() == 20);
    CHECK(root_system(Series::E, 6).positive_roots().size() == 36);
    CHECK(root_system(Series::E, 7).positive_roots().size() == 63);
    CHECK(root_system("A3").positive_roots().size() == 6);
    CHECK(root_system("D4").positive_roots().size() == 12);
    CHECK(root_system("E6").weyl_group_order() == 51840);
    CHECK(root_system("E7").weyl_group_order() == 2903040);
    CHECK(root_system("D5").weyl_group_order() == 1920);
    CHECK(root_system("A2").weyl_group_order() == 6);
    CHECK(&root_system("e6") == &root_system(Series::E, 6));
}

TEST_CASE("unsupported root systems")
{
    CHECK_THROWS_AS(root_system("F4"), std::invalid_argument);
    CHECK_THROWS_AS(root_system("E8"), std::invalid_argument);
    CHECK_THROWS_AS(root_system("D2"), std::invalid_argument);
    CHECK_THROWS_AS(root_system("A0"), std::invalid_argument);
    CHECK_THROWS_AS(root_system("E"), std::invalid_argument);
}

TEST_CASE("highest roots and heights")
{
    CHECK(root_system("E6").highest_root().fundamental == Weight{0, 1, 0, 0, 0, 0});
    CHECK(root_system("E7").highest_root().fundamental == Weight{1, 0, 0, 0, 0, 0, 0});
    CHECK(root_system("D5").highest_root().fundamental == Weight{0, 1, 0, 0, 0});
    CHECK(root_system("E6").highest_root().height == 11);
    CHECK(root_system("E7").highest_root().height == 17);
    for (const char* t : {"A3", "D5", "E6", "E7"}) {
        const auto& rs = root_system(t);
        for (const auto& beta : rs.positive_roots()) {
            CHECK(RootSystem::pair_with_root(rs.rho(), beta) == beta.height);
            CHECK(rs.invariant_form(beta.fundamental, beta.fundamental) == 2);
        }
    }
}

TEST_CASE("pairings and invariant form")
{
    const auto& e6 = root_system("E6");
    for (int i = 1; i <= 6; ++i)
        CHECK(e6.coroot_pairing(Weight::all_ones(6), i) == 1);
    CHECK(e6.coroot_pairing(Weight{1, 0, 0, 0, 0, 0}, 1) == 1);
    CHECK(e6.coroot_pairing(Weight{1, -1, 1, 2, 2, -1}, 2) == -1);
    CHECK(e6.invariant_form(e6.simple_root(1), e6.simple_root(1)) == 2);
    CHECK(e6.invariant_form(Weight::zero(6), Weight{3, 1, 0, 2, 0, 1}) == 0);
    const auto& d5 = root_system("D5");
    CHECK(d5.invariant_form(Weight{1, 0, 0, 0, 0}, Weight{1, 0, 0, 0, 0}) == 1);
    CHECK(d5.invariant_form(Weight{0, 0, 0, 1, 0}, Weight{0, 0, 0, 1, 0}) == Rational(5, 4));
    CHECK_THROWS_AS(e6.coroot_pairing(Weight{1, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(e6.simple_root(7), std::out_of_range);
}

TEST_CASE("to_dominant examples")
{
    const auto& e6 = root_system("E6");
    auto r = to_dominant(e6, Weight::all_ones(6));
    CHECK(r.dominant == Weight::all_ones(6));
    CHECK(r.sign == 1);
    CHECK(r.reflections == 0);

    r = to_dominant(e6, Weight{1, -1, 1, 3, -1, 2});
    CHECK(r.dominant == Weight::all_ones(6));
    CHECK(r.sign == 1);

    r = to_dominant(e6, Weight{1, 1, 1, 0, 1, 1});
    CHECK(r.dominant == Weight{1, 1, 1, 0, 1, 1});
    CHECK(r.sign == 0);

    r = to_dominant(e6, Weight{1, -1, 1, 2, 2, -1});
    CHECK(r.dominant == Weight::all_ones(6));
    CHECK(r.sign == 1);
    CHECK(r.reflections == 2);

    const auto& a2 = root_system("A2");
    r = to_dominant(a2, Weight{-1, 0});
    CHECK(r.dominant == Weight{0, 1});
    CHECK(r.sign == 0);
    r = to_dominant(a2, Weight{-2, 1});
    CHECK(r.dominant == Weight{1, 1});
    CHECK(r.sign == 1);
    r = to_dominant(a2, Weight{-1, 2});
    CHECK(r.dominant == Weight{1, 1});
    CHECK(r.sign == -1);
    CHECK(r.reflections == 1);
    r = to_dominant(a2, Weight{-3, 1});
    CHECK(r.dominant == Weight{1, 2});
    CHECK(r.sign == 1);

    CHECK_THROWS_AS(to_dominant_rational(e6, parse_rational_list("1/2,0,0,0,0,0")), std::invalid_argument);
    CHECK(to_dominant_rational(e6, parse_rational_list("2/2,0,0,0,0,0")).dominant == Weight{1, 0, 0, 0, 0, 0});
}

TEST_CASE("to_dominant is idempotent and constant on orbits")
{
    for (const char* t : {"A3", "D5", "E6"}) {
        const auto& rs = root_system(t);
        const auto n = static_cast<std::size_t>(rs.rank());
        const Weight lambda = Weight::fundamental(n, 1) + Weight::fundamental(n, 2);
        for (const auto& w : weyl_orbit(rs, lambda)) {
            auto once = to_dominant(rs, w);
            CHECK(once.dominant == lambda);
            auto twice = to_dominant(rs, once.dominant);
            CHECK(twice.dominant == once.dominant);
            CHECK(twice.reflections == 0);
        }
    }
}

TEST_CASE("reflection sign is the parity of the Weyl element")
{
    const auto& d4 = root_system("D4");
    const Weight rho = d4.rho();
    int positive = 0, negative = 0;
    for (const auto& w : weyl_orbit(d4, rho, Limits{})) {
        auto r = to_dominant(d4, w);
        CHECK(r.dominant == rho);
        (r.sign > 0 ? positive : negative)++;
    }
    CHECK(positive == 96);
    CHECK(negative == 96);
}

TEST_CASE("orbit sizes")
{
    const auto& e6 = root_system("E6");
    CHECK(weyl_orbit(e6, Weight{1, 0, 0, 0, 0, 0}).size() == 27);
    CHECK(orbit_size(e6, Weight{1, 0, 0, 0, 0, 0}) == 27);
    CHECK(orbit_size(e6, Weight{0, 1, 0, 0, 0, 0}) == 72);
    CHECK(orbit_size(root_system("E7"), Weight{0, 0, 0, 0, 0, 0, 1}) == 56);
    CHECK(weyl_orbit(root_system("D5"), Weight{0, 0, 0, 0, 1}).size() == 16);
    CHECK(weyl_orbit(root_system("A3"), Weight::zero(3)).size() == 1);
    CHECK(weyl_orbit(e6, Weight::all_ones(6)).size() == 51840);
    for (const char* t : {"A3", "D4", "D5", "E6"}) {
        const auto& rs = root_system(t);
        for (int i = 1; i <= rs.rank(); ++i) {
            auto w = Weight::fundamental(static_cast<std::size_t>(rs.rank()), static_cast<std::size_t>(i));
            CHECK(weyl_orbit(rs, w).size() == orbit_size(rs, w));
        }
    }
}

TEST_CASE("orbit guard")
{
    Limits tight;
    tight.orbit = 100;
    CHECK_THROWS_AS(weyl_orbit(root_system("E6"), Weight::all_ones(6), tight), GuardExceeded);
    CHECK(weyl_orbit(root_system("E6"), Weight{1, 0, 0, 0, 0, 0}, tight).size() == 27);
    CHECK_THROWS_AS(weyl_orbit(root_system("E6"), Weight{1, -1, 0, 0, 0, 0}), std::invalid_argument);
}
