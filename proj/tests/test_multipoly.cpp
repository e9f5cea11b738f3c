#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "waring/multipoly.hpp"

using namespace waring;

namespace {
const std::vector<std::string> X = {"x"};
const std::vector<std::string> XY = {"x", "y"};
}  // namespace

TEST_CASE("basic arithmetic") {
    auto x = MultiPoly::variable(1, 0);
    auto one = MultiPoly::constant(1, 1);
    CHECK((x + one).pow(2) == MultiPoly::parse("x^2+2*x+1", X));
    CHECK((x + one) * (x - one) == MultiPoly::parse("x^2-1", X));
    CHECK((x - x).is_zero());
}

TEST_CASE("substitution") {
    auto x = MultiPoly::variable(1, 0);
    auto cube = x.pow(3);
    CHECK(cube.substitute({x + MultiPoly::constant(1, 1)}) ==
          MultiPoly::parse("x^3+3*x^2+3*x+1", X));
    // two-variable into one-variable
    auto f = MultiPoly::parse("t^2*d + t*d", {"t", "d"});
    CHECK(f.substitute({x.pow(2), x}) == MultiPoly::parse("x^5+x^3", X));
}

TEST_CASE("coefficient reduction mod m") {
    auto xy = MultiPoly::variable(2, 0) + MultiPoly::variable(2, 1);
    auto expanded = xy.pow(10).coeffs_mod(10);
    CHECK(expanded == MultiPoly::parse("x^10+y^10+5*x^8*y^2+2*x^5*y^5+5*x^2*y^8", XY));
}

TEST_CASE("parse, print, reparse is stable") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 200; ++it) {
        MultiPoly p(2);
        for (int t = 0; t < 6; ++t)
            p.add_term({unsigned(rng() % 9), unsigned(rng() % 9)},
                       (long long)(rng() % 41) - 20);
        auto text = p.to_string({"t", "d"});
        CHECK(MultiPoly::parse(text, {"t", "d"}) == p);
    }
}

TEST_CASE("ring evaluation matches the element expression parser") {
    auto R = Ring::parse("Z/3[e]/(e^2)");
    auto p = MultiPoly::parse("2*x^3 + x + 1", X);
    for (u64 v : R->elements()) {
        u64 direct = R->add(R->add(R->scale(2, R->pow(v, 3)), v), R->one());
        CHECK(p.eval(*R, {v}) == direct);
    }
}

TEST_CASE("overflow is detected, not wrapped") {
    auto big = MultiPoly::constant(1, (1ll << 62));
    CHECK_THROWS(big * MultiPoly::constant(1, 4));
}

TEST_CASE("substitution commutes with evaluation") {
    auto R = Ring::parse("Z/3[e]/(e^2)");
    std::mt19937_64 rng(31);
    for (int it = 0; it < 100; ++it) {
        MultiPoly f(2);
        for (int t = 0; t < 5; ++t)
            f.add_term({unsigned(rng() % 6), unsigned(rng() % 6)},
                       (long long)(rng() % 21) - 10);
        MultiPoly g1(1), g2(1);
        for (int t = 0; t < 3; ++t) {
            g1.add_term({unsigned(rng() % 4)}, (long long)(rng() % 7) - 3);
            g2.add_term({unsigned(rng() % 4)}, (long long)(rng() % 7) - 3);
        }
        MultiPoly composed = f.substitute({g1, g2});
        for (u64 x : R->elements())
            CHECK(composed.eval(*R, {x}) == f.eval(*R, {g1.eval(*R, {x}), g2.eval(*R, {x})}));
    }
}
