#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "waring/order_criteria.hpp"

using namespace waring;

namespace {

IntPoly P(const std::string& s) { return IntPoly::parse(s); }

IntPoly random_poly(std::mt19937_64& rng, int maxdeg) {
    IntPoly p;
    int deg = 1 + int(rng() % (unsigned)maxdeg);
    for (int i = 0; i <= deg; ++i) p.c.push_back((long long)(rng() % 19) - 9);
    if (p.c.back() == 0) p.c.back() = 1;
    return p;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.normalize();
    return r;
}

}  // namespace

TEST_CASE("polynomial parsing and printing") {
    CHECK(P("x^2-x+1").to_string() == "x^2 - x + 1");
    CHECK(P("x^3 - 2*x - 1").c == std::vector<BigInt>{-1, -2, 0, 1});
    CHECK(P("7").degree() == 0);
    CHECK_THROWS(P("y^2+1"));
}

TEST_CASE("resultants of linear factors") {
    // res(x-a, x-b) = a-b
    CHECK(resultant(P("x-3"), P("x-1")) == 2);
    CHECK(resultant(P("x-1"), P("x-3")) == -2);
    CHECK(resultant(P("x^2+1"), P("2*x")) == 4);
    CHECK(resultant(P("x^2+x+1"), P("x^2+x+1")) == 0);  // shared roots
    CHECK_THROWS(resultant(IntPoly{}, IntPoly{}));
}

TEST_CASE("resultant multiplicativity on random small polynomials") {
    std::mt19937_64 rng(99);
    int done = 0;
    while (done < 1000) {
        IntPoly f = random_poly(rng, 4), g = random_poly(rng, 4), h = random_poly(rng, 4);
        if (f.degree() < 1 || g.degree() < 1 || h.degree() < 1) continue;
        CHECK(resultant(poly_mul(f, g), h) == resultant(f, h) * resultant(g, h));
        ++done;
    }
}

TEST_CASE("quadratic discriminants equal b^2 - 4c") {
    for (long long b = -20; b <= 20; ++b)
        for (long long c = -20; c <= 20; ++c) {
            IntPoly f;
            f.c = {BigInt(c), BigInt(b), BigInt(1)};
            CHECK(discriminant(f) == BigInt(b) * b - 4 * c);
        }
    CHECK(discriminant(P("x^2-x+1")) == -3);
    CHECK(discriminant(P("x^2+1")) == -4);
    CHECK(discriminant(P("x^2-x-1")) == 5);
}

TEST_CASE("depressed cubic discriminants equal -4a^3 - 27b^2") {
    for (long long a = -6; a <= 6; ++a)
        for (long long b = -6; b <= 6; ++b) {
            IntPoly f;
            f.c = {BigInt(b), BigInt(a), BigInt(0), BigInt(1)};
            CHECK(discriminant(f) == -4 * BigInt(a) * a * a - 27 * BigInt(b) * b);
        }
}

TEST_CASE("discriminant rejects bad inputs") {
    CHECK_THROWS(discriminant(P("2*x^2+1")));
    CHECK_THROWS(discriminant(P("x-1")));
}

TEST_CASE("the three order statements agree on a curated list") {
    Budget budget(500'000'000);
    struct Case {
        const char* poly;
        unsigned p;
        bool holds;
    };
    const Case cases[] = {
        {"x^2-x+1", 3, false},  {"x^2-x-1", 3, true},  {"x^2+1", 2, false},
        {"x^2+1", 3, true},     {"x^2+1", 5, true},    {"x^2-2", 2, false},
        {"x^2-x-1", 5, false},  {"x^3-x-1", 23, false}, {"x^3-x-1", 2, true},
        {"x^3-x-1", 3, true},   {"x^3-2", 3, false},   {"x^3+x+1", 31, false},
        {"x^2+x+1", 3, false},  {"x^2+3", 3, false},   {"x^4+1", 2, false},
        {"x^4+1", 3, true},
    };
    int count = 0;
    for (auto& c : cases) {
        CAPTURE(c.poly);
        CAPTURE(c.p);
        OrderCriterion oc = order_power_criterion(P(c.poly), c.p, budget);
        CHECK(oc.agree());
        CHECK(oc.holds() == c.holds);
        ++count;
    }
    CHECK(count >= 12);
}


TEST_CASE("composite p is rejected") {
    Budget budget;
    CHECK_THROWS(order_power_criterion(P("x^2+1"), 4, budget));
}
