#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "waring/trace_power.hpp"

using namespace waring;

TEST_CASE("coefficient vectors match the printed expansions for k = 9..16") {
    for (unsigned k = 9; k <= 16; ++k) {
        CAPTURE(k);
        CHECK(trace_power_coeffs(k) == printed_trace_coeffs(k));
    }
    // the k = 15 vector is the one singled out for cross-checking; assert the
    // formula value coefficient by coefficient
    std::vector<i64> k15 = {1, -15, 90, -275, 450, -378, 140, -15};
    CHECK(trace_power_coeffs(15) == k15);
}

TEST_CASE("small-k closed forms") {
    auto R = Ring::parse("Z/101");
    for (u64 t : {0ull, 1ull, 5ull, 17ull})
        for (u64 d : {0ull, 1ull, 9ull, 64ull}) {
            // k=2: t^2 - 2d
            CHECK(trace_power_closed_form(*R, 2, t, d) ==
                  R->sub(R->mul(t, t), R->scale(2, d)));
            // k=3: t^3 - 3td
            CHECK(trace_power_closed_form(*R, 3, t, d) ==
                  R->sub(R->pow(t, 3), R->scale(3, R->mul(t, d))));
        }
    CHECK_THROWS(trace_power_coeffs(1));
}

TEST_CASE("reduced forms agree with the closed form mod kR") {
    for (unsigned k = 9; k <= 16; ++k) {
        CAPTURE(k);
        auto R = Ring::parse("Z/" + std::to_string(k));
        for (u64 t : R->elements())
            for (u64 d : R->elements())
                CHECK(trace_power_reduced_form(*R, k, t, d) ==
                      trace_power_closed_form(*R, k, t, d));
        // and on a ring where kR is a proper nontrivial ideal
        auto R2 = Ring::parse("Z/" + std::to_string(4 * k));
        auto pi = quotient_by_integer(R2, k);
        for (u64 t : R2->elements())
            for (u64 d : R2->elements())
                CHECK(trace_power_reduced_form(*pi.target, k, pi(t), pi(d)) ==
                      pi(trace_power_closed_form(*R2, k, t, d)));
    }
    CHECK_THROWS(trace_power_reduced_form(*Ring::parse("Z/8"), 8, 1, 1));
}

TEST_CASE("reduced form spot values") {
    auto z10 = Ring::parse("Z/10");
    CHECK(trace_power_reduced_form(*z10, 10, 1, 0) == 1);  // pure t-power
    auto z15 = Ring::parse("Z/15");
    for (u64 d : z15->elements())
        CHECK(trace_power_reduced_form(*z15, 15, 0, d) == 0);  // every term carries t
}

TEST_CASE("witt membership for matrix power traces") {
    Budget budget;
    SUBCASE("zero matrix gets the all-zero witness") {
        auto R = Ring::parse("Z/9");
        Matrix Z(R, 2);
        auto w = witt_membership(Z, 3, 2, budget);
        REQUIRE(w.has_value());
        CHECK(w->a == std::vector<u64>{0, 0, 0});
    }
    SUBCASE("cubes over F_3[e]: tr(M^3) lands in {a^3 + 3b} = {0,1,2}") {
        auto R = Ring::parse("Z/3[e]/(e^2)");
        WittSet ws = build_witt_set(R, 3, 1, budget);
        CHECK(ws.values == std::vector<u64>{0, 1, 2});
        std::mt19937_64 rng(11);
        for (int it = 0; it < 200; ++it) {
            Matrix M(R, 2);
            for (unsigned i = 0; i < 2; ++i)
                for (unsigned j = 0; j < 2; ++j) M.set(i, j, rng() % 9);
            auto w = witt_membership(M, 3, 1, budget);
            REQUIRE(w.has_value());
            // witness re-evaluates: a0^3 + 3a1 = tr(M^3)
            u64 v = R->add(R->pow(w->a[0], 3), R->scale(3, w->a[1]));
            CHECK(v == M.pow(3).trace());
        }
    }
    SUBCASE("identity over Z/9 at p=3, s=2") {
        auto R = Ring::parse("Z/9");
        auto w = witt_membership(Matrix::identity(R, 2), 3, 2, budget);
        REQUIRE(w.has_value());
        u64 v = R->add(R->add(R->pow(w->a[0], 9), R->scale(3, R->pow(w->a[1], 3))),
                       R->scale(9, w->a[2]));
        CHECK(v == Matrix::identity(R, 2).pow(9).trace());
    }
}

TEST_CASE("witt sets nest: W(p,s+1) inside W(p,s)") {
    Budget budget(100'000'000);
    for (const char* spec : {"Z/16", "Z/9", "Z/3[e]/(e^2)", "Z/4[e]/(e^2)", "(Z/2)x(Z/3)"}) {
        auto R = Ring::parse(spec);
        CAPTURE(spec);
        for (auto [p, s] : std::vector<std::pair<unsigned, unsigned>>{
                 {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
            WittSet big = build_witt_set(R, p, s, budget);
            WittSet small = build_witt_set(R, p, s + 1, budget);
            for (u64 v : small.values) CHECK(big.contains(v));
        }
    }
}
