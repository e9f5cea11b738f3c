#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "waring/budget.hpp"
#include "waring/ring.hpp"

namespace waring {

using BigInt = boost::multiprecision::cpp_int;

// Integer polynomial, coefficients low degree first, exact arithmetic only.
struct IntPoly {
    std::vector<BigInt> c;

    int degree() const;  // -1 for the zero polynomial
    bool zero() const { return degree() < 0; }
    bool monic() const { return degree() >= 0 && c.back() == 1; }
    IntPoly derivative() const;
    void normalize();

    static IntPoly parse(std::string_view text, const std::string& var = "x");
    std::string to_string(const std::string& var = "x") const;
};

// Sylvester-matrix determinant, computed by fraction-free (Bareiss)
// elimination over exact integers.
BigInt resultant(const IntPoly& f, const IntPoly& g);

// disc(f) = (-1)^{d(d-1)/2} res(f, f') for monic f of degree d >= 2; equals
// the discriminant of the subring Z[x]/(f) of its fraction field.
BigInt discriminant(const IntPoly& f);

// Three equivalent properties of the monogenic order Z[x]/(f) at a prime p:
//   power:   every element is a p-th power mod p
//   radical: x^p ≡ 0 mod p implies x ≡ 0 mod p
//   disc:    gcd(p, disc f) = 1
// The first two are decided exhaustively in Z/p[x]/(f mod p); disagreement
// between the three would falsify the criterion and is surfaced verbatim.
struct OrderCriterion {
    BigInt disc;
    bool power_stmt = false;
    bool radical_stmt = false;
    bool disc_stmt = false;
    std::optional<u64> power_counterexample;    // element of Z/p[x]/(f mod p)
    std::optional<u64> radical_counterexample;
    RingPtr residue_ring;
    bool agree() const { return power_stmt == radical_stmt && radical_stmt == disc_stmt; }
    bool holds() const { return disc_stmt; }
};
OrderCriterion order_power_criterion(const IntPoly& f, unsigned p, Budget& budget);

}  // namespace waring
