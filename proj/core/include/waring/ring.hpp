#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace waring {

using u64 = std::uint64_t;
using i64 = std::int64_t;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// A finite commutative ring with unity, in one of three presentations:
//
//   Z/m                         residues mod m
//   Z/m[v]/(f)                  f monic with integer coefficients, reduced mod m
//   (A)x(B)x...                 finite direct products
//
// Elements are canonical codes in [0, cardinality): the residue itself for
// Z/m, mixed-radix coefficient digits (base m, low degree first) for a
// polynomial quotient, and mixed-radix component codes for a product.
// Equal codes <=> equal elements, so hashing and set membership are direct.
// Instances are immutable after construction.
class Ring {
  public:
    enum class Kind { IntegersMod, PolyQuotient, Product };

    static RingPtr integers_mod(u64 m);
    static RingPtr poly_quotient(u64 m, std::string var, std::vector<i64> monic_coeffs);
    static RingPtr product(std::vector<RingPtr> factors);
    // Grammar: Z/<m> | Z/<m>[<var>]/(<monic poly>) | (<spec>)x(<spec>)[x(<spec>)...]
    static RingPtr parse(std::string_view spec);

    Kind kind() const { return kind_; }
    u64 cardinality() const { return card_; }
    u64 characteristic() const { return char_; }
    const std::string& spec() const { return spec_; }
    bool trivial() const { return card_ == 1; }

    u64 zero() const { return 0; }
    u64 one() const { return one_; }
    u64 add(u64 a, u64 b) const;
    u64 neg(u64 a) const;
    u64 sub(u64 a, u64 b) const { return add(a, neg(b)); }
    u64 mul(u64 a, u64 b) const;
    u64 int_image(i64 c) const;             // c * 1
    u64 scale(i64 c, u64 x) const;          // c * x
    u64 pow(u64 x, u64 e) const;            // x^e, e >= 0 (x^0 = 1)

    std::string to_string(u64 code) const;
    // Element expressions: integers, the quotient variable, + - * ^ and
    // parentheses; products additionally accept component tuples (e1,e2,...).
    u64 parse_element(std::string_view expr) const;

    // Deterministic order: 0, 1, then the remaining codes ascending.
    std::vector<u64> elements() const;

    bool same_ring(const Ring& other) const {
        return this == &other || spec_ == other.spec_;
    }

    // Accessors used by quotient construction and printing.
    u64 modulus() const { return m_; }
    const std::string& var() const { return var_; }
    const std::vector<u64>& modulus_poly() const { return mod_poly_; }
    const std::vector<RingPtr>& factors() const { return factors_; }
    unsigned degree() const { return mod_poly_.empty() ? 0 : unsigned(mod_poly_.size() - 1); }

    std::vector<u64> decode_poly(u64 code) const;   // PolyQuotient digits
    u64 encode_poly(const std::vector<u64>& digits) const;
    std::vector<u64> decode_product(u64 code) const;
    u64 encode_product(const std::vector<u64>& comps) const;

  private:
    Ring() = default;

    Kind kind_ = Kind::IntegersMod;
    u64 m_ = 0;                        // modulus of Z/m (also the base of a quotient)
    std::string var_;                  // quotient variable name
    std::vector<u64> mod_poly_;        // monic modulus, coefficients in [0, m), low first
    std::vector<RingPtr> factors_;
    u64 card_ = 0;
    u64 char_ = 0;
    u64 one_ = 0;
    std::string spec_;
};

// R/mR together with the projection ring map.
struct QuotientMap {
    RingPtr source;
    RingPtr target;
    u64 operator()(u64 code) const { return project(code); }
    u64 project(u64 code) const;
};

// For Z/M this is Z/gcd(M,m); quotients of polynomial rings and products are
// taken on the base modulus componentwise. m >= 1. The projection is a
// surjective unity-preserving ring map (verified exhaustively in tests for
// small cardinalities).
QuotientMap quotient_by_integer(const RingPtr& ring, u64 m);

u64 mulmod_u64(u64 a, u64 b, u64 m);

}  // namespace waring
