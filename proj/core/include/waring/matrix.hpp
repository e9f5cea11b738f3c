#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "waring/ring.hpp"

namespace waring {

// Dense n x n matrix over a Ring, entries stored as element codes.
// Immutable value type; all operations are exact.
class Matrix {
  public:
    Matrix(RingPtr ring, unsigned n);  // zero matrix

    static Matrix identity(RingPtr ring, unsigned n);
    // [[t, delta], [-1, 0]]: trace t, determinant delta.
    static Matrix companion(const RingPtr& ring, u64 t, u64 delta);
    // n x n with the given first row and -1 on the subdiagonal. For n = 2 this
    // is companion(row[0], row[1]); as the row sweeps R^n the characteristic
    // polynomials sweep all monic degree-n polynomials.
    static Matrix general_companion(const RingPtr& ring, const std::vector<u64>& first_row);

    const RingPtr& ring() const { return ring_; }
    unsigned dim() const { return n_; }
    u64 at(unsigned i, unsigned j) const { return a_[i * n_ + j]; }
    void set(unsigned i, unsigned j, u64 code) { a_[i * n_ + j] = code; }

    Matrix add(const Matrix& o) const;
    Matrix sub(const Matrix& o) const;
    Matrix mul(const Matrix& o) const;
    Matrix pow(u64 k) const;  // k >= 1 (k = 0 gives the identity)

    u64 trace() const;
    u64 det() const;  // n <= 3 only

    // M ⊕ 0 of size n >= dim(); preserves traces of powers.
    Matrix embed(unsigned n) const;

    bool operator==(const Matrix& o) const { return n_ == o.n_ && a_ == o.a_; }

    // Text format: "n; a11,a12,...,a1n; a21,...; ..." with entries in the
    // ring's element syntax.
    static Matrix parse(const RingPtr& ring, std::string_view text);
    std::string to_text() const;

    const std::vector<u64>& codes() const { return a_; }

  private:
    RingPtr ring_;
    unsigned n_;
    std::vector<u64> a_;
};

}  // namespace waring
