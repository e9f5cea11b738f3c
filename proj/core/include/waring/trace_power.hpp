#pragma once

#include <optional>
#include <vector>

#include "waring/budget.hpp"
#include "waring/matrix.hpp"
#include "waring/ring.hpp"

namespace waring {

// tr(A^k) for a 2x2 matrix with trace t and determinant d is the universal
// polynomial t^k + sum_{r=1}^{k/2} c_r t^{k-2r} d^r with
// c_r = (-1)^r (k/r) C(k-r-1, r-1). The returned vector is (1, c_1, ..., c_{k/2}).
std::vector<i64> trace_power_coeffs(unsigned k);

// The same vectors as printed for k = 9..16; compared against the computed
// ones in tests and in the acceptance suite.
const std::vector<i64>& printed_trace_coeffs(unsigned k);

u64 trace_power_closed_form(const Ring& R, unsigned k, u64 t, u64 delta);

// Short normal forms of the closed form modulo kR, k = 9..16. Evaluated in
// the ring of the arguments; callers check them against the closed form after
// projecting to R/kR.
u64 trace_power_reduced_form(const Ring& R, unsigned k, u64 t, u64 delta);
bool has_reduced_form(unsigned k);

// tr(M^{p^s}) always decomposes as a0^{p^s} + p a1^{p^{s-1}} + ... + p^s as.
// Returns one such tuple (in enumeration order); absence would falsify the
// containment and is treated by callers as a verification failure.
struct WittWitness {
    std::vector<u64> a;  // a0..as
};
std::optional<WittWitness> witt_membership(const Matrix& M, unsigned p, unsigned s, Budget& budget);

// Value set {a0^{p^s} + p a1^{p^{s-1}} + ... + p^s as} with one witness per
// member, built by sumset folding (each a_i independent).
struct WittSet {
    RingPtr ring;
    unsigned p = 0, s = 0;
    std::vector<u64> values;                      // sorted
    std::vector<std::vector<u64>> witness;        // parallel to values
    bool contains(u64 v) const;
    std::optional<std::vector<u64>> witness_for(u64 v) const;
};
WittSet build_witt_set(const RingPtr& R, unsigned p, unsigned s, Budget& budget);

}  // namespace waring
