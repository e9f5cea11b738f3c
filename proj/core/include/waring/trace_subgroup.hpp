#pragma once

#include <optional>
#include <string>
#include <vector>

#include "waring/budget.hpp"
#include "waring/matrix.hpp"
#include "waring/report.hpp"
#include "waring/ring.hpp"
#include "waring/waring_sets.hpp"

namespace waring {

// Additive subgroup of R generated by traces of k-th powers of n x n
// matrices. Seeds: for n = 2 the closed form over all (t, delta); for n = 3
// traces of k-th powers of companion matrices over all coefficient triples
// (complete because tr(M^k) is a universal polynomial in the characteristic
// polynomial coefficients). A matrix with trace tau is a sum of k-th powers
// in M_n(R) exactly when tau lies in this subgroup.
struct Subgroup {
    RingPtr ambient;
    unsigned k = 0;
    unsigned n_source = 0;
    struct Generator {
        u64 value;
        std::vector<u64> params;  // (t, delta) or companion first row
    };
    std::vector<Generator> generators;  // distinct seed values, enumeration order
    std::vector<u64> elements;          // sorted

    bool contains(u64 code) const;
    bool is_whole_ring() const { return elements.size() == ambient->cardinality(); }
};

Subgroup trace_subgroup(const RingPtr& R, unsigned k, unsigned n, Budget& budget,
                        bool use_factorial_quotient = false);

enum class Verdict { Yes, No, NoAtGenDim3, Inconclusive };
std::string verdict_name(Verdict v);

struct DecideResult {
    Verdict verdict;
    u64 trace = 0;
    RingPtr decision_ring;           // ring the membership test ran in
    std::optional<u64> trace_image;  // trace in the decision ring
};
DecideResult decide_sum_of_kth_powers(const Matrix& M, unsigned k, Budget& budget,
                                      bool use_factorial_quotient = false);

// Exhaustive search for M = M1^k + ... + Mr^k with r <= max_terms, over tiny
// rings. Built by folding the set of k-th powers; a miss within max_terms is
// inconclusive, not a proof of non-decomposability.
std::optional<std::vector<Matrix>> brute_force_witness(const Matrix& M, unsigned k,
                                                       unsigned max_terms, Budget& budget);

// Checks the statements of one theorem family over a finite ring and reports
// per-statement verdicts plus whether the asserted implications hold.
// Families: deg9 deg10 deg11 deg12 deg13 deg14 deg15 deg16.
TheoremReport verify_theorem(const std::string& family, const RingPtr& R, Budget& budget,
                             u64 seed = kDefaultSeed);

const std::vector<std::string>& theorem_families();

}  // namespace waring
