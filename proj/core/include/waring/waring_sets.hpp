#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "waring/budget.hpp"
#include "waring/ring.hpp"

namespace waring {

// Trace-condition sets. Each set lives in a quotient of its source ring:
//   Witt(p,s)      { a0^{p^s} + p a1^{p^{s-1}} + ... + p^s as }          in R
//   WittStar24     WittBar24 ∪ Witt(2,5)                                 in R
//   S10            { x0^10 - 2 x1^5 + 5 x2^2 }                      mod 10R
//   S12            { x0^12 + 2 x1^6 - 3 x2^4 - 4 x3^3 + 6 x4^2 }    mod 12R
//   S12Star        S12Bar ∪ S12Prime (both evaluated in R, no quotient)
//   S14            { x0^14 - 2 x1^7 + 7 x2^2 }                      mod 14R
//   S15            { x0^15 - 3 x1^5 + 5 x2^3 }                      mod 15R
//   Deg9           { a0^9 + 3 a1^3 }                                 mod 9R
//   PthPowerModP   { a^p }                                           mod pR
// where S12Bar  = { x0^12 + 2 x1^6 + 3 x2^4 + 8 x3^3 + 12 x4^2 + 24 x5 },
//       S12Prime= { x0^12 + 2 x1^6 + 3 x2^4 + 8 x3^3 + 4 x4^{2m+1} + 6 x4^2 + 12 x4 },
//       WittBar24={ a0^16 + 2 a1^8 + 4 a^4 + 16 a + 16 a^{2m+1} }.
// The unbounded exponent parameter m is swept until the set of achieved
// values stabilizes, which happens within |R| steps because powers of a fixed
// element are eventually periodic.
enum class SetKind { Witt, WittStar24, S10, S12, S12Star, S14, S15, Deg9, PthPowerModP };

std::string set_kind_name(const SetKind& kind, unsigned p, unsigned s);
// Accepts s10|s12|s12star|s14|s15|deg9|witt:P:S|wittstar24|pthpower:P.
std::pair<SetKind, std::pair<unsigned, unsigned>> parse_set_kind(const std::string& text);

struct SetWitness {
    std::vector<u64> tuple;  // codes in the source ring, in definition order
    unsigned m = 0;          // exponent parameter where the definition has one
};

struct ConditionSet {
    SetKind kind;
    unsigned p = 0, s = 0;
    RingPtr source;
    QuotientMap to_ambient;  // identity-like when the definition has no quotient
    RingPtr ambient;
    std::vector<u64> values;  // sorted member codes in the ambient ring
    std::map<u64, SetWitness> witness;

    bool contains(u64 ambient_code) const;
    std::optional<SetWitness> witness_for(u64 ambient_code) const;
    // Re-evaluates a witness tuple through the definition; must reproduce the
    // member it is stored under.
    u64 eval_witness(const SetWitness& w) const;
};

ConditionSet build_condition_set(SetKind kind, const RingPtr& R, Budget& budget, unsigned p = 0,
                                 unsigned s = 0);

struct ClosureReport {
    bool has_zero = false;
    bool closed_under_negation = false;
    bool closed_under_addition = false;
    std::optional<std::pair<u64, u64>> violating_pair;
    bool group() const { return has_zero && closed_under_negation && closed_under_addition; }
};
ClosureReport verify_group_closure(const ConditionSet& set);

// True iff every element of R is a p-th power mod pR; otherwise returns a
// counterexample element of R.
struct PthPowerVerdict {
    bool holds = false;
    std::optional<u64> counterexample;
};
PthPowerVerdict pth_power_mod_p(const RingPtr& R, unsigned p, Budget& budget);

// alpha = a1^K + p a2^K + ... + p^{m-1} am^K + p^m tail with K = k_power,
// found greedily level by level. Requires pth_power_mod_p to hold.
struct IteratedPPower {
    std::vector<u64> powers;  // a1..am
    u64 tail = 0;
};
IteratedPPower iterated_p_power_expansion(const RingPtr& R, u64 alpha, unsigned p, unsigned k_power,
                                          unsigned depth, Budget& budget);

}  // namespace waring
