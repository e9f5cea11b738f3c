#include "waring/waring_sets.hpp"

#include <algorithm>
#include <stdexcept>

namespace waring {

namespace {

bool is_small_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

struct Term {
    i64 coeff;
    u64 exponent;
};

// Value set of one sum term {coeff * x^exponent : x in R}, projected to the
// ambient ring, with the first x (in enumeration order) achieving each value.
std::map<u64, u64> term_values(const RingPtr& R, const QuotientMap& pi, const Term& t,
                               Budget& budget) {
    std::map<u64, u64> out;
    for (u64 x : R->elements()) {
        budget.charge(1, "condition set sweep");
        u64 v = pi(R->scale(t.coeff, R->pow(x, t.exponent)));
        out.emplace(v, x);
    }
    return out;
}

using Accum = std::map<u64, SetWitness>;

Accum fold(const Ring& ambient, const Accum& acc, const std::map<u64, u64>& term, Budget& budget) {
    Accum next;
    for (auto& [base, wit] : acc)
        for (auto& [v, x] : term) {
            budget.charge(1, "condition set fold");
            u64 sum = ambient.add(base, v);
            auto it = next.find(sum);
            if (it == next.end()) {
                SetWitness w = wit;
                w.tuple.push_back(x);
                next.emplace(sum, std::move(w));
            }
        }
    return next;
}

// Value map of a shared-variable tail sum_j coeff_j * x^{e_j(m)} over all
// x in R and m = 1..|R|+1 (power sequences stabilize within |R| steps).
Accum shared_tail_values(const RingPtr& R, const QuotientMap& pi,
                         const std::vector<std::pair<i64, i64>>& fixed_terms, i64 var_coeff,
                         Budget& budget) {
    // fixed_terms: (coeff, exponent); the m-dependent term is var_coeff * x^{2m+1}.
    Accum out;
    u64 m_bound = R->cardinality() + 1;
    for (u64 x : R->elements()) {
        u64 fixed = R->zero();
        for (auto& [c, e] : fixed_terms) fixed = R->add(fixed, R->scale(c, R->pow(x, (u64)e)));
        u64 xsq = R->mul(x, x);
        u64 xodd = R->mul(x, xsq);  // x^{2m+1} at m = 1
        for (u64 m = 1; m <= m_bound; ++m) {
            budget.charge(1, "condition set tail sweep");
            u64 v = pi(R->add(fixed, R->scale(var_coeff, xodd)));
            auto it = out.find(v);
            if (it == out.end()) out.emplace(v, SetWitness{{x}, (unsigned)m});
            xodd = R->mul(xodd, xsq);
        }
    }
    return out;
}

Accum build_sum_of_terms(const RingPtr& R, const QuotientMap& pi, const std::vector<Term>& terms,
                         Budget& budget) {
    Accum acc{{pi.target->zero(), {}}};
    for (auto& t : terms) acc = fold(*pi.target, acc, term_values(R, pi, t, budget), budget);
    return acc;
}

QuotientMap identity_map(const RingPtr& R) { return {R, R}; }

}  // namespace

std::string set_kind_name(const SetKind& kind, unsigned p, unsigned s) {
    switch (kind) {
        case SetKind::Witt: return "witt:" + std::to_string(p) + ":" + std::to_string(s);
        case SetKind::WittStar24: return "wittstar24";
        case SetKind::S10: return "s10";
        case SetKind::S12: return "s12";
        case SetKind::S12Star: return "s12star";
        case SetKind::S14: return "s14";
        case SetKind::S15: return "s15";
        case SetKind::Deg9: return "deg9";
        case SetKind::PthPowerModP: return "pthpower:" + std::to_string(p);
    }
    return "?";
}

std::pair<SetKind, std::pair<unsigned, unsigned>> parse_set_kind(const std::string& text) {
    if (text == "s10") return {SetKind::S10, {0, 0}};
    if (text == "s12") return {SetKind::S12, {0, 0}};
    if (text == "s12star") return {SetKind::S12Star, {0, 0}};
    if (text == "s14") return {SetKind::S14, {0, 0}};
    if (text == "s15") return {SetKind::S15, {0, 0}};
    if (text == "deg9") return {SetKind::Deg9, {0, 0}};
    if (text == "wittstar24") return {SetKind::WittStar24, {0, 0}};
    if (text.rfind("witt:", 0) == 0) {
        auto rest = text.substr(5);
        auto colon = rest.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("witt kind needs witt:P:S");
        unsigned p = (unsigned)std::stoul(rest.substr(0, colon));
        unsigned s = (unsigned)std::stoul(rest.substr(colon + 1));
        return {SetKind::Witt, {p, s}};
    }
    if (text.rfind("pthpower:", 0) == 0)
        return {SetKind::PthPowerModP, {(unsigned)std::stoul(text.substr(9)), 0}};
    throw std::invalid_argument("unknown set kind: " + text);
}

bool ConditionSet::contains(u64 code) const {
    return std::binary_search(values.begin(), values.end(), code);
}

std::optional<SetWitness> ConditionSet::witness_for(u64 code) const {
    auto it = witness.find(code);
    if (it == witness.end()) return std::nullopt;
    return it->second;
}

u64 ConditionSet::eval_witness(const SetWitness& w) const {
    const Ring& R = *source;
    auto term_sum = [&](const std::vector<Term>& terms) {
        u64 acc = R.zero();
        for (size_t i = 0; i < terms.size(); ++i)
            acc = R.add(acc, R.scale(terms[i].coeff, R.pow(w.tuple[i], terms[i].exponent)));
        return to_ambient(acc);
    };
    switch (kind) {
        case SetKind::Deg9: return term_sum({{1, 9}, {3, 3}});
        case SetKind::S10: return term_sum({{1, 10}, {-2, 5}, {5, 2}});
        case SetKind::S12: return term_sum({{1, 12}, {2, 6}, {-3, 4}, {-4, 3}, {6, 2}});
        case SetKind::S14: return term_sum({{1, 14}, {-2, 7}, {7, 2}});
        case SetKind::S15: return term_sum({{1, 15}, {-3, 5}, {5, 3}});
        case SetKind::PthPowerModP: return term_sum({{1, p}});
        case SetKind::Witt: {
            u64 acc = R.zero();
            i64 mult = 1;
            u64 pw = 1;
            for (unsigned j = 0; j < s; ++j) pw *= p;
            for (unsigned i = 0; i <= s; ++i) {
                acc = R.add(acc, R.scale(mult, R.pow(w.tuple[i], pw)));
                mult *= p;
                pw /= p;
            }
            return to_ambient(acc);
        }
        case SetKind::S12Star: {
            // five-variable bar form, or four fixed + shared tail when m > 0
            if (w.m == 0) {
                u64 acc = R.zero();
                const Term terms[] = {{1, 12}, {2, 6}, {3, 4}, {8, 3}, {12, 2}, {24, 1}};
                for (size_t i = 0; i < 6; ++i)
                    acc = R.add(acc, R.scale(terms[i].coeff, R.pow(w.tuple[i], terms[i].exponent)));
                return to_ambient(acc);
            }
            u64 acc = R.zero();
            const Term fixed[] = {{1, 12}, {2, 6}, {3, 4}, {8, 3}};
            for (size_t i = 0; i < 4; ++i)
                acc = R.add(acc, R.scale(fixed[i].coeff, R.pow(w.tuple[i], fixed[i].exponent)));
            u64 x = w.tuple[4];
            acc = R.add(acc, R.scale(4, R.pow(x, 2ull * w.m + 1)));
            acc = R.add(acc, R.scale(6, R.mul(x, x)));
            acc = R.add(acc, R.scale(12, x));
            return to_ambient(acc);
        }
        case SetKind::WittStar24: {
            if (w.m == 0) {  // Witt(2,5) member: a0^32 + 2 a1^16 + 4 a2^8 + 8 a3^4 + 16 a4^2 + 32 a5
                u64 acc = R.zero();
                i64 mult = 1;
                u64 pw = 32;
                for (unsigned i = 0; i < 6; ++i) {
                    acc = R.add(acc, R.scale(mult, R.pow(w.tuple[i], pw)));
                    mult *= 2;
                    pw /= 2;
                }
                return to_ambient(acc);
            }
            u64 acc = R.add(R.pow(w.tuple[0], 16), R.scale(2, R.pow(w.tuple[1], 8)));
            u64 a = w.tuple[2];
            acc = R.add(acc, R.scale(4, R.pow(a, 4)));
            acc = R.add(acc, R.scale(16, a));
            acc = R.add(acc, R.scale(16, R.pow(a, 2ull * w.m + 1)));
            return to_ambient(acc);
        }
    }
    throw std::logic_error("unreachable");
}

ConditionSet build_condition_set(SetKind kind, const RingPtr& R, Budget& budget, unsigned p,
                                 unsigned s) {
    ConditionSet out;
    out.kind = kind;
    out.p = p;
    out.s = s;
    out.source = R;

    Accum acc;
    switch (kind) {
        case SetKind::Deg9:
            out.to_ambient = quotient_by_integer(R, 9);
            acc = build_sum_of_terms(R, out.to_ambient, {{1, 9}, {3, 3}}, budget);
            break;
        case SetKind::S10:
            out.to_ambient = quotient_by_integer(R, 10);
            acc = build_sum_of_terms(R, out.to_ambient, {{1, 10}, {-2, 5}, {5, 2}}, budget);
            break;
        case SetKind::S12:
            out.to_ambient = quotient_by_integer(R, 12);
            acc = build_sum_of_terms(R, out.to_ambient,
                                     {{1, 12}, {2, 6}, {-3, 4}, {-4, 3}, {6, 2}}, budget);
            break;
        case SetKind::S14:
            out.to_ambient = quotient_by_integer(R, 14);
            acc = build_sum_of_terms(R, out.to_ambient, {{1, 14}, {-2, 7}, {7, 2}}, budget);
            break;
        case SetKind::S15:
            out.to_ambient = quotient_by_integer(R, 15);
            acc = build_sum_of_terms(R, out.to_ambient, {{1, 15}, {-3, 5}, {5, 3}}, budget);
            break;
        case SetKind::PthPowerModP:
            if (!is_small_prime(p)) throw std::invalid_argument("pthpower set needs a prime p");
            out.to_ambient = quotient_by_integer(R, p);
            acc = build_sum_of_terms(R, out.to_ambient, {{1, p}}, budget);
            break;
        case SetKind::Witt: {
            if (!is_small_prime(p) || s < 1)
                throw std::invalid_argument("witt set needs a prime p and s >= 1");
            out.to_ambient = identity_map(R);
            std::vector<Term> terms;
            i64 mult = 1;
            u64 pw = 1;
            for (unsigned j = 0; j < s; ++j) pw *= p;
            for (unsigned i = 0; i <= s; ++i) {
                terms.push_back({mult, pw});
                mult *= (i64)p;
                pw /= p;
            }
            acc = build_sum_of_terms(R, out.to_ambient, terms, budget);
            break;
        }
        case SetKind::S12Star: {
            out.to_ambient = identity_map(R);
            // bar form: x0^12 + 2 x1^6 + 3 x2^4 + 8 x3^3 + 12 x4^2 + 24 x5
            Accum bar = build_sum_of_terms(
                R, out.to_ambient, {{1, 12}, {2, 6}, {3, 4}, {8, 3}, {12, 2}, {24, 1}}, budget);
            // prime form: shared x4 tail  4 x^{2m+1} + 6 x^2 + 12 x
            Accum head = build_sum_of_terms(R, out.to_ambient,
                                            {{1, 12}, {2, 6}, {3, 4}, {8, 3}}, budget);
            Accum tail = shared_tail_values(R, out.to_ambient, {{6, 2}, {12, 1}}, 4, budget);
            Accum prime;
            for (auto& [hv, hw] : head)
                for (auto& [tv, tw] : tail) {
                    budget.charge(1, "s12star fold");
                    u64 v = R->add(hv, tv);
                    SetWitness w = hw;
                    w.tuple.push_back(tw.tuple[0]);
                    w.m = tw.m;
                    prime.emplace(v, std::move(w));
                }
            for (auto& [v, w] : bar) {
                SetWitness ww = w;
                ww.m = 0;
                prime.emplace(v, std::move(ww));
            }
            acc = std::move(prime);
            break;
        }
        case SetKind::WittStar24: {
            out.to_ambient = identity_map(R);
            // bar form: a0^16 + 2 a1^8 + (4 a^4 + 16 a + 16 a^{2m+1})
            Accum head = build_sum_of_terms(R, out.to_ambient, {{1, 16}, {2, 8}}, budget);
            Accum tail = shared_tail_values(R, out.to_ambient, {{4, 4}, {16, 1}}, 16, budget);
            Accum bar;
            for (auto& [hv, hw] : head)
                for (auto& [tv, tw] : tail) {
                    budget.charge(1, "wittstar fold");
                    u64 v = R->add(hv, tv);
                    SetWitness w = hw;
                    w.tuple.push_back(tw.tuple[0]);
                    w.m = tw.m;
                    bar.emplace(v, std::move(w));
                }
            // union with Witt(2,5); mark those witnesses with m = 0
            Accum w25 = build_sum_of_terms(
                R, out.to_ambient, {{1, 32}, {2, 16}, {4, 8}, {8, 4}, {16, 2}, {32, 1}}, budget);
            for (auto& [v, w] : w25) {
                SetWitness ww = w;
                ww.m = 0;
                bar.emplace(v, std::move(ww));
            }
            acc = std::move(bar);
            break;
        }
    }

    out.ambient = out.to_ambient.target;
    for (auto& [v, w] : acc) {
        out.values.push_back(v);
        out.witness.emplace(v, w);
    }
    return out;
}

ClosureReport verify_group_closure(const ConditionSet& set) {
    ClosureReport rep;
    const Ring& A = *set.ambient;
    rep.has_zero = set.contains(A.zero());
    rep.closed_under_negation = true;
    rep.closed_under_addition = true;
    for (u64 v : set.values) {
        if (!set.contains(A.neg(v))) {
            rep.closed_under_negation = false;
            rep.violating_pair = {v, v};
            return rep;
        }
    }
    for (u64 a : set.values)
        for (u64 b : set.values) {
            if (!set.contains(A.add(a, b))) {
                rep.closed_under_addition = false;
                rep.violating_pair = {a, b};
                return rep;
            }
        }
    return rep;
}

PthPowerVerdict pth_power_mod_p(const RingPtr& R, unsigned p, Budget& budget) {
    if (!is_small_prime(p)) throw std::invalid_argument("p must be prime");
    auto pi = quotient_by_integer(R, p);
    std::vector<bool> hit(pi.target->cardinality(), false);
    for (u64 x : R->elements()) {
        budget.charge(1, "pth power sweep");
        hit[pi(R->pow(x, p))] = true;
    }
    for (u64 alpha : R->elements()) {
        budget.charge(1, "pth power check");
        if (!hit[pi(alpha)]) return {false, alpha};
    }
    return {true, std::nullopt};
}

IteratedPPower iterated_p_power_expansion(const RingPtr& R, u64 alpha, unsigned p, unsigned k_power,
                                          unsigned depth, Budget& budget) {
    if (depth == 0 || depth > 64) throw std::invalid_argument("expansion depth out of range");
    auto hyp = pth_power_mod_p(R, p, budget);
    if (!hyp.holds)
        throw std::domain_error("expansion requires every element to be a p-th power mod pR");

    // At each level solve beta = a^K + p b: sweep a, then b over the p-multiples.
    std::map<u64, u64> p_mult;  // value p*b -> b (first)
    for (u64 b : R->elements()) {
        budget.charge(1, "expansion p-multiples");
        p_mult.emplace(R->scale((i64)p, b), b);
    }
    IteratedPPower out;
    u64 beta = alpha;
    for (unsigned level = 0; level < depth; ++level) {
        bool found = false;
        for (u64 a : R->elements()) {
            budget.charge(1, "expansion level sweep");
            u64 rest = R->sub(beta, R->pow(a, k_power));
            auto it = p_mult.find(rest);
            if (it != p_mult.end()) {
                out.powers.push_back(a);
                beta = it->second;
                found = true;
                break;
            }
        }
        if (!found)
            throw std::domain_error("no level decomposition found; hypothesis violated");
    }
    out.tail = beta;
    return out;
}

}  // namespace waring
