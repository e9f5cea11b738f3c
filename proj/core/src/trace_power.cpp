#include "waring/trace_power.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace waring {

std::vector<i64> trace_power_coeffs(unsigned k) {
    if (k < 2) throw std::invalid_argument("power must be >= 2");
    if (k > 64) throw std::domain_error("closed form supported for k <= 64");
    std::vector<i64> out;
    out.push_back(1);
    for (unsigned r = 1; r <= k / 2; ++r) {
        // binom(k-r-1, r-1) exactly, then multiply by k and divide by r;
        // k*binom is always divisible by r.
        unsigned long long b = 1;
        for (unsigned j = 1; j <= r - 1; ++j) b = b * (k - r - j) / j;
        unsigned long long num = b * k;
        if (num % r != 0) throw std::logic_error("coefficient division not exact");
        i64 c = (i64)(num / r);
        out.push_back(r % 2 ? -c : c);
    }
    return out;
}

const std::vector<i64>& printed_trace_coeffs(unsigned k) {
    static const std::map<unsigned, std::vector<i64>> printed = {
        {9, {1, -9, 27, -30, 9}},
        {10, {1, -10, 35, -50, 25, -2}},
        {11, {1, -11, 44, -77, 55, -11}},
        {12, {1, -12, 54, -112, 105, -36, 2}},
        {13, {1, -13, 65, -156, 182, -91, 13}},
        {14, {1, -14, 77, -210, 294, -196, 49, -2}},
        {15, {1, -15, 90, -275, 450, -378, 140, -15}},
        {16, {1, -16, 104, -352, 660, -672, 336, -64, 2}},
    };
    auto it = printed.find(k);
    if (it == printed.end()) throw std::out_of_range("no printed coefficient vector for this k");
    return it->second;
}

u64 trace_power_closed_form(const Ring& R, unsigned k, u64 t, u64 delta) {
    auto coeffs = trace_power_coeffs(k);
    u64 acc = R.pow(t, k);
    for (unsigned r = 1; r < coeffs.size(); ++r) {
        u64 mono = R.mul(R.pow(t, k - 2 * r), R.pow(delta, r));
        acc = R.add(acc, R.scale(coeffs[r], mono));
    }
    return acc;
}

bool has_reduced_form(unsigned k) { return k >= 9 && k <= 16; }

u64 trace_power_reduced_form(const Ring& R, unsigned k, u64 t, u64 d) {
    auto p = [&](u64 x, u64 e) { return R.pow(x, e); };
    auto m = [&](u64 a, u64 b) { return R.mul(a, b); };
    auto sc = [&](i64 c, u64 x) { return R.scale(c, x); };
    auto add = [&](u64 a, u64 b) { return R.add(a, b); };
    switch (k) {
        case 9:  // t^9 - 3 (t d)^3
            return add(p(t, 9), sc(-3, p(m(t, d), 3)));
        case 10:  // t^10 - 2 d^5 + 5 (t^3 d + t d^2)^2
            return add(add(p(t, 10), sc(-2, p(d, 5))),
                       sc(5, p(add(m(p(t, 3), d), m(t, p(d, 2))), 2)));
        case 11:  // t^11
            return p(t, 11);
        case 12:  // t^12 + 2 d^6 - 4 (t^2 d)^3 - 3 (t d)^4 + 6 (t^4 d)^2
            return add(add(add(add(p(t, 12), sc(2, p(d, 6))), sc(-4, p(m(p(t, 2), d), 3))),
                           sc(-3, p(m(t, d), 4))),
                       sc(6, p(m(p(t, 4), d), 2)));
        case 13:  // t^13
            return p(t, 13);
        case 14:  // t^14 - 2 d^7 + 7 (t^5 d + t d^3)^2
            return add(add(p(t, 14), sc(-2, p(d, 7))),
                       sc(7, p(add(m(p(t, 5), d), m(t, p(d, 3))), 2)));
        case 15:  // t^15 - 3 (t d)^5 + 5 (t d^2 - t^3 d)^3
            return add(add(p(t, 15), sc(-3, p(m(t, d), 5))),
                       sc(5, p(R.sub(m(t, p(d, 2)), m(p(t, 3), d)), 3)));
        case 16:  // t^16 + 2 d^8 + 8 (t^6 d)^2 + 4 (t^2 d)^4
            return add(add(add(p(t, 16), sc(2, p(d, 8))), sc(8, p(m(p(t, 6), d), 2))),
                       sc(4, p(m(p(t, 2), d), 4)));
        default:
            throw std::domain_error("reduced form available for k = 9..16 only");
    }
}

bool WittSet::contains(u64 v) const {
    return std::binary_search(values.begin(), values.end(), v);
}

std::optional<std::vector<u64>> WittSet::witness_for(u64 v) const {
    auto it = std::lower_bound(values.begin(), values.end(), v);
    if (it == values.end() || *it != v) return std::nullopt;
    return witness[size_t(it - values.begin())];
}

WittSet build_witt_set(const RingPtr& R, unsigned p, unsigned s, Budget& budget) {
    WittSet out;
    out.ring = R;
    out.p = p;
    out.s = s;
    auto elems = R->elements();
    // term i contributes p^i * a^{p^(s-i)}
    std::map<u64, std::vector<u64>> acc{{R->zero(), {}}};
    for (unsigned i = 0; i <= s; ++i) {
        u64 pw = 1;
        for (unsigned j = 0; j < s - i; ++j) pw *= p;
        i64 mult = 1;
        for (unsigned j = 0; j < i; ++j) mult *= p;
        std::map<u64, u64> term;  // value -> a (first in order)
        for (u64 a : elems) {
            budget.charge(1, "witt set sweep");
            u64 v = R->scale(mult, R->pow(a, pw));
            term.emplace(v, a);
        }
        std::map<u64, std::vector<u64>> next;
        for (auto& [base, wit] : acc) {
            for (auto& [v, a] : term) {
                budget.charge(1, "witt set fold");
                u64 sum = R->add(base, v);
                auto it = next.find(sum);
                if (it == next.end()) {
                    auto w = wit;
                    w.push_back(a);
                    next.emplace(sum, std::move(w));
                }
            }
        }
        acc = std::move(next);
    }
    for (auto& [v, w] : acc) {
        out.values.push_back(v);
        out.witness.push_back(w);
    }
    return out;
}

std::optional<WittWitness> witt_membership(const Matrix& M, unsigned p, unsigned s, Budget& budget) {
    u64 kp = 1;
    for (unsigned j = 0; j < s; ++j) kp *= p;
    u64 target = M.pow(kp).trace();
    WittSet ws = build_witt_set(M.ring(), p, s, budget);
    auto w = ws.witness_for(target);
    if (!w) return std::nullopt;
    return WittWitness{*w};
}

}  // namespace waring
