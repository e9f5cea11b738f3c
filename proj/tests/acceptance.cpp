// Acceptance suite: one line per criterion, honest PASS/FAIL, nonzero exit on
// any failure. Criteria 7 and 10 report the two places where the printed
// source claims are genuinely false (the degree-12 odd-power tail over
// Z/3[e]/(e^2), and degree 15 over Z/2[x]/(x^2+x+1)); the per-line details
// carry the machine counterexamples.

#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "waring/identities.hpp"
#include "waring/matrix.hpp"
#include "waring/order_criteria.hpp"
#include "waring/trace_power.hpp"
#include "waring/trace_subgroup.hpp"
#include "waring/universe.hpp"
#include "waring/waring_sets.hpp"

using namespace waring;

namespace {

int g_failures = 0;

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& d) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += d;
    }
};

void report(int id, const std::string& name, const Outcome& o, double seconds) {
    std::ostringstream line;
    line << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " - " << name << " ["
         << (int)(seconds * 1000) << " ms]";
    if (!o.detail.empty()) line << "\n    " << o.detail;
    std::cout << line.str() << "\n";
    if (!o.pass) ++g_failures;
}

template <class F>
void criterion(int id, const std::string& name, F&& body) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(id, name, o, secs);
}

std::vector<RingPtr> g_universe;

Matrix random_matrix(const RingPtr& R, unsigned n, std::mt19937_64& rng) {
    Matrix m(R, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) m.set(i, j, rng() % R->cardinality());
    return m;
}

}  // namespace

int main() {
    g_universe = TestUniverse::default_universe().parsed();
    std::cout << "ring universe: " << g_universe.size() << " rings\n";

    criterion(1, "closed trace form equals matrix-power traces, k = 2..16", [](Outcome& o) {
        for (auto& R : g_universe)
            for (u64 t : R->elements())
                for (u64 d : R->elements()) {
                    Matrix A = Matrix::companion(R, t, d);
                    Matrix P = A;
                    for (unsigned k = 2; k <= 16; ++k) {
                        P = P.mul(A);
                        if (P.trace() != trace_power_closed_form(*R, k, t, d)) {
                            o.fail("mismatch at " + R->spec() + " t=" + R->to_string(t) +
                                   " d=" + R->to_string(d) + " k=" + std::to_string(k));
                            return;
                        }
                    }
                }
    });

    criterion(2, "computed coefficient vectors match the printed expansions, k = 9..16",
              [](Outcome& o) {
                  for (unsigned k = 9; k <= 16; ++k)
                      if (trace_power_coeffs(k) != printed_trace_coeffs(k))
                          o.fail("vector mismatch at k=" + std::to_string(k) +
                                 (k == 15 ? " (flagged cross-check case)" : ""));
                  if (o.pass)
                      o.detail = "k=15 printed vector is internally consistent with the closed form";
              });

    criterion(3, "S_10, S_12, S_14, S_15 are additive groups on Z/k and every universe ring",
              [](Outcome& o) {
                  struct P { SetKind kind; unsigned k; };
                  for (auto [kind, k] : {P{SetKind::S10, 10}, P{SetKind::S12, 12},
                                         P{SetKind::S14, 14}, P{SetKind::S15, 15}}) {
                      std::vector<RingPtr> rings = g_universe;
                      rings.push_back(Ring::parse("Z/" + std::to_string(k)));
                      for (auto& R : rings) {
                          Budget budget(1'000'000'000);
                          auto set = build_condition_set(kind, R, budget);
                          if (!verify_group_closure(set).group())
                              o.fail("closure fails for S_" + std::to_string(k) + " over " +
                                     R->spec());
                      }
                  }
              });

    criterion(4, "reduced forms agree with the closed form mod kR on (Z/k)^2, k = 10,12,14,15",
              [](Outcome& o) {
                  for (unsigned k : {10u, 12u, 14u, 15u}) {
                      auto R = Ring::parse("Z/" + std::to_string(k));
                      for (u64 t : R->elements())
                          for (u64 d : R->elements())
                              if (trace_power_reduced_form(*R, k, t, d) !=
                                  trace_power_closed_form(*R, k, t, d))
                                  o.fail("k=" + std::to_string(k) + " t=" + R->to_string(t) +
                                         " d=" + R->to_string(d));
                  }
              });

    criterion(5,
              "tr(M^p) = tr(M)^p mod pR for p in {2,3,5,7,11,13}, n in {2,3}, 1000 matrices each",
              [](Outcome& o) {
                  for (auto& R : g_universe)
                      for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u}) {
                          auto pi = quotient_by_integer(R, p);
                          for (unsigned n : {2u, 3u}) {
                              std::mt19937_64 rng(kDefaultSeed ^
                                                  (R->cardinality() * 131 + p * 7 + n));
                              for (int it = 0; it < 1000; ++it) {
                                  Matrix M = random_matrix(R, n, rng);
                                  if (pi(M.pow(p).trace()) != pi.target->pow(pi(M.trace()), p)) {
                                      o.fail("failure at " + R->spec() + " p=" +
                                             std::to_string(p) + " n=" + std::to_string(n));
                                      return;
                                  }
                              }
                          }
                      }
              });

    criterion(6, "tr(M^(p^s)) always has a Witt witness; Witt sets nest", [](Outcome& o) {
        const std::vector<std::pair<unsigned, unsigned>> ps = {
            {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};
        for (auto& R : g_universe) {
            Budget budget(1'000'000'000);
            for (auto [p, s] : ps) {
                WittSet ws = build_witt_set(R, p, s, budget);
                WittSet deeper = build_witt_set(R, p, s + 1, budget);
                for (u64 v : deeper.values)
                    if (!ws.contains(v)) {
                        o.fail("nesting fails at " + R->spec() + " (p,s)=(" + std::to_string(p) +
                               "," + std::to_string(s) + ")");
                        return;
                    }
                u64 kp = 1;
                for (unsigned j = 0; j < s; ++j) kp *= p;
                std::mt19937_64 rng(kDefaultSeed ^ (R->cardinality() * 997 + p * 31 + s));
                for (int it = 0; it < 100; ++it) {
                    unsigned n = it % 2 ? 3 : 2;
                    Matrix M = random_matrix(R, n, rng);
                    u64 target = M.pow(kp).trace();
                    if (!ws.witness_for(target)) {
                        o.fail("no witness at " + R->spec() + " (p,s)=(" + std::to_string(p) +
                               "," + std::to_string(s) + ") trace " + R->to_string(target));
                        return;
                    }
                }
            }
        }
    });

    criterion(7, "theorem families report agreement on every universe ring", [](Outcome& o) {
        for (auto& R : g_universe)
            for (auto& fam : theorem_families()) {
                Budget budget(4'000'000'000);
                TheoremReport rep = verify_theorem(fam, R, budget);
                if (!rep.agreement) {
                    std::string why;
                    for (auto& st : rep.statements)
                        if (!st.verdict && !st.informational && !st.witness.is_null() &&
                            !st.witness.empty())
                            why = st.id + " witness " + st.witness.dump();
                    o.fail(fam + " @ " + R->spec() + ": " + why);
                }
            }
    });

    criterion(8, "discriminant criterion: three statements agree on 16 curated (f, p) pairs",
              [](Outcome& o) {
                  struct Case {
                      const char* poly;
                      unsigned p;
                      bool holds;
                  };
                  const Case cases[] = {
                      {"x^2-x+1", 3, false}, {"x^2-x-1", 3, true},   {"x^2+1", 2, false},
                      {"x^2+1", 3, true},    {"x^2+1", 5, true},     {"x^2-2", 2, false},
                      {"x^2-x-1", 5, false}, {"x^3-x-1", 23, false}, {"x^3-x-1", 2, true},
                      {"x^3-x-1", 3, true},  {"x^3-2", 3, false},    {"x^3+x+1", 31, false},
                      {"x^2+x+1", 3, false}, {"x^2+3", 3, false},    {"x^4+1", 2, false},
                      {"x^4+1", 3, true},
                  };
                  for (auto& c : cases) {
                      Budget budget(1'000'000'000);
                      OrderCriterion oc =
                          order_power_criterion(IntPoly::parse(c.poly), c.p, budget);
                      if (!oc.agree())
                          o.fail(std::string(c.poly) + " p=" + std::to_string(c.p) +
                                 ": statements disagree");
                      else if (oc.holds() != c.holds)
                          o.fail(std::string(c.poly) + " p=" + std::to_string(c.p) +
                                 ": unexpected verdict");
                  }
              });

    criterion(9, "every displayed binomial congruence verifies symbolically", [](Outcome& o) {
        for (auto& ci : closure_identities())
            if (!verify_closure_identity(ci)) o.fail(ci.id);
    });

    criterion(10, "every reduction-chain record certifies on every universe ring", [](Outcome& o) {
        for (unsigned k : chain_powers()) {
            Budget budget(4'000'000'000);
            for (auto& res : verify_chain(k, g_universe, budget)) {
                if (res.rec->note.find("must fail") != std::string::npos) continue;
                if (!res.semantic_pass()) {
                    std::string rings;
                    for (auto& rc : res.rings)
                        if (!rc.printed_ok || !rc.residual_ok)
                            rings += (rings.empty() ? "" : ", ") + rc.ring + " at " +
                                     rc.counterexample;
                    o.fail(res.rec->id + " @ " + rings);
                }
            }
        }
        if (o.pass)
            o.detail = "degree-9 reduction ambiguity: the t^5*d^2 reading derives exactly";
    });

    criterion(11, "witness search is consistent with decide and covers >= 95%", [](Outcome& o) {
        for (const char* spec : {"Z/2", "Z/3", "Z/4", "Z/5"}) {
            auto R = Ring::parse(spec);
            u64 C = R->cardinality();
            u64 total = C * C * C * C;
            for (unsigned k : {2u, 3u, 4u}) {
                Budget budget(4'000'000'000);
                Subgroup sub = trace_subgroup(R, k, 2, budget);

                // reachability oracle: fold the set of k-th powers three times
                auto key_of = [&](const Matrix& m) {
                    return ((m.at(0, 0) * C + m.at(0, 1)) * C + m.at(1, 0)) * C + m.at(1, 1);
                };
                auto matrix_of = [&](u64 key) {
                    Matrix m(R, 2);
                    m.set(1, 1, key % C);
                    key /= C;
                    m.set(1, 0, key % C);
                    key /= C;
                    m.set(0, 1, key % C);
                    key /= C;
                    m.set(0, 0, key % C);
                    return m;
                };
                std::set<u64> powers;
                for (u64 i = 0; i < total; ++i) powers.insert(key_of(matrix_of(i).pow(k)));
                std::set<u64> reach = powers;
                for (int level = 2; level <= 3; ++level) {
                    std::set<u64> next = reach;
                    for (u64 s : reach)
                        for (u64 p : powers) next.insert(key_of(matrix_of(s).add(matrix_of(p))));
                    reach = std::move(next);
                }

                bool all_yes = sub.is_whole_ring();
                u64 covered = 0, contradictions = 0;
                for (u64 i = 0; i < total; ++i) {
                    Matrix M = matrix_of(i);
                    bool yes = sub.contains(M.trace());
                    bool found = reach.count(i) > 0;
                    if (found) {
                        ++covered;
                        if (!yes) ++contradictions;
                    }
                }
                if (contradictions)
                    o.fail(std::string(spec) + " k=" + std::to_string(k) +
                           ": witness found for a NO matrix");
                if (all_yes && covered * 100 < total * 95)
                    o.fail(std::string(spec) + " k=" + std::to_string(k) + ": coverage " +
                           std::to_string(covered) + "/" + std::to_string(total));

                // spot-check the search function against the oracle on a sample
                std::mt19937_64 rng(kDefaultSeed ^ (C * 13 + k));
                for (int it = 0; it < 25; ++it) {
                    u64 i = rng() % total;
                    Matrix M = matrix_of(i);
                    auto w = brute_force_witness(M, k, 3, budget);
                    if (w.has_value() != (reach.count(i) > 0)) {
                        o.fail(std::string(spec) + " k=" + std::to_string(k) +
                               ": search/oracle mismatch");
                        break;
                    }
                    if (w) {
                        Matrix sum(R, 2);
                        for (auto& m : *w) sum = sum.add(m.pow(k));
                        if (!(sum == M)) {
                            o.fail(std::string(spec) + " k=" + std::to_string(k) +
                                   ": witness does not re-evaluate");
                            break;
                        }
                    }
                }
            }
        }
    });

    std::cout << (g_failures == 0
                      ? "all criteria passed\n"
                      : std::to_string(g_failures) + " criterion(s) failed (see lines above)\n");
    return g_failures == 0 ? 0 : 1;
}
