#include "waring/identities.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "chains_data.hpp"
#include "waring/trace_power.hpp"
#include "waring/trace_subgroup.hpp"

namespace waring {

namespace {

MultiPoly mp(std::string_view text, const std::vector<std::string>& names) {
    return MultiPoly::parse(text, names);
}

std::vector<std::string> var_names(unsigned nvars) {
    if (nvars == 1) return {"x"};
    if (nvars == 2) return {"t", "d"};
    throw std::logic_error("unsupported chain variable count");
}

MultiPoly trace_formula_poly(unsigned k) {
    auto coeffs = trace_power_coeffs(k);
    MultiPoly p(2);
    p.add_term({k, 0}, 1);
    for (unsigned r = 1; r < coeffs.size(); ++r) p.add_term({k - 2 * r, r}, coeffs[r]);
    return p;
}

// --- closure identities -----------------------------------------------------

std::vector<ClosureIdentity> make_closure_identities() {
    std::vector<ClosureIdentity> out;
    auto addp = [&](const std::string& id, unsigned k, unsigned power, long long mult,
                    const std::string& rhs_text, const std::string& note = "") {
        std::vector<std::string> vars{"x", "y"};
        ClosureIdentity ci{id, k, vars, {}, {}, note};
        auto X = MultiPoly::variable(2, 0), Y = MultiPoly::variable(2, 1);
        ci.lhs = (X + Y).pow(power).scaled(mult);
        ci.rhs = mp(rhs_text, vars);
        out.push_back(std::move(ci));
    };

    addp("k10.pow10", 10, 10, 1, "x^10+y^10+5*x^8*y^2+5*x^2*y^8+2*x^5*y^5");
    addp("k10.lin5", 10, 5, 2, "2*x^5+2*y^5");
    addp("k10.lin2", 10, 2, 5, "5*x^2+5*y^2");
    addp("k14.pow14", 14, 14, 1,
         "x^14+y^14+7*x^12*y^2+7*x^2*y^12+7*x^10*y^4+7*x^4*y^10+7*x^8*y^6+7*x^6*y^8+2*x^7*y^7");
    addp("k14.lin7", 14, 7, 2, "2*x^7+2*y^7",
         "sign normalized; the display carries -2 on one side");
    addp("k14.lin2", 14, 2, 7, "7*x^2+7*y^2");
    addp("k15.pow15", 15, 15, 1,
         "x^15+y^15+5*x^12*y^3+5*x^3*y^12+3*x^10*y^5+3*x^5*y^10+10*x^9*y^6+10*x^6*y^9");
    addp("k15.lin5", 15, 5, 3, "3*x^5+3*y^5");
    addp("k15.lin3", 15, 3, 5, "5*x^3+5*y^3");
    addp("k12.pow12", 12, 12, 1,
         "x^12+y^12+6*x^10*y^2+6*x^2*y^10+4*x^9*y^3+4*x^3*y^9+3*x^8*y^4+3*x^4*y^8");
    addp("k12.pow6", 12, 6, 1, "x^6+y^6+6*x^5*y+6*x*y^5-4*x^3*y^3+3*x^4*y^2+3*x^2*y^4");
    addp("k12.pow4", 12, 4, 1, "x^4+y^4+6*x^2*y^2+4*x^3*y+4*x*y^3");
    addp("k12.pow3", 12, 3, 1, "x^3+y^3+3*x^2*y+3*x*y^2");
    addp("k12.pow2", 12, 2, 1, "x^2+y^2+2*x*y");

    // Group-witness identities: combining two generic members of the
    // condition set into a single member, with explicit new variables.
    auto witness = [&](const std::string& id, unsigned k, unsigned nv,
                       const std::function<MultiPoly(const std::vector<MultiPoly>&)>& lhs_fn,
                       const std::function<MultiPoly(const std::vector<MultiPoly>&)>& member_fn,
                       const std::string& note = "") {
        std::vector<std::string> vars;
        for (unsigned i = 0; i < nv / 2; ++i) {
            vars.push_back("x" + std::to_string(i));
            vars.push_back("y" + std::to_string(i));
        }
        std::vector<MultiPoly> v;
        for (unsigned i = 0; i < nv; ++i) v.push_back(MultiPoly::variable(nv, i));
        ClosureIdentity ci{id, k, vars, lhs_fn(v), member_fn(v), note};
        out.push_back(std::move(ci));
    };

    // variables come interleaved: x0,y0,x1,y1,...
    witness(
        "k10.witness", 10, 6,
        [](const std::vector<MultiPoly>& v) {
            auto &x0 = v[0], &y0 = v[1], &x1 = v[2], &y1 = v[3], &x2 = v[4], &y2 = v[5];
            auto z1 = x0 * y0 + x1 + y1;
            auto z2 = x0.pow(4) * y0 + x0 * y0.pow(4) + x2 + y2;
            return (x0 + y0).pow(10) - z1.pow(5).scaled(2) + z2.pow(2).scaled(5);
        },
        [](const std::vector<MultiPoly>& v) {
            auto member = [](const MultiPoly& a, const MultiPoly& b, const MultiPoly& c) {
                return a.pow(10) - b.pow(5).scaled(2) + c.pow(2).scaled(5);
            };
            return member(v[0], v[2], v[4]) + member(v[1], v[3], v[5]);
        },
        "sum of two members rewritten as one member");
    witness(
        "k14.witness", 14, 6,
        [](const std::vector<MultiPoly>& v) {
            auto &x0 = v[0], &y0 = v[1], &x1 = v[2], &y1 = v[3], &x2 = v[4], &y2 = v[5];
            auto z1 = x0 * y0 + x1 + y1;
            auto z2 = x0.pow(6) * y0 + x0 * y0.pow(6) + x0.pow(5) * y0.pow(2) +
                      x0.pow(2) * y0.pow(5) + x0.pow(4) * y0.pow(3) + x0.pow(3) * y0.pow(4) + x2 +
                      y2;
            return (x0 + y0).pow(14) - z1.pow(7).scaled(2) + z2.pow(2).scaled(7);
        },
        [](const std::vector<MultiPoly>& v) {
            auto member = [](const MultiPoly& a, const MultiPoly& b, const MultiPoly& c) {
                return a.pow(14) - b.pow(7).scaled(2) + c.pow(2).scaled(7);
            };
            return member(v[0], v[2], v[4]) + member(v[1], v[3], v[5]);
        },
        "combined variable z1 = x0*y0 + x1 + y1");
    witness(
        "k15.witness", 15, 6,
        [](const std::vector<MultiPoly>& v) {
            auto &x0 = v[0], &y0 = v[1], &x1 = v[2], &y1 = v[3], &x2 = v[4], &y2 = v[5];
            auto z1 = x0.pow(2) * y0 + x0 * y0.pow(2) + x1 + y1;
            auto z2 = x0.pow(3) * y0.pow(2) + x0.pow(2) * y0.pow(3) - x0.pow(4) * y0 -
                      x0 * y0.pow(4) + x2 + y2;
            return (x0 + y0).pow(15) - z1.pow(5).scaled(3) + z2.pow(3).scaled(5);
        },
        [](const std::vector<MultiPoly>& v) {
            auto member = [](const MultiPoly& a, const MultiPoly& b, const MultiPoly& c) {
                return a.pow(15) - b.pow(5).scaled(3) + c.pow(3).scaled(5);
            };
            return member(v[0], v[2], v[4]) + member(v[1], v[3], v[5]);
        });
    witness(
        "k12.witness", 12, 10,
        [](const std::vector<MultiPoly>& v) {
            auto &x0 = v[0], &y0 = v[1], &x1 = v[2], &y1 = v[3], &x2 = v[4], &y2 = v[5],
                 &x3 = v[6], &y3 = v[7], &x4 = v[8], &y4 = v[9];
            auto z0 = x0 + y0;
            auto z1 = x1 + y1;
            auto z2 = x2 + y2 + x0.pow(2) * y0 + x0 * y0.pow(2);
            auto z3 = x0.pow(3) * y0 + x0 * y0.pow(3) + x1 * y1 + x3 + y3;
            auto z4 = x0.pow(5) * y0 + x0 * y0.pow(5) + x1.pow(2) * y1 + x1 * y1.pow(2) +
                      (x2 + y2) * (x0.pow(2) * y0 + x0 * y0.pow(2)) + x0.pow(3) * y0.pow(3) +
                      x2 * y2 + x4 + y4;
            return z0.pow(12) + z1.pow(6).scaled(2) - z2.pow(4).scaled(3) - z3.pow(3).scaled(4) +
                   z4.pow(2).scaled(6);
        },
        [](const std::vector<MultiPoly>& v) {
            auto member = [](const MultiPoly& a, const MultiPoly& b, const MultiPoly& c,
                             const MultiPoly& d, const MultiPoly& e) {
                return a.pow(12) + b.pow(6).scaled(2) - c.pow(4).scaled(3) - d.pow(3).scaled(4) +
                       e.pow(2).scaled(6);
            };
            return member(v[0], v[2], v[4], v[6], v[8]) + member(v[1], v[3], v[5], v[7], v[9]);
        },
        "ten-variable combination");
    return out;
}

}  // namespace

const std::vector<ClosureIdentity>& closure_identities() {
    static const std::vector<ClosureIdentity> ids = make_closure_identities();
    return ids;
}

const ClosureIdentity& closure_identity(const std::string& id) {
    for (auto& ci : closure_identities())
        if (ci.id == id) return ci;
    throw std::out_of_range("unknown identity id: " + id);
}

bool verify_closure_identity(const ClosureIdentity& ci) {
    return (ci.lhs - ci.rhs).coeffs_mod(ci.k).is_zero();
}

// --- chain table ------------------------------------------------------------

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == '|') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    for (auto& f : fields) {
        size_t a = f.find_first_not_of(" \t");
        size_t b = f.find_last_not_of(" \t");
        f = a == std::string::npos ? "" : f.substr(a, b - a + 1);
    }
    return fields;
}

std::vector<ChainRecord> parse_chain_table(const char* text) {
    std::vector<ChainRecord> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_fields(line);
        std::istringstream head(fields[0]);
        std::string type, id, vars;
        unsigned k = 0;
        head >> type >> k >> id;
        ChainRecord rec;
        rec.k = k;
        rec.id = id;
        if (type == "E") {
            head >> vars;
            if (fields.size() != 4) throw std::runtime_error("bad chain entry line: " + line);
            rec.is_family = false;
            rec.nvars = vars == "td" ? 2 : 1;
            rec.printed = MultiPoly::parse(fields[1], var_names(rec.nvars));
            rec.derivation = fields[2] == "-" ? "" : fields[2];
            rec.note = fields[3] == "-" ? "" : fields[3];
        } else if (type == "F") {
            if (fields.size() != 4) throw std::runtime_error("bad chain family line: " + line);
            rec.is_family = true;
            std::istringstream ps(fields[1]);
            std::string part;
            while (std::getline(ps, part, ',')) {
                auto colon = part.find(':');
                if (colon == std::string::npos) throw std::runtime_error("bad family pattern: " + line);
                CoeffFamilyPart cfp;
                cfp.coeff = std::stoll(part.substr(0, colon));
                cfp.expmult = (unsigned)std::stoul(part.substr(colon + 1));
                rec.pattern.push_back(cfp);
            }
            rec.base = fields[2] == "-" ? "" : fields[2];
            rec.note = fields[3] == "-" ? "" : fields[3];
        } else {
            throw std::runtime_error("bad chain record type in line: " + line);
        }
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace

const std::vector<ChainRecord>& chain_table() {
    static const std::vector<ChainRecord> table = parse_chain_table(detail::kChainsText);
    return table;
}

std::vector<const ChainRecord*> chain_records_for(unsigned k) {
    std::vector<const ChainRecord*> out;
    for (auto& r : chain_table())
        if (r.k == k) out.push_back(&r);
    return out;
}

const std::vector<unsigned>& chain_powers() {
    static const std::vector<unsigned> ks = {9, 10, 11, 12, 13, 14, 15, 16};
    return ks;
}

std::string symbolic_status_name(SymbolicStatus s) {
    switch (s) {
        case SymbolicStatus::Exact: return "exact";
        case SymbolicStatus::ResidualSemantic: return "residual-semantic";
        case SymbolicStatus::NoDerivation: return "no-derivation";
        case SymbolicStatus::Failed: return "failed";
    }
    return "?";
}

bool ChainEntryResult::semantic_pass() const {
    for (auto& r : rings)
        if (!r.printed_ok || !r.residual_ok) return false;
    return symbolic != SymbolicStatus::Failed;
}

// --- derivation DSL -----------------------------------------------------------

namespace {

struct DslCursor {
    std::string_view s;
    size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool done() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
};

std::string read_ident(DslCursor& cur) {
    cur.skip();
    std::string out;
    while (cur.i < cur.s.size() &&
           (std::isalnum((unsigned char)cur.s[cur.i]) || cur.s[cur.i] == '_' || cur.s[cur.i] == '.'))
        out += cur.s[cur.i++];
    if (out.empty()) throw std::runtime_error("expected an identifier in derivation");
    return out;
}

std::vector<std::string> read_args(DslCursor& cur) {
    cur.skip();
    if (cur.peek() != '(') throw std::runtime_error("expected '(' in derivation");
    ++cur.i;
    std::vector<std::string> args;
    std::string piece;
    int depth = 0;
    while (cur.i < cur.s.size()) {
        char c = cur.s[cur.i];
        if (c == '(') ++depth;
        if (c == ')') {
            if (depth == 0) {
                ++cur.i;
                args.push_back(piece);
                return args;
            }
            --depth;
        }
        if (c == ',' && depth == 0) {
            args.push_back(piece);
            piece.clear();
            ++cur.i;
            continue;
        }
        piece += c;
        ++cur.i;
    }
    throw std::runtime_error("unterminated argument list in derivation");
}

struct BezoutInfo {
    long long u = 0, v = 0, g = 0;
};
long long ext_gcd(long long a, long long b, long long& u, long long& v) {
    if (b == 0) {
        u = 1;
        v = 0;
        return a;
    }
    long long u1, v1;
    long long g = ext_gcd(b, a % b, u1, v1);
    u = v1;
    v = u1 - (a / b) * v1;
    return g;
}

}  // namespace

std::vector<ChainEntryResult> verify_chain(unsigned k, const std::vector<RingPtr>& rings,
                                           Budget& budget, const std::string& only_id) {
    auto records = chain_records_for(k);
    if (records.empty()) throw std::invalid_argument("no chain records for k=" + std::to_string(k));

    std::map<std::string, const ChainRecord*> by_id;
    std::vector<const ChainRecord*> families_so_far;

    // per-ring trace subgroup S^k at n = 2
    std::vector<Subgroup> subs;
    for (auto& R : rings) subs.push_back(trace_subgroup(R, k, 2, budget));

    auto reduce_residual = [&](const MultiPoly& r) {
        MultiPoly out(r.nvars());
        for (auto& [e, c] : r.terms()) {
            unsigned g = 0;
            bool constant = true;
            for (unsigned ei : e) {
                if (ei) constant = false;
                g = std::gcd(g, ei);
            }
            if (constant) continue;  // integer multiples of 1 are always members
            long long mod = 0;
            for (auto* fam : families_so_far) {
                if (fam->pattern.size() != 1) continue;
                if (g % fam->pattern[0].expmult == 0)
                    mod = std::gcd(mod, std::llabs(fam->pattern[0].coeff));
            }
            long long c2 = c;
            if (mod == 1) continue;
            if (mod > 1) {
                c2 = c % mod;
                if (c2 < 0) c2 += mod;
                if (c2 > mod / 2) c2 -= mod;
            }
            if (c2 != 0) out.add_term(e, c2);
        }
        return out;
    };

    auto eval_derivation = [&](const ChainRecord& rec) -> MultiPoly {
        auto names = var_names(rec.nvars);
        DslCursor cur{rec.derivation};
        MultiPoly acc(rec.nvars);
        bool first = true;
        while (!cur.done()) {
            long long sign = 1;
            if (cur.peek() == '+') {
                ++cur.i;
            } else if (cur.peek() == '-') {
                sign = -1;
                ++cur.i;
            } else if (!first) {
                throw std::runtime_error("expected +/- in derivation of " + rec.id);
            }
            first = false;
            cur.skip();
            long long coeff = 1;
            if (cur.i < cur.s.size() && std::isdigit((unsigned char)cur.s[cur.i])) {
                coeff = 0;
                while (cur.i < cur.s.size() && std::isdigit((unsigned char)cur.s[cur.i]))
                    coeff = coeff * 10 + (cur.s[cur.i++] - '0');
                cur.skip();
                if (cur.peek() == '*') ++cur.i;
            }
            std::string ident = read_ident(cur);
            auto args = read_args(cur);
            MultiPoly value;
            if (ident == "tracepoly") {
                if (rec.nvars != 2) throw std::runtime_error("tracepoly needs a two-variable entry");
                value = trace_formula_poly((unsigned)std::stoul(args.at(0)));
            } else {
                auto it = by_id.find(ident);
                if (it == by_id.end() || it->second->is_family)
                    throw std::runtime_error("derivation of " + rec.id + " references unknown entry " + ident);
                const ChainRecord& ref = *it->second;
                if (args.size() != ref.nvars)
                    throw std::runtime_error("derivation of " + rec.id + ": wrong arity for " + ident);
                std::vector<MultiPoly> images;
                for (auto& a : args) images.push_back(MultiPoly::parse(a, names));
                value = ref.printed.substitute(images);
            }
            acc = acc + value.scaled(sign * coeff);
        }
        return acc;
    };

    std::vector<ChainEntryResult> results;
    for (auto* recp : records) {
        const ChainRecord& rec = *recp;
        ChainEntryResult res;
        res.rec = recp;

        if (!rec.is_family && !rec.derivation.empty()) {
            if (rec.derivation.rfind("bezout(", 0) == 0) {
                DslCursor cur{rec.derivation};
                read_ident(cur);
                auto args = read_args(cur);
                auto ita = by_id.find(args.at(0));
                auto itb = by_id.find(args.at(1));
                if (ita == by_id.end() || itb == by_id.end())
                    throw std::runtime_error("bezout references unknown entries in " + rec.id);
                const MultiPoly &A = ita->second->printed, &B = itb->second->printed;
                if (A.terms().size() != 1 || B.terms().size() != 1 ||
                    A.terms().begin()->first != B.terms().begin()->first) {
                    res.symbolic = SymbolicStatus::Failed;
                    res.symbolic_detail = "bezout operands are not matching monomials";
                } else {
                    long long ca = A.terms().begin()->second, cb = B.terms().begin()->second;
                    long long u, v;
                    long long g = ext_gcd(ca, cb, u, v);
                    if (g < 0) g = -g, u = -u, v = -v;
                    MultiPoly expect(rec.nvars);
                    expect.add_term(A.terms().begin()->first, g);
                    if (expect == rec.printed) {
                        res.symbolic = SymbolicStatus::Exact;
                        std::ostringstream os;
                        os << "gcd(" << ca << "," << cb << ") = " << g << " via " << u << "*"
                           << args[0] << " + " << v << "*" << args[1];
                        res.symbolic_detail = os.str();
                    } else {
                        res.symbolic = SymbolicStatus::Failed;
                        res.symbolic_detail = "printed polynomial is not the gcd monomial";
                    }
                }
            } else {
                MultiPoly value = eval_derivation(rec);
                MultiPoly residual = reduce_residual(value - rec.printed);
                if (residual.is_zero()) {
                    res.symbolic = SymbolicStatus::Exact;
                } else {
                    res.symbolic = SymbolicStatus::ResidualSemantic;
                    res.residual = residual;
                    res.symbolic_detail =
                        "residual " + residual.to_string(var_names(rec.nvars));
                }
            }
        }

        // semantic checks
        bool wanted = only_id.empty() || rec.id == only_id;
        if (wanted) {
            for (size_t ri = 0; ri < rings.size(); ++ri) {
                const RingPtr& R = rings[ri];
                const Subgroup& S = subs[ri];
                ChainRingCheck check;
                check.ring = R->spec();
                auto elems = R->elements();
                auto sweep = [&](const MultiPoly& poly) -> std::optional<std::string> {
                    if (poly.is_zero()) return std::nullopt;
                    if (poly.nvars() == 1) {
                        for (u64 x : elems) {
                            budget.charge(1, "chain semantic sweep");
                            if (!S.contains(poly.eval(*R, {x})))
                                return "x=" + R->to_string(x);
                        }
                    } else {
                        for (u64 a : elems)
                            for (u64 b : elems) {
                                budget.charge(1, "chain semantic sweep");
                                if (!S.contains(poly.eval(*R, {a, b})))
                                    return "t=" + R->to_string(a) + ", d=" + R->to_string(b);
                            }
                    }
                    return std::nullopt;
                };
                if (rec.is_family) {
                    u64 bound = R->cardinality() + 1;
                    for (u64 x : elems) {
                        for (u64 i = 1; i <= bound && check.printed_ok; ++i) {
                            budget.charge(1, "chain family sweep");
                            u64 v = R->zero();
                            for (auto& part : rec.pattern)
                                v = R->add(v, R->scale(part.coeff, R->pow(x, part.expmult * i)));
                            if (!S.contains(v)) {
                                check.printed_ok = false;
                                check.counterexample =
                                    "x=" + R->to_string(x) + ", i=" + std::to_string(i);
                            }
                        }
                        if (!check.printed_ok) break;
                    }
                } else {
                    if (auto bad = sweep(rec.printed)) {
                        check.printed_ok = false;
                        check.counterexample = *bad;
                    }
                    if (res.symbolic == SymbolicStatus::ResidualSemantic) {
                        if (auto bad = sweep(res.residual)) {
                            check.residual_ok = false;
                            if (check.counterexample.empty())
                                check.counterexample = "residual at " + *bad;
                        }
                    }
                }
                res.rings.push_back(std::move(check));
            }
        }

        if (rec.is_family)
            families_so_far.push_back(recp);
        else
            by_id.emplace(rec.id, recp);

        if (wanted) results.push_back(std::move(res));
    }
    return results;
}

RemarkReport explore_remark(unsigned k, const MultiPoly& g1, const MultiPoly& g2,
                            const std::vector<RingPtr>& rings, Budget& budget) {
    if (k != 12 && k != 16) throw std::invalid_argument("remark probe supports k = 12 or 16");
    if (g1.nvars() != 1 || g2.nvars() != 1)
        throw std::invalid_argument("remark probe takes one-variable polynomials");
    RemarkReport rep;
    rep.k = k;
    rep.g1 = g1.to_string({"x"});
    rep.g2 = g2.to_string({"x"});

    // the reduced two-variable form and the named tail generators
    MultiPoly F(2);
    if (k == 12) {
        F = MultiPoly::parse("12*t^10*d+6*t^8*d^2+12*t^2*d^5", {"t", "d"});
    } else {
        F = MultiPoly::parse("16*t^14*d+8*t^12*d^2+4*t^8*d^4", {"t", "d"});
    }
    MultiPoly probe = F.substitute({g1, g2});

    for (auto& R : rings) {
        RemarkReport::RingLine line;
        line.ring = R->spec();
        auto elems = R->elements();
        // group generated by tail-family values and established coefficient families
        std::vector<u64> gens;
        auto add_poly_values = [&](const MultiPoly& p) {
            for (u64 x : elems) {
                budget.charge(1, "remark generators");
                gens.push_back(p.eval(*R, {x}));
            }
        };
        if (k == 12) {
            add_poly_values(MultiPoly::parse("4*x^3+6*x^2+12*x", {"x"}));
        } else {
            add_poly_values(MultiPoly::parse("16*x^3+8*x^2", {"x"}));
            add_poly_values(MultiPoly::parse("4*x^4+16*x^3+16*x", {"x"}));
        }
        u64 bound = R->cardinality() + 1;
        long long hc = k == 12 ? 12 : 16;
        for (u64 x : elems) {
            u64 xsq = R->mul(x, x);
            u64 lo = R->mul(x, xsq);  // x^3
            u64 hi = R->mul(lo, xsq);
            for (u64 m = 2; m <= bound; ++m) {
                budget.charge(1, "remark tail sweep");
                gens.push_back(R->scale(hc, R->add(hi, lo)));
                lo = hi;
                hi = R->mul(hi, xsq);
            }
        }
        for (auto* rec : chain_records_for(k)) {
            if (!rec->is_family) continue;
            for (u64 x : elems)
                for (u64 i = 1; i <= bound; ++i) {
                    budget.charge(1, "remark family sweep");
                    u64 v = R->zero();
                    for (auto& part : rec->pattern)
                        v = R->add(v, R->scale(part.coeff, R->pow(x, part.expmult * i)));
                    gens.push_back(v);
                }
        }
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

        // additive closure
        std::set<u64> group{R->zero()};
        std::vector<u64> work{R->zero()};
        while (!work.empty()) {
            u64 e = work.back();
            work.pop_back();
            for (u64 g : gens) {
                budget.charge(1, "remark closure");
                u64 v = R->add(e, g);
                if (group.insert(v).second) work.push_back(v);
            }
        }

        line.contained = true;
        for (u64 x : elems) {
            u64 v = probe.eval(*R, {x});
            if (!group.count(v)) {
                line.contained = false;
                line.detail = "value at x=" + R->to_string(x) + " escapes the tail group";
                break;
            }
        }
        if (line.contained)
            line.detail = "all probe values lie in the group generated by the tail families";
        rep.rings.push_back(std::move(line));
    }
    return rep;
}

}  // namespace waring
