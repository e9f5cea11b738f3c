#include "waring/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "waring/identities.hpp"
#include "waring/matrix.hpp"
#include "waring/order_criteria.hpp"
#include "waring/report.hpp"
#include "waring/trace_power.hpp"
#include "waring/trace_subgroup.hpp"
#include "waring/universe.hpp"
#include "waring/waring_sets.hpp"

namespace waring {

namespace {

using nlohmann::json;

struct Common {
    u64 budget = Budget::from_env();
    u64 seed = kDefaultSeed;
    bool as_json = false;
};

json witness_json(const Ring& R, const SetWitness& w) {
    json j;
    j["tuple"] = w.tuple;
    json rendered = json::array();
    for (u64 c : w.tuple) rendered.push_back(R.to_string(c));
    j["tuple_rendered"] = rendered;
    if (w.m) j["m"] = w.m;
    return j;
}

int cmd_trace_power(const Common& c, unsigned k, const std::string& ring_spec,
                    const std::string& t_expr, const std::string& d_expr, bool reduced,
                    bool explain, std::ostream& out) {
    RingPtr R = Ring::parse(ring_spec);
    u64 t = R->parse_element(t_expr);
    u64 d = R->parse_element(d_expr);
    json j;
    j["k"] = k;
    j["ring"] = R->spec();
    if (reduced) {
        QuotientMap pi = quotient_by_integer(R, k);
        u64 value = trace_power_reduced_form(*pi.target, k, pi(t), pi(d));
        j["reduced"] = true;
        j["quotient_ring"] = pi.target->spec();
        j["value"] = pi.target->to_string(value);
        if (!c.as_json) out << pi.target->to_string(value) << "\n";
    } else {
        u64 value = trace_power_closed_form(*R, k, t, d);
        j["value"] = R->to_string(value);
        if (!c.as_json) out << R->to_string(value) << "\n";
    }
    if (explain) {
        auto coeffs = trace_power_coeffs(k);
        j["coefficients"] = coeffs;
        bool have_printed = has_reduced_form(k);
        bool match = have_printed && coeffs == printed_trace_coeffs(k);
        if (have_printed) j["printed_vector_match"] = match;
        if (!c.as_json) {
            out << "coefficients:";
            for (auto v : coeffs) out << " " << v;
            out << "\n";
            if (have_printed) out << "printed vector match: " << (match ? "yes" : "NO") << "\n";
        }
    }
    if (c.as_json) out << j.dump(2) << "\n";
    return 0;
}

int cmd_set(const Common& c, const std::string& kind_text, const std::string& ring_spec,
            const std::string& element, std::ostream& out) {
    Budget budget(c.budget);
    RingPtr R = Ring::parse(ring_spec);
    auto [kind, ps] = parse_set_kind(kind_text);
    ConditionSet set = build_condition_set(kind, R, budget, ps.first, ps.second);
    json j;
    j["kind"] = kind_text;
    j["ring"] = R->spec();
    j["ambient"] = set.ambient->spec();
    j["size"] = set.values.size();
    if (!element.empty()) {
        u64 v = R->parse_element(element);
        u64 amb = set.to_ambient(v);
        bool member = set.contains(amb);
        j["element"] = R->to_string(v);
        j["projected"] = set.ambient->to_string(amb);
        j["member"] = member;
        if (member) j["witness"] = witness_json(*R, *set.witness_for(amb));
        if (!c.as_json) {
            out << (member ? "member" : "non-member") << "\n";
            if (member) out << "witness: " << j["witness"].dump() << "\n";
        }
    } else {
        json members = json::array();
        for (u64 v : set.values) {
            json m;
            m["value"] = set.ambient->to_string(v);
            m["witness"] = witness_json(*R, *set.witness_for(v));
            members.push_back(m);
        }
        j["members"] = members;
        auto closure = verify_group_closure(set);
        j["additive_group"] = closure.group();
        if (!c.as_json) {
            out << "set " << kind_text << " in " << set.ambient->spec() << ", " << set.values.size()
                << " members, additive group: " << (closure.group() ? "yes" : "no") << "\n";
            for (u64 v : set.values) out << "  " << set.ambient->to_string(v) << "\n";
        }
    }
    if (c.as_json) out << j.dump(2) << "\n";
    return 0;
}

int cmd_subgroup(const Common& c, unsigned k, const std::string& ring_spec, unsigned n,
                 bool quotient, std::ostream& out) {
    Budget budget(c.budget);
    RingPtr R = Ring::parse(ring_spec);
    Subgroup s = trace_subgroup(R, k, n, budget, quotient);
    json j;
    j["k"] = k;
    j["n"] = n;
    j["ring"] = R->spec();
    j["ambient"] = s.ambient->spec();
    j["order"] = s.elements.size();
    j["whole_ring"] = s.is_whole_ring();
    json gens = json::array();
    for (auto& g : s.generators) {
        json gj;
        gj["value"] = s.ambient->to_string(g.value);
        json params = json::array();
        for (u64 p : g.params) params.push_back(s.ambient->to_string(p));
        gj["params"] = params;
        gens.push_back(gj);
    }
    j["generators"] = gens;
    json elems = json::array();
    for (u64 e : s.elements) elems.push_back(s.ambient->to_string(e));
    j["elements"] = elems;
    if (c.as_json) {
        out << j.dump(2) << "\n";
    } else {
        out << "trace subgroup k=" << k << " n=" << n << " over " << s.ambient->spec() << ": "
            << s.elements.size() << " of " << s.ambient->cardinality() << " elements"
            << (s.is_whole_ring() ? " (whole ring)" : "") << "\n";
        out << "generators (" << s.generators.size() << "):\n";
        for (auto& g : s.generators) {
            out << "  " << s.ambient->to_string(g.value) << "  <-  (";
            for (size_t i = 0; i < g.params.size(); ++i)
                out << (i ? "," : "") << s.ambient->to_string(g.params[i]);
            out << ")\n";
        }
        out << "elements:";
        for (u64 e : s.elements) out << " " << s.ambient->to_string(e);
        out << "\n";
    }
    return 0;
}

int cmd_decide(const Common& c, unsigned k, const std::string& ring_spec,
               const std::string& matrix_arg, bool want_witness, unsigned max_terms, bool quotient,
               std::ostream& out) {
    Budget budget(c.budget);
    RingPtr R = Ring::parse(ring_spec);
    std::string text = matrix_arg;
    {
        std::ifstream f(matrix_arg);
        if (f.good()) {
            std::stringstream ss;
            ss << f.rdbuf();
            text = ss.str();
        }
    }
    Matrix M = Matrix::parse(R, text);
    DecideResult r = decide_sum_of_kth_powers(M, k, budget, quotient);
    json j;
    j["k"] = k;
    j["ring"] = R->spec();
    j["matrix"] = M.to_text();
    j["trace"] = R->to_string(r.trace);
    j["verdict"] = verdict_name(r.verdict);
    if (!c.as_json) out << verdict_name(r.verdict) << "  (trace " << R->to_string(r.trace) << ")\n";
    if (want_witness) {
        auto w = brute_force_witness(M, k, max_terms, budget);
        if (w) {
            json terms = json::array();
            for (auto& m : *w) terms.push_back(m.to_text());
            j["witness"] = terms;
            if (!c.as_json) {
                out << "witness with " << w->size() << " term(s):\n";
                for (auto& m : *w) out << "  " << m.to_text() << "\n";
            }
        } else {
            j["witness"] = nullptr;
            j["witness_note"] = "INCONCLUSIVE within " + std::to_string(max_terms) + " terms";
            if (!c.as_json)
                out << "witness: INCONCLUSIVE within " << max_terms << " terms\n";
        }
    }
    if (c.as_json) out << j.dump(2) << "\n";
    return 0;
}

int cmd_verify(const Common& c, const std::string& family, const std::string& ring_spec,
               std::ostream& out) {
    Budget budget(c.budget);
    RingPtr R = Ring::parse(ring_spec);
    TheoremReport rep = verify_theorem(family, R, budget, c.seed);
    if (c.as_json)
        out << rep.to_json().dump(2) << "\n";
    else
        out << rep.to_text();
    return rep.agreement ? 0 : 1;
}

int cmd_order(const Common& c, const std::string& poly_text, unsigned p, const std::string& family,
              std::ostream& out) {
    Budget budget(c.budget);
    IntPoly f = IntPoly::parse(poly_text);
    OrderCriterion oc = order_power_criterion(f, p, budget);
    json j;
    j["poly"] = f.to_string();
    j["p"] = p;
    j["disc"] = oc.disc.str();
    j["gcd"] = gcd(BigInt(p), abs(oc.disc)).str();
    j["power_stmt"] = oc.power_stmt;
    j["radical_stmt"] = oc.radical_stmt;
    j["disc_stmt"] = oc.disc_stmt;
    j["agreement"] = oc.agree();
    j["criterion"] = oc.holds() ? "HOLDS" : "FAILS";
    if (!c.as_json) {
        out << "order Z[x]/(" << f.to_string() << "), p = " << p << "\n";
        out << "  disc = " << oc.disc.str() << ", gcd(p, disc) = "
            << gcd(BigInt(p), abs(oc.disc)).str() << "\n";
        out << "  every element a p-th power mod p:   " << (oc.power_stmt ? "true" : "false");
        if (oc.power_counterexample)
            out << "  (counterexample " << oc.residue_ring->to_string(*oc.power_counterexample)
                << ")";
        out << "\n";
        out << "  x^p = 0 mod p implies x = 0 mod p:  " << (oc.radical_stmt ? "true" : "false");
        if (oc.radical_counterexample)
            out << "  (counterexample " << oc.residue_ring->to_string(*oc.radical_counterexample)
                << ")";
        out << "\n";
        out << "  gcd(p, disc) = 1:                   " << (oc.disc_stmt ? "true" : "false")
            << "\n";
        out << "  criterion " << (oc.holds() ? "HOLDS" : "FAILS")
            << (oc.agree() ? "" : "  [statements disagree!]") << "\n";
    }
    if (!family.empty()) {
        std::string ks = family == "deg9"    ? "9th"
                         : family == "deg11" ? "11th"
                         : family == "deg13" ? "13th"
                                             : "16th (and 2nd, 4th, 8th)";
        std::string sentence = oc.holds()
                                   ? "every matrix over this order is a sum of " + ks + " powers"
                                   : "not every matrix over this order is a sum of " + ks +
                                         " powers";
        j["conclusion"] = sentence;
        if (!c.as_json) out << "  " << family << ": " << sentence << "\n";
    }
    if (c.as_json) out << j.dump(2) << "\n";
    return oc.agree() ? 0 : 1;
}

int cmd_certify(const Common& c, std::vector<unsigned> ks, std::vector<std::string> ring_specs,
                const std::string& entry, std::ostream& out) {
    if (ks.empty()) ks = chain_powers();
    std::vector<RingPtr> rings;
    if (ring_specs.empty())
        rings = TestUniverse::default_universe().parsed();
    else
        for (auto& s : ring_specs) rings.push_back(Ring::parse(s));

    json j = json::array();
    bool all_pass = true;
    for (unsigned k : ks) {
        Budget budget(c.budget);
        auto results = verify_chain(k, rings, budget, entry);
        for (auto& res : results) {
            bool expected_nonexact = !res.rec->note.empty() &&
                                     res.rec->note.find("must fail") != std::string::npos;
            bool pass = res.semantic_pass();
            if (!expected_nonexact) all_pass = all_pass && pass;
            json rj;
            rj["id"] = res.rec->id;
            rj["k"] = k;
            rj["kind"] = res.rec->is_family ? "family" : "entry";
            rj["symbolic"] = symbolic_status_name(res.symbolic);
            if (!res.symbolic_detail.empty()) rj["symbolic_detail"] = res.symbolic_detail;
            if (!res.rec->note.empty()) rj["note"] = res.rec->note;
            json rings_j = json::array();
            for (auto& rc : res.rings) {
                json rr;
                rr["ring"] = rc.ring;
                rr["pass"] = rc.printed_ok && rc.residual_ok;
                if (!rc.counterexample.empty()) rr["counterexample"] = rc.counterexample;
                rings_j.push_back(rr);
            }
            rj["rings"] = rings_j;
            rj["pass"] = pass;
            j.push_back(rj);
            if (!c.as_json) {
                out << (pass ? "PASS " : "FAIL ") << res.rec->id << "  [symbolic "
                    << symbolic_status_name(res.symbolic) << "]";
                if (!res.symbolic_detail.empty()) out << "  " << res.symbolic_detail;
                if (!res.rec->note.empty()) out << "  (" << res.rec->note << ")";
                out << "\n";
                for (auto& rc : res.rings)
                    if (!rc.printed_ok || !rc.residual_ok)
                        out << "       " << rc.ring << ": " << rc.counterexample << "\n";
            }
        }
    }
    if (c.as_json) out << j.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

int cmd_identity(const Common& c, unsigned k, const std::string& id, std::ostream& out) {
    json j = json::array();
    bool all = true;
    for (auto& ci : closure_identities()) {
        if (k && ci.k != k) continue;
        if (!id.empty() && ci.id != id) continue;
        bool ok = verify_closure_identity(ci);
        all = all && ok;
        json cj;
        cj["id"] = ci.id;
        cj["k"] = ci.k;
        cj["pass"] = ok;
        if (!ci.note.empty()) cj["note"] = ci.note;
        j.push_back(cj);
        if (!c.as_json) out << (ok ? "PASS " : "FAIL ") << ci.id << "\n";
    }
    if (j.empty()) throw CLI::ValidationError("no identity matches the given --k/--id");
    if (c.as_json) out << j.dump(2) << "\n";
    return all ? 0 : 1;
}

int cmd_universe(const Common& c, const std::string& config, std::ostream& out) {
    TestUniverse u;
    if (config.empty()) {
        u = TestUniverse::default_universe();
    } else {
        std::ifstream f(config);
        if (!f.good()) throw CLI::ValidationError("cannot open universe config: " + config);
        u = TestUniverse::from_config(f);
    }
    UniverseSummary sum = run_universe(u, c.seed, c.budget);
    size_t failures = 0;
    json j = json::array();
    for (auto& line : sum.lines) {
        if (!line.pass) ++failures;
        json lj;
        lj["check"] = line.check;
        if (!line.ring.empty()) lj["ring"] = line.ring;
        lj["pass"] = line.pass;
        if (!line.detail.empty()) lj["detail"] = line.detail;
        j.push_back(lj);
        if (!c.as_json && !line.pass)
            out << "FAIL " << line.check << (line.ring.empty() ? "" : " @ " + line.ring) << "  "
                << line.detail << "\n";
    }
    if (c.as_json) {
        out << j.dump(2) << "\n";
    } else {
        out << sum.lines.size() << " checks, " << (sum.lines.size() - failures) << " passed, "
            << failures << " failed\n";
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact trace-condition toolkit for sums of matrix powers over finite commutative rings"};
    app.name("waring");
    Common common;
    app.add_option("--budget", common.budget, "step budget for exhaustive sweeps");
    app.add_option("--seed", common.seed, "seed for randomized sweeps");
    app.add_flag("--json", common.as_json, "emit JSON reports");
    app.require_subcommand(1);

    // trace-power
    auto* tp = app.add_subcommand("trace-power", "evaluate the power-trace closed form");
    unsigned tp_k = 2;
    std::string tp_ring, tp_t, tp_d;
    bool tp_reduced = false, tp_explain = false;
    tp->add_option("--k", tp_k, "power")->required();
    tp->add_option("--ring", tp_ring, "ring spec")->required();
    tp->add_option("--t", tp_t, "trace element expression")->required();
    tp->add_option("--delta", tp_d, "determinant element expression")->required();
    tp->add_flag("--reduced", tp_reduced, "evaluate the mod-kR normal form in R/kR");
    tp->add_flag("--explain", tp_explain, "print the coefficient vector");

    // set
    auto* st = app.add_subcommand("set", "build a trace-condition set / test membership");
    std::string st_kind, st_ring, st_elem;
    st->add_option("--kind", st_kind,
                   "s10|s12|s12star|s14|s15|deg9|witt:P:S|wittstar24|pthpower:P")
        ->required();
    st->add_option("--ring", st_ring, "ring spec")->required();
    st->add_option("--element", st_elem, "element expression to test");

    // subgroup
    auto* sg = app.add_subcommand("subgroup", "compute the trace subgroup S^k");
    unsigned sg_k = 2, sg_n = 2;
    std::string sg_ring;
    bool sg_quot = false;
    sg->add_option("--k", sg_k, "power")->required();
    sg->add_option("--ring", sg_ring, "ring spec")->required();
    sg->add_option("--n", sg_n, "matrix dimension seeding the subgroup (2 or 3)");
    sg->add_flag("--quotient", sg_quot, "work in R/k!R");

    // decide
    auto* dc = app.add_subcommand("decide", "decide whether a matrix is a sum of k-th powers");
    unsigned dc_k = 2, dc_terms = 2;
    std::string dc_ring, dc_matrix;
    bool dc_witness = false, dc_quot = false;
    dc->add_option("--k", dc_k, "power")->required();
    dc->add_option("--ring", dc_ring, "ring spec")->required();
    dc->add_option("--matrix", dc_matrix, "matrix file (or inline text)")->required();
    dc->add_flag("--witness", dc_witness, "search for an explicit decomposition");
    dc->add_option("--max-terms", dc_terms, "witness search depth (1..3)");
    dc->add_flag("--quotient", dc_quot, "decide in R/k!R");

    // verify
    auto* vf = app.add_subcommand("verify", "check one theorem family over a ring");
    std::string vf_family, vf_ring;
    vf->add_option("--family", vf_family, "deg9..deg16")->required();
    vf->add_option("--ring", vf_ring, "ring spec")->required();

    // order
    auto* od = app.add_subcommand("order", "discriminant criterion for a monogenic order");
    std::string od_poly, od_family;
    unsigned od_p = 2;
    od->add_option("--poly", od_poly, "monic integer polynomial, e.g. x^2-x+1")->required();
    od->add_option("--p", od_p, "prime")->required();
    od->add_option("--family", od_family, "deg9|deg11|deg13|deg16 conclusion sentence");

    // certify
    auto* cf = app.add_subcommand("certify", "verify reduction-chain membership certificates");
    std::vector<unsigned> cf_ks;
    std::vector<std::string> cf_rings;
    std::string cf_entry;
    cf->add_option("--k", cf_ks, "powers to certify (default: all)");
    cf->add_option("--ring", cf_rings, "rings (default: the test universe)");
    cf->add_option("--entry", cf_entry, "single chain entry id");

    // identity
    auto* idc = app.add_subcommand("identity", "verify symbolic binomial congruences");
    unsigned id_k = 0;
    std::string id_id;
    idc->add_option("--k", id_k, "restrict to one power");
    idc->add_option("--id", id_id, "single identity id");

    // universe
    auto* uv = app.add_subcommand("universe", "run every check across the ring universe");
    std::string uv_config;
    uv->add_option("--config", uv_config, "config file: one ring spec per line, optional budget=N");

    std::vector<std::string> argv_store = args;
    std::vector<const char*> argv;
    argv.push_back("waring");
    for (auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (tp->parsed())
            return cmd_trace_power(common, tp_k, tp_ring, tp_t, tp_d, tp_reduced, tp_explain, out);
        if (st->parsed()) return cmd_set(common, st_kind, st_ring, st_elem, out);
        if (sg->parsed()) return cmd_subgroup(common, sg_k, sg_ring, sg_n, sg_quot, out);
        if (dc->parsed())
            return cmd_decide(common, dc_k, dc_ring, dc_matrix, dc_witness, dc_terms, dc_quot, out);
        if (vf->parsed()) return cmd_verify(common, vf_family, vf_ring, out);
        if (od->parsed()) return cmd_order(common, od_poly, od_p, od_family, out);
        if (cf->parsed()) return cmd_certify(common, cf_ks, cf_rings, cf_entry, out);
        if (idc->parsed()) return cmd_identity(common, id_k, id_id, out);
        if (uv->parsed()) return cmd_universe(common, uv_config, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace waring
