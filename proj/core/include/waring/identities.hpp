#pragma once

#include <optional>
#include <string>
#include <vector>

#include "waring/budget.hpp"
#include "waring/multipoly.hpp"
#include "waring/ring.hpp"

namespace waring {

// Symbolic congruence lhs ≡ rhs (mod k), expanded exactly over the integers.
struct ClosureIdentity {
    std::string id;
    unsigned k = 0;
    std::vector<std::string> vars;
    MultiPoly lhs, rhs;
    std::string note;
};
const std::vector<ClosureIdentity>& closure_identities();
const ClosureIdentity& closure_identity(const std::string& id);
bool verify_closure_identity(const ClosureIdentity& ci);

// One reduction-chain record: either a polynomial entry whose values must lie
// in the trace subgroup S^k, or a coefficient family c1*x^{e1*i} (+ c2*x^{e2*i})
// usable for bookkeeping reductions of later entries.
struct CoeffFamilyPart {
    long long coeff = 0;
    unsigned expmult = 1;
};
struct ChainRecord {
    unsigned k = 0;
    std::string id;
    bool is_family = false;
    unsigned nvars = 1;
    MultiPoly printed;                      // entries only
    std::string derivation;                 // empty when none
    std::vector<CoeffFamilyPart> pattern;   // families only
    std::string base;                       // family provenance
    std::string note;
};
const std::vector<ChainRecord>& chain_table();
std::vector<const ChainRecord*> chain_records_for(unsigned k);

enum class SymbolicStatus { Exact, ResidualSemantic, NoDerivation, Failed };
std::string symbolic_status_name(SymbolicStatus s);

struct ChainRingCheck {
    std::string ring;
    bool printed_ok = true;
    bool residual_ok = true;
    std::string counterexample;  // rendered failing substitution, if any
};
struct ChainEntryResult {
    const ChainRecord* rec = nullptr;
    SymbolicStatus symbolic = SymbolicStatus::NoDerivation;
    MultiPoly residual;  // after bookkeeping reduction; empty when exact
    std::string symbolic_detail;
    std::vector<ChainRingCheck> rings;
    bool semantic_pass() const;
};

// Verifies chain entries for one power k over the given rings: every printed
// polynomial (and any derivation residual) must evaluate into the n=2 trace
// subgroup S^k at every substitution. only_id restricts to a single record.
std::vector<ChainEntryResult> verify_chain(unsigned k, const std::vector<RingPtr>& rings,
                                           Budget& budget, const std::string& only_id = "");

// Exploratory reduction probe for the two remark polynomials (k = 12 and 16):
// evaluates F(g1(x), g2(x)) over each test ring and reports whether the value
// set lies in the additive group generated by the named tail families plus
// the established coefficient families. Informational only.
struct RemarkReport {
    unsigned k = 0;
    std::string g1, g2;
    struct RingLine {
        std::string ring;
        bool contained = false;
        std::string detail;
    };
    std::vector<RingLine> rings;
};
RemarkReport explore_remark(unsigned k, const MultiPoly& g1, const MultiPoly& g2,
                            const std::vector<RingPtr>& rings, Budget& budget);

// Chain powers that have records: 9..16.
const std::vector<unsigned>& chain_powers();

}  // namespace waring
