#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "waring/budget.hpp"
#include "waring/report.hpp"
#include "waring/ring.hpp"

namespace waring {

struct UniverseEntry {
    std::string spec;
    u64 budget = Budget::kDefaultLimit;
};

struct TestUniverse {
    std::vector<UniverseEntry> rings;
    static TestUniverse default_universe();
    // One ring spec per line, optional trailing "budget=N"; '#' comments.
    static TestUniverse from_config(std::istream& in);
    std::vector<RingPtr> parsed() const;
};

struct UniverseSummary {
    struct Line {
        std::string check;   // e.g. "verify deg9", "chain k=9", "identity k10.pow10"
        std::string ring;    // empty for ring-independent checks
        bool pass = false;
        std::string detail;
    };
    std::vector<Line> lines;
    u64 budget_used = 0;
    bool all_pass() const {
        for (auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
};

// Runs every theorem family, every closure identity, and the full chain
// certification across the universe.
UniverseSummary run_universe(const TestUniverse& universe, u64 seed, u64 budget_limit);

}  // namespace waring
