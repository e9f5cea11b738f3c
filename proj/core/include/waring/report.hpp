#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "waring/ring.hpp"

namespace waring {

inline constexpr u64 kDefaultSeed = 20240915;

struct StatementReport {
    std::string id;
    bool verdict = false;
    nlohmann::json witness;  // structured payload; rendered strings included
    std::string note;
    bool informational = false;  // excluded from the agreement conjunction
};

struct TheoremReport {
    std::string family;
    std::string ring;
    u64 seed = kDefaultSeed;
    u64 budget_used = 0;
    bool agreement = false;
    std::vector<StatementReport> statements;
    std::vector<std::string> notes;

    nlohmann::json to_json() const;
    static TheoremReport from_json(const nlohmann::json& j);
    std::string to_text() const;
};

}  // namespace waring
