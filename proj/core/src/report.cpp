#include "waring/report.hpp"

#include <sstream>

namespace waring {

nlohmann::json TheoremReport::to_json() const {
    nlohmann::json j;
    j["family"] = family;
    j["ring"] = ring;
    j["seed"] = seed;
    j["budget_used"] = budget_used;
    j["agreement"] = agreement;
    j["statements"] = nlohmann::json::array();
    for (auto& s : statements) {
        nlohmann::json js;
        js["id"] = s.id;
        js["verdict"] = s.verdict;
        js["witness"] = s.witness;
        js["note"] = s.note;
        js["informational"] = s.informational;
        j["statements"].push_back(js);
    }
    j["notes"] = notes;
    return j;
}

TheoremReport TheoremReport::from_json(const nlohmann::json& j) {
    TheoremReport r;
    r.family = j.at("family").get<std::string>();
    r.ring = j.at("ring").get<std::string>();
    r.seed = j.at("seed").get<u64>();
    r.budget_used = j.at("budget_used").get<u64>();
    r.agreement = j.at("agreement").get<bool>();
    for (auto& js : j.at("statements")) {
        StatementReport s;
        s.id = js.at("id").get<std::string>();
        s.verdict = js.at("verdict").get<bool>();
        s.witness = js.at("witness");
        s.note = js.at("note").get<std::string>();
        s.informational = js.at("informational").get<bool>();
        r.statements.push_back(std::move(s));
    }
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

std::string TheoremReport::to_text() const {
    std::ostringstream os;
    os << "family " << family << " over " << ring << "\n";
    for (auto& s : statements) {
        os << "  [" << (s.verdict ? "true " : "false") << "] " << s.id;
        if (s.informational) os << " (informational)";
        if (!s.note.empty()) os << " -- " << s.note;
        if (!s.witness.is_null() && !s.witness.empty()) os << "  witness: " << s.witness.dump();
        os << "\n";
    }
    for (auto& n : notes) os << "  note: " << n << "\n";
    os << "  agreement: " << (agreement ? "true" : "false") << "\n";
    return os.str();
}

}  // namespace waring
