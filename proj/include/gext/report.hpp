#pragma once

#include <json.hpp>
#include <ostream>
#include <sstream>

#include "gext/algebra.hpp"

namespace gext {

/*
 * Deterministic run report: human text on one side, a JSON mirror on the
 * other. Re-running with the same spec and seed reproduces both byte for
 * byte, so wall-clock timing never enters the report body.
 */
struct Report {
    std::ostringstream text;
    nlohmann::json json = nlohmann::json::object();
    bool failed = false;

    void echo(const std::string& task, uint64_t seed) {
        text << "task: " << task << "\n";
        text << "seed: " << seed << "\n";
        json["task"] = task;
        json["seed"] = seed;
        json["checks"] = nlohmann::json::array();
    }

    void verdict(const std::string& name, const ValidationReport& rep) {
        nlohmann::json j{{"name", name}, {"pass", rep.ok()}};
        if (rep.ok()) {
            text << "check " << name << ": pass\n";
        } else {
            failed = true;
            text << "check " << name << ": FAIL\n";
            j["witnesses"] = nlohmann::json::array();
            for (const auto& f : rep.failures) {
                text << "  " << f.axiom << (f.witness.empty() ? "" : " @ " + f.witness) << "\n";
                j["witnesses"].push_back({{"axiom", f.axiom}, {"witness", f.witness}});
            }
        }
        json["checks"].push_back(j);
    }

    void verdict(const std::string& name, bool ok, const std::string& detail = "") {
        ValidationReport rep;
        if (!ok) rep.fail(detail.empty() ? name : detail, "");
        verdict(name, rep);
    }

    void line(const std::string& s) { text << s << "\n"; }

    void table(const std::string& name, const std::vector<int>& dims) {
        text << name << ":";
        for (size_t i = 0; i < dims.size(); ++i) text << " " << dims[i];
        text << "\n";
        json[name] = dims;
    }

    void emit(std::ostream& out, bool as_json) const {
        if (as_json) out << json.dump(2) << "\n";
        else out << text.str();
    }
};

} // namespace gext
