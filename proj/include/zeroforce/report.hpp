#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace zf {

/// One line of the verification harness output. Field order is fixed so
/// identical runs diff byte-for-byte.
struct VerificationReport {
    std::string graph_id;
    std::optional<std::string> parse_error_msg;
    int n = 0;
    int edge_count = 0;
    int delta = 0;
    std::optional<int> girth_value;  // nullopt encodes "acyclic"
    std::optional<int> zf;
    std::optional<int> delta_g_minus_2;
    std::optional<int> bound;
    std::vector<std::pair<std::string, std::string>> verdicts;
    bool counterexample = false;
    std::string graph6;  // dumped only for counterexamples
    std::vector<std::pair<std::string, double>> timing_ms;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["graph_id"] = graph_id;
        if (parse_error_msg) {
            j["error"] = *parse_error_msg;
            j["verdicts"] = {{"parse", "fail"}};
            return j;
        }
        j["n"] = n;
        j["edge_count"] = edge_count;
        j["delta"] = delta;
        if (girth_value) j["girth"] = *girth_value;
        else j["girth"] = "acyclic";
        if (zf) j["zf"] = *zf;
        if (delta_g_minus_2) j["delta_g_minus_2"] = *delta_g_minus_2;
        if (bound) j["bound"] = *bound;
        nlohmann::ordered_json v;
        for (const auto& [name, verdict] : verdicts) v[name] = verdict;
        j["verdicts"] = v;
        if (counterexample) {
            j["counterexample"] = true;
            j["graph6"] = graph6;
        }
        nlohmann::ordered_json t;
        for (const auto& [name, ms] : timing_ms) t[name] = ms;
        j["timing_ms"] = t;
        return j;
    }
};

}  // namespace zf
