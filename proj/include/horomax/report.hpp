#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "horomax/io.hpp"

namespace horomax {

// Outcome of one property check. `claim` states, in words, the property
// being verified; `statistic` is the measured sup-error / residual / count
// and `threshold` the acceptance bound. The pass flag is authoritative
// (some checks require the statistic to stay *above* a separation bound).
struct CheckResult {
    std::string name;
    std::string claim;
    double statistic = 0;
    double threshold = 0;
    bool pass = false;
    double wall_ms = 0;
};

struct Report {
    std::string model;
    std::string group;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckResult& c) { return c.pass; });
    }

    void sort() {
        std::sort(checks.begin(), checks.end(),
                  [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    }
};

// Wall time is reported only on request: default reports are byte-identical
// across runs with the same config and seed.
inline json report_to_json(const Report& r, bool timing = false) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json jc{{"name", c.name},
                {"claim", c.claim},
                {"statistic", double_to_string(c.statistic)},
                {"threshold", double_to_string(c.threshold)},
                {"pass", c.pass}};
        if (timing) jc["wall_ms"] = double_to_string(c.wall_ms);
        checks.push_back(std::move(jc));
    }
    return json{{"model", r.model},
                {"group", r.group},
                {"seed", r.seed},
                {"pass", r.all_pass()},
                {"checks", std::move(checks)}};
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string report_to_csv(const Report& r, bool timing = false) {
    std::ostringstream os;
    os << "name,claim,statistic,threshold,pass";
    if (timing) os << ",wall_ms";
    os << "\n";
    for (const auto& c : r.checks) {
        os << csv_escape(c.name) << ',' << csv_escape(c.claim) << ','
           << double_to_string(c.statistic) << ',' << double_to_string(c.threshold) << ','
           << (c.pass ? "true" : "false");
        if (timing) os << ',' << double_to_string(c.wall_ms);
        os << "\n";
    }
    return os.str();
}

}  // namespace horomax
