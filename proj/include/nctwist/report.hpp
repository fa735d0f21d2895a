#ifndef NCTWIST_REPORT_HPP
#define NCTWIST_REPORT_HPP

#include "nctwist/ncalg.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

namespace nct {

struct ReportCheck {
    std::string id;      // stable sort key
    std::string claim;   // what is being verified
    bool pass = false;
    std::string detail;  // reduction digest on failure
    long millis = 0;
};

/// Outcome of one verification suite. Checks are emitted sorted by id so a
/// report depends only on its inputs and seed.
struct Report {
    std::string suite;
    std::vector<ReportCheck> checks;

    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(), [](auto& c) { return c.pass; });
    }

    void add(std::string id, std::string claim, bool pass, std::string detail = "",
             long millis = 0) {
        checks.push_back({std::move(id), std::move(claim), pass, std::move(detail), millis});
    }

    void absorb(const std::string& prefix, const CheckReport& rep) {
        int k = 0;
        for (auto& e : rep.entries)
            checks.push_back({prefix + "." + std::to_string(k++), e.label, e.pass, e.detail, 0});
    }

    void sort() {
        std::stable_sort(checks.begin(), checks.end(),
                         [](const ReportCheck& a, const ReportCheck& b) { return a.id < b.id; });
    }
};

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20)
                    out += ' ';
                else
                    out += c;
        }
    }
    return out;
}

/// Timings are off by default so reports are byte-identical across runs.
inline void emit_human(const Report& r, std::ostream& os, bool timings = false) {
    Report sorted = r;
    sorted.sort();
    os << "suite " << r.suite << "\n";
    for (auto& c : sorted.checks) {
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.id << "  " << c.claim;
        if (timings) os << "  (" << c.millis << " ms)";
        os << "\n";
        if (!c.pass && !c.detail.empty()) os << "         residual: " << c.detail << "\n";
    }
    size_t failures = 0;
    for (auto& c : sorted.checks)
        if (!c.pass) ++failures;
    os << (failures ? "FAILED " + std::to_string(failures) + "/" : "passed ")
       << (failures ? std::to_string(sorted.checks.size()) + " checks"
                    : std::to_string(sorted.checks.size()) + " checks")
       << "\n";
}

inline void emit_jsonl(const Report& r, std::ostream& os, bool timings = false) {
    Report sorted = r;
    sorted.sort();
    for (auto& c : sorted.checks) {
        os << "{\"suite\":\"" << json_escape(r.suite) << "\",\"check\":\"" << json_escape(c.id)
           << "\",\"claim\":\"" << json_escape(c.claim) << "\",\"verdict\":\""
           << (c.pass ? "pass" : "fail") << "\"";
        if (!c.pass && !c.detail.empty()) os << ",\"residual\":\"" << json_escape(c.detail) << "\"";
        if (timings) os << ",\"millis\":" << c.millis;
        os << "}\n";
    }
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace nct

#endif
