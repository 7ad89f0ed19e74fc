#include "suite.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <ostream>

namespace stringology::selftest {

std::vector<Criterion> all_criteria() {
    std::vector<Criterion> out;
    for (auto group : {golden_criteria, oracle_criteria, bound_criteria, generator_criteria, property_criteria})
        for (auto& c : group()) out.push_back(std::move(c));
    return out;
}

std::string format_line(const Report& r) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
    return std::string(r.pass ? "PASS " : "FAIL ") + r.id + " " + r.title + " [" + secs + "] " + r.detail;
}

std::vector<Report> run(Level level, std::ostream* out) {
    std::vector<Report> reports;
    for (const Criterion& c : all_criteria()) {
        Report r;
        r.id = c.id;
        r.title = c.title;
        auto t0 = std::chrono::steady_clock::now();
        try {
            Outcome o = c.run(level);
            r.pass = o.pass;
            r.detail = o.detail;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (level == Level::full && c.budget_seconds > 0 && r.seconds > c.budget_seconds) {
            r.pass = false;
            r.detail += " (over the " + std::to_string(static_cast<int>(c.budget_seconds)) + "s budget)";
        }
        if (out) *out << format_line(r) << std::endl;
        reports.push_back(std::move(r));
    }
    return reports;
}

}  // namespace stringology::selftest
