#pragma once

#include <functional>
#include <iosfwd>
#include <sstream>
#include <string>
#include <vector>

namespace stringology::selftest {

enum class Level { fast, full };

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    std::string id;
    std::string title;
    double budget_seconds;  // 0 means no per-criterion limit
    std::function<Outcome(Level)> run;
};

struct Report {
    std::string id, title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// Collects failures; keeps the first few messages.
class Checker {
public:
    template <class... Args>
    void expect(bool cond, const Args&... what) {
        ++checks_;
        if (cond) return;
        if (++failures_ <= 3) {
            std::ostringstream os;
            (os << ... << what);
            if (!msg_.empty()) msg_ += "; ";
            msg_ += os.str();
        }
    }
    // Builds the message only on failure.
    template <class F>
    void expect_lazy(bool cond, F&& message) {
        ++checks_;
        if (cond) return;
        if (++failures_ <= 3) {
            if (!msg_.empty()) msg_ += "; ";
            msg_ += message();
        }
    }
    std::size_t checks() const { return checks_; }
    std::size_t failures() const { return failures_; }
    Outcome outcome(const std::string& summary = {}) const {
        if (failures_ == 0) return {true, summary.empty() ? std::to_string(checks_) + " checks" : summary};
        return {false, std::to_string(failures_) + "/" + std::to_string(checks_) + " failed: " + msg_};
    }

private:
    std::size_t checks_ = 0, failures_ = 0;
    std::string msg_;
};

std::vector<Criterion> golden_criteria();
std::vector<Criterion> oracle_criteria();
std::vector<Criterion> bound_criteria();
std::vector<Criterion> generator_criteria();
std::vector<Criterion> property_criteria();

std::vector<Criterion> all_criteria();

// Runs every criterion; prints one line per criterion to out when given.
std::vector<Report> run(Level level, std::ostream* out);

std::string format_line(const Report& r);

}  // namespace stringology::selftest
