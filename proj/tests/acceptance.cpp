// Runs every acceptance criterion at the full level and prints one PASS/FAIL line each.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sys/wait.h>

#include "suite.hpp"

using namespace stringology::selftest;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void print(const std::string& id, const std::string& title, bool pass, double secs, const std::string& detail) {
    std::cout << format_line(Report{id, title, pass, detail, secs}) << std::endl;
}

}  // namespace

int main() {
    bool all = true;
    const auto start = std::chrono::steady_clock::now();
    auto reports = run(Level::full, &std::cout);
    const double full_seconds = seconds_since(start);

    double goldens = 0;
    for (const Report& r : reports) {
        all = all && r.pass;
        if (r.id.rfind("1.", 0) == 0) goldens += r.seconds;
    }
    const bool goldens_fast = goldens < 1.0;
    print("1.00", "golden examples run in under 1 s total", goldens_fast, goldens, "");
    all = all && goldens_fast;

    const auto t0 = std::chrono::steady_clock::now();
    const std::string cmd = std::string(STRINGOLOGY_BIN) + " selftest --level fast > /dev/null";
    const int raw = std::system(cmd.c_str());
    const double fast_seconds = seconds_since(t0);
    const bool fast_ok = raw != -1 && WIFEXITED(raw) && WEXITSTATUS(raw) == 0 && fast_seconds < 30;
    print("5.1", "stringology selftest --level fast exits 0 in under 30 s", fast_ok, fast_seconds,
          "exit " + std::to_string(WIFEXITED(raw) ? WEXITSTATUS(raw) : -1));
    all = all && fast_ok;

    const bool full_ok = full_seconds < 900;
    print("5.2", "full level completes in under 15 min", full_ok, full_seconds, "");
    all = all && full_ok;

    std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << std::endl;
    return all ? 0 : 1;
}
