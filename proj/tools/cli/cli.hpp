#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace stringology::cli {

using json = nlohmann::json;

struct Context {
    std::vector<std::string> args;  // positionals, in declared order
    std::map<std::string, std::string> options;  // command options that were given
    bool plain = false;
    std::optional<std::uint64_t> seed, limit;

    const std::string* option(const std::string& name) const {
        auto it = options.find(name);
        return it == options.end() ? nullptr : &it->second;
    }
};

struct Result {
    json value;
    json meta = json::object();
    bool yes = true;  // false for a domain-level NO
    std::vector<std::string> lines;  // plain rendering; empty means derive from value
};

struct OptionSpec {
    std::string name, help;
};

struct Command {
    std::string area, verb;
    std::string op;  // library operation owned by this command
    std::string help;
    std::vector<std::string> params;
    std::vector<OptionSpec> options;
    std::function<Result(const Context&)> run;
};

const std::vector<Command>& commands();

// Full command line without the program name. Returns the exit status.
int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace stringology::cli
