// Argument handling, rendering, batch mode and exit codes.

#include <CLI11.hpp>

#include <istream>
#include <ostream>
#include <sstream>

#include "../selftest/suite.hpp"
#include "cli.hpp"
#include "stringology/word.hpp"

namespace stringology::cli {

namespace {

constexpr int kOk = 0, kNo = 1, kUsage = 2;

struct Request {
    const Command* command = nullptr;
    Context context;
    std::string selftest_level;
    bool selftest = false, help = false;
    std::string help_text;
};

std::string scalar(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_null()) return "NONE";
    return v.dump();
}

void render(const Result& r, bool plain, std::ostream& out) {
    if (!plain) {
        out << json{{"ok", true}, {"value", r.value}, {"meta", r.meta}}.dump() << '\n';
        return;
    }
    if (!r.lines.empty()) {
        for (const std::string& l : r.lines) out << l << '\n';
    } else if (r.value.is_array()) {
        for (const json& e : r.value) out << scalar(e) << '\n';
    } else {
        out << scalar(r.value) << '\n';
    }
}

void render_error(const std::string& message, bool plain, std::ostream& out, std::ostream& err) {
    if (plain) err << "error: " << message << '\n';
    else out << json{{"ok", false}, {"value", nullptr}, {"meta", {{"error", message}}}}.dump() << '\n';
}

// Builds the parser for one request. Storage lives in req.
void parse(const std::vector<std::string>& argv, Request& req) {
    CLI::App app{"Combinatorics-on-words toolkit", "stringology"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    bool plain = false;
    std::uint64_t seed = 0, limit = 0;
    auto* seed_opt = app.add_option("--seed", seed, "seed for randomized drivers");
    auto* limit_opt = app.add_option("--limit", limit, "cap on output size");
    app.add_flag("--plain", plain, "bare values instead of JSON lines");

    auto* selftest = app.add_subcommand("selftest", "run the oracle and property suites");
    std::string level = "fast";
    selftest->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));

    std::map<std::string, CLI::App*> areas;
    std::vector<std::pair<CLI::App*, const Command*>> leaves;
    std::vector<std::string> positional(32);
    std::map<std::string, std::string> option_values;
    std::vector<std::pair<std::string, CLI::Option*>> option_handles;
    for (const Command& c : commands()) {
        CLI::App*& area = areas[c.area];
        if (!area) {
            area = app.add_subcommand(c.area, c.area + " operations");
            area->require_subcommand(1, 1);
            area->fallthrough();
        }
        CLI::App* leaf = area->add_subcommand(c.verb, c.help);
        leaf->fallthrough();
        for (std::size_t i = 0; i < c.params.size(); ++i) leaf->add_option(c.params[i], positional[i])->required();
        for (const OptionSpec& o : c.options) {
            std::string key = c.area + " " + c.verb + " " + o.name;
            option_handles.emplace_back(o.name, leaf->add_option("--" + o.name, option_values[key], o.help));
        }
        leaves.emplace_back(leaf, &c);
    }

    std::vector<std::string> reversed_args(argv.rbegin(), argv.rend());
    try {
        app.parse(reversed_args);
    } catch (const CLI::CallForHelp&) {
        req.help = true;
        req.help_text = app.help();
        for (auto* sub : app.get_subcommands()) req.help_text = sub->help();
        return;
    } catch (const CLI::CallForAllHelp&) {
        req.help = true;
        req.help_text = app.help("", CLI::AppFormatMode::All);
        return;
    } catch (const CLI::ParseError& e) {
        for (std::size_t i = 0; i < argv.size(); ++i) {
            if (argv[i] == "--seed" || argv[i] == "--limit") ++i;
            else if (argv[i].rfind("--", 0) == 0) continue;
            else if (argv[i] != "selftest" && !areas.count(argv[i])) throw input_error("unknown subcommand: " + argv[i]);
            else break;
        }
        throw input_error(e.what());
    }

    req.context.plain = plain;
    if (*seed_opt) req.context.seed = seed;
    if (*limit_opt) req.context.limit = limit;
    if (selftest->parsed()) {
        req.selftest = true;
        req.selftest_level = level;
        return;
    }
    for (auto& [leaf, c] : leaves) {
        if (!leaf->parsed()) continue;
        req.command = c;
        req.context.args.assign(positional.begin(), positional.begin() + static_cast<std::ptrdiff_t>(c->params.size()));
        for (const OptionSpec& o : c->options) {
            CLI::Option* handle = leaf->get_option("--" + o.name);
            if (*handle) req.context.options[o.name] = option_values[c->area + " " + c->verb + " " + o.name];
        }
    }
    require(req.command != nullptr, "unknown subcommand");
}

bool wants_plain(const std::vector<std::string>& argv) {
    for (const std::string& a : argv)
        if (a == "--plain") return true;
    return false;
}

int run_one(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err, bool nested) {
    const bool plain = wants_plain(argv);
    Request req;
    try {
        parse(argv, req);
        if (req.help) {
            out << req.help_text;
            return kOk;
        }
        if (req.selftest) {
            if (nested) throw input_error("selftest is not available in batch mode");
            auto reports = selftest::run(req.selftest_level == "full" ? selftest::Level::full : selftest::Level::fast, &out);
            for (const auto& r : reports)
                if (!r.pass) return kNo;
            return kOk;
        }
        Result r = req.command->run(req.context);
        render(r, req.context.plain, out);
        return r.yes ? kOk : kNo;
    } catch (const std::exception& e) {
        render_error(e.what(), plain, out, err);
        return kUsage;
    }
}

std::vector<std::string> split(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> words;
    for (std::string w; is >> w;) words.push_back(w);
    return words;
}

int run_batch(std::istream& in, std::ostream& out, std::ostream& err) {
    int status = kOk;
    for (std::string line; std::getline(in, line);) {
        std::vector<std::string> argv = split(line);
        if (argv.empty()) continue;
        int code = argv[0] == "batch" ? (render_error("batch cannot be nested", wants_plain(argv), out, err), kUsage)
                                      : run_one(argv, out, err, true);
        status = std::max(status, code);
        out.flush();
    }
    return status;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out, std::ostream& err) {
    if (argv.empty() || (argv.size() == 1 && argv[0] == "batch")) return run_batch(in, out, err);
    return run_one(argv, out, err, false);
}

}  // namespace stringology::cli
