// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "frontend/api.hpp"
#include "frontend/compute.hpp"
#include "frontend/report.hpp"

namespace compdesign::cli {

namespace {

using frontend::json;
using frontend::Operation;

enum class Kind { Real, Count, Text, RealList };

struct FlagSpec {
    const char* flag;
    const char* key;
    Kind kind;
    const char* help;
};

constexpr FlagSpec kTTEDesignFlags[] = {
    {"--p0-e1", "p0_e1", Kind::Real, "Reference-arm probability of observing endpoint 1 by the follow-up time"},
    {"--p0-e2", "p0_e2", Kind::Real, "Reference-arm probability of observing endpoint 2 by the follow-up time"},
    {"--hr-e1", "hr_e1", Kind::Real, "Cause-specific hazard ratio of endpoint 1"},
    {"--hr-e2", "hr_e2", Kind::Real, "Cause-specific hazard ratio of endpoint 2"},
    {"--beta-e1", "beta_e1", Kind::Real, "Weibull shape of endpoint 1 (default 1)"},
    {"--beta-e2", "beta_e2", Kind::Real, "Weibull shape of endpoint 2 (default 1)"},
    {"--case", "case", Kind::Count, "1 no fatal component, 2 endpoint 2 fatal, 3 endpoint 1 fatal, 4 both (default 1)"},
    {"--copula", "copula", Kind::Text, "frank, gumbel, clayton or independence (default frank)"},
    {"--rho", "rho", Kind::Real, "Association between component times (default 0.3)"},
    {"--rho-type", "rho_type", Kind::Text, "spearman or kendall (default spearman)"},
    {"--followup-time", "followup_time", Kind::Real, "Length of follow-up (default 1)"},
    {"--subdivisions", "subdivisions", Kind::Count, "Quadrature subintervals (default 1000)"},
};

constexpr FlagSpec kTTETestFlags[] = {
    {"--alpha", "alpha", Kind::Real, "Two-sided type I error (default 0.05)"},
    {"--power", "power", Kind::Real, "Power (default 0.80)"},
    {"--ss-formula", "ss_formula", Kind::Text, "schoenfeld or freedman (default schoenfeld)"},
};

constexpr FlagSpec kCurvesFlags[] = {
    {"--grid", "grid", Kind::Count, "Number of time points (default 200)"},
    {"--rho-grid", "rho_grid", Kind::RealList, "Comma-separated association values (default 0, 0.05, ..., 0.9)"},
};

constexpr FlagSpec kSimulateFlags[] = {
    {"--sample-size", "sample_size", Kind::Count, "Subjects per arm"},
    {"--seed", "seed", Kind::Count, "Random seed (default 1)"},
};

constexpr FlagSpec kCBEDesignFlags[] = {
    {"--p0-e1", "p0_e1", Kind::Real, "Reference-arm probability of endpoint 1"},
    {"--p0-e2", "p0_e2", Kind::Real, "Reference-arm probability of endpoint 2"},
    {"--eff-e1", "eff_e1", Kind::Real, "Effect on endpoint 1, in the units of --effm-e1"},
    {"--eff-e2", "eff_e2", Kind::Real, "Effect on endpoint 2, in the units of --effm-e2"},
    {"--effm-e1", "effm_e1", Kind::Text, "diff, rr or or (default diff)"},
    {"--effm-e2", "effm_e2", Kind::Text, "diff, rr or or (default diff)"},
    {"--effm-ce", "effm_ce", Kind::Text, "Effect measure of the composite: diff, rr or or (default diff)"},
    {"--rho", "rho", Kind::Real, "Pearson correlation of the component indicators (default 0)"},
    {"--alpha", "alpha", Kind::Real, "Two-sided type I error (default 0.05)"},
};

constexpr FlagSpec kPairFlags[] = {
    {"--p1", "p1", Kind::Real, "Probability of endpoint 1"},
    {"--p2", "p2", Kind::Real, "Probability of endpoint 2"},
};

constexpr FlagSpec kPairRhoFlag[] = {
    {"--rho", "rho", Kind::Real, "Pearson correlation of the indicators (default 0)"},
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Values are captured as text and converted after parsing, so flags can be
// told apart from scenario entries and overlay them.
struct Command {
    Operation op;
    CLI::App* app = nullptr;
    std::map<std::string, std::pair<const FlagSpec*, CLI::Option*>> flags;
    std::map<std::string, std::string> values;
    std::string scenario;
    std::string format = "table";
    std::string out;
    std::string panel = "survival";
    CLI::Option* beta = nullptr;
    CLI::Option* power = nullptr;
    std::string beta_value;
    std::string power_value;
    bool pooled = false;
    bool unpooled = false;
};

void add_flags(Command& cmd, const FlagSpec* begin, const FlagSpec* end) {
    for (const FlagSpec* spec = begin; spec != end; ++spec) {
        std::string& slot = cmd.values[spec->key];
        CLI::Option* opt = cmd.app->add_option(spec->flag, slot, spec->help);
        if (spec->kind == Kind::Real) opt->check(CLI::Number);
        if (spec->kind == Kind::Count) opt->check(CLI::NonNegativeNumber & CLI::TypeValidator<std::uint64_t>());
        cmd.flags[spec->key] = {spec, opt};
    }
}

template <std::size_t N>
void add_flags(Command& cmd, const FlagSpec (&specs)[N]) {
    add_flags(cmd, specs, specs + N);
}

json convert(const FlagSpec& spec, const std::string& text) {
    switch (spec.kind) {
    case Kind::Real: return std::stod(text);
    case Kind::Count: return std::stoull(text);
    case Kind::Text: return text;
    case Kind::RealList: {
        json list = json::array();
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            try {
                std::size_t used = 0;
                list.push_back(std::stod(item, &used));
                if (item.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(item);
            } catch (const std::logic_error&) {
                throw UsageError(std::string(spec.flag) + ": '" + item + "' is not a number");
            }
        }
        return list;
    }
    }
    return nullptr;
}

json read_scenario(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw frontend::ApiError(CD_ERR_IO, "scenario", "cannot read scenario file '" + path + "'");
    std::ostringstream text;
    text << file.rdbuf();
    return frontend::parse_scenario(text.str());
}

json build_body(const Command& cmd) {
    json body = cmd.scenario.empty() ? json::object() : read_scenario(cmd.scenario);
    for (const auto& [key, entry] : cmd.flags) {
        if (entry.second->count() > 0) body[key] = convert(*entry.first, cmd.values.at(key));
    }
    if (cmd.beta && cmd.beta->count() > 0) {
        body.erase("power");
        body["beta"] = std::stod(cmd.beta_value);
    }
    if (cmd.power && cmd.power->count() > 0) {
        body.erase("beta");
        body["power"] = std::stod(cmd.power_value);
    }
    if (cmd.pooled) body["unpooled"] = false;
    if (cmd.unpooled) body["unpooled"] = true;
    return body;
}

Command& make_command(CLI::App& app, std::vector<std::unique_ptr<Command>>& commands, Operation op,
                      const char* description) {
    auto cmd = std::make_unique<Command>();
    cmd->op = op;
    cmd->app = app.add_subcommand(frontend::to_string(op), description);
    cmd->app->add_option("--scenario", cmd->scenario, "Key-value scenario file; flags override its entries");
    cmd->app->add_option("--format", cmd->format, "table, json or csv (default table)")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    cmd->app->add_option("--out", cmd->out, "Write the output to this file instead of stdout");
    commands.push_back(std::move(cmd));
    return *commands.back();
}

void add_binary_test_flags(Command& cmd) {
    cmd.beta = cmd.app->add_option("--beta", cmd.beta_value, "Type II error (default 0.2)")->check(CLI::Number);
    cmd.power = cmd.app->add_option("--power", cmd.power_value, "Power, alternative to --beta")->check(CLI::Number);
    cmd.beta->excludes(cmd.power);
    CLI::Option* pooled = cmd.app->add_flag("--pooled", cmd.pooled, "Pooled variance under the null");
    CLI::Option* unpooled = cmd.app->add_flag("--unpooled", cmd.unpooled, "Unpooled variance (default)");
    pooled->excludes(unpooled);
}

void write_output(const Command& cmd, const std::string& text, std::ostream& out) {
    if (cmd.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cmd.out, std::ios::binary);
    file << text;
    file.flush();
    if (!file) throw frontend::ApiError(CD_ERR_IO, "out", "cannot write '" + cmd.out + "'");
}

std::string one_line(std::string s) {
    for (char& c : s) {
        if (c == '\n' || c == '\r') c = ' ';
    }
    return s;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Design calculations for trials with a two-component composite endpoint"};
    app.name(argc > 0 ? argv[0] : "compdesign");
    app.require_subcommand(1);
    app.set_version_flag("--version", cd_version());

    std::vector<std::unique_ptr<Command>> commands;
    auto tte = [&](Operation op, const char* description) -> Command& {
        Command& cmd = make_command(app, commands, op, description);
        add_flags(cmd, kTTEDesignFlags);
        return cmd;
    };
    add_flags(tte(Operation::EffectsizeTTE, "Effect measures of the composite endpoint"), kTTETestFlags);
    add_flags(tte(Operation::SamplesizeTTE, "Total sample size for each candidate primary endpoint"), kTTETestFlags);
    add_flags(tte(Operation::AreTTE, "Efficiency of the composite versus endpoint 1"), kTTETestFlags);
    {
        Command& cmd = tte(Operation::CurvesTTE, "Survival curves, HR*(t) and sensitivity to the association");
        add_flags(cmd, kTTETestFlags);
        add_flags(cmd, kCurvesFlags);
        cmd.app->add_option("--panel", cmd.panel, "Table written by --format csv: survival or sensitivity")
            ->check(CLI::IsMember({"survival", "sensitivity"}));
    }
    add_flags(tte(Operation::SimulateTTE, "Simulated trial data"), kSimulateFlags);

    {
        Command& cmd = make_command(app, commands, Operation::ProbCBE, "Probability of the binary composite");
        add_flags(cmd, kPairFlags);
        add_flags(cmd, kPairRhoFlag);
    }
    add_flags(make_command(app, commands, Operation::CorrBounds, "Attainable correlation range of two indicators"),
              kPairFlags);
    auto cbe = [&](Operation op, const char* description) -> Command& {
        Command& cmd = make_command(app, commands, op, description);
        add_flags(cmd, kCBEDesignFlags);
        add_binary_test_flags(cmd);
        return cmd;
    };
    cbe(Operation::EffectsizeCBE, "Effect on the binary composite");
    cbe(Operation::SamplesizeCBE, "Sample size for the binary composite");
    cbe(Operation::AreCBE, "Efficiency of the binary composite versus endpoint 1");
    add_flags(cbe(Operation::SimulateCBE, "Simulated binary trial data"), kSimulateFlags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << cd_version() << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << one_line(e.what()) << '\n';
        return kExitUsage;
    }

    Command* selected = nullptr;
    for (auto& cmd : commands) {
        if (cmd->app->parsed()) selected = cmd.get();
    }
    if (selected == nullptr) {
        err << "usage error: a subcommand is required\n";
        return kExitUsage;
    }

    try {
        const json body = build_body(*selected);
        const json doc = frontend::compute(selected->op, body);
        const auto format = *frontend::parse_output_format(selected->format);
        const auto panel = *frontend::parse_curves_panel(selected->panel);
        write_output(*selected, frontend::render(selected->op, doc, format, panel), out);
        return kExitOk;
    } catch (const UsageError& e) {
        err << "usage error: " << one_line(e.what()) << '\n';
        return kExitUsage;
    } catch (const frontend::ApiError& e) {
        err << "error: " << (e.field().empty() ? "" : e.field() + ": ") << one_line(e.what()) << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return kExitInvalid;
    }
}

}  // namespace compdesign::cli
