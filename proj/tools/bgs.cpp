#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "bgs/runner.hpp"

namespace {

const std::map<std::string, bgs::Regime> kRegimes{
    {"strict", bgs::Regime::Strict}, {"unityped", bgs::Regime::Unityped}, {"church", bgs::Regime::Church}};
const std::map<std::string, bgs::TraceVerbosity> kTraces{
    {"none", bgs::TraceVerbosity::None}, {"steps", bgs::TraceVerbosity::Steps}, {"full", bgs::TraceVerbosity::Full}};
const std::map<std::string, bgs::OutputFormat> kFormats{
    {"text", bgs::OutputFormat::Text}, {"structured", bgs::OutputFormat::Structured}};

struct Options {
    bgs::Regime regime = bgs::Regime::Strict;
    bool regimeGiven = false;
    unsigned fuel = 0;
    bgs::TraceVerbosity trace = bgs::TraceVerbosity::Steps;
    bgs::OutputFormat format = bgs::OutputFormat::Text;
    std::string file;
};

void addCommon(CLI::App* cmd, Options& o)
{
    cmd->add_option("--regime", o.regime, "Typing regime: strict, unityped or church")
        ->transform(CLI::CheckedTransformer(kRegimes, CLI::ignore_case))
        ->each([&o](const std::string&) { o.regimeGiven = true; });
    cmd->add_option("--fuel", o.fuel, "Rewrite step budget (default: $BGS_FUEL, else 1000)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--trace", o.trace, "Rewrite trace detail: none, steps or full")
        ->transform(CLI::CheckedTransformer(kTraces, CLI::ignore_case));
    cmd->add_option("--format", o.format, "Output format: text or structured (JSON Lines)")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

// Flag, then BGS_FUEL, then 1000.
unsigned resolveFuel(unsigned flag)
{
    if (flag) return flag;
    if (const char* env = std::getenv("BGS_FUEL")) {
        try {
            std::size_t used = 0;
            long v = std::stol(env, &used);
            if (used == std::string(env).size() && v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid BGS_FUEL='" << env << "'\n";
    }
    return 1000;
}

bgs::RunConfig config(const Options& o, bgs::DirectiveFilter filter)
{
    bgs::RunConfig c;
    if (o.regimeGiven) c.regime = o.regime;
    c.fuel = resolveFuel(o.fuel);
    c.trace = o.trace;
    c.format = o.format;
    c.filter = filter;
    return c;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Checker and rewriting kernel for the concept-script"};
    app.require_subcommand(1);

    Options opts;
    struct FileCommand {
        const char* name;
        const char* help;
        bgs::DirectiveFilter filter;
    };
    const FileCommand fileCommands[] = {
        {"check", "Run the check directives of a script", bgs::DirectiveFilter::Check},
        {"eval", "Run the eval directives of a script", bgs::DirectiveFilter::Eval},
        {"translate", "Run the translate directives of a script", bgs::DirectiveFilter::Translate},
        {"run", "Run every directive of a script", bgs::DirectiveFilter::All},
    };
    int status = bgs::kExitOk;
    for (const FileCommand& fc : fileCommands) {
        CLI::App* cmd = app.add_subcommand(fc.name, fc.help);
        cmd->add_option("FILE", opts.file, "Script file")->required();
        addCommon(cmd, opts);
        cmd->callback([&opts, &status, filter = fc.filter] {
            status = bgs::runScript(opts.file, config(opts, filter), std::cout, std::cerr);
        });
    }

    CLI::App* paradox = app.add_subcommand("paradox", "Derive the Russell contradiction in a regime");
    addCommon(paradox, opts);
    paradox->callback([&opts, &status] {
        bgs::RunConfig c = config(opts, bgs::DirectiveFilter::All);
        bgs::ParadoxReport report = bgs::deriveParadox(c.regime.value_or(bgs::Regime::Strict));
        bgs::emit(std::cout, bgs::paradoxRecord(report, c.trace), c.format);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : bgs::kExitIo;
    }
    return status;
}
