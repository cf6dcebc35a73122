#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bgs/checker.hpp"
#include "bgs/equality.hpp"
#include "bgs/judgment.hpp"
#include "bgs/paradox.hpp"
#include "bgs/parser.hpp"

namespace bgs {

enum class TraceVerbosity { None, Steps, Full };
enum class OutputFormat { Text, Structured };

// Which directive kinds a run executes. Declarations and pragmas always run.
enum class DirectiveFilter { All, Check, Eval, Translate };

struct RunConfig {
    std::optional<Regime> regime;  // overrides the script pragma when set
    unsigned fuel = 1000;
    TraceVerbosity trace = TraceVerbosity::Steps;
    OutputFormat format = OutputFormat::Text;
    DirectiveFilter filter = DirectiveFilter::All;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitParse = 3;

// Structured records. Each is a self-describing JSON object; `emit` writes
// one line per record in either output format.
nlohmann::json traceRecord(const RewriteTrace& trace, TraceVerbosity verbosity);
nlohmann::json diagnosticRecord(const Diagnostic& d);
nlohmann::json reportRecord(const TypeReport& report);
nlohmann::json paradoxRecord(const ParadoxReport& report, TraceVerbosity verbosity);

void emit(std::ostream& out, const nlohmann::json& record, OutputFormat format);
std::string renderText(const nlohmann::json& record);

// Executes a script's directives in order, writing one record per directive
// to `out`. Warnings go to `err`. Returns the exit status.
int runSource(std::string_view source, const RunConfig& config, std::ostream& out, std::ostream& err);
int runScript(const std::filesystem::path& path, const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace bgs
