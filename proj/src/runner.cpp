#include "bgs/runner.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "bgs/translate.hpp"

namespace bgs {

using nlohmann::json;

namespace {

std::string pathString(const Path& p)
{
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p[i]);
    }
    return out + "]";
}

json spanRecord(const SourceSpan& s)
{
    return json{{"line", s.line}, {"column", s.column}, {"start", s.start}, {"end", s.end}};
}

} // namespace

json traceRecord(const RewriteTrace& trace, TraceVerbosity verbosity)
{
    json steps = json::array();
    if (verbosity != TraceVerbosity::None) {
        for (const RewriteStep& s : trace.steps) {
            json step{{"rule", ruleName(s.rule)},
                      {"path", s.position},
                      {"redex", printTerm(subtermAt(s.before, s.position))},
                      {"contractum", printTerm(subtermAt(s.after, s.position))}};
            if (verbosity == TraceVerbosity::Full) {
                step["before"] = printTerm(s.before);
                step["after"] = printTerm(s.after);
            }
            steps.push_back(std::move(step));
        }
    }
    return json{{"initial", printTerm(trace.initial)},
                {"outcome", trace.normal() ? "normal" : "diverged"},
                {"result", printTerm(trace.result())},
                {"step_count", trace.steps.size()},
                {"steps", std::move(steps)}};
}

json diagnosticRecord(const Diagnostic& d)
{
    json out{{"code", errorCodeName(d.code)}, {"message", d.message}};
    if (d.span && d.span->known()) out["span"] = spanRecord(*d.span);
    if (!d.at.empty()) out["at"] = d.at;
    return out;
}

json reportRecord(const TypeReport& report)
{
    json out{{"directive", "check"},
             {"regime", regimeName(report.regime)},
             {"judgment", printJudgment(report.judgment)},
             {"categorical", report.judgment.categorical()}};
    if (report.accepted()) {
        out["verdict"] = "accepted";
        out["rule"] = report.acceptance().rule;
        if (report.acceptance().inferred) out["type"] = printType(*report.acceptance().inferred);
    } else {
        out["verdict"] = "rejected";
        out["error"] = diagnosticRecord(report.error());
    }
    json warnings = json::array();
    for (const Warning& w : report.warnings)
        warnings.push_back(json{{"kind", warningKindName(w.kind)}, {"message", w.message}});
    out["warnings"] = std::move(warnings);
    if (report.fregeanArity) out["fregean_arity"] = *report.fregeanArity;
    return out;
}

json paradoxRecord(const ParadoxReport& report, TraceVerbosity verbosity)
{
    json out{{"directive", "paradox"}, {"regime", regimeName(report.regime)}, {"russell", printTerm(report.russell)}};
    if (const auto* c = std::get_if<Contradiction>(&report.verdict)) {
        out["verdict"] = "contradiction";
        out["equation"] = json{{"left", printTerm(c->equation.first)}, {"right", printTerm(c->equation.second)}};
        out["fixpoint_check"] = c->fixpointCheck;
        out["trace"] = traceRecord(c->trace, verbosity);
    } else if (const auto* r = std::get_if<TypeRejected>(&report.verdict)) {
        out["verdict"] = "type-rejected";
        out["error"] = diagnosticRecord(r->error);
    } else {
        const auto& n = std::get<NotDerivable>(report.verdict);
        out["verdict"] = "not-derivable";
        out["reason"] = n.reason;
        out["error"] = diagnosticRecord(n.blockingRule);
    }
    return out;
}

namespace {

std::string locate(const json& r)
{
    if (r.contains("line")) return r["line"].get<std::size_t>() ? std::to_string(r["line"].get<std::size_t>()) + ": " : "";
    return "";
}

std::string errorText(const json& e)
{
    std::string out = e["code"].get<std::string>();
    if (e.contains("span"))
        out = std::to_string(e["span"]["line"].get<std::size_t>()) + ":" +
              std::to_string(e["span"]["column"].get<std::size_t>()) + ": " + out;
    out += ": " + e["message"].get<std::string>();
    if (e.contains("at")) out += " [at " + e["at"].get<std::string>() + "]";
    return out;
}

void traceText(std::ostringstream& os, const json& trace)
{
    for (const json& s : trace["steps"]) {
        os << "\n    " << s["rule"].get<std::string>() << " " << pathString(s["path"].get<Path>()) << ": ";
        if (s.contains("before"))
            os << s["before"].get<std::string>() << "  ~>  " << s["after"].get<std::string>();
        else
            os << s["redex"].get<std::string>() << "  ~>  " << s["contractum"].get<std::string>();
    }
}

} // namespace

std::string renderText(const json& r)
{
    std::ostringstream os;
    const std::string kind = r.value("directive", "");
    os << locate(r) << kind;
    if (kind == "regime") {
        os << " " << r["regime"].get<std::string>();
        if (r.contains("overridden_by")) os << " (overridden by --regime " << r["overridden_by"].get<std::string>() << ")";
    } else if (kind == "const") {
        os << " " << r["name"].get<std::string>() << " : " << r["type"].get<std::string>();
    } else if (kind == "check") {
        os << " [" << r["regime"].get<std::string>() << "] " << r["judgment"].get<std::string>() << "  =>  "
           << r["verdict"].get<std::string>();
        if (r.contains("rule")) os << " by " << r["rule"].get<std::string>();
        if (r.contains("type")) os << ", type " << r["type"].get<std::string>();
        if (r.contains("error")) os << ": " << errorText(r["error"]);
        for (const json& w : r["warnings"])
            os << "\n    warning " << w["kind"].get<std::string>() << ": " << w["message"].get<std::string>();
    } else if (kind == "eval") {
        os << " [" << r["regime"].get<std::string>() << "] " << r["term"].get<std::string>() << "  =>  "
           << r["verdict"].get<std::string>();
        if (r.contains("error")) {
            os << ": " << errorText(r["error"]);
        } else {
            os << " after " << r["trace"]["step_count"].get<std::size_t>() << " step(s): "
               << r["trace"]["result"].get<std::string>();
            if (r.contains("type")) os << " : " << r["type"].get<std::string>();
            if (r.contains("truth")) os << " (the " << r["truth"].get<std::string>() << ")";
            traceText(os, r["trace"]);
        }
    } else if (kind == "paradox") {
        os << " [" << r["regime"].get<std::string>() << "] " << r["russell"].get<std::string>() << "  =>  "
           << r["verdict"].get<std::string>();
        if (r.contains("equation")) {
            os << ": " << r["equation"]["left"].get<std::string>() << " = " << r["equation"]["right"].get<std::string>()
               << " (fixpoint check " << (r["fixpoint_check"].get<bool>() ? "passed" : "failed") << ")";
            traceText(os, r["trace"]);
        }
        if (r.contains("reason")) os << ": " << r["reason"].get<std::string>();
        else if (r.contains("error")) os << ": " << errorText(r["error"]);
    } else if (kind == "translate") {
        os << " " << r["input"].get<std::string>() << "  =>  " << r["verdict"].get<std::string>();
        if (r.contains("output")) os << ": " << r["output"].get<std::string>();
        if (r.contains("error")) os << ": " << errorText(r["error"]);
    } else if (kind == "error") {
        os << " " << errorText(r["error"]);
    }
    return os.str();
}

void emit(std::ostream& out, const json& record, OutputFormat format)
{
    if (format == OutputFormat::Structured) out << record.dump() << '\n';
    else out << renderText(record) << '\n';
}

namespace {

class Session {
public:
    Session(const RunConfig& config, std::ostream& out, std::ostream& err) : config_(config), out_(out), err_(err)
    {
        opts_.fuel = config.fuel;
        opts_.regime = config.regime.value_or(Regime::Strict);
    }

    int status() const { return status_; }

    void run(const Directive& d)
    {
        std::visit([&](const auto& directive) { execute(directive); }, d);
    }

private:
    bool enabled(DirectiveFilter kind) const
    {
        return config_.filter == DirectiveFilter::All || config_.filter == kind;
    }

    void record(json r, const SourceSpan& span)
    {
        r["line"] = span.line;
        emit(out_, r, config_.format);
    }

    void fail() { status_ = kExitRejected; }

    void execute(const RegimePragma& p)
    {
        json r{{"directive", "regime"}, {"regime", regimeName(p.regime)}, {"verdict", "set"}};
        if (config_.regime) {
            if (*config_.regime != p.regime)
                err_ << "warning: --regime " << regimeName(*config_.regime) << " overrides #regime "
                     << regimeName(p.regime) << "\n";
            r["overridden_by"] = regimeName(*config_.regime);
        } else {
            opts_.regime = p.regime;
        }
        record(std::move(r), p.span);
    }

    void execute(const ConstDecl& c)
    {
        opts_.constants.insert_or_assign(c.name, c.type);
        record(json{{"directive", "const"}, {"name", c.name}, {"type", printType(c.type)}, {"verdict", "declared"}},
               c.span);
    }

    void execute(const CheckDirective& c)
    {
        if (!enabled(DirectiveFilter::Check)) return;
        TypeReport report = checkJudgment(c.judgment, opts_);
        if (!report.accepted()) fail();
        record(reportRecord(report), c.span);
    }

    void execute(const EvalDirective& e)
    {
        if (!enabled(DirectiveFilter::Eval)) return;
        json r{{"directive", "eval"}, {"regime", regimeName(opts_.regime)}, {"term", printTerm(e.term)}};
        try {
            Type ty = inferType({}, e.term, opts_);
            RewriteTrace trace = normalize(e.term, opts_.fuel);
            r["type"] = printType(ty);
            r["verdict"] = trace.normal() ? "normal" : "diverged";
            if (trace.normal() && isSubtype(ty, Type::omicron())) {
                try {
                    r["truth"] = boolEval(trace.result(), opts_.fuel).is(TermKind::True) ? "true" : "false";
                } catch (const KernelError&) {
                }
            }
            r["trace"] = traceRecord(trace, config_.trace);
        } catch (const KernelError& err) {
            r["verdict"] = "rejected";
            r["error"] = diagnosticRecord(err.diagnostic());
            fail();
        }
        record(std::move(r), e.span);
    }

    void execute(const ParadoxDirective& p)
    {
        if (config_.filter != DirectiveFilter::All) return;
        record(paradoxRecord(deriveParadox(opts_.regime), config_.trace), p.span);
    }

    void execute(const TranslateDirective& t)
    {
        if (!enabled(DirectiveFilter::Translate)) return;
        json r{{"directive", "translate"}};
        try {
            if (const auto* j = std::get_if<Judgment>(&t.subject)) {
                r["input"] = printJudgment(*j);
                r["output"] = printJudgment(translateJudgment(*j, opts_));
            } else {
                const Term& term = std::get<Term>(t.subject);
                r["input"] = printTerm(term);
                CheckOptions strict = opts_;
                strict.regime = Regime::Strict;
                inferType({}, term, strict);
                Term out = toLambda(term);
                CheckOptions church = opts_;
                church.regime = Regime::Church;
                r["output"] = printTerm(out);
                r["type"] = printType(inferType({}, out, church));
            }
            r["verdict"] = "translated";
        } catch (const KernelError& err) {
            r["verdict"] = "rejected";
            r["error"] = diagnosticRecord(err.diagnostic());
            fail();
        }
        record(std::move(r), t.span);
    }

    const RunConfig& config_;
    std::ostream& out_;
    std::ostream& err_;
    CheckOptions opts_;
    int status_ = kExitOk;
};

} // namespace

int runSource(std::string_view source, const RunConfig& config, std::ostream& out, std::ostream& err)
{
    Script script;
    try {
        script = parseScript(source);
    } catch (const KernelError& e) {
        json r{{"directive", "error"}, {"verdict", "parse-error"}, {"error", diagnosticRecord(e.diagnostic())}};
        if (config.format == OutputFormat::Structured) emit(out, r, config.format);
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }
    Session session(config, out, err);
    for (const Directive& d : script.directives) session.run(d);
    return session.status();
}

int runScript(const std::filesystem::path& path, const RunConfig& config, std::ostream& out, std::ostream& err)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << "error: cannot read " << path.string() << "\n";
        return kExitIo;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        err << "error: failed while reading " << path.string() << "\n";
        return kExitIo;
    }
    return runSource(buf.str(), config, out, err);
}

} // namespace bgs
