#include "betaproof/cli/commands.hpp"

#include "betaproof/catalogue.hpp"
#include "betaproof/core_functions.hpp"
#include "betaproof/replay.hpp"
#include "betaproof/special.hpp"
#include "betaproof/theorem.hpp"
#include "betaproof/yang.hpp"

#include <CLI11.hpp>

#include <array>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

namespace betaproof::cli {

namespace {

// Where a command's main output goes: the --out file or the given stream.
class Output {
public:
    Output(const RunConfig& cfg, std::ostream& fallback) : stream_(&fallback) {
        if (cfg.output_path.empty()) return;
        path_ = cfg.output_path;
        file_ = std::make_unique<std::ofstream>(path_, std::ios::binary | std::ios::trunc);
        stream_ = file_.get();
    }

    [[nodiscard]] bool to_file() const { return file_ != nullptr; }
    [[nodiscard]] bool good() const { return stream_->good(); }
    [[nodiscard]] const std::string& path() const { return path_; }
    std::ostream& stream() { return *stream_; }

    /// Flushes and reports whether everything reached its destination.
    bool finish() {
        stream_->flush();
        if (file_) file_->close();
        return file_ ? !file_->fail() : stream_->good();
    }

private:
    std::string path_;
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

int io_failure(std::ostream& err, const std::string& path) {
    err << "error: cannot write " << path << "\n";
    return kExitIo;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

// Printed-vs-computed table shared by the text renderings.
struct Row {
    std::string name;
    std::string computed;
    std::string printed;
    std::string status;
};

void render_rows(std::ostream& os, Format format, const std::vector<Row>& rows, const char* what) {
    if (format == Format::Json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows)
            j.push_back({{"name", r.name}, {"computed", r.computed}, {"printed", r.printed}, {"status", r.status}});
        os << nlohmann::json{{what, j}}.dump(2) << "\n";
    } else if (format == Format::Csv) {
        os << "name,computed,printed,status\n";
        for (const auto& r : rows)
            os << csv_escape(r.name) << ',' << r.computed << ',' << r.printed << ',' << r.status << "\n";
    } else {
        std::size_t w = 4;
        for (const auto& r : rows) w = std::max(w, r.name.size());
        os << std::left << std::setw(static_cast<int>(w) + 2) << "name" << std::setw(34) << "computed"
           << std::setw(12) << "printed" << "status\n";
        for (const auto& r : rows)
            os << std::setw(static_cast<int>(w) + 2) << r.name << std::setw(34) << r.computed << std::setw(12)
               << r.printed << r.status << "\n";
        os << std::right;
    }
}

void render_replay_text(std::ostream& os, const std::vector<proof::ProofStep>& steps) {
    for (const auto& s : steps) {
        os << std::left << std::setw(13) << ("[" + proof::to_string(s.status) + "]") << std::setw(28) << s.id
           << std::setw(18) << proof::to_string(s.method) << s.claim << "\n";
        for (const auto& [key, value] : s.evidence.items()) {
            if (value.is_object() && value.contains("printed"))
                os << "    " << key << ": computed " << value["computed"].get<std::string>() << "  printed "
                   << value["printed"].get<std::string>() << "\n";
        }
        if (!s.diagnostic.empty()) os << "    " << s.diagnostic << "\n";
    }
    os << std::right;
    const auto sum = proof::summarize(steps);
    os << sum.total() << " steps: " << sum.verified << " verified, " << sum.failed << " failed, " << sum.inconclusive
       << " inconclusive\n";
}

}  // namespace

int cmd_replay(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Format format = cfg.format_or(cfg.output_path.empty() ? Format::Text : Format::Json);
    if (format == Format::Csv) throw ConfigError("replay writes json or text");
    proof::ReplayOptions opts;
    opts.prec = cfg.precision();
    opts.width = cfg.enclosure_width;
    opts.threads = cfg.threads;
    const auto steps = proof::replay_all(opts);

    Output sink(cfg, out);
    if (!sink.good()) return io_failure(err, sink.path());
    if (format == Format::Json) {
        nlohmann::json doc;
        doc["metadata"] = {{"tool", "betaproof"},
                           {"command", "replay"},
                           {"precision_digits", cfg.precision_digits},
                           {"enclosure_width", cfg.enclosure_width.str()},
                           {"audit_step", opts.audit_step.str()}};
        doc["report"] = proof::report_json(steps);
        sink.stream() << doc.dump(2) << "\n";
    } else {
        render_replay_text(sink.stream(), steps);
    }
    if (!sink.finish()) return io_failure(err, sink.path());

    const auto sum = proof::summarize(steps);
    if (sink.to_file())
        out << sum.total() << " steps: " << sum.verified << " verified, " << sum.failed << " failed, "
            << sum.inconclusive << " inconclusive; report written to " << sink.path() << "\n";
    if (sum.verified == sum.total()) return kExitOk;
    err << "steps not verified:";
    for (const auto& s : steps)
        if (s.status != proof::Status::Verified) err << ' ' << s.id << " (" << proof::to_string(s.status) << ")";
    err << "\n";
    return kExitFailure;
}

int cmd_roots(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    static constexpr std::array<const char*, 5> kPrinted{"0.03733", "0.2114", "0.3085", "0.3822", "0.4439"};
    std::vector<Poly> qs;
    for (int j = 1; j <= 5; ++j) qs.push_back(builtin_catalogue().poly("q" + std::to_string(j)));
    const auto enc = sign::root_enclosures(qs, Rational(0), Rational(1, 2), cfg.enclosure_width);

    std::vector<Row> rows;
    bool wrong_digits = false;
    bool unresolved = false;
    for (std::size_t j = 0; j < enc.size(); ++j) {
        const auto st = sign::prefix_status(enc[j], kPrinted[j]);
        wrong_digits = wrong_digits || st == sign::PrefixStatus::Outside;
        unresolved = unresolved || st == sign::PrefixStatus::Unresolved;
        const char* label = st == sign::PrefixStatus::Inside    ? "inside"
                            : st == sign::PrefixStatus::Outside ? "OUTSIDE"
                                                                : "unresolved";
        rows.push_back({"x" + std::to_string(j + 1), "[" + enc[j].lo.decimal(12) + ", " + enc[j].hi.decimal(12) + "]",
                        kPrinted[j], label});
    }

    std::string ordering;
    bool ordering_failed = false;
    try {
        if (sign::verify_root_ordering(qs, Rational(0), Rational(1, 2), cfg.enclosure_width)) {
            ordering = "x1 < x2 < x3 < x4 < x5 verified";
        } else {
            ordering = "roots are not increasing";
            ordering_failed = true;
        }
    } catch (const sign::SignError&) {
        ordering = "ordering unverified at this width";
        err << "warning: " << ordering << " (" << cfg.enclosure_width.str() << ")\n";
    }
    if (unresolved) err << "warning: enclosures too wide to resolve some printed digits\n";

    Output sink(cfg, out);
    if (!sink.good()) return io_failure(err, sink.path());
    const Format format = cfg.format_or(Format::Text);
    render_rows(sink.stream(), format, rows, "roots");
    if (format == Format::Text) sink.stream() << "width " << cfg.enclosure_width.str() << ": " << ordering << "\n";
    if (!sink.finish()) return io_failure(err, sink.path());

    if (wrong_digits) err << "printed prefix outside its enclosure\n";
    return wrong_digits || ordering_failed ? kExitFailure : kExitOk;
}

int cmd_constants(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Precision prec = cfg.precision();
    const auto c = special::compute_constants(prec);
    const HPFloat y925(Rational(9, 25), prec);
    struct Entry {
        const char* name;
        HPFloat value;
        const char* printed;
    };
    const std::vector<Entry> entries{
        {"alpha = 2 pi^2/3 - 4", c.alpha, special::printed::kAlpha},
        {"a1", c.a1, special::printed::kA1},
        {"a2", c.a2, special::printed::kA2},
        {"a3", c.a3, special::printed::kA3},
        {"max Delta(x), x >= 1", c.alzer_max, special::printed::kAlzerMax},
        {"g(1/5)", proof::g(HPFloat(Rational(1, 5), prec)), "0.001914"},
        {"G(0,9/25)", proof::G(HPFloat(0L, prec), y925), "0.0554"},
        {"G(1/5,9/25)", proof::G(HPFloat(Rational(1, 5), prec), y925), "0.04015"},
    };
    std::vector<Row> rows;
    bool mismatch = false;
    for (const auto& e : entries) {
        const bool ok = special::matches_printed(e.value, e.printed);
        mismatch = mismatch || !ok;
        rows.push_back({e.name, e.value.fixed(25), e.printed, ok ? "match" : "MISMATCH"});
    }
    rows.push_back({"beta", "1", "1", "exact"});
    rows.push_back({"argmax Delta(x)", c.alzer_argmax.fixed(12), "", "computed"});

    Output sink(cfg, out);
    if (!sink.good()) return io_failure(err, sink.path());
    render_rows(sink.stream(), cfg.format_or(Format::Text), rows, "constants");
    if (!sink.finish()) return io_failure(err, sink.path());
    if (mismatch) err << "computed constant disagrees with its printed digits\n";
    return mismatch ? kExitFailure : kExitOk;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Rational x;
    try {
        x = Rational::parse(cfg.bounds_x);
    } catch (const std::exception&) {
        throw ConfigError("x must be a decimal or fraction");
    }
    if (x.sign() <= 0) throw ConfigError("x must be > 0");
    const Precision prec = cfg.precision();
    const auto r = yang::sandwich(HPFloat(x, prec), prec);
    const std::vector<Row> rows{
        {"L_x(x,4/5)", r.lx_four_fifths.fixed(25), "", "lower"},
        {"psi'(x+1)", r.trigamma.fixed(25), "", ""},
        {"L_x(x,2/5)", r.lx_two_fifths.fixed(25), "", "upper"},
        {"L_xx(x,2/5)", r.lxx_two_fifths.fixed(25), "", "lower"},
        {"psi''(x+1)", r.tetragamma.fixed(25), "", ""},
        {"L_xx(x,4/5)", r.lxx_four_fifths.fixed(25), "", "upper"},
        {"min margin", r.min_margin.str(6), "", yang::to_string(r.status)},
    };
    Output sink(cfg, out);
    if (!sink.good()) return io_failure(err, sink.path());
    const Format format = cfg.format_or(Format::Text);
    if (format == Format::Text) sink.stream() << "x = " << x.str() << "\n";
    render_rows(sink.stream(), format, rows, "bounds");
    if (!sink.finish()) return io_failure(err, sink.path());
    if (r.status != yang::SandwichStatus::Holds) {
        err << "sandwich " << yang::to_string(r.status) << " at x = " << x.str() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Format format = cfg.format_or(Format::Csv);
    const Precision prec = cfg.precision();
    Output sink(cfg, out);
    if (!sink.good()) return io_failure(err, sink.path());

    std::function<void(const proof::SweepRow&)> rows;
    if (format == Format::Csv) {
        sink.stream() << proof::kSweepCsvHeader << "\n";
        rows = [&](const proof::SweepRow& r) { sink.stream() << proof::csv_line(r) << "\n"; };
    }
    const auto s = proof::sweep_theorem(cfg.grid_n, prec, rows, cfg.threads);

    const bool positive = s.min_margin_new > 0L;
    std::ostringstream summary;
    summary << "grid " << s.grid_n << "x" << s.grid_n << " (" << s.cells << " cells)\n"
            << "min B - new bound        " << s.min_margin_new.str(12) << " at (" << s.argmin_x.str() << ", "
            << s.argmin_y.str() << ")\n"
            << "min B - ivady lower      " << s.min_margin_ivady_lower.str(6) << "\n"
            << "min ivady upper - B      " << s.min_margin_ivady_upper.str(6) << "\n"
            << "min B - alzer lower      " << s.min_margin_alzer_lower.str(6) << "  alpha " << s.alpha.fixed(15)
            << " (printed " << special::printed::kAlpha << ")\n"
            << "min alzer upper - B      " << s.min_margin_alzer_upper.str(6) << "  beta 1\n"
            << "new bound above ivady    " << s.new_beats_ivady << " cells\n";

    if (format == Format::Json) {
        nlohmann::json j{{"grid_n", s.grid_n},
                         {"cells", s.cells},
                         {"alpha", s.alpha.str(25)},
                         {"min_margin_new", s.min_margin_new.str(25)},
                         {"argmin", {s.argmin_x.str(), s.argmin_y.str()}},
                         {"min_margin_ivady_lower", s.min_margin_ivady_lower.str(25)},
                         {"min_margin_ivady_upper", s.min_margin_ivady_upper.str(25)},
                         {"min_margin_alzer_lower", s.min_margin_alzer_lower.str(25)},
                         {"min_margin_alzer_upper", s.min_margin_alzer_upper.str(25)},
                         {"new_beats_ivady", s.new_beats_ivady}};
        sink.stream() << j.dump(2) << "\n";
    } else if (format == Format::Text) {
        sink.stream() << summary.str();
    }
    if (!sink.finish()) return io_failure(err, sink.path());
    // with csv the rows own the destination, so the summary goes beside it
    if (format == Format::Csv) (sink.to_file() ? out : err) << summary.str();
    if (!positive) {
        err << "new bound violated at (" << s.argmin_x.str() << ", " << s.argmin_y.str() << ")\n";
        return kExitFailure;
    }
    return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Replays the case analysis behind a lower bound for Euler's beta function", "betaproof"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string width = "1e-6";
    std::string format;
    const std::string env = kEnvPrefix;
    app.add_option("--precision", cfg.precision_digits, "decimal digits of working precision (>= 30)")
        ->envname(env + "PRECISION")
        ->capture_default_str();
    app.add_option("--grid", cfg.grid_n, "sweep grid size n, cells (i/n, j/n)")
        ->envname(env + "GRID")
        ->capture_default_str();
    app.add_option("--width", width, "root enclosure width, decimal or fraction")
        ->envname(env + "WIDTH")
        ->capture_default_str();
    app.add_option("--out", cfg.output_path, "write the report to this file")->envname(env + "OUT");
    app.add_option("--format", format, "json, csv or text")->envname(env + "FORMAT");
    app.add_option("--threads", cfg.threads, "worker threads")->envname(env + "THREADS")->capture_default_str();

    auto* replay = app.add_subcommand("replay", "replay every step of the argument");
    auto* roots = app.add_subcommand("roots", "enclose the roots x1..x5");
    auto* constants = app.add_subcommand("constants", "reproduce the numeric constants");
    auto* bounds = app.add_subcommand("bounds", "polygamma sandwich at one point");
    bounds->add_option("--x", cfg.bounds_x, "argument x > 0")->capture_default_str();
    auto* sweep = app.add_subcommand("sweep", "evaluate the bounds on a grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        try {
            cfg.enclosure_width = Rational::parse(width);
        } catch (const std::exception&) {
            throw ConfigError("enclosure_width must be a decimal or fraction");
        }
        if (!format.empty()) cfg.format = parse_format(format);
        validate(cfg);
        if (*replay) return cmd_replay(cfg, out, err);
        if (*roots) return cmd_roots(cfg, out, err);
        if (*constants) return cmd_constants(cfg, out, err);
        if (*bounds) return cmd_bounds(cfg, out, err);
        if (*sweep) return cmd_sweep(cfg, out, err);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitConfig;
}

}  // namespace betaproof::cli
