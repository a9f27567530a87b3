#include "weierstab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "weierstab/central_charge.hpp"
#include "weierstab/checks.hpp"
#include "weierstab/config.hpp"
#include "weierstab/fourier_mukai.hpp"
#include "weierstab/json_io.hpp"
#include "weierstab/limit_phase.hpp"
#include "weierstab/wall_scan.hpp"

namespace weierstab::cli {

namespace {

using io::Json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot read file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Two-column "key  value" rendering of a JSON object; nested values are
// printed compactly.
std::string render_table(const Json& j) {
    if (!j.is_object()) return j.dump() + "\n";
    std::size_t width = 0;
    for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
    std::ostringstream os;
    for (const auto& [k, v] : j.items()) os << std::left << std::setw(static_cast<int>(width) + 2) << k << scalar_text(v) << "\n";
    return os.str();
}

struct Emitter {
    OutputFormat format;
    std::ostream& out;

    void operator()(const Json& j) const {
        if (format == OutputFormat::table) {
            out << render_table(j);
        } else {
            out << j.dump() << "\n";
        }
    }
};

Json error_json(const std::string& kind, const std::string& message, const std::string& field = {}) {
    Json e{{"kind", kind}, {"message", message}};
    if (!field.empty()) e["field"] = field;
    return Json{{"error", e}};
}

Rational parse_at(const std::string& text) {
    std::string_view body = text;
    if (body.rfind("u=", 0) == 0) body.remove_prefix(2);
    auto r = Rational::try_parse(body);
    if (!r) throw weierstab::ParseError("--at expects u=<rational>, got \"" + text + "\"", "at");
    if (r->sign() <= 0) throw ParameterError("--at needs u > 0 on the curve");
    return *r;
}

} // namespace

int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact stability computations on a Weierstrass elliptic surface", "weier-stab"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<std::string> config_path;
    std::string params_text;
    std::string format_text;
    app.add_option("--config", config_path, "JSON config file (default: $WEIER_STAB_CONFIG, then ./weier-stab.json)");
    app.add_option("--params", params_text, R"(Inline surface parameters, e.g. '{"e":"0","m":"2","alpha":"1","lambda":"1"}')");
    app.add_option("--format", format_text, "Output format")->check(CLI::IsMember({"json", "table"}));

    // transform
    std::string functor;
    std::string class_text;
    int shift_by = 0;
    auto* transform = app.add_subcommand("transform", "Cohomological Fourier-Mukai transform of a Chern class");
    transform->add_option("--functor", functor, "phi or phihat")->required()->check(CLI::IsMember({"phi", "phihat"}));
    transform->add_option("--class", class_text, "Chern class JSON")->required();
    transform->add_option("--shift", shift_by, "Apply [k] to the result");

    // charge
    std::optional<std::string> at_text;
    auto* charge = app.add_subcommand("charge", "Central charge as polynomials in (u, v) and on the curve");
    charge->add_option("--class", class_text, "Chern class JSON")->required();
    charge->add_option("--at", at_text, "Evaluate exactly at u=<rational> on the curve");

    // identity-check
    auto* identity = app.add_subcommand("identity-check", "Check the twisted-degree / Re Z(Phi E[1]) identity");
    identity->add_option("--class", class_text, "Chern class JSON")->required();

    // slope
    std::optional<std::string> hn_text;
    auto* slope = app.add_subcommand("slope", "Slope functions and limit torsion-pair conditions");
    slope->add_option("--class", class_text, "Chern class JSON")->required();
    slope->add_option("--hn-factors", hn_text, "JSON array of HN factor classes summing to --class");

    // phase
    std::string left_text;
    std::string right_text;
    std::string candidates_path;
    auto* phase = app.add_subcommand("phase", "Limit phase computations");
    phase->require_subcommand(1);
    auto* compare = phase->add_subcommand("compare", "Compare eventual phases of two classes");
    compare->add_option("--left", left_text, "Chern class JSON")->required();
    compare->add_option("--right", right_text, "Chern class JSON")->required();
    auto* classify = phase->add_subcommand("classify", "Limit phase of a class as v -> infinity");
    classify->add_option("--class", class_text, "Chern class JSON")->required();
    auto* scan = phase->add_subcommand("scan", "Compare candidate subobject classes with Phi E[1]");
    scan->add_option("--class", class_text, "Chern class JSON of E")->required();
    scan->add_option("--candidates", candidates_path, "File holding a JSON array of classes")->required();

    // walls
    std::string box_text;
    std::optional<std::string> umax_text;
    std::optional<std::string> out_path;
    unsigned threads = 0;
    auto* walls = app.add_subcommand("walls", "Walls along the curve against every class in a box");
    walls->add_option("--class", class_text, "Chern class JSON")->required();
    walls->add_option("--box", box_text, R"(Candidate box, e.g. "n=0..0,d=0..0,c=0..2,s2=-2..2")")->required();
    walls->add_option("--umax", umax_text, "Upper end of the u-range (default from config)");
    walls->add_option("--out", out_path, "Write the report to this file instead of stdout");
    walls->add_option("--threads", threads, "Worker threads (0: hardware concurrency)");

    // verify
    std::optional<std::uint64_t> seed;
    auto* verify = app.add_subcommand("verify", "Run the randomized invariant suites");
    verify->add_option("--seed", seed, "Random seed (default from config)");

    std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << error_json("usage_error", e.what()).dump() << "\n";
        return exit_usage_error;
    }

    try {
        RunConfig cfg;
        if (auto path = resolve_config_path(config_path)) cfg = load_config(*path);
        if (!params_text.empty()) cfg.params = io::params_from_json(io::parse_json(params_text, "--params"));
        if (format_text == "json") cfg.format = OutputFormat::json;
        if (format_text == "table") cfg.format = OutputFormat::table;
        const SurfaceParams& p = cfg.params;
        const Emitter emit{cfg.format, out};

        if (transform->parsed()) {
            const ChernClass x = io::class_from_text(class_text);
            const ChernClass y = functor == "phi" ? phi(x, p) : phi_hat(x, p);
            emit(io::to_json(shift(y, shift_by)));
        } else if (charge->parsed()) {
            const ChernClass x = io::class_from_text(class_text);
            const ChargeExpr z = build_charge(x, p);
            const CurveCharge cz = substitute_curve(z, p);
            if (at_text) {
                const Rational u = parse_at(*at_text);
                const Rational v = curve_v_of_u(p).evaluate(u);
                const ExactComplex value = evaluate(z, u, v);
                emit(Json{{"u", io::to_json(u)}, {"v", io::to_json(v)}, {"real", io::to_json(value.real)}, {"imag", io::to_json(value.imag)}});
            } else {
                emit(Json{{"charge", io::to_json(z)}, {"curve", io::to_json(cz)}, {"admissibility", to_string(admissibility(cz))}});
            }
        } else if (identity->parsed()) {
            const LaurentPoly residual = twist_identity_residual(io::class_from_text(class_text), p);
            emit(Json{{"status", residual.is_zero() ? "PASS" : "FAIL"}, {"residual", residual.str()}});
            if (!residual.is_zero()) return exit_domain_error;
        } else if (slope->parsed()) {
            const ChernClass x = io::class_from_text(class_text);
            Json j{{"mu_f", io::to_json(mu_f(x))},
                   {"mu_theta_mf", io::to_json(mu_theta_mf(x, p))},
                   {"twisted_slope", io::to_json(twisted_slope(x, p))},
                   {"twisted_ch1_pair", io::to_json(twisted_ch1_pair(x, p))}};
            if (hn_text) {
                const HNProfile profile(io::classes_from_json(io::parse_json(*hn_text, "--hn-factors")), x);
                const auto verdict = [](const MembershipCheck& m) {
                    return m.satisfied() ? Json{{"satisfied", true}, {"violated_index", nullptr}}
                                         : Json{{"satisfied", false}, {"violated_index", *m.violated_index}};
                };
                j["fl_conditions"] = verdict(check_Fl_conditions(profile, p));
                j["tl_conditions"] = verdict(check_Tl_conditions(profile, p));
            }
            emit(j);
        } else if (compare->parsed()) {
            emit(io::to_json(compare_phases(io::class_from_text(left_text), io::class_from_text(right_text), p)));
        } else if (classify->parsed()) {
            emit(io::to_json(classify_limit_phase(io::class_from_text(class_text), p)));
        } else if (scan->parsed()) {
            const ChernClass x = io::class_from_text(class_text);
            const auto candidates = io::classes_from_json(io::parse_json(read_file(candidates_path), candidates_path));
            emit(io::to_json(theorem_A_scan(x, candidates, p)));
        } else if (walls->parsed()) {
            const ChernClass x = io::class_from_text(class_text);
            GridScanOptions opts;
            opts.u_max = umax_text ? Rational::parse(*umax_text) : cfg.u_max;
            opts.cap = cfg.candidate_cap;
            opts.threads = threads;
            const auto reports = wall_grid_scan(x, CandidateBox::parse(box_text), p, opts);
            Json arr = Json::array();
            for (const auto& r : reports) arr.push_back(io::to_json(r));
            Json doc{{"class", io::to_json(x)}, {"params", io::to_json(p)}, {"u_max", io::to_json(opts.u_max)}, {"reports", std::move(arr)}};
            if (out_path) {
                std::ofstream f(*out_path);
                if (!f) throw ParameterError("cannot write " + *out_path);
                f << doc.dump(2) << "\n";
                emit(Json{{"written", *out_path}, {"reports", reports.size()}});
            } else {
                emit(doc);
            }
        } else if (verify->parsed()) {
            checks::SuiteSizes sizes;
            sizes.classes = cfg.verify.classes;
            sizes.param_sets = cfg.verify.param_sets;
            sizes.oracle_pairs = cfg.verify.oracle_pairs;
            sizes.wall_pairs = cfg.verify.wall_pairs;
            sizes.theorem_classes = cfg.verify.theorem_classes;
            const std::uint64_t s = seed.value_or(cfg.seed);
            const auto results = checks::run_all(s, sizes);
            const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
            if (cfg.format == OutputFormat::table) {
                out << checks::render(results);
            } else {
                Json suites = Json::array();
                for (const auto& r : results)
                    suites.push_back(Json{{"name", r.name}, {"status", r.passed() ? "PASS" : "FAIL"}, {"cases", r.cases},
                                          {"failures", r.failures}, {"excluded", r.excluded}, {"notes", r.notes}});
                out << Json{{"seed", s}, {"status", ok ? "PASS" : "FAIL"}, {"suites", std::move(suites)}}.dump() << "\n";
            }
            return ok ? exit_ok : exit_domain_error;
        }
        return exit_ok;
    } catch (const weierstab::ParseError& e) {
        err << error_json(e.kind(), e.what(), e.field()).dump() << "\n";
        return exit_domain_error;
    } catch (const InadmissibleClass& e) {
        Json j = error_json(e.kind(), e.what());
        j["error"]["argument"] = e.argument();
        err << j.dump() << "\n";
        return exit_domain_error;
    } catch (const Error& e) {
        err << error_json(e.kind(), e.what()).dump() << "\n";
        return exit_domain_error;
    }
}

} // namespace weierstab::cli
