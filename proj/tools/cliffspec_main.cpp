#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "cliffspec/battery.hpp"
#include "cliffspec/dsl.hpp"
#include "cliffspec/serialization.hpp"

// Exit codes: 0 success, 1 check failed / estimate above --max-err,
// 2 input parse failure, 3 d-limit exceeded, 4 precondition violation.

namespace {

using namespace cliffspec;

struct CliError {
    int code;
    std::string message;
};

double round_sig(double v) {
    // Emitted spectra are rounded so that independent computation routes
    // (eigenvalues vs closed forms) serialize byte-identically.
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

void emit(const std::string& out, const std::string& content) {
    if (out.empty())
        std::fputs(content.c_str(), stdout);
    else
        write_file_atomic(out, content);
}

json load_operator_checked(const std::string& path) {
    json j;
    try {
        j = parse_json_file(path);
    } catch (const std::exception& e) {
        throw CliError{2, e.what()};
    }
    if (j.is_object() && j.contains("d") && j.at("d").is_number_integer() &&
        j.at("d").get<int>() > dim_limit())
        throw CliError{3, "algebra dimension " + std::to_string(j.at("d").get<int>()) +
                              " exceeds the limit " + std::to_string(dim_limit()) +
                              " (override with CLIFFSPEC_DLIMIT)"};
    return j;
}

CliffordMatrix parse_operator(const std::string& path) {
    json j = load_operator_checked(path);
    try {
        return matrix_from_json(j);
    } catch (const std::exception& e) {
        throw CliError{2, e.what()};
    }
}

std::pair<DiscreteMeasureSpace, MeasurableFn> parse_space(const std::string& path) {
    json j;
    try {
        j = parse_json_file(path);
    } catch (const std::exception& e) {
        throw CliError{2, e.what()};
    }
    if (j.is_object() && j.contains("h") && j.at("h").is_array())
        for (const auto& e : j.at("h"))
            if (e.is_object() && e.contains("d") && e.at("d").is_number_integer() &&
                e.at("d").get<int>() > dim_limit())
                throw CliError{3, "algebra dimension exceeds the limit (CLIFFSPEC_DLIMIT)"};
    try {
        return mult_from_json(j);
    } catch (const std::exception& e) {
        throw CliError{2, e.what()};
    }
}

SliceFunction parse_dsl(const std::string& text) {
    try {
        return parse_function(text);
    } catch (const std::exception& e) {
        throw CliError{2, e.what()};
    }
}

json spectrum_json(const SpectralSet& s, double tol) {
    json spheres = json::array();
    for (const auto& sp : s.spheres)
        spheres.push_back(json{{"x", round_sig(sp.x)}, {"r", round_sig(sp.r)},
                               {"mult", sp.multiplicity}});
    return json{{"spheres", spheres}, {"tol", tol}};
}

struct ContourFlags {
    int nodes = 512;
    double center = 0.0, radius = 0.0; // 0 radius = auto circle
    double phi = 0.9;
    double r_in = 1e-8, r_out = 1e8;
    int panels = 64;
    double k_center = 0.0, k_radius = 0.0; // unbounded: the excluded sphere set
    int m = -1;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--nodes", nodes, "circle quadrature nodes");
        cmd->add_option("--center", center, "circle center (auto from spectrum if omitted)");
        cmd->add_option("--radius", radius, "circle radius (auto if omitted)");
        cmd->add_option("--phi", phi, "sector half-angle for omega/hinf kinds");
        cmd->add_option("--r-in", r_in, "sector inner truncation radius");
        cmd->add_option("--r-out", r_out, "sector outer truncation radius");
        cmd->add_option("--panels", panels, "sector panels per ray (8-node panels)");
        cmd->add_option("--k-center", k_center, "unbounded kind: center of the sphere set K");
        cmd->add_option("--k-radius", k_radius, "unbounded kind: radius of K");
        cmd->add_option("-m,--regularizer-order", m, "hinf regularizer order");
    }

    CalculusParams params(const CliffordMatrix& t, CalcKind kind) const {
        CalculusParams p;
        p.m = m;
        p.with_estimate = true;
        switch (kind) {
            case CalcKind::bounded_l:
            case CalcKind::bounded_r:
                p.contour = radius > 0.0
                                ? Contour::circle(center, radius, Contour::default_unit(t.d()), nodes)
                                : Contour::circle_for(t, nodes);
                break;
            case CalcKind::unbounded_l:
            case CalcKind::unbounded_r: {
                p.k = SpectralSet{{{k_center, k_radius, 1}}, 0.0};
                double r = radius > 0.0 ? radius : 1.5 * std::max(k_radius, 0.5) + 0.5;
                double c = radius > 0.0 ? center : k_center;
                p.contour = Contour::circle(c, r, Contour::default_unit(t.d()), nodes);
                break;
            }
            default:
                p.contour =
                    Contour::sector(phi, Contour::default_unit(t.d()), r_in, r_out, panels, 8);
                break;
        }
        return p;
    }
};

CalcKind resolve_kind(const std::string& kind, const SliceFunction& f) {
    // Family names pick the side from the function's chirality.
    if (kind == "bounded") return calc_for(f.chirality(), CalcKind::bounded_l);
    if (kind == "unbounded") return calc_for(f.chirality(), CalcKind::unbounded_l);
    if (kind == "omega") return calc_for(f.chirality(), CalcKind::omega_l);
    if (kind == "hinf") return calc_for(f.chirality(), CalcKind::hinf_l);
    try {
        return calc_kind_from_string(kind);
    } catch (const std::exception& e) {
        throw CliError{2, e.what()};
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

int cmd_spectrum(const std::string& opfile, const std::string& out, const std::string& scan,
                 const std::string& scan_out, double tol) {
    CliffordMatrix t = parse_operator(opfile);
    SpectralSet sig = spectrum_exact(t);
    emit(out, dump(spectrum_json(sig, tol)));
    if (!scan.empty()) {
        double x0, x1, y0, y1;
        int steps;
        if (std::sscanf(scan.c_str(), "%lf:%lf:%lf:%lf:%d", &x0, &x1, &y0, &y1, &steps) != 5 ||
            steps < 2)
            throw CliError{2, "--scan expects x0:x1:y0:y1:steps"};
        std::string csv = "x,y,sigma_min\n";
        char line[96];
        for (int i = 0; i < steps; ++i)
            for (int k = 0; k < steps; ++k) {
                double x = x0 + (x1 - x0) * i / (steps - 1);
                double y = y0 + (y1 - y0) * k / (steps - 1);
                Paravector s(t.d(), x);
                if (t.d() > 0) s.vec[0] = y;
                PencilEvaluation pe = q_pencil(t, s);
                std::snprintf(line, sizeof line, "%.10g,%.10g,%.10g\n", x, y, pe.sigma_min);
                csv += line;
            }
        emit(scan_out, csv);
    }
    return 0;
}

int cmd_apply(const std::string& opfile, const std::string& fn, const std::string& kind_name,
              const ContourFlags& cf, double max_err, const std::string& out) {
    CliffordMatrix t = parse_operator(opfile);
    SliceFunction f = parse_dsl(fn);
    CalcKind kind = resolve_kind(kind_name, f);
    CalculusResult r = [&] {
        try {
            return apply_calculus(f, t, kind, cf.params(t, kind));
        } catch (const std::exception& e) {
            throw CliError{4, e.what()};
        }
    }();
    emit(out, dump(to_json(r)));
    return (max_err > 0.0 && r.error_estimate > max_err) ? 1 : 0;
}

int cmd_adjoint_check(const std::string& opfile, std::uint64_t seed, int points, double tol,
                      const std::string& out) {
    CliffordMatrix t = parse_operator(opfile);
    AdjointSpectrumReport rep = adjoint_spectrum_check(t, seed, points);
    bool pass = rep.hausdorff_distance <= tol && rep.max_left_identity_residual <= tol &&
                rep.max_right_identity_residual <= tol;
    emit(out, dump(json{{"hausdorff", rep.hausdorff_distance},
                        {"left_identity_residual", rep.max_left_identity_residual},
                        {"right_identity_residual", rep.max_right_identity_residual},
                        {"points", rep.points_checked},
                        {"pass", pass}}));
    return pass ? 0 : 1;
}

int cmd_mult_spectrum(const std::string& spacefile, const std::string& out, double tol) {
    auto [space, h] = parse_space(spacefile);
    SpectralSet sig = [&] {
        try {
            return spectrum_mult(space, h);
        } catch (const std::exception& e) {
            throw CliError{4, e.what()};
        }
    }();
    emit(out, dump(spectrum_json(sig, tol)));
    return 0;
}

int cmd_mult_apply(const std::string& spacefile, const std::string& fn,
                   const std::string& kind_name, const ContourFlags& cf, double max_err,
                   const std::string& out) {
    auto [space, h] = parse_space(spacefile);
    SliceFunction f = parse_dsl(fn);
    CalcKind kind = resolve_kind(kind_name, f);
    CliffordMatrix m = build_mult(space, h);
    try {
        CalculusParams p = cf.params(m, kind);
        CalculusResult r = apply_calculus(f, m, kind, p);
        MultOracleReport orep = mult_calculus_oracle(space, h, f, kind, p);
        json j = to_json(r);
        j["oracle_residual"] = orep.residual;
        emit(out, dump(j));
        return (max_err > 0.0 && r.error_estimate > max_err) ? 1 : 0;
    } catch (const CliError&) {
        throw;
    } catch (const std::exception& e) {
        throw CliError{4, e.what()};
    }
}

int cmd_mult_verify(const std::string& spacefile, std::uint64_t seed, const std::string& out) {
    auto [space, h] = parse_space(spacefile);
    json rep = json::object();
    bool pass = true;
    try {
        CliffordMatrix m = build_mult(space, h);
        MultAdjointReport ar = mult_adjoint_check(space, h);
        rep["adjoint_residual"] = ar.entry_residual;
        pass = pass && ar.exact;

        if (h.range == RangeType::paravector) {
            SpectralSet direct = spectrum_mult(space, h);
            double hd = hausdorff(direct, spectrum_exact(m));
            rep["spectrum_hausdorff"] = hd;
            pass = pass && hd <= 1e-9;

            Rng rng(seed);
            double worst = 0.0;
            int done = 0;
            while (done < 10) {
                Paravector s = rng.paravector(h.d(), 2.0 * std::max(1.0, h.sup_norm()));
                if (direct.distance(s) < 0.1) continue;
                MultResolventReport rr = mult_resolvent_check(space, h, s);
                worst = std::max({worst, rr.left_residual, rr.right_residual});
                ++done;
            }
            rep["resolvent_residual"] = worst;
            pass = pass && worst <= 1e-10;
        }
    } catch (const std::exception& e) {
        throw CliError{4, e.what()};
    }
    rep["pass"] = pass;
    emit(out, dump(rep));
    return pass ? 0 : 1;
}

int cmd_verify(const VerifyOptions& opts, const std::string& format, const std::string& out) {
    VerifyReport rep = run_verify(opts);
    if (format == "json") {
        json groups = json::array();
        for (const auto& g : rep.groups)
            groups.push_back(json{{"name", g.name},
                                  {"pass", g.pass},
                                  {"checks", g.checks},
                                  {"worst", g.worst},
                                  {"threshold", g.threshold},
                                  {"note", g.note}});
        emit(out, dump(json{{"seed", opts.seed}, {"groups", groups}, {"pass", rep.all_pass()}}));
    } else {
        emit(out, rep.render());
    }
    return rep.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical toolkit for the S-spectral theory of Clifford-operator matrices"};
    app.require_subcommand(1);

    std::string opfile, spacefile, fn, kind = "bounded", out, scan, scan_out, format = "text";
    double tol = 1e-9, max_err = 0.0;
    std::uint64_t seed = 42;
    int points = 20;
    ContourFlags cf;
    VerifyOptions vo;

    auto* c_spec = app.add_subcommand("spectrum", "S-spectrum of an operator file");
    c_spec->add_option("operator", opfile, "operator JSON file")->required();
    c_spec->add_option("--out", out, "output path (stdout if omitted)");
    c_spec->add_option("--scan", scan, "x0:x1:y0:y1:steps slice-plane sigma_min grid");
    c_spec->add_option("--scan-out", scan_out, "CSV path for --scan (stdout if omitted)");
    c_spec->add_option("--tol", tol, "tolerance recorded in the output");

    auto* c_apply = app.add_subcommand("apply", "evaluate f(T) by contour quadrature");
    c_apply->add_option("operator", opfile)->required();
    c_apply->add_option("function", fn, "function DSL expression")->required();
    c_apply->add_option("--kind", kind,
                        "bounded|unbounded|omega|hinf (side from chirality) or explicit "
                        "bounded-left, ..., hinf-right");
    cf.add_to(c_apply);
    c_apply->add_option("--max-err", max_err, "fail (exit 1) if the estimate exceeds this");
    c_apply->add_option("--out", out);

    auto* c_adj = app.add_subcommand("adjoint-check", "sigma_S(T*) and resolvent adjoint identities");
    c_adj->add_option("operator", opfile)->required();
    c_adj->add_option("--seed", seed);
    c_adj->add_option("--points", points);
    c_adj->add_option("--tol", tol);
    c_adj->add_option("--out", out);

    auto* c_mult = app.add_subcommand("mult", "multiplication-operator model");
    c_mult->require_subcommand(1);
    auto* c_ms = c_mult->add_subcommand("spectrum", "[essran(h)] as a sphere set");
    c_ms->add_option("space", spacefile, "weights + h JSON file")->required();
    c_ms->add_option("--out", out);
    c_ms->add_option("--tol", tol);
    auto* c_ma = c_mult->add_subcommand("apply", "f(M_h) with the closed-form oracle residual");
    c_ma->add_option("space", spacefile)->required();
    c_ma->add_option("function", fn)->required();
    c_ma->add_option("--kind", kind);
    cf.add_to(c_ma);
    c_ma->add_option("--max-err", max_err);
    c_ma->add_option("--out", out);
    auto* c_mv = c_mult->add_subcommand("verify", "multiplication-operator theorem checks");
    c_mv->add_option("space", spacefile)->required();
    c_mv->add_option("--seed", seed);
    c_mv->add_option("--out", out);

    auto* c_ver = app.add_subcommand("verify", "run the theorem-verification battery");
    c_ver->add_option("--seed", vo.seed);
    c_ver->add_option("--ops-per-cell", vo.ops_per_cell);
    c_ver->add_option("--group", vo.group, "run a single named group");
    c_ver->add_flag("--debug-flip-dsj", vo.flip_dsj,
                    "fault injection: reverse the contour orientation");
    c_ver->add_option("--format", format, "text|json");
    c_ver->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (c_spec->parsed()) return cmd_spectrum(opfile, out, scan, scan_out, tol);
        if (c_apply->parsed()) return cmd_apply(opfile, fn, kind, cf, max_err, out);
        if (c_adj->parsed()) return cmd_adjoint_check(opfile, seed, points, tol, out);
        if (c_ms->parsed()) return cmd_mult_spectrum(spacefile, out, tol);
        if (c_ma->parsed()) return cmd_mult_apply(spacefile, fn, kind, cf, max_err, out);
        if (c_mv->parsed()) return cmd_mult_verify(spacefile, seed, out);
        if (c_ver->parsed()) return cmd_verify(vo, format, out);
    } catch (const CliError& e) {
        std::cerr << nlohmann::json{{"error", e.message}, {"exit", e.code}}.dump() << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << nlohmann::json{{"error", e.what()}, {"exit", 4}}.dump() << "\n";
        return 4;
    }
    return 0;
}
