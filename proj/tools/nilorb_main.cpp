// nilorb: nilpotent-orbit degenerations, their limit mixed Hodge
// apparatus, and desk-scale verification of the boundary norm estimates
// and Hausdorff-separation phenomena.
//
// Exit codes: 0 = success / certified / positive verdict,
//             1 = negative mathematical verdict,
//             2 = usage, IO or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <nilorb/corpus.hpp>
#include <nilorb/estimates.hpp>
#include <nilorb/orbit_io.hpp>
#include <nilorb/perturbation.hpp>
#include <nilorb/lemma25.hpp>
#include <nilorb/searches.hpp>
#include <nilorb/sublemma.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace nilorb;

namespace {

struct CommonOpts {
    std::string orbit_file;
    std::string example_name;
    std::string out_file;
    std::string target;
    std::string radius = "1/5";
    long bound = 0;  // 0 = per-command default
    double r = 2.0;
    double y_max = 0.0;
    int grid_re = 8;
    int grid_y = 12;
    int grid_density = 1;
    double tol = 1e-9;
    double epsilon = 0.0;
    std::uint64_t seed = 1;
    int count = 20;
    bool text = false;
    bool json_flag = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool orbit_based) {
    if (orbit_based) {
        cmd->add_option("--orbit", o.orbit_file, "orbit JSON file");
        cmd->add_option("--example", o.example_name, "built-in example name");
    }
    cmd->add_option("--out", o.out_file, "write the report here instead of stdout");
    cmd->add_option("--bound", o.bound, "lattice coefficient bound");
    cmd->add_option("--r", o.r, "strip floor (Im z > r, r > 1)");
    cmd->add_option("--y-max", o.y_max, "Im z ceiling for scans");
    cmd->add_option("--grid-re", o.grid_re, "Re z samples per unit interval");
    cmd->add_option("--grid-y", o.grid_y, "number of geometric y levels");
    cmd->add_option("--grid-density", o.grid_density, "subdivision of the y ladder");
    cmd->add_option("--radius", o.radius, "separation radius (exact rational or decimal)");
    cmd->add_option("--tol", o.tol, "tolerance for searches");
    cmd->add_option("--seed", o.seed, "random seed (harnesses)");
    cmd->add_option("--target", o.target, "target point, e.g. \"(1, 1/2+1/4i)\"");
    cmd->add_option("--count", o.count, "witnesses requested (find-accumulation)");
    cmd->add_option("--epsilon", o.epsilon, "heuristic epsilon for separation tail exclusion");
    cmd->add_flag("--text", o.text, "plain-text rendering of the report");
    cmd->add_flag("--json", o.json_flag, "JSON rendering (default)");
}

Rational parse_radius(const std::string& s) {
    if (s.find('.') == std::string::npos) return parse_rational(s);
    // decimal like 0.2 -> exact 2/10
    auto dot = s.find('.');
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (neg) whole = whole.substr(1);
    if (whole.empty()) whole = "0";
    Rational r = parse_rational(whole);
    if (!frac.empty()) {
        Rational den(1);
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        r += parse_rational(frac) / den;
    }
    if (neg) r = -r;
    return r;
}

NilpotentOrbit resolve_orbit(const CommonOpts& o) {
    if (!o.orbit_file.empty() && !o.example_name.empty())
        throw CLI::ValidationError("give either --orbit or --example, not both");
    if (!o.orbit_file.empty()) return load_orbit_file(o.orbit_file);
    if (!o.example_name.empty()) {
        auto orbit = orbit_by_name(o.example_name);
        if (!orbit) {
            std::string names;
            for (const auto& n : recipe_names()) names += " " + n;
            throw CLI::ValidationError("unknown example '" + o.example_name + "'; known:" + names);
        }
        return *orbit;
    }
    throw CLI::ValidationError("an orbit is required: --orbit FILE or --example NAME");
}

StripGrid make_grid(const CommonOpts& o) {
    StripGrid g;
    g.r = o.r;
    g.re_steps = o.grid_re;
    g.y_levels = o.grid_y;
    g.y_density = o.grid_density;
    g.y_max = o.y_max;
    return g;
}

json grid_json(const StripGrid& g) {
    return json{{"r", g.r},
                {"re_steps", g.re_steps},
                {"y_levels", g.y_levels},
                {"y_density", g.y_density},
                {"y_max", g.y_max}};
}

json complex_json(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json gvector_json(const GVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(format_gaussian(x));
    return a;
}

void render_text(const json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            render_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    } else if (j.is_array()) {
        int i = 0;
        for (const auto& el : j) render_text(el, prefix + "[" + std::to_string(i++) + "]", os);
        if (j.empty()) os << prefix << " = []\n";
    } else {
        os << prefix << " = " << j.dump() << "\n";
    }
}

int emit(const json& report, const CommonOpts& o) {
    std::ostringstream body;
    if (o.text)
        render_text(report, "", body);
    else
        body << report.dump(2) << "\n";
    if (o.out_file.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(o.out_file);
        if (!out) throw std::runtime_error("cannot open output file: " + o.out_file);
        out << body.str();
    }
    return 0;
}

json base_report(const std::string& command, const CommonOpts& o, const NilpotentOrbit* orbit) {
    json rep;
    rep["command"] = command;
    rep["input_digest"] = orbit ? orbit_digest(*orbit) : "";
    rep["provenance"] = json{{"seed", o.seed},
                             {"grid", grid_json(make_grid(o))},
                             {"bounds", json{{"coeff_bound", o.bound}, {"tol", o.tol}}}};
    return rep;
}

GVector resolve_target(const CommonOpts& o, int fiber_dim) {
    if (o.target.empty()) return GVector(fiber_dim);
    GVector t = parse_tuple(o.target);
    if (static_cast<int>(t.size()) != fiber_dim)
        throw std::invalid_argument("target has dimension " + std::to_string(t.size()) +
                                    " but the fiber has dimension " + std::to_string(fiber_dim));
    return t;
}

int run_validate(const CommonOpts& o) {
    NilpotentOrbit orbit = resolve_orbit(o);
    ValidationReport v = validate_orbit(orbit);
    json rep = base_report("validate", o, &orbit);
    json checks = json::array();
    for (const auto& c : v.checks)
        checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    rep["parameters"] = json{{"label", orbit.label}, {"rank", orbit.rank}, {"weight", orbit.weight}};
    rep["results"] = json{{"checks", checks}};
    rep["verdict"] = v.all_passed() ? "pass" : "fail";
    emit(rep, o);
    return v.all_passed() ? 0 : 1;
}

int run_limit_mhs(const CommonOpts& o) {
    NilpotentOrbit orbit = resolve_orbit(o);
    LimitMhsOutcome out = build_limit_mhs(orbit);
    json rep = base_report("limit-mhs", o, &orbit);
    rep["parameters"] = json{{"label", orbit.label}};
    json results;
    if (out.ok()) {
        json levels = json::object();
        for (const auto& [k, gh] : out.mhs->graded) {
            json pieces = json::array();
            for (const auto& piece : gh.pieces)
                pieces.push_back(json{{"p", piece.p}, {"q", piece.q}, {"dim", piece.space.dim()}});
            levels[std::to_string(k)] = json{{"dim", gh.coords.dim}, {"hodge", pieces}};
        }
        results["graded"] = levels;
        results["kernel_injective"] = check_kernel_injectivity(orbit);
    } else {
        json fails = json::array();
        for (const auto& f : out.failures)
            fails.push_back(json{{"level", f.level},
                                 {"expected_dim", f.expected_dim},
                                 {"pieces_dim_sum", f.pieces_dim_sum},
                                 {"span_dim", f.span_dim},
                                 {"message", f.message}});
        results["failures"] = fails;
    }
    rep["results"] = results;
    rep["verdict"] = out.ok() ? "pure" : "impure";
    emit(rep, o);
    return out.ok() ? 0 : 1;
}

int run_bigrading(const CommonOpts& o) {
    NilpotentOrbit orbit = resolve_orbit(o);
    SectionModel m = build_section_model(orbit);
    json rep = base_report("bigrading", o, &orbit);
    rep["parameters"] = json{{"label", orbit.label}};
    const BiGradedSpace& g = m.hodge() ? *m.g_hodge : m.g_rational;
    json pieces = json::array();
    for (const auto& piece : g.pieces)
        pieces.push_back(json{{"j", piece.j}, {"k", piece.k}, {"level", piece.level}, {"dim", piece.dim}});
    json results{{"mode", m.hodge() ? "hodge" : "rational"},
                 {"depth", g.m},
                 {"pieces", pieces},
                 {"fiber_dim", m.fiber_dim}};
    if (m.hodge()) {
        results["negative_dim"] = g.negative_dim();
        json types = json::array();
        for (int i = 0; i < g.total; ++i)
            types.push_back(json{{"j", g.coord_j[i]},
                                 {"k", g.coord_k[i]},
                                 {"p", g.coord_p[i]},
                                 {"q", g.coord_q[i]},
                                 {"negative", static_cast<bool>(g.coord_negative[i])}});
        results["coordinates"] = types;
    }
    rep["results"] = results;
    rep["verdict"] = "ok";
    emit(rep, o);
    return 0;
}

int run_alpha(const CommonOpts& o) {
    NilpotentOrbit orbit = resolve_orbit(o);
    SectionModel m = build_section_model(orbit);
    json rep = base_report("alpha", o, &orbit);
    rep["parameters"] = json{{"label", orbit.label}};
    json results;
    results["mode"] = m.hodge() ? "hodge" : "rational";
    if (m.hodge()) {
        results["lattice_index"] = m.iota->lattice_index.get_str();
        results["iota_identity"] = (m.iota->iota == GMatrix::identity(orbit.rank));
        json mat = json::array();
        for (int i = 0; i < orbit.rank; ++i) {
            json row = json::array();
            for (int j = 0; j < orbit.rank; ++j) row.push_back(format_gaussian(m.iota->iota.at(i, j)));
            mat.push_back(row);
        }
        results["iota"] = mat;
        long B = o.bound > 0 ? o.bound : 3;
        LatticeMinReport lat = lattice_min_norm(m, B);
        results["lattice_min"] = json{{"min_norm", lat.min_norm.get_str()},
                                      {"min_norm_scaled", lat.min_norm_scaled.get_str()},
                                      {"bound", lat.bound},
                                      {"global_certificate", lat.global_certificate}};
    } else {
        json fails = json::array();
        for (const auto& f : m.purity_failures) fails.push_back(f.message);
        if (!m.alpha_failure.empty()) fails.push_back(m.alpha_failure);
        results["failures"] = fails;
    }
    rep["results"] = results;
    rep["verdict"] = m.hodge() ? "split" : "unavailable";
    emit(rep, o);
    return m.hodge() ? 0 : 1;
}

int run_estimate(const CommonOpts& o) {
    NilpotentOrbit orbit = resolve_orbit(o);
    SectionModel m = build_section_model(orbit);
    EstimateParams params;
    params.bound = o.bound > 0 ? o.bound : 20;
    params.grid = make_grid(o);
    GVector v = resolve_target(o, m.fiber_dim);
    EstimateReport r = estimate_epsilon(m, v, params);
    CommonOpts eff = o;
    eff.bound = params.bound;
    json rep = base_report("estimate-epsilon", eff, &orbit);
    rep["parameters"] =
        json{{"label", orbit.label}, {"bound", params.bound}, {"target", gvector_json(v)}};
    rep["results"] = json{{"epsilon", r.epsilon},
                          {"argmin_u", r.argmin_u},
                          {"argmin_z", complex_json(r.argmin_z)},
                          {"argmin_k", r.argmin_k},
                          {"scanned_lattice", r.scanned_lattice},
                          {"scanned_pairs", r.scanned_pairs},
                          {"maxk_positive", r.maxk_positive},
                          {"maxk_positive_supported", r.maxk_positive_supported}};
    bool positive = r.epsilon > o.tol;
    rep["verdict"] = positive ? "positive" : "degenerate";
    emit(rep, eff);
    return positive ? 0 : 1;
}

int run_accumulation(const CommonOpts& o) {
    NilpotentOrbit orbit = resolve_orbit(o);
    SectionModel m = build_section_model(orbit);
    SearchBounds bounds;
    bounds.coeff_bound = o.bound > 0 ? o.bound : 25;
    bounds.grid = make_grid(o);
    if (bounds.grid.y_max <= 0) bounds.grid.y_max = 1e3;
    GVector target = resolve_target(o, m.fiber_dim);
    AccumulationWitness w = find_accumulation(m, target, o.tol, bounds, o.count);
    CommonOpts eff = o;
    eff.bound = bounds.coeff_bound;
    json rep = base_report("find-accumulation", eff, &orbit);
    rep["parameters"] = json{{"label", orbit.label},
                             {"bound", bounds.coeff_bound},
                             {"target", gvector_json(target)},
                             {"tol", o.tol},
                             {"count", o.count}};
    json seq = json::array();
    for (const auto& e : w.sequence)
        seq.push_back(json{{"u", e.u},
                           {"z", complex_json(e.z)},
                           {"distance", e.distance},
                           {"exact", e.exact},
                           {"exact_zero", e.exact_zero}});
    rep["results"] = json{{"found", w.found}, {"witnesses", seq}, {"notes", w.notes}};
    rep["verdict"] = w.found ? "accumulation" : "none";
    emit(rep, eff);
    return w.found ? 0 : 1;
}

int run_separation(const CommonOpts& o) {
    NilpotentOrbit orbit = resolve_orbit(o);
    SectionModel m = build_section_model(orbit);
    SeparationParams params;
    params.radius = parse_radius(o.radius);
    params.coeff_bound = o.bound > 0 ? o.bound : 50;
    params.grid = make_grid(o);
    if (params.grid.y_max <= 0) params.grid.y_max = 1e6;
    params.heuristic_epsilon = o.epsilon;
    GVector target = resolve_target(o, m.fiber_dim);
    SeparationReport r = certify_separation(m, target, params);
    CommonOpts eff = o;
    eff.bound = params.coeff_bound;
    json rep = base_report("certify-separation", eff, &orbit);
    rep["parameters"] = json{{"label", orbit.label},
                             {"bound", params.coeff_bound},
                             {"radius", params.radius.get_str()},
                             {"target", gvector_json(target)}};
    json intruders = json::array();
    for (const auto& in : r.intruders)
        intruders.push_back(json{{"u", in.u},
                                 {"z", complex_json(in.z)},
                                 {"distance", in.distance},
                                 {"reverified", in.reverified}});
    rep["results"] = json{{"certified", r.certified},
                          {"target_invariant", r.target_invariant},
                          {"intruders", intruders},
                          {"sections_through_target", r.sections_through_target},
                          {"excluded_constant_exact", r.excluded_constant_exact},
                          {"excluded_const_coord_exact", r.excluded_const_coord_exact},
                          {"excluded_grid", r.excluded_grid},
                          {"excluded_heuristic", r.excluded_heuristic},
                          {"heuristic_used", r.heuristic_used},
                          {"caveat", r.caveat}};
    rep["verdict"] = r.certified ? "certified" : "not-certified";
    emit(rep, eff);
    return r.certified ? 0 : 1;
}

int run_perturbation(const CommonOpts& o, double m_scale) {
    NilpotentOrbit orbit = resolve_orbit(o);
    SectionModel m = build_section_model(orbit);
    long bound = o.bound > 0 ? o.bound : 5;
    StripGrid grid = make_grid(o);
    PerturbationReport r = perturbation_bound_check(m, unit_perturbation(m, m_scale), bound, grid);
    CommonOpts eff = o;
    eff.bound = bound;
    json rep = base_report("perturbation", eff, &orbit);
    rep["parameters"] = json{{"label", orbit.label}, {"bound", bound}, {"m_scale", m_scale}};
    json per_y = json::array();
    for (const auto& [y, mx] : r.per_y_max) per_y.push_back(json{{"y", y}, {"max_ratio", mx}});
    rep["results"] = json{{"c_prime", r.c_prime},
                          {"argmax_u", r.argmax_u},
                          {"argmax_z", complex_json(r.argmax_z)},
                          {"argmax_k", r.argmax_k},
                          {"bounded_in_y", r.bounded_in_y},
                          {"per_y_max", per_y}};
    rep["verdict"] = r.bounded_in_y ? "bounded" : "unbounded";
    emit(rep, eff);
    return r.bounded_in_y ? 0 : 1;
}

int run_lemma25(const CommonOpts& o, Lemma25Params p) {
    p.seed = o.seed;
    p.r = o.r;
    Lemma25Report r = lemma25_harness(p);
    json rep = base_report("lemma25", o, nullptr);
    rep["parameters"] = json{{"n", p.n},       {"n1", p.n1},
                             {"n2", p.n2},     {"a", complex_json(p.a)},
                             {"a_prime", complex_json(p.a_prime)},
                             {"eps", p.eps},   {"r", p.r},
                             {"trials", p.trials}, {"box", p.box}};
    json coeffs = json::array();
    for (const auto& c : r.argmax_coeffs) coeffs.push_back(complex_json(c));
    rep["results"] = json{{"satisfying", r.satisfying},
                          {"c_empirical", r.c_empirical},
                          {"argmax_coeffs", coeffs},
                          {"argmax_z0", complex_json(r.argmax_z0)},
                          {"binomial_constants", r.binomial_constants}};
    bool ok = r.satisfying > 0;
    rep["verdict"] = ok ? "fitted" : "no-satisfying-samples";
    emit(rep, o);
    return ok ? 0 : 1;
}

int run_sublemma(const CommonOpts& o, const std::string& cmat_text, double eps2, bool do_find) {
    json cj = json::parse(cmat_text);
    std::vector<std::vector<double>> cmat;
    for (const auto& row : cj) {
        std::vector<double> r;
        for (const auto& x : row) r.push_back(x.get<double>());
        cmat.push_back(std::move(r));
    }
    json rep = base_report("sublemma", o, nullptr);
    rep["parameters"] = json{{"cmat", cj}, {"eps2", eps2}};
    if (do_find) {
        double best = find_eps2(cmat);
        rep["results"] = json{{"largest_dyadic_eps2", best}};
        rep["verdict"] = "fitted";
        emit(rep, o);
        return 0;
    }
    SublemmaResult r = sublemma_check(cmat, eps2);
    rep["results"] = json{{"forces_zero", r.forces_zero},
                          {"rho", r.rho},
                          {"simplex_best", r.simplex_best},
                          {"routes_agree", r.routes_agree}};
    rep["verdict"] = r.forces_zero ? "forces-zero" : "feasible";
    emit(rep, o);
    return r.forces_zero ? 0 : 1;
}

int run_example(const CommonOpts& o) {
    if (o.example_name.empty()) {
        json rep;
        rep["command"] = "example";
        rep["examples"] = recipe_names();
        emit(rep, o);
        return 0;
    }
    auto orbit = orbit_by_name(o.example_name);
    if (!orbit) throw CLI::ValidationError("unknown example '" + o.example_name + "'");
    std::ostringstream body;
    body << orbit_to_json(*orbit);
    if (o.out_file.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(o.out_file);
        out << body.str();
    }
    return 0;
}

std::pair<int, int> json_line_col(const std::string& text, size_t byte) {
    int line = 1, col = 1;
    for (size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nilpotent orbit degenerations: limit mixed Hodge structures, "
                 "norm estimates, accumulation and separation searches"};
    app.require_subcommand(1);

    CommonOpts o;
    double m_scale = 1.0;
    Lemma25Params l25;
    double l25_a = 1.0, l25_aprime = 1.0;
    std::string cmat_text = "[[]]";
    double eps2 = 0.25;
    bool find_eps = false;

    add_common(app.add_subcommand("validate", "structural checks of an orbit"), o, true);
    add_common(app.add_subcommand("limit-mhs", "graded Hodge decomposition or purity diagnosis"), o, true);
    add_common(app.add_subcommand("bigrading", "primitive bigrading of the graded space"), o, true);
    auto* alpha_cmd = app.add_subcommand("alpha", "splittings, iota and the lattice minimum");
    add_common(alpha_cmd, o, true);
    add_common(app.add_subcommand("estimate-epsilon", "empirical norm-estimate constant"), o, true);
    add_common(app.add_subcommand("find-accumulation", "search for sections accumulating on a target"), o, true);
    add_common(app.add_subcommand("certify-separation", "bounds-relative separation certificate"), o, true);
    auto* pert_cmd = app.add_subcommand("perturbation", "perturbation bound fit");
    add_common(pert_cmd, o, true);
    pert_cmd->add_option("--m-scale", m_scale, "scale of the unit perturbation block");
    auto* l25_cmd = app.add_subcommand("lemma25", "randomized polynomial estimate harness");
    add_common(l25_cmd, o, false);
    l25_cmd->add_option("--n", l25.n, "polynomial degree bound");
    l25_cmd->add_option("--n1", l25.n1, "derivative conditions on f");
    l25_cmd->add_option("--n2", l25.n2, "derivative conditions on the conjugate");
    l25_cmd->add_option("--a", l25_a, "target constant (real)");
    l25_cmd->add_option("--aprime", l25_aprime, "conjugate target constant (real)");
    l25_cmd->add_option("--eps", l25.eps, "condition tightness");
    l25_cmd->add_option("--trials", l25.trials, "number of samples");
    l25_cmd->add_option("--box", l25.box, "coefficient box half-width");
    auto* sub_cmd = app.add_subcommand("sublemma", "nonnegative-system zero-forcing check");
    add_common(sub_cmd, o, false);
    sub_cmd->add_option("--cmat", cmat_text, "strictly lower triangular constants as JSON");
    sub_cmd->add_option("--eps2", eps2, "candidate eps''");
    sub_cmd->add_flag("--find", find_eps, "binary-search the largest dyadic eps'' < 1/2");
    add_common(app.add_subcommand("example", "print a built-in orbit (or list names)"), o, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (cmd == "validate") return run_validate(o);
        if (cmd == "limit-mhs") return run_limit_mhs(o);
        if (cmd == "bigrading") return run_bigrading(o);
        if (cmd == "alpha") return run_alpha(o);
        if (cmd == "estimate-epsilon") return run_estimate(o);
        if (cmd == "find-accumulation") return run_accumulation(o);
        if (cmd == "certify-separation") return run_separation(o);
        if (cmd == "perturbation") return run_perturbation(o, m_scale);
        if (cmd == "lemma25") {
            l25.a = l25_a;
            l25.a_prime = l25_aprime;
            return run_lemma25(o, l25);
        }
        if (cmd == "sublemma") return run_sublemma(o, cmat_text, eps2, find_eps);
        if (cmd == "example") return run_example(o);
        std::cerr << "unknown subcommand: " << cmd << "\n";
        return 2;
    } catch (const json::parse_error& e) {
        std::string text;
        if (!o.orbit_file.empty()) {
            std::ifstream in(o.orbit_file);
            std::stringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }
        auto [line, col] = json_line_col(text, e.byte);
        std::cerr << "parse error";
        if (!text.empty()) std::cerr << " at line " << line << ", column " << col;
        std::cerr << ": " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
