// Command-line front end: scenario runs and the individual routes.
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "aclab/ac_index.hpp"
#include "aclab/boundary_dirac.hpp"
#include "aclab/conformal.hpp"
#include "aclab/gauge.hpp"
#include "aclab/hardy_toeplitz.hpp"
#include "aclab/mesh.hpp"
#include "aclab/parallel.hpp"
#include "aclab/planar_fem.hpp"
#include "aclab/radial_fibers.hpp"
#include "aclab/scenario.hpp"
#include "aclab/semiclassical.hpp"

using namespace aclab;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kNumerical = 2, kBoundViolated = 3 };

void emit(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path);
    out << text << "\n";
}

json count_summary(const SpectralCount& c)
{
    return {{"count", c.count_negative},
            {"count_nonpositive", c.count_nonpositive},
            {"eigenvalues_below", c.eigenvalues_below},
            {"threshold_critical", c.threshold_critical},
            {"certificate",
             {{"method", c.certificate.method},
              {"level", c.certificate.level},
              {"truncation", c.certificate.truncation},
              {"tolerance", c.certificate.tolerance},
              {"passed", c.certificate.passed},
              {"note", c.certificate.note}}}};
}

// Inline boundary potential: a0 + sum cos/sin harmonics on a circle of the given length.
struct InlinePotential {
    double a0 = 0.0;
    std::vector<double> cos, sin;
    double length = two_pi;
    PeriodicFunction get() const { return PeriodicFunction::trig(length, TrigSeries{a0, cos, sin}); }
};

void add_inline(CLI::App* app, InlinePotential& p)
{
    app->add_option("--a0", p.a0, "Mean term of V");
    app->add_option("--cos", p.cos, "Cosine coefficients of V (comma separated)")->delimiter(',');
    app->add_option("--sin", p.sin, "Sine coefficients of V (comma separated)")->delimiter(',');
    app->add_option("--length", p.length, "Length of the boundary curve")->check(CLI::PositiveNumber);
}

// Boundary potentials V_j = g_j - A_tau,j of a scenario.
std::vector<PeriodicFunction> scenario_potentials(const Scenario& s, bool conjugate)
{
    const bool radial = s.domain.is_radial() && s.field.is_radial();
    const GaugeData g = radial ? solve_radial_potential(s.field, s.domain)
                               : solve_potential_2d(s.field, s.domain, s.resolution.fem_levels.back());
    std::vector<PeriodicFunction> V;
    for (int j = 0; j < s.domain.components(); ++j) {
        const double L = s.domain.length(j);
        PeriodicFunction at = g.tangential_trace(j);
        if (g.radial) {
            // tau = e_theta outside, -e_theta inside.
            const double r = j == 0 ? s.domain.outer_radius() : s.domain.inner_radius();
            at = PeriodicFunction::constant(L, (j == 0 ? 1.0 : -1.0) * g.radial->a(r));
        }
        const PeriodicFunction gj = s.robin.on_component(j, L);
        V.push_back(conjugate ? conjugate_boundary_potential(gj, at) : boundary_potential(gj, at));
    }
    return V;
}

Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text));
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw InvalidInput("cannot parse rational '" + text + "' (use p/q or an integer)");
    }
}

std::string rational_text(const Rational& r)
{
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << "/" << r.denominator();
    return os.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spectral counting for magnetic Robin Laplacians in the plane"};
    app.require_subcommand(1);
    long seed = -1;
    app.add_option("--seed", seed, "Seed for random test vectors (overrides the config)");
    bool timings = false;
    app.add_flag("--timings", timings, "Include timing fields in JSON reports");

    std::vector<std::string> configs;
    std::string out_path, csv_path;

    auto* validate = app.add_subcommand("validate", "Check configuration files");
    validate->add_option("--config", configs, "Configuration file(s)")->required()->check(CLI::ExistingFile);

    auto* run_cmd = app.add_subcommand("run", "Run all configured routes and cross-validate");
    run_cmd->add_option("--config", configs, "Configuration file(s)")->required()->check(CLI::ExistingFile);
    run_cmd->add_option("--out", out_path, "Write the JSON report here");

    auto* radial = app.add_subcommand("radial-count", "Fiber-by-fiber count on a disc or annulus");
    radial->add_option("--config", configs, "Configuration file")->required()->check(CLI::ExistingFile);
    radial->add_option("--csv", csv_path, "Per-fiber CSV output");
    radial->add_option("--out", out_path, "JSON output");

    int level = -1;
    std::string mesh_in, mesh_out;
    auto* fem = app.add_subcommand("fem-count", "P1 finite-element count by matrix inertia");
    fem->add_option("--config", configs, "Configuration file")->required()->check(CLI::ExistingFile);
    fem->add_option("--level", level, "Mesh level (default: finest configured)");
    fem->add_option("--mesh", mesh_in, "Import a mesh instead of generating one")->check(CLI::ExistingFile);
    fem->add_option("--export-mesh", mesh_out, "Write the mesh used");
    fem->add_option("--out", out_path, "JSON output");

    InlinePotential pot;
    int m_lo = -10, m_hi = 10, samples = 0, check_M = 0;
    bool conjugate = false;
    auto* dirac = app.add_subcommand("dirac-spectrum", "Exact spectrum of -i d/ds + V per boundary component");
    dirac->add_option("--config", configs, "Configuration file (else the inline potential is used)")
        ->check(CLI::ExistingFile);
    add_inline(dirac, pot);
    dirac->add_option("--m-min", m_lo, "Lowest mode");
    dirac->add_option("--m-max", m_hi, "Highest mode");
    dirac->add_option("--samples", samples, "Eigenfunction samples per mode (CSV only)");
    dirac->add_option("--check", check_M, "Also run the Fourier-Galerkin check with this truncation");
    dirac->add_flag("--conjugate", conjugate, "Use V^c = -g - A_tau");
    dirac->add_option("--csv", csv_path, "CSV output of (component, m, mu)");
    dirac->add_option("--out", out_path, "JSON output");

    std::vector<int> Ms{64, 128, 256};
    auto* toeplitz = app.add_subcommand("toeplitz-count", "Hardy-space compression count");
    toeplitz->add_option("--config", configs, "Configuration file (disc)")->check(CLI::ExistingFile);
    add_inline(toeplitz, pot);
    toeplitz->add_option("--M", Ms, "Truncations (comma separated)")->delimiter(',');
    toeplitz->add_option("--out", out_path, "JSON output");

    auto* conformal = app.add_subcommand("conformal-check", "Counts on F(D) and on the pulled-back disc problem");
    conformal->add_option("--config", configs, "Configuration file (mapped_disc domain)")->required()->check(CLI::ExistingFile);
    conformal->add_option("--level", level, "Mesh level (default: finest configured)");
    conformal->add_option("--out", out_path, "JSON output");

    double radius = 1.0;
    std::vector<double> hs{0.2, 0.1, 0.05, 0.02, 0.01};
    bool with_c1 = false;
    auto* semi = app.add_subcommand("semiclassical-sweep", "N(L_h, h) and eigenvalue sums on the disc, B = 1");
    semi->add_option("--radius", radius, "Disc radius")->check(CLI::PositiveNumber);
    semi->add_option("--h-values", hs, "Values of h (comma separated)")->delimiter(',');
    semi->add_flag("--c1", with_c1, "Also compute the de Gennes constant C1");
    semi->add_option("--csv", csv_path, "CSV output");
    semi->add_option("--out", out_path, "JSON output");

    std::vector<std::string> flux_text, robin_text;
    int d = 0;
    bool rational = false;
    auto* index = app.add_subcommand("index", "Closed-form bound, index bookkeeping and eta-term identity");
    index->add_option("--flux", flux_text, "Phi_j per component (comma separated)")->required()->delimiter(',');
    index->add_option("--robin-flux", robin_text, "Phi_g,j per component")->delimiter(',');
    index->add_option("-d", d, "Number of boundary components minus one");
    index->add_flag("--rational", rational, "Exact arithmetic; fluxes as p/q");
    index->add_option("--out", out_path, "JSON output");

    double beta_min = 0.0, beta_max = 8.0;
    int steps = 81, branches = 3, fig_m_lo = -2, fig_m_hi = 5, fig_n = 2048;
    auto* fig = app.add_subcommand("figure1-data", "Low-lying fiber eigenvalues against beta on the disc");
    fig->add_option("--beta-min", beta_min);
    fig->add_option("--beta-max", beta_max);
    fig->add_option("--steps", steps)->check(CLI::PositiveNumber);
    fig->add_option("--radius", radius)->check(CLI::PositiveNumber);
    fig->add_option("--m-min", fig_m_lo);
    fig->add_option("--m-max", fig_m_hi);
    fig->add_option("--branches", branches)->check(CLI::PositiveNumber);
    fig->add_option("--n", fig_n, "Radial elements")->check(CLI::PositiveNumber);
    fig->add_option("--csv", csv_path, "CSV output (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        auto load = [&](const std::string& path) {
            Scenario s = load_scenario(path);
            if (seed >= 0) s.seed = static_cast<unsigned>(seed);
            return s;
        };

        if (*validate) {
            for (const auto& c : configs) {
                const Scenario s = load(c);
                std::cout << c << ": ok (" << s.name << ", " << s.domain.describe() << ")\n";
            }
            return kOk;
        }

        if (*run_cmd) {
            std::vector<Scenario> list;
            for (const auto& c : configs) list.push_back(load(c));
            std::vector<Report> reports(list.size());
            parallel_for(static_cast<int>(list.size()), [&](int i) { reports[i] = run(list[i]); });
            bool violated = false;
            json all = json::array();
            for (std::size_t i = 0; i < list.size(); ++i) {
                const std::string text = report_json(reports[i], timings);
                if (list[i].json_path) emit(text, *list[i].json_path);
                all.push_back(json::parse(text));
                violated = violated || reports[i].bound_violated();
            }
            emit(all.size() == 1 ? all[0].dump(2) : all.dump(2), out_path);
            return violated ? kBoundViolated : kOk;
        }

        if (*radial) {
            Scenario s = load(configs.front());
            if (!(s.domain.is_radial() && s.field.is_radial()))
                throw InvalidInput("radial-count needs a disc or annulus with a radial field");
            const GaugeData g = solve_radial_potential(s.field, s.domain, s.resolution.radial_n);
            FiberOptions opt;
            opt.n = s.resolution.radial_n;
            const RadialTotal t = total_count(*g.radial, radial_boundary(s.robin, s.domain), opt, s.resolution.fiber_cutoff);
            if (!csv_path.empty()) {
                std::ofstream out(csv_path);
                write_fiber_csv(out, t);
            }
            const FluxLedger ledger{s.domain.d(), g.flux, robin_fluxes(s.robin, s.domain).per_component};
            json j = count_summary(t.total);
            j["flux"] = g.flux;
            j["bound"] = lower_bound(ledger);
            j["cutoff"] = t.cutoff;
            emit(j.dump(2), out_path);
            return t.total.certificate.passed ? kOk : kNumerical;
        }

        if (*fem) {
            Scenario s = load(configs.front());
            if (level < 0) level = s.resolution.fem_levels.back();
            std::shared_ptr<const TriMesh> mesh;
            if (!mesh_in.empty()) {
                std::ifstream in(mesh_in);
                mesh = std::make_shared<const TriMesh>(read_mesh(in));
                level = mesh->level;
            }
            const GaugeData g = mesh ? solve_potential_2d(s.field, s.domain, mesh) : planar_gauge(s.field, s.domain, level);
            const MagneticForm form = assemble(s.domain, g, s.field, s.robin, level);
            if (!mesh_out.empty()) {
                std::ofstream out(mesh_out);
                write_mesh(out, *form.mesh);
            }
            const FluxLedger ledger{s.domain.d(), g.flux, robin_fluxes(s.robin, s.domain).per_component};
            FemOptions opt;
            opt.critical = threshold_critical(ledger);
            const SpectralCount c = count_negative(form, opt);
            json j = count_summary(c);
            j["flux"] = g.flux;
            j["bound"] = lower_bound(ledger);
            j["dofs"] = form.K.rows();
            j["gauge"] = g.method;
            emit(j.dump(2), out_path);
            const bool violated = c.count_negative < std::max(lower_bound(ledger), 0) && !c.threshold_critical;
            return violated ? kBoundViolated : kOk;
        }

        if (*dirac) {
            std::vector<PeriodicFunction> V;
            if (!configs.empty()) V = scenario_potentials(load(configs.front()), conjugate);
            else V.push_back(pot.get());
            json comps = json::array();
            std::ostringstream csv;
            csv.precision(15);
            csv << "component,m,mu" << (samples > 0 ? ",s,re_f,im_f" : "") << "\n";
            for (std::size_t j = 0; j < V.size(); ++j) {
                const BoundarySpectrum b = dirac_spectrum(V[j], m_lo, m_hi, samples);
                json c = {{"component", j}, {"length", b.length}, {"flux_V", b.flux},
                          {"kernel_dimension", b.kernel_dimension()}, {"eigenvalues", b.eigenvalues}};
                if (check_M > 0) {
                    const NumericCheck nc = numeric_spectrum_check(V[j], check_M);
                    c["numeric_check"] = {{"M", check_M}, {"deviation", nc.deviation}, {"compared", nc.compared}};
                }
                comps.push_back(c);
                for (int m = m_lo; m <= m_hi; ++m) {
                    if (samples > 0) {
                        for (int k = 0; k < samples; ++k) {
                            const Complex f = b.eigenfunctions(k, m - m_lo);
                            csv << j << "," << m << "," << b.mu(m) << "," << b.s[k] << "," << f.real() << "," << f.imag() << "\n";
                        }
                    } else {
                        csv << j << "," << m << "," << b.mu(m) << "\n";
                    }
                }
            }
            if (!csv_path.empty()) emit(csv.str(), csv_path);
            emit(json{{"components", comps}}.dump(2), out_path);
            return kOk;
        }

        if (*toeplitz) {
            PeriodicFunction V = pot.get();
            if (!configs.empty()) {
                const Scenario s = load(configs.front());
                if (s.domain.kind() != DomainSpec::Kind::Disc)
                    throw InvalidInput("toeplitz-count needs a disc (the Hardy route is single-component)");
                V = scenario_potentials(s, false).front();
            }
            json levels = json::array();
            int last = -1, prev = -1;
            for (int M : Ms) {
                const SpectralCount c = toeplitz_count(V, M);
                json l = count_summary(c);
                l["M"] = M;
                levels.push_back(l);
                prev = last;
                last = c.count_negative;
            }
            json j = {{"flux_V", V.flux()},
                      {"bound", ceil_ac(-V.flux()).value},
                      {"levels", levels},
                      {"count", last},
                      {"stable", prev < 0 || prev == last}};
            emit(j.dump(2), out_path);
            return kOk;
        }

        if (*conformal) {
            const Scenario s = load(configs.front());
            if (s.domain.kind() != DomainSpec::Kind::MappedDisc)
                throw InvalidInput("conformal-check needs a mapped_disc domain");
            if (level < 0) level = s.resolution.fem_levels.back();
            const InvarianceResult r = invariance_check(s.domain.map(), s.field, s.robin, level);
            json j = {{"level", level},
                      {"image", count_summary(r.image)},
                      {"disc", count_summary(r.disc)},
                      {"equal", r.equal()},
                      {"flux", {{"image", r.data.flux_image}, {"disc", r.data.flux_disc}}},
                      {"robin_integral", {{"image", r.data.robin_image}, {"disc", r.data.robin_disc}}}};
            emit(j.dump(2), out_path);
            return r.equal() ? kOk : kNumerical;
        }

        if (*semi) {
            const SweepResult sw = sweep_disc(radius, hs);
            if (!csv_path.empty()) {
                std::ofstream out(csv_path);
                write_sweep_csv(out, sw);
            }
            json pts = json::array();
            for (const auto& p : sw.points)
                pts.push_back({{"h", p.h},
                               {"N", p.count},
                               {"prediction", p.prediction},
                               {"hN", p.h * p.count},
                               {"sum_e", p.sum_e},
                               {"sum_gap", p.sum_gap},
                               {"sum_gap_over_sqrt_h", p.sum_gap / std::sqrt(p.h)},
                               {"certified", p.certified}});
            json j = {{"radius", radius}, {"area_term", 0.5 * radius * radius}, {"points", pts}};
            if (with_c1) {
                const DeGennesConstant c = de_gennes_C1();
                j["C1"] = {{"value", c.C1}, {"error", c.error}, {"xi_min", c.xi_min}, {"mu_min", c.mu_min}};
                j["length_term_prediction"] = c.C1 * radius;
            }
            emit(j.dump(2), out_path);
            return kOk;
        }

        if (*index) {
            json j;
            if (rational) {
                RationalLedger L{d, {}, {}};
                for (const auto& t : flux_text) L.flux.push_back(parse_rational(t));
                for (const auto& t : robin_text) L.robin_flux.push_back(parse_rational(t));
                j = {{"mode", "rational"}, {"lower_bound", lower_bound(L)}, {"aps_index", aps_index(L)}};
                if (L.robin_flux.empty()) {
                    j["eta_term"] = rational_text(eta_term(L));
                    j["grubb_index"] = rational_text(grubb_index(L));
                }
            } else {
                FluxLedger L{d, {}, {}};
                for (const auto& t : flux_text) L.flux.push_back(std::stod(t));
                for (const auto& t : robin_text) L.robin_flux.push_back(std::stod(t));
                j = {{"mode", "float"},
                     {"lower_bound", lower_bound(L)},
                     {"aps_index", aps_index(L)},
                     {"threshold_critical", threshold_critical(L)}};
                if (L.robin_flux.empty()) {
                    j["eta_term"] = eta_term(L);
                    j["grubb_index"] = grubb_index(L);
                }
            }
            emit(j.dump(2), out_path);
            return kOk;
        }

        if (*fig) {
            std::vector<double> betas;
            for (int i = 0; i < steps; ++i)
                betas.push_back(steps == 1 ? beta_min : beta_min + (beta_max - beta_min) * i / (steps - 1));
            std::ostringstream os;
            figure1_data(os, betas, radius, fig_m_lo, fig_m_hi, branches, fig_n);
            if (csv_path.empty()) std::cout << os.str();
            else emit(os.str(), csv_path);
            return kOk;
        }
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kOk;
}
