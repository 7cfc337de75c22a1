#include "aclab/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>
#include <yaml-cpp/yaml.h>

#include "aclab/gauge.hpp"
#include "aclab/hardy_toeplitz.hpp"
#include "aclab/planar_fem.hpp"
#include "aclab/radial_fibers.hpp"

namespace aclab {

namespace {

// ---- config parsing ---------------------------------------------------------------------

class Parser {
public:
    explicit Parser(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void fail(const YAML::Node& at, const std::string& msg) const
    {
        const YAML::Mark m = at.Mark();
        std::ostringstream os;
        os << source_;
        if (m.line >= 0) os << ":" << m.line + 1 << ":" << m.column + 1;
        os << ": " << msg;
        throw ConfigError(os.str());
    }

    void expect_map(const YAML::Node& n, const std::string& what) const
    {
        if (!n.IsMap()) fail(n, what + " must be a mapping");
    }

    void allow_keys(const YAML::Node& n, std::initializer_list<const char*> keys, const std::string& what) const
    {
        const std::set<std::string> ok(keys.begin(), keys.end());
        for (const auto& kv : n) {
            const auto k = kv.first.as<std::string>();
            if (!ok.count(k)) {
                std::string list;
                for (const auto& s : ok) list += (list.empty() ? "" : ", ") + s;
                fail(kv.first, "unknown key '" + k + "' in " + what + " (allowed: " + list + ")");
            }
        }
    }

    YAML::Node require(const YAML::Node& parent, const char* key, const std::string& what) const
    {
        const YAML::Node n = parent[key];
        if (!n) fail(parent, what + " is missing required key '" + key + "'");
        return n;
    }

    template <class T>
    T as(const YAML::Node& n, const std::string& what) const
    {
        try {
            return n.as<T>();
        } catch (const YAML::Exception&) {
            fail(n, what + " has the wrong type");
        }
    }

    double number(const YAML::Node& parent, const char* key, const std::string& what) const
    {
        const double v = as<double>(require(parent, key, what), what + "." + key);
        if (!std::isfinite(v)) fail(parent[key], what + "." + key + " must be finite");
        return v;
    }

    double number_or(const YAML::Node& parent, const char* key, double def, const std::string& what) const
    {
        return parent[key] ? number(parent, key, what) : def;
    }

    std::vector<double> numbers(const YAML::Node& n, const std::string& what) const
    {
        if (!n.IsSequence()) fail(n, what + " must be a list of numbers");
        std::vector<double> v;
        for (const auto& x : n) v.push_back(as<double>(x, what));
        return v;
    }

    DomainSpec domain(const YAML::Node& n) const
    {
        expect_map(n, "domain");
        const auto type = as<std::string>(require(n, "type", "domain"), "domain.type");
        try {
            if (type == "disc") {
                allow_keys(n, {"type", "radius"}, "domain");
                return DomainSpec::disc(number_or(n, "radius", 1.0, "domain"));
            }
            if (type == "annulus") {
                allow_keys(n, {"type", "r_in", "r_out"}, "domain");
                return DomainSpec::annulus(number(n, "r_in", "domain"), number(n, "r_out", "domain"));
            }
            if (type == "mapped_disc") {
                allow_keys(n, {"type", "coefficients"}, "domain");
                const YAML::Node c = require(n, "coefficients", "domain");
                if (!c.IsSequence()) fail(c, "domain.coefficients must be a list (c_2, c_3, ...)");
                std::vector<Complex> coeffs;
                for (const auto& x : c) {
                    if (x.IsSequence()) {
                        const auto v = numbers(x, "domain.coefficients entry");
                        if (v.size() != 2) fail(x, "complex coefficient must be [re, im]");
                        coeffs.emplace_back(v[0], v[1]);
                    } else {
                        coeffs.emplace_back(as<double>(x, "domain.coefficients entry"), 0.0);
                    }
                }
                return DomainSpec::mapped_disc(ConformalMap(coeffs));
            }
        } catch (const ConfigError&) {
            throw;
        } catch (const InvalidInput& e) {
            fail(n, std::string("invalid domain: ") + e.what());
        }
        fail(n["type"], "unknown domain type '" + type + "' (disc, annulus, mapped_disc)");
    }

    FieldSpec field(const YAML::Node& n) const
    {
        expect_map(n, "field");
        const auto type = as<std::string>(require(n, "type", "field"), "field.type");
        FieldSpec f = FieldSpec::constant(0.0);
        try {
            if (type == "constant") {
                allow_keys(n, {"type", "beta", "nonnegative", "radially_nonincreasing"}, "field");
                f = FieldSpec::constant(number(n, "beta", "field"));
            } else if (type == "gaussian") {
                allow_keys(n, {"type", "amplitude", "scale", "nonnegative", "radially_nonincreasing"}, "field");
                const double a = number(n, "amplitude", "field"), s = number_or(n, "scale", 1.0, "field");
                if (!(s > 0.0)) fail(n["scale"], "field.scale must be positive");
                std::ostringstream label;
                label << a << "*exp(-(r/" << s << ")^2)";
                f = FieldSpec::radial([a, s](double r) { return a * std::exp(-(r / s) * (r / s)); }, label.str());
            } else if (type == "polynomial") {
                allow_keys(n, {"type", "coefficients", "nonnegative", "radially_nonincreasing"}, "field");
                const auto c = numbers(require(n, "coefficients", "field"), "field.coefficients");
                f = FieldSpec::radial(
                    [c](double r) {
                        double v = 0.0;
                        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * r + *it;
                        return v;
                    },
                    "polynomial(r)");
            } else if (type == "samples") {
                allow_keys(n, {"type", "r", "b", "nonnegative", "radially_nonincreasing"}, "field");
                f = FieldSpec::radial_samples(numbers(require(n, "r", "field"), "field.r"),
                                              numbers(require(n, "b", "field"), "field.b"));
            } else if (type == "linear") {
                allow_keys(n, {"type", "b0", "bx", "by", "nonnegative", "radially_nonincreasing"}, "field");
                const double b0 = number_or(n, "b0", 0.0, "field"), bx = number_or(n, "bx", 0.0, "field"),
                             by = number_or(n, "by", 0.0, "field");
                std::ostringstream label;
                label << b0 << "+" << bx << "*x+" << by << "*y";
                f = FieldSpec::analytic([b0, bx, by](const Vec2& x) { return b0 + bx * x.x() + by * x.y(); }, label.str());
            } else {
                fail(n["type"], "unknown field type '" + type + "' (constant, gaussian, polynomial, samples, linear)");
            }
        } catch (const ConfigError&) {
            throw;
        } catch (const InvalidInput& e) {
            fail(n, std::string("invalid field: ") + e.what());
        }
        FieldSpec::Flags flags;
        if (n["nonnegative"]) flags.nonnegative = as<bool>(n["nonnegative"], "field.nonnegative");
        if (n["radially_nonincreasing"])
            flags.radially_nonincreasing = as<bool>(n["radially_nonincreasing"], "field.radially_nonincreasing");
        return f.with_flags(flags);
    }

    RobinSpec robin(const YAML::Node& n, const DomainSpec& domain) const
    {
        expect_map(n, "robin");
        const auto type = as<std::string>(require(n, "type", "robin"), "robin.type");
        if (type == "neumann") {
            allow_keys(n, {"type"}, "robin");
            return RobinSpec::neumann();
        }
        if (type == "constant") {
            allow_keys(n, {"type", "value"}, "robin");
            return RobinSpec::uniform(number(n, "value", "robin"));
        }
        if (type == "fourier") {
            allow_keys(n, {"type", "components"}, "robin");
            const YAML::Node c = require(n, "components", "robin");
            if (!c.IsSequence()) fail(c, "robin.components must be a list, one entry per boundary component");
            if (static_cast<int>(c.size()) != domain.components())
                fail(c, "robin.components has " + std::to_string(c.size()) + " entries but the domain has " +
                            std::to_string(domain.components()) + " boundary components");
            std::vector<PeriodicFunction> g;
            for (std::size_t j = 0; j < c.size(); ++j) {
                const YAML::Node e = c[j];
                expect_map(e, "robin component");
                allow_keys(e, {"a0", "cos", "sin"}, "robin component");
                TrigSeries t;
                t.a0 = number_or(e, "a0", 0.0, "robin component");
                if (e["cos"]) t.cos_coeffs = numbers(e["cos"], "robin.cos");
                if (e["sin"]) t.sin_coeffs = numbers(e["sin"], "robin.sin");
                g.push_back(PeriodicFunction::trig(domain.length(static_cast<int>(j)), t));
            }
            return RobinSpec::per_component(std::move(g));
        }
        fail(n["type"], "unknown robin type '" + type + "' (neumann, constant, fourier)");
    }

    std::vector<int> ints(const YAML::Node& n, const std::string& what, int min) const
    {
        if (!n.IsSequence() || n.size() == 0) fail(n, what + " must be a non-empty list of integers");
        std::vector<int> v;
        for (const auto& x : n) {
            const int k = as<int>(x, what);
            if (k < min) fail(x, what + " entries must be >= " + std::to_string(min));
            if (!v.empty() && k <= v.back()) fail(x, what + " must be strictly increasing");
            v.push_back(k);
        }
        return v;
    }

    Scenario scenario(const YAML::Node& root) const
    {
        if (!root || root.IsNull()) throw ConfigError(source_ + ": empty configuration");
        expect_map(root, "configuration");
        allow_keys(root, {"schema_version", "name", "domain", "field", "robin", "resolution", "routes", "output", "seed"},
                   "configuration");
        const YAML::Node ver = require(root, "schema_version", "configuration");
        if (as<int>(ver, "schema_version") != kSchemaVersion)
            fail(ver, "unsupported schema_version " + ver.as<std::string>() + " (expected " +
                          std::to_string(kSchemaVersion) + ")");
        Scenario s;
        s.source = source_;
        if (root["name"]) s.name = as<std::string>(root["name"], "name");
        s.domain = domain(require(root, "domain", "configuration"));
        const YAML::Node field_node = require(root, "field", "configuration");
        s.field = field(field_node);
        try {
            s.field.check_flags(s.domain);
        } catch (const InvalidInput& e) {
            fail(field_node, e.what());
        }
        if (root["robin"]) s.robin = robin(root["robin"], s.domain);
        if (const YAML::Node r = root["resolution"]) {
            expect_map(r, "resolution");
            allow_keys(r, {"radial_n", "fiber_cutoff", "fem_levels", "toeplitz_M"}, "resolution");
            if (r["radial_n"]) {
                s.resolution.radial_n = as<int>(r["radial_n"], "resolution.radial_n");
                if (s.resolution.radial_n < 16) fail(r["radial_n"], "resolution.radial_n must be at least 16");
            }
            if (r["fiber_cutoff"]) s.resolution.fiber_cutoff = as<int>(r["fiber_cutoff"], "resolution.fiber_cutoff");
            if (r["fem_levels"]) s.resolution.fem_levels = ints(r["fem_levels"], "resolution.fem_levels", 0);
            if (r["toeplitz_M"]) s.resolution.toeplitz_M = ints(r["toeplitz_M"], "resolution.toeplitz_M", 1);
        }
        const YAML::Node routes = require(root, "routes", "configuration");
        if (!routes.IsSequence()) fail(routes, "routes must be a list");
        if (routes.size() == 0) fail(routes, "routes must not be empty (radial, fem, toeplitz, index)");
        for (const auto& r : routes) {
            const auto name = as<std::string>(r, "route");
            Route rt;
            if (name == "radial") rt = Route::Radial;
            else if (name == "fem") rt = Route::Fem;
            else if (name == "toeplitz") rt = Route::Toeplitz;
            else if (name == "index") rt = Route::Index;
            else fail(r, "unknown route '" + name + "' (radial, fem, toeplitz, index)");
            if (s.wants(rt)) fail(r, "route '" + name + "' listed twice");
            s.routes.push_back(rt);
        }
        if (const YAML::Node o = root["output"]) {
            expect_map(o, "output");
            allow_keys(o, {"json", "csv"}, "output");
            if (o["json"]) s.json_path = as<std::string>(o["json"], "output.json");
            if (o["csv"]) s.csv_path = as<std::string>(o["csv"], "output.csv");
        }
        if (root["seed"]) s.seed = as<unsigned>(root["seed"], "seed");
        try {
            s.validate();
        } catch (const InvalidInput& e) {
            fail(routes, e.what());
        }
        return s;
    }

private:
    std::string source_;
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

nlohmann::json count_json(const SpectralCount& c)
{
    nlohmann::json j;
    j["count"] = c.count_negative;
    j["count_nonpositive"] = c.count_nonpositive;
    j["eigenvalues_below"] = c.eigenvalues_below;
    j["threshold"] = c.threshold;
    j["threshold_critical"] = c.threshold_critical;
    j["certificate"] = {{"method", c.certificate.method},
                        {"level", c.certificate.level},
                        {"truncation", c.certificate.truncation},
                        {"tolerance", c.certificate.tolerance},
                        {"fiber_range", {c.certificate.fiber_min, c.certificate.fiber_max}},
                        {"passed", c.certificate.passed},
                        {"note", c.certificate.note}};
    return j;
}

// Random harmonic function sum_k c_k z^k + conj-side terms, |k| <= 4, for the identity check.
SmoothFunction random_harmonic(unsigned seed)
{
    std::mt19937 gen(seed);
    std::normal_distribution<double> nd;
    std::vector<Complex> pos(5), neg(5);
    for (int k = 0; k < 5; ++k) {
        pos[k] = Complex(nd(gen), nd(gen)) / double(1 + k);
        neg[k] = k == 0 ? 0.0 : Complex(nd(gen), nd(gen)) / double(1 + k);
    }
    return [pos, neg](const Vec2& x) {
        const Complex z(x.x(), x.y()), zb = std::conj(z);
        SmoothValue v{0.0, Eigen::Vector2cd::Zero()};
        Complex dz = 0.0, dzb = 0.0;
        for (int k = 0; k < 5; ++k) {
            v.value += pos[k] * std::pow(z, k) + neg[k] * std::pow(zb, k);
            if (k > 0) {
                dz += pos[k] * double(k) * std::pow(z, k - 1);
                dzb += neg[k] * double(k) * std::pow(zb, k - 1);
            }
        }
        // d_1 = d_z + d_zbar, d_2 = i (d_z - d_zbar)
        v.grad << dz + dzb, Complex(0.0, 1.0) * (dz - dzb);
        return v;
    };
}

} // namespace

std::string route_name(Route r)
{
    switch (r) {
    case Route::Radial: return "radial";
    case Route::Fem: return "fem";
    case Route::Toeplitz: return "toeplitz";
    case Route::Index: return "index";
    }
    return "?";
}

bool Scenario::wants(Route r) const { return std::find(routes.begin(), routes.end(), r) != routes.end(); }

void Scenario::validate() const
{
    if (routes.empty()) throw ConfigError("routes must not be empty (radial, fem, toeplitz, index)");
    if (wants(Route::Radial) && !(domain.is_radial() && field.is_radial()))
        throw ConfigError("the radial route needs a disc or annulus and a radial field");
    if (wants(Route::Radial)) {
        for (int j = 0; j < domain.components(); ++j)
            if (!robin.constant_on(j))
                throw ConfigError("the radial route needs a constant Robin coefficient on each circle");
    }
    if (wants(Route::Toeplitz) && !domain.is_simply_connected())
        throw ConfigError("the Hardy-space (toeplitz) route needs a single boundary component");
    if (wants(Route::Toeplitz) && domain.kind() == DomainSpec::Kind::MappedDisc)
        throw ConfigError("the toeplitz route is implemented for discs only");
    robin.check_against(domain);
    field.check_flags(domain);
}

Scenario parse_scenario(const std::string& text, const std::string& source)
{
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        std::ostringstream os;
        os << source << ":" << e.mark.line + 1 << ":" << e.mark.column + 1 << ": YAML syntax error: " << e.msg;
        throw ConfigError(os.str());
    }
    return Parser(source).scenario(root);
}

Scenario load_scenario(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open configuration file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str(), path);
}

Report run(const Scenario& s)
{
    s.validate();
    Report r;
    r.name = s.name;
    r.domain = s.domain.describe();
    r.field = s.field.label();
    r.robin = s.robin.label();
    const int finest = s.resolution.fem_levels.back();

    auto t0 = std::chrono::steady_clock::now();
    const bool radial = s.domain.is_radial() && s.field.is_radial();
    const GaugeData gauge = radial ? solve_radial_potential(s.field, s.domain, s.resolution.radial_n)
                                   : solve_potential_2d(s.field, s.domain, finest);
    r.gauge_method = gauge.method;
    r.flux = gauge.flux;
    r.total_flux = gauge.total_flux;
    r.field_flux = gauge.field_flux;
    r.robin_flux = robin_fluxes(s.robin, s.domain).per_component;
    FluxLedger ledger{s.domain.d(), r.flux, r.robin_flux};
    r.bound = lower_bound(ledger);
    r.critical = threshold_critical(ledger);
    r.timings["gauge"] = seconds_since(t0);

    if (s.wants(Route::Radial)) {
        t0 = std::chrono::steady_clock::now();
        FiberOptions opt;
        opt.n = s.resolution.radial_n;
        const RadialTotal t = total_count(*gauge.radial, radial_boundary(s.robin, s.domain), opt, s.resolution.fiber_cutoff);
        r.radial = t.total;
        r.radial_cutoff = t.cutoff;
        for (const auto& f : t.fibers) r.radial_fiber_counts.push_back(f.count.count_negative);
        if (!t.total.certificate.passed) r.checks_failed.push_back("radial truncation certificate");
        r.timings["radial"] = seconds_since(t0);
    }

    if (s.wants(Route::Fem)) {
        t0 = std::chrono::steady_clock::now();
        FemOptions opt;
        opt.critical = r.critical;
        for (int level : s.resolution.fem_levels) {
            const GaugeData g = radial ? gauge : solve_potential_2d(s.field, s.domain, level);
            const MagneticForm form = assemble(s.domain, g, s.field, s.robin, level);
            FemLevel fl;
            fl.level = level;
            fl.nodes = static_cast<int>(form.K.rows());
            fl.count = count_negative(form, opt);
            if (!r.fem.empty() && fl.count.count_negative < r.fem.back().count.count_negative) r.fem_monotone = false;
            r.fem.push_back(std::move(fl));
            if (level == finest)
                r.identity_residual =
                    form_identity_residual(random_harmonic(s.seed), s.domain, g, s.field, s.robin, level).residual;
        }
        if (!r.fem_monotone) r.checks_failed.push_back("fem counts not monotone over the mesh hierarchy");
        r.timings["fem"] = seconds_since(t0);
    }

    if (s.wants(Route::Toeplitz)) {
        t0 = std::chrono::steady_clock::now();
        const double L = s.domain.length(0);
        const PeriodicFunction a_tau = gauge.radial
                                           ? PeriodicFunction::constant(L, gauge.radial->a(s.domain.outer_radius()))
                                           : gauge.tangential_trace(0);
        const PeriodicFunction V = s.robin.on_component(0, L).plus(-a_tau);
        r.toeplitz_flux_V = V.flux();
        for (int M : s.resolution.toeplitz_M) {
            ToeplitzLevel tl;
            tl.M = M;
            tl.count = toeplitz_count(V, M);
            if (!r.toeplitz.empty() && tl.count.count_negative < r.toeplitz.back().count.count_negative)
                r.checks_failed.push_back("toeplitz counts not monotone in M");
            r.toeplitz.push_back(std::move(tl));
        }
        const std::size_t k = r.toeplitz.size();
        r.toeplitz_stable = k < 2 || r.toeplitz[k - 1].count.count_negative == r.toeplitz[k - 2].count.count_negative;
        if (!r.toeplitz_stable) r.checks_failed.push_back("toeplitz count not stabilized over the last doubling");
        if (r.toeplitz.back().count.count_negative < ceil_ac(-r.toeplitz_flux_V).value)
            r.checks_failed.push_back("toeplitz count below ceil(-Phi_V)");
        r.timings["toeplitz"] = seconds_since(t0);
    }

    if (s.wants(Route::Index)) {
        r.aps_index = aps_index(ledger);
        if (*r.aps_index != r.bound) r.checks_failed.push_back("aps index differs from the lower bound");
        if (s.robin.is_neumann()) {
            r.grubb_index = grubb_index(FluxLedger{s.domain.d(), r.flux, {}});
            if (std::abs(*r.grubb_index - r.bound) > 1e-8) r.checks_failed.push_back("eta-term identity");
        }
    }

    // Route consistency.
    if (r.radial && !r.fem.empty() && r.radial->count_negative != r.fem.back().count.count_negative)
        r.checks_failed.push_back("radial and fem counts differ");
    if (!r.toeplitz.empty() && !r.fem.empty() &&
        r.toeplitz.back().count.count_negative > r.fem.back().count.count_negative)
        r.checks_failed.push_back("toeplitz count exceeds fem count");

    if (r.fem.empty()) {
        r.verdict = "NO-FEM";
    } else if (r.fem.back().count.count_negative >= std::max(r.bound, 0)) {
        r.verdict = "OK";
    } else {
        r.verdict = r.critical ? "CRITICAL" : "BOUND-VIOLATED";
    }
    return r;
}

std::string report_json(const Report& r, bool with_timings)
{
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["name"] = r.name;
    j["domain"] = r.domain;
    j["field"] = r.field;
    j["robin"] = r.robin;
    j["gauge"] = r.gauge_method;
    j["flux"] = {{"per_component", r.flux},
                 {"total", r.total_flux},
                 {"field", r.field_flux},
                 {"robin", r.robin_flux}};
    j["bound"] = {{"value", r.bound}, {"threshold_critical", r.critical}};
    nlohmann::json routes = nlohmann::json::object();
    if (r.radial) {
        routes["radial"] = count_json(*r.radial);
        routes["radial"]["cutoff"] = r.radial_cutoff;
        routes["radial"]["fiber_counts"] = r.radial_fiber_counts;
    }
    if (!r.fem.empty()) {
        nlohmann::json levels = nlohmann::json::array();
        for (const auto& l : r.fem) {
            auto c = count_json(l.count);
            c["level"] = l.level;
            c["dofs"] = l.nodes;
            levels.push_back(c);
        }
        routes["fem"] = {{"levels", levels}, {"count", r.fem.back().count.count_negative}, {"monotone", r.fem_monotone}};
        if (r.identity_residual) routes["fem"]["identity_residual"] = *r.identity_residual;
    }
    if (!r.toeplitz.empty()) {
        nlohmann::json levels = nlohmann::json::array();
        for (const auto& l : r.toeplitz) {
            auto c = count_json(l.count);
            c["M"] = l.M;
            levels.push_back(c);
        }
        routes["toeplitz"] = {{"levels", levels},
                              {"count", r.toeplitz.back().count.count_negative},
                              {"flux_V", r.toeplitz_flux_V},
                              {"stable", r.toeplitz_stable}};
    }
    if (r.aps_index) {
        routes["index"] = {{"lower_bound", r.bound}, {"aps_index", *r.aps_index}};
        if (r.grubb_index) routes["index"]["grubb_index"] = *r.grubb_index;
    }
    j["routes"] = routes;
    j["verdict"] = r.verdict;
    j["checks_failed"] = r.checks_failed;
    if (with_timings) j["timings"] = r.timings;
    return j.dump(2);
}

void figure1_data(std::ostream& out, const std::vector<double>& betas, double R, int m_lo, int m_hi, int branches, int n)
{
    if (m_hi < m_lo || branches < 1) throw InvalidInput("figure1: empty fiber range or no branches");
    out.precision(12);
    out << "beta,m,branch,lambda\n";
    FiberOptions opt;
    opt.n = n;
    opt.report_lowest = branches;
    for (double beta : betas) {
        const RadialGauge gauge(FieldSpec::constant(beta), 0.0, R);
        const FiberGrid grid(gauge, n);
        for (int m = m_lo; m <= m_hi; ++m) {
            const FiberResult f = fiber_count(m, grid, RadialBoundary{}, opt);
            for (int k = 0; k < static_cast<int>(f.lowest.size()); ++k)
                out << beta << "," << m << "," << k << "," << f.lowest[k] << "\n";
        }
    }
}

} // namespace aclab
