#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aclab/ac_index.hpp"
#include "aclab/domain.hpp"
#include "aclab/field.hpp"
#include "aclab/spectral_count.hpp"

namespace aclab {

inline constexpr int kSchemaVersion = 1;

// Config problem with a "source:line:column: message" text.
class ConfigError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

enum class Route { Radial, Fem, Toeplitz, Index };
std::string route_name(Route r);

struct Resolution {
    int radial_n = 4096;
    int fiber_cutoff = -1;               // -1: automatic
    std::vector<int> fem_levels{3, 4, 5}; // nested hierarchy, ascending
    std::vector<int> toeplitz_M{64, 128, 256};
};

struct Scenario {
    std::string name = "scenario";
    std::string source = "<string>";
    DomainSpec domain = DomainSpec::disc(1.0);
    FieldSpec field = FieldSpec::constant(0.0);
    RobinSpec robin = RobinSpec::neumann();
    Resolution resolution;
    std::vector<Route> routes;
    std::optional<std::string> json_path, csv_path;
    unsigned seed = 1;

    bool wants(Route r) const;
    // Throws ConfigError when a route does not fit the domain or field.
    void validate() const;
};

Scenario parse_scenario(const std::string& text, const std::string& source = "<string>");
Scenario load_scenario(const std::string& path);

struct FemLevel {
    int level = 0;
    int nodes = 0;
    SpectralCount count;
};

struct ToeplitzLevel {
    int M = 0;
    SpectralCount count;
};

struct Report {
    std::string name;
    std::string domain, field, robin;
    std::string gauge_method;
    std::vector<double> flux, robin_flux;
    double total_flux = 0.0, field_flux = 0.0;
    int bound = 0;
    bool critical = false;

    std::optional<SpectralCount> radial;
    std::vector<int> radial_fiber_counts; // m = -cutoff..cutoff
    int radial_cutoff = 0;
    std::vector<FemLevel> fem;
    bool fem_monotone = true;
    std::optional<double> identity_residual;
    std::vector<ToeplitzLevel> toeplitz;
    double toeplitz_flux_V = 0.0;
    bool toeplitz_stable = true;
    std::optional<int> aps_index;
    std::optional<double> grubb_index;

    std::string verdict = "OK"; // OK, CRITICAL, BOUND-VIOLATED or NO-FEM
    std::vector<std::string> checks_failed;
    std::map<std::string, double> timings;

    bool bound_violated() const { return verdict == "BOUND-VIOLATED"; }
};

Report run(const Scenario& scenario);
// Deterministic JSON (timings omitted unless requested).
std::string report_json(const Report& report, bool with_timings = false);

// CSV "beta,m,branch,lambda": lowest fiber eigenvalues on the disc of radius R for B = beta.
void figure1_data(std::ostream& out, const std::vector<double>& betas, double R, int m_lo, int m_hi, int branches,
                  int n = 2048);

} // namespace aclab
