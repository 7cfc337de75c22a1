#pragma once

#include <vector>

#include <boost/rational.hpp>

#include "aclab/domain.hpp"

namespace aclab {

// Per-component circulation fluxes Phi_j and Robin fluxes Phi_g,j of a domain with d+1
// boundary components.
struct FluxLedger {
    int d = 0;
    std::vector<double> flux;
    std::vector<double> robin_flux; // empty means g = 0

    double total_flux() const;
    double robin(int j) const { return robin_flux.empty() ? 0.0 : robin_flux.at(j); }
    // Throws InvalidInput unless sizes match d + 1.
    void validate() const;
};

struct AcCeil {
    int value = 0;
    bool critical = false; // x within the guard of an integer
};
// min{z : z >= x}; values within `guard` of an integer snap to it.
AcCeil ceil_ac(double x, double guard = 1e-9);

// -d + sum_j ceil(Phi_j - Phi_g,j). May be negative; consumers clamp with max(., 0).
int lower_bound(const FluxLedger& ledger);
// True if some Phi_j - Phi_g,j is within the guard of an integer.
bool threshold_critical(const FluxLedger& ledger);

// Index bookkeeping: the reference index -d plus, per component, the signed number of
// lattice points m + Phi_V (Phi_V = Phi_g,j - Phi_j) that cross zero relative to the reference
// spectral cut. Independent of lower_bound's ceiling arithmetic.
int aps_index(const FluxLedger& ledger);

// (1 + d)/2 + sum_j (Phi_j - ceil(Phi_j)); only for g = 0.
double eta_term(const FluxLedger& ledger);
// Phi_total + (1 - d)/2 - eta_term, which must equal aps_index.
double grubb_index(const FluxLedger& ledger);

// Exact mode for rational fluxes.
using Rational = boost::rational<long long>;
struct RationalLedger {
    int d = 0;
    std::vector<Rational> flux;
    std::vector<Rational> robin_flux;
    void validate() const;
};
long long ceil_exact(const Rational& x);
long long lower_bound(const RationalLedger& ledger);
long long aps_index(const RationalLedger& ledger);
Rational eta_term(const RationalLedger& ledger);
Rational grubb_index(const RationalLedger& ledger);

// The boundary term (1 - d)/2 written as (1/4pi) sum_j int kappa_j ds from the domain's curvature.
double boundary_term_from_curvature(const DomainSpec& domain);

} // namespace aclab
