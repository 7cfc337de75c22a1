#include "aclab/ac_index.hpp"

#include <cmath>
#include <string>

namespace aclab {

namespace {

// Signed count of lattice points m + p (m in Z) moving across zero relative to p = 0:
// #{m >= 0 : m + p < 0} - #{m < 0 : m + p >= 0}.
template <class T, class Less>
long long lattice_crossings(const T& p, Less less)
{
    long long n = 0;
    for (long long m = 0; less(T(m) + p, T(0)); ++m) ++n;
    for (long long m = -1; !less(T(m) + p, T(0)); --m) --n;
    return n;
}

} // namespace

double FluxLedger::total_flux() const
{
    double s = 0.0;
    for (double f : flux) s += f;
    return s;
}

void FluxLedger::validate() const
{
    if (d < 0) throw InvalidInput("flux ledger: d must be nonnegative");
    if (static_cast<int>(flux.size()) != d + 1)
        throw InvalidInput("flux ledger: expected " + std::to_string(d + 1) + " fluxes, got " + std::to_string(flux.size()));
    if (!robin_flux.empty() && robin_flux.size() != flux.size())
        throw InvalidInput("flux ledger: Robin fluxes must match the number of components");
    for (double f : flux)
        if (!std::isfinite(f)) throw InvalidInput("flux ledger: non-finite flux");
}

AcCeil ceil_ac(double x, double guard)
{
    if (!std::isfinite(x)) throw InvalidInput("ceil: non-finite argument");
    const double r = std::round(x);
    if (std::abs(x - r) <= guard) return {static_cast<int>(r), true};
    return {static_cast<int>(std::ceil(x)), false};
}

int lower_bound(const FluxLedger& ledger)
{
    ledger.validate();
    int n = -ledger.d;
    for (int j = 0; j <= ledger.d; ++j) n += ceil_ac(ledger.flux[j] - ledger.robin(j)).value;
    return n;
}

bool threshold_critical(const FluxLedger& ledger)
{
    ledger.validate();
    for (int j = 0; j <= ledger.d; ++j)
        if (ceil_ac(ledger.flux[j] - ledger.robin(j)).critical) return true;
    return false;
}

int aps_index(const FluxLedger& ledger)
{
    ledger.validate();
    long long n = -ledger.d;
    for (int j = 0; j <= ledger.d; ++j) {
        double pv = ledger.robin(j) - ledger.flux[j];
        const double r = std::round(pv);
        if (std::abs(pv - r) <= 1e-9) pv = r;
        n += lattice_crossings(pv, [](double a, double b) { return a < b; });
    }
    return static_cast<int>(n);
}

double eta_term(const FluxLedger& ledger)
{
    ledger.validate();
    for (double g : ledger.robin_flux)
        if (g != 0.0) throw InvalidInput("eta term: only available for g = 0");
    double eta = 0.5 * (1.0 + ledger.d);
    for (double f : ledger.flux) eta += f - ceil_ac(f).value;
    return eta;
}

double grubb_index(const FluxLedger& ledger)
{
    return ledger.total_flux() + 0.5 * (1.0 - ledger.d) - eta_term(ledger);
}

void RationalLedger::validate() const
{
    if (d < 0) throw InvalidInput("flux ledger: d must be nonnegative");
    if (static_cast<int>(flux.size()) != d + 1)
        throw InvalidInput("flux ledger: expected " + std::to_string(d + 1) + " fluxes, got " + std::to_string(flux.size()));
    if (!robin_flux.empty() && robin_flux.size() != flux.size())
        throw InvalidInput("flux ledger: Robin fluxes must match the number of components");
}

long long ceil_exact(const Rational& x)
{
    // boost::rational keeps a positive denominator.
    const long long q = x.numerator() / x.denominator();
    return q * x.denominator() < x.numerator() ? q + 1 : q;
}

long long lower_bound(const RationalLedger& ledger)
{
    ledger.validate();
    long long n = -ledger.d;
    for (int j = 0; j <= ledger.d; ++j)
        n += ceil_exact(ledger.flux[j] - (ledger.robin_flux.empty() ? Rational(0) : ledger.robin_flux[j]));
    return n;
}

long long aps_index(const RationalLedger& ledger)
{
    ledger.validate();
    long long n = -ledger.d;
    for (int j = 0; j <= ledger.d; ++j) {
        const Rational pv = (ledger.robin_flux.empty() ? Rational(0) : ledger.robin_flux[j]) - ledger.flux[j];
        n += lattice_crossings(pv, [](const Rational& a, const Rational& b) { return a < b; });
    }
    return n;
}

Rational eta_term(const RationalLedger& ledger)
{
    ledger.validate();
    for (const auto& g : ledger.robin_flux)
        if (g != 0) throw InvalidInput("eta term: only available for g = 0");
    Rational eta(1 + ledger.d, 2);
    for (const auto& f : ledger.flux) eta += f - Rational(ceil_exact(f));
    return eta;
}

Rational grubb_index(const RationalLedger& ledger)
{
    Rational total(0);
    for (const auto& f : ledger.flux) total += f;
    return total + Rational(1 - ledger.d, 2) - eta_term(ledger);
}

double boundary_term_from_curvature(const DomainSpec& domain)
{
    return 0.5 * domain.total_turning();
}

} // namespace aclab
