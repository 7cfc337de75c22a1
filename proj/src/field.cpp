#include "aclab/field.hpp"

#include <algorithm>
#include <cmath>

#include "aclab/domain.hpp"

namespace aclab {

FieldSpec FieldSpec::constant(double beta)
{
    if (!std::isfinite(beta)) throw InvalidInput("field: non-finite constant");
    FieldSpec f;
    f.kind_ = Kind::Constant;
    f.beta_ = beta;
    f.flags_ = {beta >= 0.0, true};
    f.label_ = "constant";
    return f;
}

FieldSpec FieldSpec::radial(std::function<double(double)> profile, std::string label)
{
    if (!profile) throw InvalidInput("field: empty radial profile");
    FieldSpec f;
    f.kind_ = Kind::Radial;
    f.profile_ = std::move(profile);
    f.label_ = std::move(label);
    return f;
}

FieldSpec FieldSpec::radial_samples(std::vector<double> r, std::vector<double> b)
{
    if (r.size() != b.size() || r.size() < 2)
        throw InvalidInput("field: radial samples need at least two (r, B) pairs of equal length");
    if (r.front() != 0.0) throw InvalidInput("field: radial samples must start at r = 0");
    for (std::size_t i = 1; i < r.size(); ++i)
        if (!(r[i] > r[i - 1]))
            throw InvalidInput("field: radial sample radii must be strictly increasing (index " +
                               std::to_string(i) + ")");
    for (double v : b)
        if (!std::isfinite(v)) throw InvalidInput("field: non-finite radial sample");
    auto rs = std::make_shared<const std::vector<double>>(std::move(r));
    auto bs = std::make_shared<const std::vector<double>>(std::move(b));
    FieldSpec f = radial(
        [rs, bs](double rr) {
            const auto& R = *rs;
            const auto& B = *bs;
            if (rr <= 0.0) return B.front();
            if (rr >= R.back()) return B.back();
            const auto it = std::upper_bound(R.begin(), R.end(), rr);
            const std::size_t i = static_cast<std::size_t>(it - R.begin()) - 1;
            const double t = (rr - R[i]) / (R[i + 1] - R[i]);
            return (1.0 - t) * B[i] + t * B[i + 1];
        },
        "radial-samples");
    f.sample_r_ = rs;
    f.sample_b_ = bs;
    return f;
}

FieldSpec FieldSpec::analytic(std::function<double(const Vec2&)> b, std::string label)
{
    if (!b) throw InvalidInput("field: empty analytic function");
    FieldSpec f;
    f.kind_ = Kind::Analytic;
    f.planar_ = std::move(b);
    f.label_ = std::move(label);
    return f;
}

double FieldSpec::beta() const
{
    if (kind_ != Kind::Constant) throw InvalidInput("field: beta() requires a constant field");
    return scale_ * beta_;
}

double FieldSpec::operator()(const Vec2& x) const
{
    switch (kind_) {
    case Kind::Constant: return scale_ * beta_;
    case Kind::Radial: return scale_ * profile_(x.norm());
    case Kind::Analytic: return scale_ * planar_(x);
    }
    return 0.0;
}

double FieldSpec::radial_value(double r) const
{
    switch (kind_) {
    case Kind::Constant: return scale_ * beta_;
    case Kind::Radial: return scale_ * profile_(r);
    case Kind::Analytic: break;
    }
    throw InvalidInput("field: radial value requested for a non-radial field");
}

FieldSpec FieldSpec::scaled(double factor) const
{
    FieldSpec f = *this;
    f.scale_ *= factor;
    if (factor < 0.0) f.flags_.nonnegative = false;
    if (factor < 0.0 && kind_ != Kind::Constant) f.flags_.radially_nonincreasing = false;
    if (kind_ == Kind::Constant) f.flags_.nonnegative = f.beta() >= 0.0;
    return f;
}

FieldSpec FieldSpec::with_flags(Flags flags) const
{
    FieldSpec f = *this;
    f.flags_ = flags;
    return f;
}

double FieldSpec::sup_abs(double r_max) const
{
    if (kind_ == Kind::Constant) return std::abs(beta());
    double m = 0.0;
    for (int i = 0; i <= 64; ++i) {
        const double r = r_max * i / 64.0;
        if (kind_ == Kind::Radial) {
            m = std::max(m, std::abs(radial_value(r)));
            continue;
        }
        for (int k = 0; k < 64; ++k) {
            const double t = two_pi * k / 64.0;
            m = std::max(m, std::abs((*this)(Vec2(r * std::cos(t), r * std::sin(t)))));
        }
    }
    return m;
}

void FieldSpec::check_flags(const DomainSpec& domain) const
{
    if (!flags_.nonnegative && !flags_.radially_nonincreasing) return;
    const int nr = 200, nt = 64;
    const double r0 = domain.kind() == DomainSpec::Kind::Annulus ? domain.inner_radius() : 0.0;
    const double r1 = domain.outer_radius();
    std::vector<double> values;
    for (int i = 0; i <= nr; ++i) {
        const double r = r0 + (r1 - r0) * i / nr;
        for (int k = 0; k < nt; ++k) {
            const double t = two_pi * k / nt;
            Vec2 x(r * std::cos(t), r * std::sin(t));
            if (domain.kind() == DomainSpec::Kind::MappedDisc) x = domain.map().apply(x);
            values.push_back((*this)(x));
        }
    }
    double vmax = 0.0;
    for (double v : values) vmax = std::max(vmax, std::abs(v));
    if (flags_.nonnegative) {
        for (double v : values)
            if (v < -1e-12 * vmax)
                throw InvalidInput("field '" + label_ + "' is flagged nonnegative but takes the value " +
                                   std::to_string(v));
    }
    if (flags_.radially_nonincreasing) {
        if (!is_radial())
            throw InvalidInput("field '" + label_ + "' is flagged radially nonincreasing but is not radial");
        if (sample_b_) {
            const auto& b = *sample_b_;
            for (std::size_t i = 1; i < b.size(); ++i)
                if (b[i] > b[i - 1])
                    throw InvalidInput("field '" + label_ +
                                       "': radial samples increase at index " + std::to_string(i));
        }
        double prev = radial_value(0.0);
        for (int i = 1; i <= 2000; ++i) {
            const double v = radial_value(r1 * i / 2000.0);
            if (v > prev + 1e-12 * std::max(1.0, vmax))
                throw InvalidInput("field '" + label_ + "' is flagged radially nonincreasing but increases near r = " +
                                   std::to_string(r1 * i / 2000.0));
            prev = v;
        }
    }
}

RobinSpec RobinSpec::neumann() { return RobinSpec{}; }

RobinSpec RobinSpec::uniform(double c)
{
    if (!std::isfinite(c)) throw InvalidInput("robin: non-finite coefficient");
    RobinSpec r;
    r.kind_ = c == 0.0 ? Kind::Neumann : Kind::Uniform;
    r.c_ = c;
    r.label_ = c == 0.0 ? "neumann" : "uniform";
    return r;
}

RobinSpec RobinSpec::per_component(std::vector<PeriodicFunction> g)
{
    if (g.empty()) throw InvalidInput("robin: per-component data needs at least one component");
    RobinSpec r;
    r.kind_ = Kind::PerComponent;
    r.g_ = std::move(g);
    r.label_ = "per-component";
    return r;
}

bool RobinSpec::is_neumann() const
{
    if (kind_ == Kind::Neumann) return true;
    if (kind_ == Kind::Uniform) return c_ == 0.0;
    return std::all_of(g_.begin(), g_.end(), [](const PeriodicFunction& f) {
        return f.constant_value() && *f.constant_value() == 0.0;
    });
}

PeriodicFunction RobinSpec::on_component(int j, double length) const
{
    switch (kind_) {
    case Kind::Neumann: return PeriodicFunction::constant(length, 0.0);
    case Kind::Uniform: return PeriodicFunction::constant(length, c_);
    case Kind::PerComponent:
        if (j < 0 || j >= static_cast<int>(g_.size()))
            throw InvalidInput("robin: no data for boundary component " + std::to_string(j));
        return g_[j];
    }
    return PeriodicFunction::constant(length, 0.0);
}

std::optional<double> RobinSpec::constant_on(int j) const
{
    switch (kind_) {
    case Kind::Neumann: return 0.0;
    case Kind::Uniform: return c_;
    case Kind::PerComponent:
        if (j < 0 || j >= static_cast<int>(g_.size())) return std::nullopt;
        return g_[j].constant_value();
    }
    return std::nullopt;
}

void RobinSpec::check_against(const DomainSpec& domain) const
{
    if (kind_ != Kind::PerComponent) return;
    if (static_cast<int>(g_.size()) != domain.components())
        throw InvalidInput("robin: " + std::to_string(g_.size()) + " components given, domain has " +
                           std::to_string(domain.components()));
    for (int j = 0; j < domain.components(); ++j) {
        const double L = domain.length(j);
        if (std::abs(g_[j].length() - L) > 1e-9 * L)
            throw InvalidInput("robin: period of component " + std::to_string(j) + " is " +
                               std::to_string(g_[j].length()) + " but the component length is " +
                               std::to_string(L));
    }
}

} // namespace aclab
