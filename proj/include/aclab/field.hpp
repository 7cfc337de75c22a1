#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aclab/fourier.hpp"
#include "aclab/types.hpp"

namespace aclab {

class DomainSpec;

// Magnetic field B on a planar domain: constant, radial profile, or an analytic function of x.
class FieldSpec {
public:
    enum class Kind { Constant, Radial, Analytic };

    struct Flags {
        bool nonnegative = false;
        bool radially_nonincreasing = false;
    };

    static FieldSpec constant(double beta);
    static FieldSpec radial(std::function<double(double)> profile, std::string label = "radial");
    // Piecewise-linear profile through (r_i, B_i); radii strictly increasing from 0,
    // constant extrapolation beyond the last sample.
    static FieldSpec radial_samples(std::vector<double> r, std::vector<double> b);
    static FieldSpec analytic(std::function<double(const Vec2&)> b, std::string label = "analytic");

    Kind kind() const { return kind_; }
    bool is_radial() const { return kind_ != Kind::Analytic; }
    bool is_constant() const { return kind_ == Kind::Constant; }
    double beta() const; // constant fields only
    const std::string& label() const { return label_; }

    double operator()(const Vec2& x) const;
    double radial_value(double r) const; // radial fields only

    FieldSpec scaled(double factor) const;
    FieldSpec with_flags(Flags flags) const;
    const Flags& flags() const { return flags_; }

    // Samples B on the domain (and the radial profile) and throws InvalidInput if an
    // asserted flag does not hold.
    void check_flags(const DomainSpec& domain) const;

    // max |B| estimated on a polar sample of the disc of radius r_max.
    double sup_abs(double r_max) const;

private:
    Kind kind_ = Kind::Constant;
    double beta_ = 0.0;
    double scale_ = 1.0;
    std::function<double(double)> profile_;
    std::function<double(const Vec2&)> planar_;
    std::shared_ptr<const std::vector<double>> sample_r_;
    std::shared_ptr<const std::vector<double>> sample_b_;
    Flags flags_;
    std::string label_ = "constant";
};

// Robin coefficient g_j on each boundary component, as a function of arclength.
class RobinSpec {
public:
    static RobinSpec neumann();
    static RobinSpec uniform(double c);
    static RobinSpec per_component(std::vector<PeriodicFunction> g);

    bool is_neumann() const;
    // g_j as an L_j-periodic function; `length` is the component length.
    PeriodicFunction on_component(int j, double length) const;
    std::optional<double> constant_on(int j) const;
    // Throws InvalidInput if component count or periods do not match the domain.
    void check_against(const DomainSpec& domain) const;
    const std::string& label() const { return label_; }

private:
    enum class Kind { Neumann, Uniform, PerComponent } kind_ = Kind::Neumann;
    double c_ = 0.0;
    std::vector<PeriodicFunction> g_;
    std::string label_ = "neumann";
};

} // namespace aclab
