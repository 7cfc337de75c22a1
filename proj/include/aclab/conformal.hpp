#pragma once

#include <vector>

#include "aclab/conformal_map.hpp"
#include "aclab/domain.hpp"
#include "aclab/field.hpp"
#include "aclab/planar_fem.hpp"

namespace aclab {

// Field and Robin data on the image F(D) pulled back to the unit disc:
// B~ = |F'|^2 (B o F), g~ = |f'| (g o f) with f(theta) = F(e^{i theta}).
struct Pullback {
    FieldSpec field;
    RobinSpec robin;
    double flux_image = 0.0;  // (1/2pi) int_Omega B, by triangle quadrature on the image mesh
    double flux_disc = 0.0;   // (1/2pi) int_D B~, polar quadrature
    double robin_image = 0.0; // int_Gamma g ds
    double robin_disc = 0.0;  // int_0^{2pi} g~ dtheta
    double flux_gap() const;
    double robin_gap() const;
};

// Rejects maps that fail the univalence check. `quadrature_level` selects the image mesh used
// for the independent volume integral.
Pullback pullback(const ConformalMap& F, const FieldSpec& field, const RobinSpec& robin, int quadrature_level = 6);

struct InvarianceResult {
    SpectralCount image;
    SpectralCount disc;
    Pullback data;
    bool equal() const { return image.count_negative == disc.count_negative; }
};
InvarianceResult invariance_check(const ConformalMap& F, const FieldSpec& field, const RobinSpec& robin,
                                  int mesh_level, const FemOptions& opt = {});

} // namespace aclab
