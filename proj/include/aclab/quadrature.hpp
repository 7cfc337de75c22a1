#pragma once

#include <array>

namespace aclab::quad {

// Gauss-Legendre rules on [0, 1].
struct Rule1D {
    const double* x;
    const double* w;
    int n;
};

inline constexpr std::array<double, 3> gl3_x{0.1127016653792583, 0.5, 0.8872983346207417};
inline constexpr std::array<double, 3> gl3_w{0.2777777777777778, 0.4444444444444444, 0.2777777777777778};

inline constexpr std::array<double, 5> gl5_x{0.04691007703066800, 0.2307653449471585, 0.5,
                                             0.7692346550528415, 0.9530899229693320};
inline constexpr std::array<double, 5> gl5_w{0.1184634425280945, 0.2393143352496832,
                                             0.2844444444444444, 0.2393143352496832,
                                             0.1184634425280945};

inline constexpr std::array<double, 8> gl8_x{0.01985507175123188, 0.1016667612931866,
                                             0.2372337950418355,  0.4082826787521751,
                                             0.5917173212478249,  0.7627662049581645,
                                             0.8983332387068134,  0.9801449282487681};
inline constexpr std::array<double, 8> gl8_w{0.05061426814518813, 0.1111905172266872,
                                             0.1568533229389436,  0.1813418916891810,
                                             0.1813418916891810,  0.1568533229389436,
                                             0.1111905172266872,  0.05061426814518813};

inline constexpr Rule1D gauss3{gl3_x.data(), gl3_w.data(), 3};
inline constexpr Rule1D gauss5{gl5_x.data(), gl5_w.data(), 5};
inline constexpr Rule1D gauss8{gl8_x.data(), gl8_w.data(), 8};

// 7-point degree-5 rule on the reference triangle; barycentric points, weights sum to 1.
struct TriPoint {
    double l0, l1, l2, w;
};

inline constexpr std::array<TriPoint, 7> tri7{{
    {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 0.225},
    {0.0597158717897698, 0.4701420641051151, 0.4701420641051151, 0.1323941527885062},
    {0.4701420641051151, 0.0597158717897698, 0.4701420641051151, 0.1323941527885062},
    {0.4701420641051151, 0.4701420641051151, 0.0597158717897698, 0.1323941527885062},
    {0.7974269853530873, 0.1012865073234563, 0.1012865073234563, 0.1259391805448271},
    {0.1012865073234563, 0.7974269853530873, 0.1012865073234563, 0.1259391805448271},
    {0.1012865073234563, 0.1012865073234563, 0.7974269853530873, 0.1259391805448271},
}};

} // namespace aclab::quad
