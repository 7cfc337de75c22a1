#pragma once

#include <string>
#include <vector>

namespace aclab {

// How a count was obtained: discretization level, truncation and zero guard.
struct Certificate {
    std::string method;
    int level = -1;        // mesh level or radial grid size
    int truncation = 0;    // Fourier cutoff or fiber cutoff M
    double tolerance = 0.0;
    int fiber_min = 0, fiber_max = 0;
    bool passed = true;
    std::string note;
};

// Number of eigenvalues below `threshold` (strictly, after the zero guard) and those eigenvalues.
struct SpectralCount {
    int count_negative = 0;
    std::vector<double> eigenvalues_below; // ascending, size == count_negative when complete
    double threshold = 0.0;
    bool threshold_critical = false;
    // Count below +guard; equals count_negative unless a near-zero eigenvalue exists.
    int count_nonpositive = 0;
    Certificate certificate;

    // Checks the ordering and size invariants.
    bool consistent() const;
};

} // namespace aclab
