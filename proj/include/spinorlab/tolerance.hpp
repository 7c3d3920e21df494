#pragma once

#include <cmath>

namespace spinorlab {

// zero test: |x| < abs + rel * scale
struct Tolerance {
    double abs = 1e-12;
    double rel = 1e-9;

    double threshold(double scale) const { return abs + rel * scale; }
    bool is_zero(double x, double scale) const { return std::abs(x) < threshold(scale); }
};

}  // namespace spinorlab
