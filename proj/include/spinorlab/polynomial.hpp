#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace spinorlab {

// coefficients highest power first: c[0] x^4 + ... + c[4]
using Quartic = std::array<double, 5>;

template <class T>
T polyval(const Quartic& c, T x) {
    T r = c[0];
    for (std::size_t i = 1; i < 5; ++i) r = r * x + c[i];
    return r;
}

template <class T>
T polyder(const Quartic& c, T x) {
    return ((4.0 * c[0] * x + 3.0 * c[1]) * x + 2.0 * c[2]) * x + c[3];
}

struct QuarticRoots {
    std::array<std::complex<double>, 4> roots{};
    bool biquadratic = false;

    std::vector<double> real_roots(double imag_tol = 1e-9) const {
        std::vector<double> r;
        for (auto z : roots)
            if (std::abs(z.imag()) <= imag_tol * (1.0 + std::abs(z))) r.push_back(z.real());
        std::sort(r.begin(), r.end());
        return r;
    }
};

namespace detail {
// roots of a x^2 + b x + c without cancellation
inline std::array<std::complex<double>, 2> quadratic_roots(double a, double b, double c) {
    using C = std::complex<double>;
    const C disc = std::sqrt(C(b * b - 4 * a * c, 0.0));
    const C q = -0.5 * (b >= 0 ? C(b) + disc : C(b) - disc);
    if (std::abs(q) == 0.0) return {C(0.0), C(0.0)};
    return {q / a, c / q};
}
}  // namespace detail

// Biquadratic input (no odd powers) is solved in closed form through s = x^2, which keeps
// double roots exact. Otherwise Durand-Kerner iteration followed by Newton polishing.
inline QuarticRoots solve_quartic(const Quartic& c) {
    using C = std::complex<double>;
    if (c[0] == 0.0) throw std::invalid_argument("solve_quartic: leading coefficient is zero");
    const double mag = std::max({std::abs(c[0]), std::abs(c[2]), std::abs(c[4])});
    QuarticRoots out;
    if (std::abs(c[1]) <= 1e-15 * mag && std::abs(c[3]) <= 1e-15 * mag) {
        out.biquadratic = true;
        const auto s = detail::quadratic_roots(c[0], c[2], c[4]);
        for (int k = 0; k < 2; ++k) {
            C r = std::sqrt(s[k]);
            if (std::abs(s[k].imag()) <= 1e-14 * std::abs(s[k])) {
                const double sr = s[k].real();
                r = sr >= 0 ? C(std::sqrt(sr), 0.0) : C(0.0, std::sqrt(-sr));
            }
            out.roots[2 * k] = r;
            out.roots[2 * k + 1] = -r;
        }
        return out;
    }
    std::array<double, 5> a{};
    for (int i = 0; i < 5; ++i) a[i] = c[i] / c[0];
    double radius = 0;
    for (int i = 1; i < 5; ++i) radius = std::max(radius, std::pow(std::abs(a[i]), 1.0 / i));
    radius = 2.0 * std::max(radius, 1e-300);
    std::array<C, 4> z;
    const C seed(0.4, 0.9);
    for (int k = 0; k < 4; ++k) z[k] = radius * std::pow(seed, k);
    for (int it = 0; it < 500; ++it) {
        double change = 0;
        for (int k = 0; k < 4; ++k) {
            C den = 1.0;
            for (int j = 0; j < 4; ++j)
                if (j != k) den *= (z[k] - z[j]);
            if (std::abs(den) == 0.0) den = 1e-300;
            const C dz = polyval<C>(a, z[k]) / den;
            z[k] -= dz;
            change = std::max(change, std::abs(dz) / (1.0 + std::abs(z[k])));
        }
        if (change < 1e-16) break;
    }
    for (auto& r : z) {
        if (std::abs(r.imag()) < 1e-7 * (1.0 + std::abs(r))) {
            double x = r.real();
            for (int it = 0; it < 8; ++it) {
                const double d = polyder<double>(a, x);
                if (d == 0.0) break;
                const double step = polyval<double>(a, x) / d;
                x -= step;
                if (std::abs(step) < 1e-17 * (1.0 + std::abs(x))) break;
            }
            // keep the polish only if it did not make things worse
            if (std::abs(polyval<double>(a, x)) <= std::abs(polyval<C>(a, r))) r = C(x, 0.0);
        } else {
            for (int it = 0; it < 4; ++it) {
                const C d = polyder<C>(a, r);
                if (std::abs(d) == 0.0) break;
                r -= polyval<C>(a, r) / d;
            }
        }
    }
    out.roots = z;
    return out;
}

}  // namespace spinorlab
