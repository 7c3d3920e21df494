#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace spinorlab {

constexpr std::size_t pow4(std::size_t r) { return r == 0 ? 1 : 4 * pow4(r - 1); }

// Dense rank-R tensor over 4 dimensions, row-major.
template <std::size_t R>
struct Tensor {
    std::array<double, pow4(R)> v{};

    template <class... Ix>
    double& operator()(Ix... ix) {
        static_assert(sizeof...(Ix) == R);
        return v[offset(ix...)];
    }
    template <class... Ix>
    double operator()(Ix... ix) const {
        static_assert(sizeof...(Ix) == R);
        return v[offset(ix...)];
    }

    double max_abs() const {
        double m = 0;
        for (double x : v) m = std::max(m, std::abs(x));
        return m;
    }

private:
    template <class... Ix>
    static std::size_t offset(Ix... ix) {
        std::size_t o = 0;
        ((o = o * 4 + static_cast<std::size_t>(ix)), ...);
        return o;
    }
};

using Tensor3 = Tensor<3>;
using Tensor4 = Tensor<4>;
using Tensor5 = Tensor<5>;

// eps_{0123} = +1, so eps^{0123} = -1
inline int levi_civita(int a, int b, int c, int d) {
    const std::array<int, 4> p{a, b, c, d};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[i] == p[j]) return 0;
    int inv = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

inline int levi_civita_upper(int a, int b, int c, int d) { return -levi_civita(a, b, c, d); }

}  // namespace spinorlab
