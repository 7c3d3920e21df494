#pragma once

#include <cstdint>
#include <random>

#include "classifier.hpp"

namespace spinorlab {

// splitmix64 step; used to derive independent per-sample seeds so that sample k
// does not depend on how samples are scheduled
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(index + 1)));
}

struct Sampler {
    std::mt19937_64& rng;

    double normal(double sd = 1.0) { return std::normal_distribution<double>(0.0, sd)(rng); }
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
    cplx cnormal(double sd = 1.0) { return {normal(sd), normal(sd)}; }
    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    Vector2c vec2() { return {cnormal(), cnormal()}; }
    Vector4c vec4() { return {cnormal(), cnormal(), cnormal(), cnormal()}; }
    Vec4 real4(double sd = 1.0) { return {normal(sd), normal(sd), normal(sd), normal(sd)}; }
    Vec3 real3(double sd = 1.0) { return {normal(sd), normal(sd), normal(sd)}; }

    // random spinor of a prescribed class, weyl components.
    // In the weyl basis sigma + i omega = 2 top^dag bot, so
    // classes 2 and 3 are reached by fixing the phase of top^dag bot.
    Spinor of_class(int k) {
        switch (k) {
            case 1: return {vec4(), Representation::Weyl};
            case 2:
            case 3: {
                const Vector2c top = vec2();
                Vector2c bot = vec2();
                const cplx z = top.dot(bot);
                bot *= std::conj(z) / std::abs(z);
                if (k == 3) bot *= I_unit;
                Vector4c c;
                c << top, bot;
                return {c, Representation::Weyl};
            }
            case 4: {
                Type4Params p;
                p.variant = static_cast<Type4Variant>(pick(1, 3));
                p.f = cnormal();
                p.g = cnormal();
                p.zeta = cnormal();
                p.xi = cnormal();
                // keep well away from the |.|=|.| degeneration
                if (p.variant == Type4Variant::F00Xi) p.xi *= 0.5 * std::abs(p.f) / std::abs(p.xi);
                else p.zeta *= 0.5 * std::abs(p.g) / std::abs(p.zeta);
                return canonical_type4(p);
            }
            case 5: return canonical_type5(vec2(), uniform(-M_PI, M_PI));
            case 6: {
                const Vector2c h = vec2();
                Vector4c c = Vector4c::Zero();
                if (pick(0, 1) == 0) c.head<2>() = h;
                else c.tail<2>() = h;
                return {c, Representation::Weyl};
            }
            default: throw std::invalid_argument("class must be 1..6");
        }
    }
};

}  // namespace spinorlab
