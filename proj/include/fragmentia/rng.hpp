#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace fragmentia {

using Rng = std::mt19937_64;

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline Rng make_rng(uint64_t seed) { return Rng(splitmix64(seed)); }

// Counter-based substream derivation: realization index mixed into the master
// seed so parallel ensembles stay reproducible.
inline Rng substream(uint64_t master_seed, uint64_t index) {
    return Rng(splitmix64(master_seed ^ splitmix64(index + 0x51ed270b8a7c1611ull)));
}

struct Quaternion {
    double w = 1, x = 0, y = 0, z = 0;
    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
};

// Haar-uniform SU(2): a unit quaternion uniform on the 3-sphere.
inline Quaternion haar_su2(Rng &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Quaternion q;
    do {
        q.w = g(rng);
        q.x = g(rng);
        q.y = g(rng);
        q.z = g(rng);
    } while (q.norm() < 1e-8);
    double n = q.norm();
    q.w /= n;
    q.x /= n;
    q.y /= n;
    q.z /= n;
    return q;
}

} // namespace fragmentia
