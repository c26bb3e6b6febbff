#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace qcorr {

// xoshiro256** with a splitmix64-seeded state. Hand-rolled so that streams
// are bit-identical across platforms and standard libraries (std::
// distributions are implementation-defined, which would break the
// byte-identical-output contract of the CLI).
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& s : s_) {
            x += 0x9E3779B97F4A7C15ull;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
            s = z ^ (z >> 31);
        }
    }

    std::uint64_t next_u64() {
        auto rotl = [](std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
        std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform in [0,1)
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // standard normal (Box-Muller, cached second value)
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = 0;
        while (u1 <= 0) u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

    Eigen::Vector3d unit_vector() {
        Eigen::Vector3d v;
        do {
            v = Eigen::Vector3d(normal(), normal(), normal());
        } while (v.norm() < 1e-12);
        return v / v.norm();
    }

    // uniform in the open unit ball
    Eigen::Vector3d ball_vector(double rmax = 1.0) {
        double r = rmax * std::cbrt(uniform());
        return r * unit_vector();
    }

private:
    std::uint64_t s_[4];
    bool have_cached_ = false;
    double cached_ = 0;
};

}  // namespace qcorr
