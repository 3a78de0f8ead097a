#pragma once

#include <complex>
#include <cstdint>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace sewnet {

// All numerics run on 80-bit extended floats so that 1e-9 residual gates
// sit far above accumulated roundoff even for the genus-one relation checks.
using Real = long double;
using Scalar = std::complex<Real>;
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline constexpr Real kDefaultTol = 1e-9L;

inline Real absval(const Scalar& z) { return std::abs(z); }

inline Mat zeros(Eigen::Index r, Eigen::Index c) { return Mat::Zero(r, c); }

inline Real max_abs(const Mat& m) {
    Real best = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            best = std::max(best, std::abs(m(i, j)));
    return best;
}

// Deterministic Gaussian sampler. std::normal_distribution is
// implementation-defined, so Box-Muller over a fixed-width engine keeps
// random-morphism fixtures identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next_u64() {
        // xorshift64*
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545f4914f6cdd1dULL;
    }

    Real uniform01() {
        // 53 high bits, strictly inside (0,1)
        return (Real(next_u64() >> 11) + 0.5L) / 9007199254740992.0L;
    }

    Scalar gaussian() {
        Real u1 = uniform01();
        Real u2 = uniform01();
        Real r = std::sqrt(-2.0L * std::log(u1));
        Real a = 2.0L * 3.14159265358979323846264338327950288L * u2;
        return Scalar(r * std::cos(a), r * std::sin(a)) / std::sqrt(2.0L);
    }

private:
    std::uint64_t state_;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ShapeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sewnet
