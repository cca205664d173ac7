#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace mclam {

using Complex = std::complex<double>;

/// Parameters of the generalized McMullen map F(z) = z^n + a/z^n + b,
/// with n >= 3 and a != 0.
struct MapParams {
    int n;
    Complex a;
    Complex b;

    MapParams(int n_, Complex a_, Complex b_);
};

struct OrbitResult {
    enum class Status { escaped, bounded };

    Status status = Status::escaped;
    int iterations = 0;  // escape iteration, or iterations run when bounded
    std::optional<int> cycle_period;
    std::optional<Complex> multiplier;
    std::optional<Complex> representative;

    bool escaped() const { return status == Status::escaped; }
    /// A cycle counts as attracting only with multiplier modulus < 1.
    bool attracting() const {
        return cycle_period && multiplier && std::abs(*multiplier) < 1.0;
    }
};

/// (v_plus, v_minus) = b +- 2 sqrt(a), principal square root.
/// Throws std::invalid_argument if a == 0 (enforced by MapParams already).
std::pair<Complex, Complex> critical_values(const MapParams& p);

/// The 2n solutions of z^{2n} = a, in argument order starting from the
/// principal root. Each maps under F to v_plus (even index) or v_minus.
std::vector<Complex> critical_points(const MapParams& p);

/// z^n + a/z^n + b. Throws std::domain_error at the pole z = 0.
Complex eval_F(const MapParams& p, Complex z);

/// F'(z) = n z^{n-1} - n a / z^{n+1}.
Complex deriv_F(const MapParams& p, Complex z);

struct OrbitOptions {
    int max_iter = 100000;
    double escape_radius = 1e6;
    double tol = 1e-8;     // recurrence tolerance for cycle detection
    int max_period = 64;
};

/// Iterates F from z0. Status escaped(k) at the first k with |z_k| beyond
/// the escape radius (an exact hit of the pole 0 escapes too, since 0 maps
/// to infinity); otherwise bounded, with cycle detection on the orbit tail.
OrbitResult iterate_orbit(const MapParams& p, Complex z0, const OrbitOptions& opts = {});

/// Smallest period p <= max_period such that |z_{k+p} - z_k| < tol over the
/// final stretch of the tail, along with the multiplier (product of F' over
/// one period). Returns nullopt when no such period exists.
std::optional<std::pair<int, Complex>> detect_attracting_cycle(const MapParams& p,
                                                               const std::vector<Complex>& tail,
                                                               double tol, int max_period = 64);

struct ClassifyReport {
    OrbitResult v_plus;
    OrbitResult v_minus;
    bool same_cycle = false;  // both orbits settle onto the same cycle point set
};

ClassifyReport classify_map(const MapParams& p, const OrbitOptions& opts = {});

/// Numerical check of the n-fold circular symmetry F(z e^{2 pi i k/n}) = F(z):
/// the max residual over seeded pseudo-random samples with |z| in [0.1, 10]
/// and k = 1..n-1. Mathematically zero; the return is pure roundoff.
double symmetry_residual(const MapParams& p, int samples, std::uint64_t seed);

}  // namespace mclam
