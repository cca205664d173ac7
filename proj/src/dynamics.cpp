#include "mclam/dynamics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace mclam {

namespace {

template <typename T>
std::complex<T> ipow(std::complex<T> base, int exp) {
    std::complex<T> result(T(1), T(0));
    while (exp > 0) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

bool finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

MapParams::MapParams(int n_, Complex a_, Complex b_) : n(n_), a(a_), b(b_) {
    if (n < 3) {
        throw std::invalid_argument("MapParams: n must be at least 3");
    }
    if (a == Complex(0.0, 0.0)) {
        throw std::invalid_argument("MapParams: a must be nonzero");
    }
}

std::pair<Complex, Complex> critical_values(const MapParams& p) {
    Complex root = std::sqrt(p.a);  // principal branch fixes the v_plus/v_minus labels
    return {p.b + 2.0 * root, p.b - 2.0 * root};
}

std::vector<Complex> critical_points(const MapParams& p) {
    const double r = std::pow(std::abs(p.a), 1.0 / (2.0 * p.n));
    const double base_arg = std::arg(p.a) / (2.0 * p.n);
    std::vector<Complex> roots;
    roots.reserve(2 * p.n);
    for (int k = 0; k < 2 * p.n; ++k) {
        roots.push_back(std::polar(r, base_arg + std::numbers::pi * k / p.n));
    }
    return roots;
}

Complex eval_F(const MapParams& p, Complex z) {
    if (z == Complex(0.0, 0.0)) {
        throw std::domain_error("eval_F: pole at z = 0");
    }
    Complex zn = ipow(z, p.n);
    return zn + p.a / zn + p.b;
}

Complex deriv_F(const MapParams& p, Complex z) {
    if (z == Complex(0.0, 0.0)) {
        throw std::domain_error("deriv_F: pole at z = 0");
    }
    double n = static_cast<double>(p.n);
    return n * ipow(z, p.n - 1) - n * p.a / ipow(z, p.n + 1);
}

OrbitResult iterate_orbit(const MapParams& p, Complex z0, const OrbitOptions& opts) {
    if (opts.max_iter < 1) {
        throw std::invalid_argument("iterate_orbit: max_iter must be positive");
    }
    if (!(opts.escape_radius > 0)) {
        throw std::invalid_argument("iterate_orbit: escape_radius must be positive");
    }

    OrbitResult result;
    if (!finite(z0) || std::abs(z0) > opts.escape_radius) {
        result.status = OrbitResult::Status::escaped;
        result.iterations = 0;
        return result;
    }

    std::vector<Complex> orbit;
    orbit.reserve(static_cast<std::size_t>(opts.max_iter) + 1);
    orbit.push_back(z0);
    Complex z = z0;
    for (int k = 1; k <= opts.max_iter; ++k) {
        if (z == Complex(0.0, 0.0)) {
            result.status = OrbitResult::Status::escaped;  // 0 maps to infinity
            result.iterations = k;
            return result;
        }
        z = eval_F(p, z);
        if (!finite(z) || std::abs(z) > opts.escape_radius) {
            result.status = OrbitResult::Status::escaped;
            result.iterations = k;
            return result;
        }
        orbit.push_back(z);
    }

    result.status = OrbitResult::Status::bounded;
    result.iterations = opts.max_iter;

    std::size_t tail_len = std::min(orbit.size(), static_cast<std::size_t>(4 * opts.max_period));
    std::vector<Complex> tail(orbit.end() - tail_len, orbit.end());
    if (auto cycle = detect_attracting_cycle(p, tail, opts.tol, opts.max_period)) {
        result.cycle_period = cycle->first;
        result.multiplier = cycle->second;
        result.representative = tail[tail.size() - cycle->first];
    }
    return result;
}

std::optional<std::pair<int, Complex>> detect_attracting_cycle(const MapParams& p,
                                                               const std::vector<Complex>& tail,
                                                               double tol, int max_period) {
    if (tail.size() < 2) return std::nullopt;
    for (int period = 1; period <= max_period; ++period) {
        std::size_t pp = static_cast<std::size_t>(period);
        if (tail.size() < 2 * pp) break;
        std::size_t window = std::min(tail.size() - pp, static_cast<std::size_t>(2 * max_period));
        std::size_t begin = tail.size() - pp - window;
        bool recurrent = true;
        for (std::size_t k = begin; k + pp < tail.size(); ++k) {
            if (std::abs(tail[k + pp] - tail[k]) >= tol) {
                recurrent = false;
                break;
            }
        }
        if (!recurrent) continue;
        Complex multiplier(1.0, 0.0);
        for (std::size_t k = tail.size() - pp; k < tail.size(); ++k) {
            multiplier *= deriv_F(p, tail[k]);
        }
        return std::pair{period, multiplier};
    }
    return std::nullopt;
}

ClassifyReport classify_map(const MapParams& p, const OrbitOptions& opts) {
    auto [v_plus, v_minus] = critical_values(p);
    ClassifyReport report;
    report.v_plus = iterate_orbit(p, v_plus, opts);
    report.v_minus = iterate_orbit(p, v_minus, opts);

    if (report.v_plus.cycle_period && report.v_minus.cycle_period &&
        *report.v_plus.cycle_period == *report.v_minus.cycle_period) {
        // Same cycle iff every point of one orbit's cycle appears in the other's.
        int period = *report.v_plus.cycle_period;
        auto cycle_points = [&](const OrbitResult& r) {
            std::vector<Complex> pts;
            Complex z = *r.representative;
            for (int i = 0; i < period; ++i) {
                pts.push_back(z);
                z = eval_F(p, z);
            }
            return pts;
        };
        auto pa = cycle_points(report.v_plus);
        auto pb = cycle_points(report.v_minus);
        double match_tol = 100.0 * opts.tol;
        report.same_cycle = true;
        for (const Complex& x : pa) {
            double best = std::numeric_limits<double>::infinity();
            for (const Complex& y : pb) best = std::min(best, std::abs(x - y));
            if (best >= match_tol) {
                report.same_cycle = false;
                break;
            }
        }
    }
    return report;
}

double symmetry_residual(const MapParams& p, int samples, std::uint64_t seed) {
    if (samples < 1) {
        throw std::invalid_argument("symmetry_residual: samples must be positive");
    }
    // Extended precision keeps the evaluation roundoff (up to |z|^n ~ 10^5)
    // well below the 1e-10 scale the residual is compared against.
    using CL = std::complex<long double>;
    const CL a(p.a.real(), p.a.imag());
    const CL b(p.b.real(), p.b.imag());
    auto F = [&](CL z) {
        CL zn = ipow(z, p.n);
        return zn + a / zn + b;
    };

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> radius(0.1, 10.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

    long double worst = 0.0L;
    for (int s = 0; s < samples; ++s) {
        const long double r = radius(rng);
        const long double theta = angle(rng);
        const CL z = std::polar(r, theta);
        const CL fz = F(z);
        for (int k = 1; k < p.n; ++k) {
            const long double phi = 2.0L * std::numbers::pi_v<long double> * k / p.n;
            const CL w = z * CL(std::cos(phi), std::sin(phi));
            worst = std::max(worst, std::abs(F(w) - fz));
        }
    }
    return static_cast<double>(worst);
}

}  // namespace mclam
