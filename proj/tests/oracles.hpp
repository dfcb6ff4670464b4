#pragma once

// Reference computations for the tests. Nothing here calls the closed forms
// under test; each oracle reaches the same number by a different route.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace oracle {

// dn/dt = E (n + 1) - G n integrated with classical RK4.
inline double rk4_nbar(double n0, double t, double E, double G, int steps) {
    auto f = [&](double n) { return E * (n + 1.0) - G * n; };
    const double h = t / steps;
    double n = n0;
    for (int k = 0; k < steps; ++k) {
        const double k1 = f(n);
        const double k2 = f(n + 0.5 * h * k1);
        const double k3 = f(n + 0.5 * h * k2);
        const double k4 = f(n + h * k3);
        n += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return n;
}

// RK4 with one Richardson step-halving: (16 y_{h/2} - y_h) / 15.
inline double ode_nbar(double n0, double t, double E, double G) {
    if (t == 0.0) return n0;
    const int steps = std::max(256, static_cast<int>(std::ceil(32.0 * t * (E + G))));
    const double coarse = rk4_nbar(n0, t, E, G, steps);
    const double fine = rk4_nbar(n0, t, E, G, 2 * steps);
    return (16.0 * fine - coarse) / 15.0;
}

struct Rates {
    double E_h, G_h, E_c, G_c;
    double t_h, t_c;
};

// Hot stroke then cold stroke, both through the ODE oracle.
inline double heat_map(double n, const Rates& r) {
    return ode_nbar(ode_nbar(n, r.t_h, r.E_h, r.G_h), r.t_c, r.E_c, r.G_c);
}

// Fixed point of heat_map by plain iteration until the update stalls.
inline double iterate_to_fixed_point(const Rates& r, double n0 = 0.0, int max_iter = 100000) {
    double n = n0;
    for (int k = 0; k < max_iter; ++k) {
        const double next = heat_map(n, r);
        if (std::abs(next - n) <= 1e-15 * std::max(1.0, std::abs(n))) return next;
        n = next;
    }
    return n;
}

// Quintic ramp on u in [0, 1] and its u-derivatives, coded from the polynomial.
struct Ramp {
    double wi, wf;
    double w(double u) const { return wi + (wf - wi) * u * u * u * (10.0 - 15.0 * u + 6.0 * u * u); }
    double dw(double u) const { return (wf - wi) * 30.0 * u * u * (1.0 - u) * (1.0 - u); }
    double d2w(double u) const { return (wf - wi) * 60.0 * u * (1.0 - u) * (1.0 - 2.0 * u); }
};

// Unit-ramp cost factor integral_0^1 [w''/(4 w^2) - w'^2/(4 w^3)] du by
// adaptive Gauss-Kronrod (61 points).
inline double cost_geometry(double wi, double wf) {
    const Ramp ramp{wi, wf};
    auto integrand = [&](double u) {
        const double w = ramp.w(u);
        const double d = ramp.dw(u);
        return ramp.d2w(u) / (4.0 * w * w) - d * d / (4.0 * w * w * w);
    };
    double error = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, 1.0, 15, 1e-14,
                                                                          &error);
}

// Central difference with one Richardson extrapolation, relative step h.
inline double derivative(const std::function<double(double)>& f, double x, double rel_step = 1e-3) {
    const double h = rel_step * std::abs(x);
    auto central = [&](double s) { return (f(x + s) - f(x - s)) / (2.0 * s); };
    return (4.0 * central(h / 2.0) - central(h)) / 3.0;
}

// Relative error with a floor at the resolution of a difference quotient of f:
// below |f| * 1e-10 / x the numerical derivative carries no digits.
inline double derivative_error(double analytic, double numeric, double value, double x) {
    const double floor = 1e-10 * std::abs(value) / std::abs(x);
    return std::abs(analytic - numeric) / std::max(std::abs(analytic), floor);
}

// Exhaustive scan of f on the cube {lo, lo + step, ..., hi}^3.
struct GridMax {
    double value = -std::numeric_limits<double>::infinity();
    double x = 0.0, y = 0.0, z = 0.0;
};

inline GridMax grid_max_3d(const std::function<double(double, double, double)>& f, double lo, double hi,
                           double step) {
    const int n = static_cast<int>(std::lround((hi - lo) / step)) + 1;
    GridMax best;
    for (int i = 0; i < n; ++i) {
        const double x = lo + i * step;
        for (int j = 0; j < n; ++j) {
            const double y = lo + j * step;
            for (int k = 0; k < n; ++k) {
                const double z = lo + k * step;
                const double v = f(x, y, z);
                if (v > best.value) best = {v, x, y, z};
            }
        }
    }
    return best;
}

// Best point of f on a dense log-spaced grid.
inline std::pair<double, double> dense_peak(const std::function<double(double)>& f, double lo, double hi,
                                            int points) {
    const double a = std::log(lo);
    const double step = (std::log(hi) - a) / (points - 1);
    int best = 0;
    double best_v = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < points; ++k) {
        const double v = f(std::exp(a + k * step));
        if (v > best_v) {
            best_v = v;
            best = k;
        }
    }
    return {std::exp(a + best * step), best_v};
}

}  // namespace oracle
