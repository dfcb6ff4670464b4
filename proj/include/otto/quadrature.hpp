#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include "otto/errors.hpp"

namespace otto::quad {

struct Result {
    double value = 0.0;
    double error = 0.0;  ///< |K15 - G7| summed over the final partition
    int intervals = 0;
};

struct Tolerance {
    double rel = 1e-9;
    double abs = 1e-14;
    int max_intervals = 4096;
};

namespace detail {

// Kronrod nodes (positive half, descending) and weights; every odd index is a Gauss node.
inline constexpr std::array<double, 8> kronrod_x = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kronrod_w = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> gauss_w = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gauss_kronrod_15(const F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(center);
    double kronrod = kronrod_w[7] * f0;
    double gauss = gauss_w[3] * f0;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kronrod_x[i];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kronrod_w[i] * pair;
        if (i % 2 == 1) {
            gauss += gauss_w[i / 2] * pair;
        }
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

/// Globally adaptive 7/15-point Gauss-Kronrod integration: the panel with the
/// largest embedded-rule disagreement is halved until the summed disagreement
/// drops below max(abs, rel * |value|).
template <class F>
Result integrate(const F& f, double a, double b, const Tolerance& tol = {}) {
    std::vector<detail::Panel> panels{detail::gauss_kronrod_15(f, a, b)};
    double value = panels.front().value;
    double error = panels.front().error;
    while (error > std::max(tol.abs, tol.rel * std::abs(value))) {
        if (static_cast<int>(panels.size()) >= tol.max_intervals) {
            std::ostringstream os;
            os << "adaptive quadrature stalled at error " << error << " after "
               << panels.size() << " panels";
            throw QuadratureError(os.str());
        }
        auto worst = std::max_element(panels.begin(), panels.end());
        const double lo = worst->a;
        const double hi = worst->b;
        const double mid = 0.5 * (lo + hi);
        *worst = detail::gauss_kronrod_15(f, lo, mid);
        panels.push_back(detail::gauss_kronrod_15(f, mid, hi));
        value = 0.0;
        error = 0.0;
        for (const auto& panel : panels) {
            value += panel.value;
            error += panel.error;
        }
    }
    if (!std::isfinite(value)) {
        throw QuadratureError("quadrature produced a non-finite value");
    }
    return {value, error, static_cast<int>(panels.size())};
}

}  // namespace otto::quad
