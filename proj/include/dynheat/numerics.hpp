#ifndef DYNHEAT_NUMERICS_HPP
#define DYNHEAT_NUMERICS_HPP

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "dynheat/errors.hpp"

namespace dynheat {

// Quadrature and finite-difference building blocks shared by all modules.
// The composite Gauss-Legendre rule (8 points per panel, 64 panels) is the
// single inner-product backend: 512 nodes resolve eigenfunctions up to
// frequencies of order 100 on [0,1] far below the tolerances used anywhere.

namespace quad {

inline constexpr int kPanelPoints = 8;
inline constexpr int kDefaultPanels = 64;

// 8-point Gauss-Legendre nodes/weights on [-1,1].
inline constexpr std::array<double, 4> kGlNodes = {
    0.1834346424956498, 0.5255324099163290,
    0.7966664774136267, 0.9602898564975363};
inline constexpr std::array<double, 4> kGlWeights = {
    0.3626837833783620, 0.3137066458778873,
    0.2223810344533745, 0.1012285362903763};

// Fixed nodes/weights of the composite rule on [0,1], built once.
struct Rule01 {
    std::vector<double> x;
    std::vector<double> w;

    static const Rule01& instance(int panels = kDefaultPanels) {
        static const Rule01 def{build(kDefaultPanels)};
        if (panels == kDefaultPanels) return def;
        thread_local Rule01 custom;
        thread_local int custom_panels = 0;
        if (custom_panels != panels) {
            custom = build(panels);
            custom_panels = panels;
        }
        return custom;
    }

    static Rule01 build(int panels) {
        Rule01 r;
        r.x.reserve(static_cast<size_t>(panels) * kPanelPoints);
        r.w.reserve(static_cast<size_t>(panels) * kPanelPoints);
        const double h = 1.0 / panels;
        for (int p = 0; p < panels; ++p) {
            const double mid = (p + 0.5) * h;
            const double half = 0.5 * h;
            for (int k = 3; k >= 0; --k) {
                r.x.push_back(mid - half * kGlNodes[k]);
                r.w.push_back(half * kGlWeights[k]);
            }
            for (int k = 0; k < 4; ++k) {
                r.x.push_back(mid + half * kGlNodes[k]);
                r.w.push_back(half * kGlWeights[k]);
            }
        }
        return r;
    }
};

} // namespace quad

// \int_0^1 f dx by the default composite rule.
template <class F>
double integrate01(F&& f, int panels = quad::kDefaultPanels) {
    const auto& rule = quad::Rule01::instance(panels);
    double acc = 0.0;
    for (size_t i = 0; i < rule.x.size(); ++i) acc += rule.w[i] * f(rule.x[i]);
    return acc;
}

// \int_a^b f dx, same rule mapped to [a,b].
template <class F>
double integrate(F&& f, double a, double b, int panels = quad::kDefaultPanels) {
    const double len = b - a;
    return len * integrate01([&](double s) { return f(a + len * s); }, panels);
}

// Cumulative integral table P(t) = \int_0^t f on a uniform grid,
// composite Simpson per panel, linear interpolation between panel ends.
class CumulativeIntegral {
public:
    CumulativeIntegral() = default;

    CumulativeIntegral(const std::function<double(double)>& f, double t_end,
                       int panels = 2048)
        : t_end_(t_end), values_(static_cast<size_t>(panels) + 1, 0.0) {
        if (t_end <= 0.0) throw std::invalid_argument("CumulativeIntegral: t_end must be > 0");
        if (panels < 1) throw std::invalid_argument("CumulativeIntegral: panels must be >= 1");
        const double h = t_end / panels;
        max_abs_ = 0.0;
        double prev = f(0.0);
        max_abs_ = std::abs(prev);
        for (int k = 0; k < panels; ++k) {
            const double mid = f((k + 0.5) * h);
            const double next = f((k + 1.0) * h);
            values_[k + 1] = values_[k] + h / 6.0 * (prev + 4.0 * mid + next);
            max_abs_ = std::max({max_abs_, std::abs(mid), std::abs(next)});
            prev = next;
        }
    }

    // Zero table for an absent integrand.
    static CumulativeIntegral zero(double t_end) {
        CumulativeIntegral c;
        c.t_end_ = t_end;
        c.values_.assign(2, 0.0);
        c.max_abs_ = 0.0;
        return c;
    }

    double operator()(double t) const {
        if (values_.empty()) return 0.0;
        const int panels = static_cast<int>(values_.size()) - 1;
        const double h = t_end_ / panels;
        if (t <= 0.0) return 0.0;
        if (t >= t_end_) return values_.back();
        const double s = t / h;
        const int k = std::min(static_cast<int>(s), panels - 1);
        const double frac = s - k;
        return values_[k] + frac * (values_[k + 1] - values_[k]);
    }

    double max_abs_integrand() const { return max_abs_; }
    double t_end() const { return t_end_; }

private:
    double t_end_ = 0.0;
    std::vector<double> values_;
    double max_abs_ = 0.0;
};

namespace fd {

// First derivative of a scalar callable, step h, central inside the domain,
// second-order one-sided at the ends.
template <class F>
double deriv1(F&& f, double x, double lo, double hi, double h = 1e-5) {
    if (x - h >= lo && x + h <= hi)
        return (f(x + h) - f(x - h)) / (2.0 * h);
    if (x + 2 * h <= hi) // forward
        return (-3.0 * f(x) + 4.0 * f(x + h) - f(x + 2 * h)) / (2.0 * h);
    return (3.0 * f(x) - 4.0 * f(x - h) + f(x - 2 * h)) / (2.0 * h);
}

// Second derivative, central inside, one-sided 4-point at the ends.
template <class F>
double deriv2(F&& f, double x, double lo, double hi, double h = 1e-5) {
    if (x - h >= lo && x + h <= hi)
        return (f(x - h) - 2.0 * f(x) + f(x + h)) / (h * h);
    if (x + 3 * h <= hi) // forward
        return (2.0 * f(x) - 5.0 * f(x + h) + 4.0 * f(x + 2 * h) - f(x + 3 * h)) / (h * h);
    return (2.0 * f(x) - 5.0 * f(x - h) + 4.0 * f(x - 2 * h) - f(x - 3 * h)) / (h * h);
}

// Fourth-order first derivative of uniformly sampled values; one-sided
// 5-point stencils near the ends.
inline std::vector<double> deriv1_table(const std::vector<double>& v, double dt) {
    const size_t n = v.size();
    if (n < 5) throw GridTooCoarse("deriv1_table: need at least 5 samples");
    std::vector<double> d(n);
    const double c = 1.0 / (12.0 * dt);
    d[0] = c * (-25 * v[0] + 48 * v[1] - 36 * v[2] + 16 * v[3] - 3 * v[4]);
    d[1] = c * (-3 * v[0] - 10 * v[1] + 18 * v[2] - 6 * v[3] + v[4]);
    for (size_t i = 2; i + 2 < n; ++i)
        d[i] = c * (v[i - 2] - 8 * v[i - 1] + 8 * v[i + 1] - v[i + 2]);
    d[n - 2] = c * (3 * v[n - 1] + 10 * v[n - 2] - 18 * v[n - 3] + 6 * v[n - 4] - v[n - 5]);
    d[n - 1] = c * (25 * v[n - 1] - 48 * v[n - 2] + 36 * v[n - 3] - 16 * v[n - 4] + 3 * v[n - 5]);
    return d;
}

} // namespace fd

namespace detail {

// Bisection inside a bracket whose end signs must differ. Relative
// tolerance on the interval width; the bracket is never left.
template <class F>
double bisect(F&& f, double lo, double hi, double rel_tol = 1e-14,
              int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw BracketFailure("bisect: no sign change in [" + std::to_string(lo) +
                             ", " + std::to_string(hi) + "]");
    for (int it = 0; it < max_iter; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= rel_tol * std::max(std::abs(mid), 1e-300)) return mid;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace detail

} // namespace dynheat

#endif // DYNHEAT_NUMERICS_HPP
