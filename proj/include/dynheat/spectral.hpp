#ifndef DYNHEAT_SPECTRAL_HPP
#define DYNHEAT_SPECTRAL_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynheat/errors.hpp"
#include "dynheat/numerics.hpp"

namespace dynheat {

// Auxiliary spectral problem on [0,1]:
//
//     y'' + lambda y = 0,   y(0) = 0,   (a lambda + b) y(1) = d y'(1),
//
// with a*d > 0. The eigenvalue in the boundary condition places this outside
// classical Sturm-Liouville theory; the sign of lambda_0 is decided by b/d.
// Positive eigenvalues lambda = mu^2 have eigenfunctions sin(mu x) with mu a
// root of (a/d mu^2 + b/d) sin mu = mu cos mu; for b/d > 1 there is a single
// negative eigenvalue lambda_0 = -mu_0^2 with eigenfunction
// e^{mu_0 x} - e^{-mu_0 x}, and for b/d = 1 the lowest mode is y_0(x) = x.

enum class Regime { negative_mode, zero_mode, all_positive };
enum class ModeKind { sinh_mode, linear_mode, sin_mode };
enum class Branch { positive, negative };

class SpectralConfig {
public:
    // Tolerance on |b/d - 1| below which the zero-eigenvalue regime is used.
    static constexpr double kZeroModeTol = 1e-12;

    SpectralConfig(double a, double b, double d) : a_(a), b_(b), d_(d) {
        if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(d)))
            throw std::invalid_argument("SpectralConfig: parameters must be finite");
        if (!(a * d > 0.0))
            throw std::invalid_argument("SpectralConfig: requires a*d > 0");
    }

    double a() const { return a_; }
    double b() const { return b_; }
    double d() const { return d_; }
    double ratio() const { return b_ / d_; } // b/d

    Regime regime() const {
        const double r = ratio();
        if (std::abs(r - 1.0) <= kZeroModeTol) return Regime::zero_mode;
        return r > 1.0 ? Regime::negative_mode : Regime::all_positive;
    }

private:
    double a_, b_, d_;
};

// One eigenpair with the closed-form quantities every consumer needs:
// L2 norm squared, integral over [0,1] (positive for all modes), and the
// boundary value y_n(1) (never zero; used by the biorthogonal system).
struct EigenMode {
    int index = 0;
    double mu = 0.0;
    double lambda = 0.0;
    ModeKind kind = ModeKind::sin_mode;
    double norm_sq = 0.0;
    double integral = 0.0;
    double boundary_value = 0.0;
};

// Residual whose positive-branch roots are the frequencies of positive
// eigenvalues and whose negative-branch root is the frequency of the single
// negative eigenvalue (lambda = -mu^2 substituted into the boundary
// condition). Total in mu >= 0.
inline double characteristic_residual(const SpectralConfig& cfg, double mu,
                                      Branch branch) {
    const double A = cfg.a() / cfg.d();
    const double B = cfg.b() / cfg.d();
    if (branch == Branch::positive)
        return (A * mu * mu + B) * std::sin(mu) - mu * std::cos(mu);
    return (B - A * mu * mu) * std::sinh(mu) - mu * std::cosh(mu);
}

namespace detail {

inline EigenMode make_sin_mode(int index, double mu) {
    EigenMode m;
    m.index = index;
    m.mu = mu;
    m.lambda = mu * mu;
    m.kind = ModeKind::sin_mode;
    m.norm_sq = 0.5 - std::sin(2.0 * mu) / (4.0 * mu);
    m.integral = (1.0 - std::cos(mu)) / mu;
    m.boundary_value = std::sin(mu);
    return m;
}

inline EigenMode make_sinh_mode(double mu) {
    EigenMode m;
    m.index = 0;
    m.mu = mu;
    m.lambda = -mu * mu;
    m.kind = ModeKind::sinh_mode;
    m.norm_sq = (std::exp(2.0 * mu) - std::exp(-2.0 * mu)) / (2.0 * mu) - 2.0;
    m.integral = (std::exp(mu) + std::exp(-mu) - 2.0) / mu;
    m.boundary_value = std::exp(mu) - std::exp(-mu);
    return m;
}

inline EigenMode make_linear_mode() {
    EigenMode m;
    m.index = 0;
    m.mu = 0.0;
    m.lambda = 0.0;
    m.kind = ModeKind::linear_mode;
    m.norm_sq = 1.0 / 3.0;
    m.integral = 0.5;
    m.boundary_value = 1.0;
    return m;
}

// The negative-branch root is simple and unique; locate a sign change by
// scanning (0, mu_max] with step 0.25, then bisect.
inline double find_sinh_root(const SpectralConfig& cfg) {
    const double mu_max = 10.0 + std::sqrt(std::abs(cfg.b() / cfg.a()));
    auto g = [&](double mu) { return characteristic_residual(cfg, mu, Branch::negative); };
    const double step = 0.25;
    double lo = 1e-9; // residual ~ (b/d - 1) mu > 0 just right of zero
    double glo = g(lo);
    for (double hi = step; hi <= mu_max + step; hi += step) {
        const double ghi = g(hi);
        if (ghi == 0.0) return hi;
        if ((glo > 0.0) != (ghi > 0.0))
            return bisect(g, lo, hi);
        lo = hi;
        glo = ghi;
    }
    throw BracketFailure("compute_modes: no negative-branch sign change in (0, " +
                         std::to_string(mu_max) + "]");
}

} // namespace detail

// Eigenpairs for n = 0..count-1, lambda strictly increasing. Frequencies of
// sin modes are bracketed in (pi n, pi n + pi/2), widening to (pi n, pi n + pi)
// when b/d < 0; the lowest mode is resolved per regime.
inline std::vector<EigenMode> compute_modes(const SpectralConfig& cfg, int count) {
    if (count < 1) throw std::invalid_argument("compute_modes: count must be >= 1");
    using std::numbers::pi;
    std::vector<EigenMode> modes;
    modes.reserve(static_cast<size_t>(count));

    auto fpos = [&](double mu) { return characteristic_residual(cfg, mu, Branch::positive); };
    const double hi_offset = (cfg.ratio() < 0.0) ? pi : pi / 2.0;

    switch (cfg.regime()) {
    case Regime::negative_mode:
        modes.push_back(detail::make_sinh_mode(detail::find_sinh_root(cfg)));
        break;
    case Regime::zero_mode:
        modes.push_back(detail::make_linear_mode());
        break;
    case Regime::all_positive: {
        // Residual ~ (b/d - 1) mu < 0 near zero, positive at the right end.
        const double mu0 = detail::bisect(fpos, 1e-12, hi_offset);
        modes.push_back(detail::make_sin_mode(0, mu0));
        break;
    }
    }

    for (int n = 1; n < count; ++n) {
        const double lo = pi * n;
        const double hi = pi * n + hi_offset;
        const double mu = detail::bisect(fpos, lo, hi);
        modes.push_back(detail::make_sin_mode(n, mu));
    }
    return modes;
}

inline double eval_eigenfunction(const EigenMode& mode, double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw DomainError("eval_eigenfunction: x outside [0,1]");
    switch (mode.kind) {
    case ModeKind::sinh_mode:
        return std::exp(mode.mu * x) - std::exp(-mode.mu * x);
    case ModeKind::linear_mode:
        return x;
    case ModeKind::sin_mode:
        return std::sin(mode.mu * x);
    }
    return 0.0;
}

inline double eval_eigenfunction_deriv(const EigenMode& mode, double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw DomainError("eval_eigenfunction_deriv: x outside [0,1]");
    switch (mode.kind) {
    case ModeKind::sinh_mode:
        return mode.mu * (std::exp(mode.mu * x) + std::exp(-mode.mu * x));
    case ModeKind::linear_mode:
        return 1.0;
    case ModeKind::sin_mode:
        return mode.mu * std::cos(mode.mu * x);
    }
    return 0.0;
}

// y'' = -lambda y for every mode kind.
inline double eval_eigenfunction_deriv2(const EigenMode& mode, double x) {
    return -mode.lambda * eval_eigenfunction(mode, x);
}

// Member u_n of the system biorthogonal to {y_n : n != n0}:
//
//   u_n = [ y_n - (y_n(1)/y_{n0}(1)) y_{n0} ] / ( ||y_n||^2 + (a/d) y_n(1)^2 ).
inline double eval_biorthogonal(const EigenMode& mode, const EigenMode& excluded,
                                const SpectralConfig& cfg, double x) {
    if (mode.index == excluded.index)
        throw ExcludedIndexError("eval_biorthogonal: mode coincides with the excluded index " +
                                 std::to_string(excluded.index));
    const double denom =
        mode.norm_sq + (cfg.a() / cfg.d()) * mode.boundary_value * mode.boundary_value;
    const double ratio = mode.boundary_value / excluded.boundary_value;
    return (eval_eigenfunction(mode, x) - ratio * eval_eigenfunction(excluded, x)) / denom;
}

// Two-term frequency asymptotic mu_n ~ pi n + d/(a pi n), n >= 1.
inline double asymptotic_mu(const SpectralConfig& cfg, int n) {
    if (n < 1) throw std::invalid_argument("asymptotic_mu: n must be >= 1");
    using std::numbers::pi;
    return pi * n + cfg.d() / (cfg.a() * pi * n);
}

// Bundle of config + computed modes + excluded index used throughout the
// expansion and solver layers. Index n0 is excluded so the remaining family
// is a basis; 0 by default, which removes the irregular lowest mode.
class SpectralBasis {
public:
    SpectralBasis(const SpectralConfig& cfg, int count, int excluded_index = 0)
        : cfg_(cfg), modes_(compute_modes(cfg, count)), n0_(excluded_index) {
        if (excluded_index < 0 || excluded_index >= count)
            throw std::invalid_argument("SpectralBasis: excluded index outside computed range");
    }

    const SpectralConfig& config() const { return cfg_; }
    int size() const { return static_cast<int>(modes_.size()); }
    int excluded_index() const { return n0_; }
    const std::vector<EigenMode>& modes() const { return modes_; }
    const EigenMode& mode(int n) const { return modes_.at(static_cast<size_t>(n)); }
    const EigenMode& excluded() const { return modes_[static_cast<size_t>(n0_)]; }

    double y(int n, double x) const { return eval_eigenfunction(mode(n), x); }
    double u(int n, double x) const {
        return eval_biorthogonal(mode(n), excluded(), cfg_, x);
    }

private:
    SpectralConfig cfg_;
    std::vector<EigenMode> modes_;
    int n0_;
};

} // namespace dynheat

#endif // DYNHEAT_SPECTRAL_HPP
