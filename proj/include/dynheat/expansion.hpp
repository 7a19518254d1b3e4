#ifndef DYNHEAT_EXPANSION_HPP
#define DYNHEAT_EXPANSION_HPP

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "dynheat/errors.hpp"
#include "dynheat/numerics.hpp"
#include "dynheat/sampled.hpp"
#include "dynheat/spectral.hpp"

namespace dynheat {

// Generalized Fourier coefficients c_n = (f, u_n) against the biorthogonal
// system, with the excluded index n0 carrying no entry.
struct CoefficientSeries {
    int excluded_index = 0;
    int truncation = 0;            // highest index N
    std::vector<double> coeffs;    // size N+1, slot [n0] stays 0 and is not readable

    double at(int n) const {
        if (n == excluded_index)
            throw ExcludedIndexError("CoefficientSeries: index " + std::to_string(n) +
                                     " is excluded");
        return coeffs.at(static_cast<size_t>(n));
    }
};

// L2[0,1] inner product by the fixed 512-node composite Gauss-Legendre rule.
inline double inner_product(const std::function<double(double)>& f,
                            const std::function<double(double)>& g) {
    const auto& rule = quad::Rule01::instance();
    double acc = 0.0;
    for (size_t i = 0; i < rule.x.size(); ++i)
        acc += rule.w[i] * f(rule.x[i]) * g(rule.x[i]);
    return acc;
}

inline double inner_product(const SampledFunction& f, const SampledFunction& g) {
    if (std::abs(f.lo()) > 1e-12 || std::abs(f.hi() - 1.0) > 1e-12 ||
        std::abs(g.lo()) > 1e-12 || std::abs(g.hi() - 1.0) > 1e-12)
        throw GridMismatch("inner_product: both functions must cover [0,1]");
    return inner_product(std::function<double(double)>([&](double x) { return f(x); }),
                         std::function<double(double)>([&](double x) { return g(x); }));
}

inline double inner_product(const SampledFunction& f,
                            const std::function<double(double)>& g) {
    if (std::abs(f.lo()) > 1e-12 || std::abs(f.hi() - 1.0) > 1e-12)
        throw GridMismatch("inner_product: function must cover [0,1]");
    return inner_product(std::function<double(double)>([&](double x) { return f(x); }), g);
}

// Coefficients c_n = (f, u_n) for n = 0..N, n != n0. Values of f are taken
// once at the quadrature nodes and reused across modes.
inline CoefficientSeries coefficients(const std::function<double(double)>& f,
                                      const SpectralBasis& basis) {
    const auto& rule = quad::Rule01::instance();
    std::vector<double> fw(rule.x.size());
    for (size_t i = 0; i < rule.x.size(); ++i) fw[i] = rule.w[i] * f(rule.x[i]);

    CoefficientSeries s;
    s.excluded_index = basis.excluded_index();
    s.truncation = basis.size() - 1;
    s.coeffs.assign(static_cast<size_t>(basis.size()), 0.0);
    for (int n = 0; n < basis.size(); ++n) {
        if (n == s.excluded_index) continue;
        double acc = 0.0;
        for (size_t i = 0; i < rule.x.size(); ++i) acc += fw[i] * basis.u(n, rule.x[i]);
        s.coeffs[static_cast<size_t>(n)] = acc;
    }
    return s;
}

inline CoefficientSeries coefficients(const SampledFunction& f,
                                      const SpectralBasis& basis) {
    return coefficients(std::function<double(double)>([&](double x) { return f(x); }),
                        basis);
}

// Truncated reconstruction sum_{n != n0} c_n y_n(x).
inline double reconstruct(const CoefficientSeries& s, const SpectralBasis& basis,
                          double x) {
    double acc = 0.0;
    const int N = std::min(s.truncation, basis.size() - 1);
    for (int n = 0; n <= N; ++n) {
        if (n == s.excluded_index) continue;
        acc += s.coeffs[static_cast<size_t>(n)] * basis.y(n, x);
    }
    return acc;
}

// Report of the admissible-class checks: endpoint conditions
// f(0) = f''(0) = 0, f(1) = f'(1) = f''(1) = 0 and orthogonality
// (f, y_{n0}) = 0. Derivatives come from the descriptor (analytic when
// attached, finite differences otherwise).
struct PhiClassReport {
    struct Check {
        std::string name;
        double residual = 0.0;
        bool pass = false;
    };
    std::vector<Check> checks;
    bool pass = false;
    double tolerance = 0.0;

    double orthogonality_residual() const {
        return checks.empty() ? 0.0 : checks.back().residual;
    }
};

inline PhiClassReport validate_phi_class(const SampledFunction& f,
                                         const SpectralBasis& basis,
                                         double tol = 1e-8) {
    PhiClassReport rep;
    rep.tolerance = tol;
    auto add = [&](const std::string& name, double value) {
        PhiClassReport::Check c;
        c.name = name;
        c.residual = std::abs(value);
        c.pass = c.residual < tol;
        rep.checks.push_back(c);
    };
    add("f(0)", f(0.0));
    add("f''(0)", f.deriv2(0.0));
    add("f(1)", f(1.0));
    add("f'(1)", f.deriv1(1.0));
    add("f''(1)", f.deriv2(1.0));
    const EigenMode& m0 = basis.excluded();
    add("(f, y_n0)", inner_product(std::function<double(double)>([&](double x) { return f(x); }),
                                   std::function<double(double)>([&](double x) {
                                       return eval_eigenfunction(m0, x);
                                   })));
    rep.pass = true;
    for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

// Partial sum sum_{n <= N, n != n0} |lambda_n c_n|; bounded partial sums are
// the computable face of the coefficient summability estimate.
inline double lemma1_diagnostic(const CoefficientSeries& s, const SpectralBasis& basis) {
    double acc = 0.0;
    const int N = std::min(s.truncation, basis.size() - 1);
    for (int n = 0; n <= N; ++n) {
        if (n == s.excluded_index) continue;
        acc += std::abs(basis.mode(n).lambda * s.coeffs[static_cast<size_t>(n)]);
    }
    return acc;
}

// f minus its component along y_{n0}: enforces the orthogonality condition
// (f, y_{n0}) = 0 and nothing else; endpoint conditions are re-checked by
// the caller and generally fail afterwards since y_{n0}(1) != 0.
inline SampledFunction project_out_excluded(const SampledFunction& f,
                                            const SpectralBasis& basis) {
    const EigenMode m0 = basis.excluded();
    const double beta =
        inner_product(std::function<double(double)>([f](double x) { return f(x); }),
                      std::function<double(double)>(
                          [m0](double x) { return eval_eigenfunction(m0, x); })) /
        m0.norm_sq;
    auto val = [f, m0, beta](double x) { return f(x) - beta * eval_eigenfunction(m0, x); };
    auto d1 = [f, m0, beta](double x) {
        return f.deriv1(x) - beta * eval_eigenfunction_deriv(m0, x);
    };
    auto d2 = [f, m0, beta](double x) {
        return f.deriv2(x) - beta * eval_eigenfunction_deriv2(m0, x);
    };
    return SampledFunction::from_function(val, d1, d2);
}

} // namespace dynheat

#endif // DYNHEAT_EXPANSION_HPP
