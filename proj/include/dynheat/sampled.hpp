#ifndef DYNHEAT_SAMPLED_HPP
#define DYNHEAT_SAMPLED_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "dynheat/errors.hpp"
#include "dynheat/numerics.hpp"

namespace dynheat {

// A scalar function on an interval, held either as a strictly increasing
// sample table (evaluated by linear interpolation) or as a closed-form
// evaluator with optional analytic derivatives. Derivatives fall back to
// finite differences (step 1e-5, one-sided at the endpoints) when no
// analytic form is attached.
class SampledFunction {
public:
    SampledFunction() = default;

    static SampledFunction from_samples(std::vector<double> grid,
                                        std::vector<double> values) {
        if (grid.size() != values.size())
            throw GridMismatch("SampledFunction: grid/value size mismatch");
        if (grid.size() < 2)
            throw GridMismatch("SampledFunction: need at least 2 samples");
        for (size_t i = 1; i < grid.size(); ++i)
            if (!(grid[i] > grid[i - 1]))
                throw NonMonotoneGrid("SampledFunction: grid not strictly increasing at row " +
                                      std::to_string(i));
        for (double v : values)
            if (!std::isfinite(v))
                throw GridMismatch("SampledFunction: non-finite sample value");
        SampledFunction f;
        f.grid_ = std::move(grid);
        f.values_ = std::move(values);
        return f;
    }

    static SampledFunction from_function(std::function<double(double)> fn,
                                         double lo = 0.0, double hi = 1.0) {
        SampledFunction f;
        f.fn_ = std::move(fn);
        f.grid_ = {lo, hi};
        f.values_ = {f.fn_(lo), f.fn_(hi)};
        return f;
    }

    static SampledFunction from_function(std::function<double(double)> fn,
                                         std::function<double(double)> d1,
                                         std::function<double(double)> d2,
                                         double lo = 0.0, double hi = 1.0) {
        SampledFunction f = from_function(std::move(fn), lo, hi);
        f.d1_ = std::move(d1);
        f.d2_ = std::move(d2);
        return f;
    }

    bool has_evaluator() const { return static_cast<bool>(fn_); }
    bool empty() const { return grid_.empty(); }
    double lo() const { return grid_.front(); }
    double hi() const { return grid_.back(); }
    const std::vector<double>& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }

    double operator()(double x) const {
        if (fn_) return fn_(x);
        return interpolate(x);
    }

    double deriv1(double x) const {
        if (d1_) return d1_(x);
        return fd::deriv1([this](double s) { return (*this)(s); }, x, lo(), hi());
    }

    double deriv2(double x) const {
        if (d2_) return d2_(x);
        return fd::deriv2([this](double s) { return (*this)(s); }, x, lo(), hi());
    }

private:
    double interpolate(double x) const {
        if (x <= grid_.front()) return values_.front();
        if (x >= grid_.back()) return values_.back();
        const auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
        const size_t i = static_cast<size_t>(it - grid_.begin());
        const double t = (x - grid_[i - 1]) / (grid_[i] - grid_[i - 1]);
        return values_[i - 1] + t * (values_[i] - values_[i - 1]);
    }

    std::vector<double> grid_, values_;
    std::function<double(double)> fn_, d1_, d2_;
};

} // namespace dynheat

#endif // DYNHEAT_SAMPLED_HPP
