#ifndef TOPOLEVEL_KERNELS_HPP
#define TOPOLEVEL_KERNELS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "topolevel/sample.hpp"

namespace topolevel {

enum class KernelShape { truncated_gaussian, bump };

// Radial kernel supported on the open unit ball with K(0) = 1 and
// 0 <= K <= 1.  c_k is the integral of K over the unit ball and must
// lie in (0, 1); it is computed at construction to relative error 1e-8.
struct KernelSpec {
    KernelShape shape = KernelShape::truncated_gaussian;
    int d = 1;
    double s = 0.3;  // width parameter; ignored by the bump shape
    double c_k = 0.0;

    static KernelSpec truncated_gaussian(int d, double s = 0.3);
    static KernelSpec bump(int d);
};

// Integral of the kernel profile over the unit ball in R^d.
double compute_ck(KernelShape shape, int d, double s);

// K(x / r); zero outside the open ball of radius r.
double eval_kernel(const KernelSpec& spec, const double* x, double r);

// Density estimate (n * c_k * r^d)^-1 * sum_i K((x - X_i) / r).
double kde_at(const LabeledSample& sample, const double* x, const KernelSpec& spec,
              double r);

// Locally weighted regression estimate; empty when no sample point lies
// within distance r of x.
std::optional<double> nw_at(const LabeledSample& sample, const double* x,
                            const KernelSpec& spec, double r);

// Estimator value at every sample point, in sample order.  At a sample
// point the regression denominator is at least K(0) = 1, so the value
// always exists.
std::vector<double> estimator_values(const LabeledSample& sample, EstimatorMode mode,
                                     const KernelSpec& spec, double r,
                                     int threads = 1);

// Indices i with estimator value >= level, ascending.
std::vector<std::size_t> filter_points(const LabeledSample& sample, double level,
                                       const KernelSpec& spec, double r,
                                       EstimatorMode mode, int threads = 1);

// Separation constant controlling how far the estimate may move the
// super-level set at tolerance epsilon.  Density mode requires p_max;
// regression mode requires p_max, p_min and y_max.
double theory_constant(EstimatorMode mode, double epsilon, double c_k,
                       const EstimatorBounds& bounds);

// Bandwidth r = (D ln n / n)^(1/d) with D = 1.01 / C*(epsilon / 2) when
// the bounds needed by the mode are present, and the bounds-free rule
// r = ((ln n)^2 / n)^(1/d) otherwise.
double recommended_bandwidth(std::size_t n, const KernelSpec& spec, double epsilon,
                             EstimatorMode mode, const EstimatorBounds& bounds);

}  // namespace topolevel

#endif
