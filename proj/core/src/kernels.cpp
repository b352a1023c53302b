#include "topolevel/kernels.hpp"

#include <cmath>
#include <string>

#include "topolevel/errors.hpp"
#include "topolevel/parallel.hpp"

namespace topolevel {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Kernel profile as a function of the norm of the argument; zero for
// rho >= 1 so the support is the open unit ball.
double profile(KernelShape shape, double s, double rho) {
    if (rho >= 1.0) return 0.0;
    switch (shape) {
        case KernelShape::truncated_gaussian:
            return std::exp(-rho * rho / (2.0 * s * s));
        case KernelShape::bump:
            return std::exp(1.0 - 1.0 / (1.0 - rho * rho));
    }
    return 0.0;
}

double unit_sphere_area(int d) {
    // surface measure of S^{d-1}
    return 2.0 * std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d);
}

double simpson(KernelShape shape, double s, int d, double a, double b) {
    auto g = [&](double rho) {
        return profile(shape, s, rho) * std::pow(rho, d - 1);
    };
    double m = 0.5 * (a + b);
    return (b - a) / 6.0 * (g(a) + 4.0 * g(m) + g(b));
}

double adaptive(KernelShape shape, double s, int d, double a, double b, double whole,
                double tol, int depth) {
    double m = 0.5 * (a + b);
    double left = simpson(shape, s, d, a, m);
    double right = simpson(shape, s, d, m, b);
    double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive(shape, s, d, a, m, left, 0.5 * tol, depth - 1) +
           adaptive(shape, s, d, m, b, right, 0.5 * tol, depth - 1);
}

}  // namespace

double compute_ck(KernelShape shape, int d, double s) {
    if (d < 1) throw OutOfRangeError("kernel dimension must be at least 1");
    if (shape == KernelShape::truncated_gaussian && !(s > 0.0)) {
        throw OutOfRangeError("kernel width must be positive");
    }
    // radial integral to relative error well below 1e-8; the integrand is
    // smooth on [0, 1) and bounded by 1
    double coarse = simpson(shape, s, d, 0.0, 1.0);
    double radial = adaptive(shape, s, d, 0.0, 1.0, coarse, 1e-12, 48);
    return unit_sphere_area(d) * radial;
}

KernelSpec KernelSpec::truncated_gaussian(int d, double s) {
    KernelSpec spec;
    spec.shape = KernelShape::truncated_gaussian;
    spec.d = d;
    spec.s = s;
    spec.c_k = compute_ck(spec.shape, d, s);
    if (!(spec.c_k > 0.0 && spec.c_k < 1.0)) {
        throw OutOfRangeError("kernel mass outside (0, 1)");
    }
    return spec;
}

KernelSpec KernelSpec::bump(int d) {
    KernelSpec spec;
    spec.shape = KernelShape::bump;
    spec.d = d;
    spec.s = 0.0;
    spec.c_k = compute_ck(spec.shape, d, 0.0);
    if (!(spec.c_k > 0.0 && spec.c_k < 1.0)) {
        throw OutOfRangeError("kernel mass outside (0, 1)");
    }
    return spec;
}

double eval_kernel(const KernelSpec& spec, const double* x, double r) {
    if (!(r > 0.0)) throw OutOfRangeError("kernel radius must be positive");
    double sq = 0.0;
    for (int j = 0; j < spec.d; ++j) sq += x[j] * x[j];
    double rho = std::sqrt(sq) / r;
    return profile(spec.shape, spec.s, rho);
}

namespace {

// Shared evaluation core: kernel-weighted sums over the sample.
void accumulate(const LabeledSample& sample, const double* x, const KernelSpec& spec,
                double r, double* weight_sum, double* response_sum) {
    int d = sample.dimension();
    std::size_t n = sample.size();
    double w = 0.0;
    double wy = 0.0;
    const double* ys =
        sample.responses ? sample.responses->data() : nullptr;
    double r2 = r * r;
    for (std::size_t i = 0; i < n; ++i) {
        const double* p = sample.points.point(i);
        double sq = 0.0;
        for (int j = 0; j < d; ++j) {
            double diff = x[j] - p[j];
            sq += diff * diff;
        }
        if (sq >= r2) continue;
        double k = profile(spec.shape, spec.s, std::sqrt(sq) / r);
        w += k;
        if (ys) wy += k * ys[i];
    }
    *weight_sum = w;
    if (response_sum) *response_sum = wy;
}

}  // namespace

double kde_at(const LabeledSample& sample, const double* x, const KernelSpec& spec,
              double r) {
    sample.validate();
    if (!(r > 0.0)) throw OutOfRangeError("bandwidth must be positive");
    if (spec.d != sample.dimension()) {
        throw OutOfRangeError("kernel dimension does not match the sample");
    }
    double w = 0.0;
    accumulate(sample, x, spec, r, &w, nullptr);
    double n = static_cast<double>(sample.size());
    return w / (n * spec.c_k * std::pow(r, spec.d));
}

std::optional<double> nw_at(const LabeledSample& sample, const double* x,
                            const KernelSpec& spec, double r) {
    sample.validate();
    if (!(r > 0.0)) throw OutOfRangeError("bandwidth must be positive");
    if (spec.d != sample.dimension()) {
        throw OutOfRangeError("kernel dimension does not match the sample");
    }
    if (!sample.has_responses()) {
        throw MissingResponsesError("regression estimate needs responses");
    }
    double w = 0.0;
    double wy = 0.0;
    accumulate(sample, x, spec, r, &w, &wy);
    if (w <= 0.0) return std::nullopt;
    return wy / w;
}

std::vector<double> estimator_values(const LabeledSample& sample, EstimatorMode mode,
                                     const KernelSpec& spec, double r, int threads) {
    sample.validate();
    if (!(r > 0.0)) throw OutOfRangeError("bandwidth must be positive");
    if (spec.d != sample.dimension()) {
        throw OutOfRangeError("kernel dimension does not match the sample");
    }
    if (mode == EstimatorMode::regression && !sample.has_responses()) {
        throw MissingResponsesError("regression estimate needs responses");
    }
    std::size_t n = sample.size();
    std::vector<double> values(n, 0.0);
    double norm = static_cast<double>(n) * spec.c_k * std::pow(r, spec.d);
    parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const double* x = sample.points.point(i);
            double w = 0.0;
            double wy = 0.0;
            accumulate(sample, x, spec, r, &w, &wy);
            if (mode == EstimatorMode::density) {
                values[i] = w / norm;
            } else {
                // w >= K(0) = 1 because the point itself contributes
                values[i] = wy / w;
            }
        }
    });
    return values;
}

std::vector<std::size_t> filter_points(const LabeledSample& sample, double level,
                                       const KernelSpec& spec, double r,
                                       EstimatorMode mode, int threads) {
    std::vector<double> values = estimator_values(sample, mode, spec, r, threads);
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] >= level) kept.push_back(i);
    }
    return kept;
}

double theory_constant(EstimatorMode mode, double epsilon, double c_k,
                       const EstimatorBounds& bounds) {
    if (!(epsilon > 0.0)) throw OutOfRangeError("tolerance must be positive");
    if (!(c_k > 0.0 && c_k < 1.0)) throw OutOfRangeError("kernel mass outside (0, 1)");
    if (!bounds.p_max || !(*bounds.p_max > 0.0)) {
        throw MissingBoundError("p_max is required");
    }
    double p_max = *bounds.p_max;
    if (mode == EstimatorMode::density) {
        return epsilon * epsilon * c_k / (3.0 * p_max + epsilon);
    }
    if (!bounds.p_min || !(*bounds.p_min > 0.0)) {
        throw MissingBoundError("p_min is required in regression mode");
    }
    if (!bounds.y_max || !(*bounds.y_max >= 0.0)) {
        throw MissingBoundError("y_max is required in regression mode");
    }
    double p_min = *bounds.p_min;
    double y_max = *bounds.y_max;
    double num = epsilon * epsilon * p_min * p_min * c_k;
    double den = 3.0 * (y_max * y_max + epsilon * epsilon) * p_max +
                 2.0 * epsilon * p_min * (y_max + epsilon);
    return num / den;
}

double recommended_bandwidth(std::size_t n, const KernelSpec& spec, double epsilon,
                             EstimatorMode mode, const EstimatorBounds& bounds) {
    if (n < 2) throw OutOfRangeError("bandwidth rule needs n >= 2");
    double ln_n = std::log(static_cast<double>(n));
    double inv_d = 1.0 / static_cast<double>(spec.d);
    bool have_bounds = bounds.p_max.has_value() &&
                       (mode == EstimatorMode::density ||
                        (bounds.p_min.has_value() && bounds.y_max.has_value()));
    if (have_bounds) {
        double c_star = theory_constant(mode, 0.5 * epsilon, spec.c_k, bounds);
        double big_d = 1.01 / c_star;
        return std::pow(big_d * ln_n / static_cast<double>(n), inv_d);
    }
    return std::pow(ln_n * ln_n / static_cast<double>(n), inv_d);
}

}  // namespace topolevel
