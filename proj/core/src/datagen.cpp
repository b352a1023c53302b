#include "topolevel/datagen.hpp"

#include <cmath>

#include "topolevel/errors.hpp"
#include "topolevel/rng.hpp"

namespace topolevel {

namespace {

constexpr double kPi = 3.14159265358979323846;

// stream keys; frozen, a change would alter every generated dataset
enum : std::uint64_t {
    kStreamAnnulus = 1,
    kStreamMixture = 2,
    kStreamRings = 3,
    kStreamHierarchical = 4,
    kStreamCircle = 5,
    kStreamTorus = 6
};

struct MixtureTerm {
    double a, cx, cy, w;
};

// five peaks and three valleys, mutually separated by at least 0.55
// against widths of at most 0.18
constexpr MixtureTerm kMixture[] = {
    {1.00, -0.60, 0.60, 0.18},  {0.90, 0.60, 0.60, 0.16},
    {0.80, 0.00, 0.10, 0.16},   {0.95, -0.60, -0.55, 0.17},
    {0.85, 0.65, -0.50, 0.16},  {-0.70, 0.00, 0.65, 0.18},
    {-0.75, -0.60, 0.00, 0.17}, {-0.65, 0.60, 0.05, 0.16},
};

// hierarchical-density layout: four tight corner blobs on the right,
// a hundred-blob rim on the left
constexpr double kTightOffset = 0.04;
constexpr double kTightSigma = 0.012;
constexpr double kCraterRadius = 0.10;
constexpr double kCraterSigma = 0.010;
constexpr int kCraterBlobs = 100;

void require_n(std::size_t n) {
    if (n < 1) throw OutOfRangeError("sample size must be at least 1");
}

void require_sigma(double sigma) {
    if (!(sigma >= 0.0))
        throw OutOfRangeError("noise scale must be nonnegative");
}

}  // namespace

double default_sigma(Family family) {
    switch (family) {
        case Family::mixture_regression: return 0.2;
        case Family::three_rings: return 0.2;
        case Family::noisy_circle: return 0.1;
        case Family::noisy_torus: return 0.05;
        default: return 0.0;
    }
}

double annulus_probability(const double* x) {
    double r2 = x[0] * x[0] + x[1] * x[1];
    double r = std::sqrt(r2);
    double bump = r - 0.25;
    return 0.5 * (1.0 + std::sin(4.0 * kPi * r2)) *
           std::exp(-100.0 * bump * bump);
}

double mixture_surface(const double* x) {
    double s = 0.0;
    for (const MixtureTerm& t : kMixture) {
        double dx = x[0] - t.cx;
        double dy = x[1] - t.cy;
        s += t.a * std::exp(-(dx * dx + dy * dy) / (2.0 * t.w * t.w));
    }
    return s;
}

LabeledSample gen_annulus_classification(std::size_t n, std::uint64_t seed) {
    require_n(n);
    LabeledSample out;
    out.points.d = 2;
    out.points.coords.resize(2 * n);
    out.responses.emplace(n);
    out.y_max = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        CounterRng rng(seed, kStreamAnnulus, i);
        double* p = out.points.coords.data() + 2 * i;
        p[0] = rng.next_uniform(-0.5, 0.5);
        p[1] = rng.next_uniform(-0.5, 0.5);
        (*out.responses)[i] =
            rng.next_double() < annulus_probability(p) ? 1.0 : 0.0;
    }
    return out;
}

LabeledSample gen_mixture_regression(std::size_t n, double sigma,
                                     std::uint64_t seed) {
    require_n(n);
    require_sigma(sigma);
    LabeledSample out;
    out.points.d = 2;
    out.points.coords.resize(2 * n);
    out.responses.emplace(n);
    out.y_max = kMixtureMaxAbs + 5.0 * sigma;
    for (std::size_t i = 0; i < n; ++i) {
        CounterRng rng(seed, kStreamMixture, i);
        double* p = out.points.coords.data() + 2 * i;
        p[0] = rng.next_uniform(-1.0, 1.0);
        p[1] = rng.next_uniform(-1.0, 1.0);
        (*out.responses)[i] =
            mixture_surface(p) + rng.next_truncated_normal(sigma, 5.0);
    }
    return out;
}

PointCloud gen_three_rings(std::size_t n, double sigma, std::uint64_t seed) {
    require_n(n);
    require_sigma(sigma);
    PointCloud out;
    out.d = 2;
    out.coords.resize(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        CounterRng rng(seed, kStreamRings, i);
        double radius = static_cast<double>(rng.next_below(3) + 1);
        double theta = rng.next_uniform(0.0, 2.0 * kPi);
        double* p = out.coords.data() + 2 * i;
        p[0] = radius * std::cos(theta) + sigma * rng.next_normal();
        p[1] = radius * std::sin(theta) + sigma * rng.next_normal();
    }
    return out;
}

PointCloud gen_hierarchical_density(std::size_t n, std::uint64_t seed) {
    require_n(n);
    PointCloud out;
    out.d = 2;
    out.coords.resize(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        CounterRng rng(seed, kStreamHierarchical, i);
        double cx, cy, scale;
        if (rng.next_below(2) == 0) {
            // right component: corners of a small square
            std::uint64_t corner = rng.next_below(4);
            cx = 0.25 + (corner % 2 == 0 ? kTightOffset : -kTightOffset);
            cy = (corner / 2 == 0 ? kTightOffset : -kTightOffset);
            scale = kTightSigma;
        } else {
            std::uint64_t blob = rng.next_below(kCraterBlobs);
            double phi =
                2.0 * kPi * static_cast<double>(blob) / kCraterBlobs;
            cx = -0.25 + kCraterRadius * std::cos(phi);
            cy = kCraterRadius * std::sin(phi);
            scale = kCraterSigma;
        }
        double* p = out.coords.data() + 2 * i;
        p[0] = cx + scale * rng.next_normal();
        p[1] = cy + scale * rng.next_normal();
    }
    return out;
}

PointCloud gen_noisy_manifold(ManifoldKind kind, std::size_t n, double sigma,
                              std::uint64_t seed, double wrap_sigma) {
    require_n(n);
    require_sigma(sigma);
    PointCloud out;
    if (kind == ManifoldKind::circle) {
        out.d = 2;
        out.coords.resize(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            CounterRng rng(seed, kStreamCircle, i);
            double theta = rng.next_uniform(0.0, 2.0 * kPi);
            double* p = out.coords.data() + 2 * i;
            p[0] = std::cos(theta) + sigma * rng.next_normal();
            p[1] = std::sin(theta) + sigma * rng.next_normal();
        }
        return out;
    }
    if (!(wrap_sigma >= 0.0))
        throw OutOfRangeError("wrapped-normal spread must be nonnegative");
    const double big_r = 2.0;
    const double tube_r = 1.0;
    out.d = 3;
    out.coords.resize(3 * n);
    for (std::size_t i = 0; i < n; ++i) {
        CounterRng rng(seed, kStreamTorus, i);
        double lat = rng.next_uniform(0.0, 2.0 * kPi);
        double lon = rng.next_wrapped_normal(0.0, wrap_sigma);
        double ring = big_r + tube_r * std::cos(lat);
        double* p = out.coords.data() + 3 * i;
        p[0] = ring * std::cos(lon) + sigma * rng.next_normal();
        p[1] = ring * std::sin(lon) + sigma * rng.next_normal();
        p[2] = tube_r * std::sin(lat) + sigma * rng.next_normal();
    }
    return out;
}

LabeledSample generate(const GenSpec& spec) {
    double sigma = spec.sigma.value_or(default_sigma(spec.family));
    double wrap_sigma = spec.wrap_sigma.value_or(0.5);
    switch (spec.family) {
        case Family::annulus_classification:
            return gen_annulus_classification(spec.n, spec.seed);
        case Family::mixture_regression:
            return gen_mixture_regression(spec.n, sigma, spec.seed);
        case Family::three_rings: {
            LabeledSample out;
            out.points = gen_three_rings(spec.n, sigma, spec.seed);
            return out;
        }
        case Family::hierarchical_density: {
            LabeledSample out;
            out.points = gen_hierarchical_density(spec.n, spec.seed);
            return out;
        }
        case Family::noisy_circle: {
            LabeledSample out;
            out.points = gen_noisy_manifold(ManifoldKind::circle, spec.n,
                                            sigma, spec.seed);
            return out;
        }
        case Family::noisy_torus: {
            LabeledSample out;
            out.points = gen_noisy_manifold(ManifoldKind::torus, spec.n, sigma,
                                            spec.seed, wrap_sigma);
            return out;
        }
    }
    throw OutOfRangeError("unknown generator family");
}

}  // namespace topolevel
