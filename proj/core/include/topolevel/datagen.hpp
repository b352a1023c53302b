#ifndef TOPOLEVEL_DATAGEN_HPP
#define TOPOLEVEL_DATAGEN_HPP

#include <cstdint>
#include <optional>

#include "topolevel/sample.hpp"

namespace topolevel {

enum class Family {
    annulus_classification,
    mixture_regression,
    three_rings,
    hierarchical_density,
    noisy_circle,
    noisy_torus
};

// Per-family noise scale defaults applied when GenSpec leaves sigma
// unset.
double default_sigma(Family family);

// Generation request.  sigma is the ambient Gaussian noise scale;
// wrap_sigma is the wrapped-normal spread of the torus longitude angle.
struct GenSpec {
    Family family = Family::noisy_circle;
    std::size_t n = 1;
    std::uint64_t seed = 0;
    std::optional<double> sigma;
    std::optional<double> wrap_sigma;
};

// Conditional class-probability surface of the annulus experiment.
double annulus_probability(const double* x);

// Fixed five-peak three-valley mixture surface of the regression
// experiment, and its largest absolute value.
double mixture_surface(const double* x);
inline constexpr double kMixtureMaxAbs = 0.99597007929918879;

// X uniform on [-1/2,1/2]^2, binary Y with P(Y=1|X) = annulus_probability.
LabeledSample gen_annulus_classification(std::size_t n, std::uint64_t seed);

// X uniform on [-1,1]^2, Y = mixture_surface(X) + noise truncated at
// five sigmas; y_max records kMixtureMaxAbs + 5*sigma.
LabeledSample gen_mixture_regression(std::size_t n, double sigma,
                                     std::uint64_t seed);

// Concentric circles of radii 1, 2, 3, ring chosen uniformly, plus
// isotropic Gaussian noise.
PointCloud gen_three_rings(std::size_t n, double sigma, std::uint64_t seed);

// Equal-weight mixture of four tight clusters around (0.25, 0) and a
// hundred-blob crater rim around (-0.25, 0).
PointCloud gen_hierarchical_density(std::size_t n, std::uint64_t seed);

enum class ManifoldKind { circle, torus };

// Uniform circle in R^2 or a standard torus in R^3 (R=2, rho=1;
// latitude uniform, longitude wrapped-normal of spread wrap_sigma),
// plus isotropic Gaussian noise of scale sigma.
PointCloud gen_noisy_manifold(ManifoldKind kind, std::size_t n, double sigma,
                              std::uint64_t seed, double wrap_sigma = 0.5);

// Dispatch on spec.family, defaults filled in.
LabeledSample generate(const GenSpec& spec);

}  // namespace topolevel

#endif
