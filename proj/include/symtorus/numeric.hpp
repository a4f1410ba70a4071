#pragma once

// Floating-point sanity checks of the Hamiltonian examples: S^2 with the height function and
// CP^n with the Fubini-Study momentum map. Results here are approximate.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace symtorus::numeric {

/// (theta, h) chart of S^2 with omega = d theta ^ d h.
struct SpherePoint {
    double theta = 0.0;  ///< [0, 2 pi)
    double h = 0.0;      ///< [-1, 1]

    SpherePoint(double theta, double h);
};

struct ProjectivePoint {
    std::vector<std::complex<double>> z;  ///< z_0, ..., z_n, not all zero

    explicit ProjectivePoint(std::vector<std::complex<double>> coords);
    std::size_t n() const { return z.size() - 1; }
};

double s2_momentum(const SpherePoint& p);

/// lambda |z_k|^2 / sum |z_i|^2 for k = 1..n.
std::vector<double> cpn_momentum(const ProjectivePoint& z, double lambda);

/// Max-norm difference between -d<mu, X> and i_{X_M} omega in the chart, both estimated by
/// central differences. The circle acts by theta -> theta - s X, the orientation for which
/// mu = h solves the equation with omega = d theta ^ d h. Rejects poles and step <= 0.
double hamilton_residual_s2(double x, const SpherePoint& p, double step);

struct HullEstimate {
    std::vector<std::vector<double>> vertices;  ///< images of e_0, ..., e_n
    double max_violation = 0.0;                 ///< worst excursion of a sample outside conv{0, lambda e_k}
    double min_margin = 0.0;                    ///< smallest slack of a random sample inside the hull
    std::size_t samples = 0;
};

/// Images of the coordinate points plus a seeded containment check on random points.
HullEstimate momentum_hull_estimate(std::size_t n, double lambda, std::size_t samples, std::uint64_t seed);

struct ResidualSweep {
    double max_residual = 0.0;
    std::size_t points = 0;
};

/// Residual over `points` chart points with |h| <= 0.9 and seeded X in [-3, 3].
ResidualSweep hamilton_sweep(std::size_t points, std::uint64_t seed, double step = 1e-5);

}  // namespace symtorus::numeric
