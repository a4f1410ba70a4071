#include "symtorus/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace symtorus::numeric {

SpherePoint::SpherePoint(double theta_, double h_) : theta(theta_), h(h_) {
    if (!(h >= -1.0 && h <= 1.0)) throw std::invalid_argument("SpherePoint: height outside [-1, 1]");
    theta = std::fmod(theta, 2 * std::numbers::pi);
    if (theta < 0) theta += 2 * std::numbers::pi;
}

ProjectivePoint::ProjectivePoint(std::vector<std::complex<double>> coords) : z(std::move(coords)) {
    if (z.size() < 2) throw std::invalid_argument("ProjectivePoint: need at least two coordinates");
    double norm = 0;
    for (const auto& c : z) norm += std::norm(c);
    if (!(norm > 0)) throw std::invalid_argument("ProjectivePoint: zero vector");
}

double s2_momentum(const SpherePoint& p) { return p.h; }

std::vector<double> cpn_momentum(const ProjectivePoint& p, double lambda) {
    if (!(lambda > 0)) throw std::invalid_argument("cpn_momentum: lambda must be positive");
    double total = 0;
    for (const auto& c : p.z) total += std::norm(c);
    std::vector<double> mu(p.n());
    for (std::size_t k = 1; k < p.z.size(); ++k) mu[k - 1] = lambda * std::norm(p.z[k]) / total;
    return mu;
}

double hamilton_residual_s2(double x, const SpherePoint& p, double step) {
    if (!(step > 0)) throw std::invalid_argument("hamilton_residual_s2: step must be positive");
    if (std::abs(p.h) + step >= 1.0)
        throw std::invalid_argument("hamilton_residual_s2: the chart is singular at the poles");

    auto pairing = [x](double theta, double h) { return x * s2_momentum(SpherePoint(theta, h)); };
    // -d<mu, X> as (d theta, d h) components.
    const double lhs_theta = -(pairing(p.theta + step, p.h) - pairing(p.theta - step, p.h)) / (2 * step);
    const double lhs_h = -(pairing(p.theta, p.h + step) - pairing(p.theta, p.h - step)) / (2 * step);

    // X_M from the flow, then i_V (d theta ^ d h) = V_theta dh - V_h d theta.
    auto flow = [x](double s, double theta, double h) { return std::pair{theta - s * x, h}; };
    const auto [tp, hp] = flow(step, p.theta, p.h);
    const auto [tm, hm] = flow(-step, p.theta, p.h);
    const double v_theta = (tp - tm) / (2 * step);
    const double v_h = (hp - hm) / (2 * step);
    const double rhs_theta = -v_h;
    const double rhs_h = v_theta;

    return std::max(std::abs(lhs_theta - rhs_theta), std::abs(lhs_h - rhs_h));
}

HullEstimate momentum_hull_estimate(std::size_t n, double lambda, std::size_t samples, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("momentum_hull_estimate: n must be at least 1");
    if (samples < 1) throw std::invalid_argument("momentum_hull_estimate: need at least one sample");
    HullEstimate est;
    for (std::size_t j = 0; j <= n; ++j) {
        std::vector<std::complex<double>> z(n + 1, 0.0);
        z[j] = 1.0;
        est.vertices.push_back(cpn_momentum(ProjectivePoint(z), lambda));
    }

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    est.min_margin = lambda;
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<std::complex<double>> z(n + 1);
        for (auto& c : z) c = {gauss(rng), gauss(rng)};
        const auto mu = cpn_momentum(ProjectivePoint(z), lambda);
        double sum = 0;
        double margin = lambda;
        for (double m : mu) {
            est.max_violation = std::max(est.max_violation, -m);
            margin = std::min(margin, m);
            sum += m;
        }
        est.max_violation = std::max(est.max_violation, sum - lambda);
        margin = std::min(margin, lambda - sum);
        est.min_margin = std::min(est.min_margin, margin);
    }
    est.samples = samples;
    return est;
}

ResidualSweep hamilton_sweep(std::size_t points, std::uint64_t seed, double step) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> xs(-3.0, 3.0);
    const auto cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(points))));
    ResidualSweep out;
    for (std::size_t i = 0; i < points; ++i) {
        const std::size_t r = i / cols, c = i % cols;
        const std::size_t rows = (points + cols - 1) / cols;
        const double h = rows > 1 ? -0.9 + 1.8 * static_cast<double>(r) / static_cast<double>(rows - 1) : 0.0;
        const double theta = 2 * std::numbers::pi * static_cast<double>(c) / static_cast<double>(cols);
        out.max_residual = std::max(out.max_residual, hamilton_residual_s2(xs(rng), SpherePoint(theta, h), step));
        ++out.points;
    }
    return out;
}

}  // namespace symtorus::numeric
