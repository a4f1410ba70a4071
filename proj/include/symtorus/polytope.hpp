#pragma once

// Rational convex polytopes of ambient dimension <= 3 given by vertex lists, and the
// Delzant predicate (simple, rational, smooth).
//
// Polytope equality used for classification is equality up to translation only; two
// polytopes related by a nontrivial unimodular map are different invariants.

#include "symtorus/linalg.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace symtorus {

using RatPoint = RatVector;

inline constexpr std::size_t kMaxPolytopeDim = 3;

class Polytope {
public:
    /// Convex hull vertices of a nonempty rational point set, sorted lexicographically.
    /// Throws std::invalid_argument for ambient dimension above 3, an empty list or ragged points.
    static Polytope normalize(std::size_t ambient_dim, const std::vector<RatPoint>& raw_points);

    std::size_t ambient_dim() const { return ambient_dim_; }
    const std::vector<RatPoint>& vertices() const { return vertices_; }
    /// Dimension of the affine hull.
    std::size_t dimension() const { return dimension_; }

    friend bool operator==(const Polytope&, const Polytope&) = default;

    /// The single point of the zero-dimensional space.
    Polytope() : vertices_{RatPoint{}} {}

private:
    std::size_t ambient_dim_ = 0;
    std::size_t dimension_ = 0;
    std::vector<RatPoint> vertices_;
};

struct VertexEdgeData {
    RatPoint vertex;
    std::vector<IntVector> edge_dirs;  ///< primitive integer directions of edges leaving the vertex
};

/// Incident edge directions at every vertex, computed inside the affine hull.
std::vector<VertexEdgeData> vertex_edge_data(const Polytope& p);

struct DelzantCertificate {
    bool delzant = true;
    std::optional<RatPoint> failing_vertex;
    std::string reason;           ///< empty when delzant
    std::optional<Integer> index; ///< |det| (or gcd of maximal minors) of the edge matrix at the failing vertex
};

DelzantCertificate is_delzant(const Polytope& p);

bool equal_up_to_translation(const Polytope& p, const Polytope& q);

/// Image of p under x -> u x + shift, u square integer.
Polytope transform(const Polytope& p, const IntMatrix& u, const RatVector& shift);

std::string format_point(const RatPoint& v);

}  // namespace symtorus
