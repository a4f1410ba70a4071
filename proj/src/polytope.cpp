#include "symtorus/polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace symtorus {

namespace {

RatVector diff(const RatPoint& a, const RatPoint& b) {
    RatVector d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

std::size_t affine_rank(const std::vector<RatPoint>& pts, std::size_t dim) {
    if (pts.size() < 2) return 0;
    RatMatrix m(pts.size() - 1, dim);
    for (std::size_t i = 1; i < pts.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i - 1, j) = pts[i][j] - pts[0][j];
    return rank(m);
}

// p in conv(simplex), simplex affinely independent.
bool in_simplex(const RatPoint& p, const std::vector<RatPoint>& simplex) {
    const std::size_t dim = p.size();
    RatMatrix a(dim + 1, simplex.size());
    RatVector b(dim + 1);
    for (std::size_t j = 0; j < simplex.size(); ++j) {
        for (std::size_t i = 0; i < dim; ++i) a(i, j) = simplex[j][i];
        a(dim, j) = 1;
    }
    for (std::size_t i = 0; i < dim; ++i) b[i] = p[i];
    b[dim] = 1;
    RatVector lambda;
    if (!solve_rational(a, b, lambda)) return false;
    return std::all_of(lambda.begin(), lambda.end(), [](const Rational& x) { return x >= 0; });
}

// Carathéodory: p is in the hull of `others` iff it lies in a simplex on at most
// (affine dimension + 1) affinely independent points of `others`.
bool in_hull(const RatPoint& p, const std::vector<RatPoint>& others, std::size_t max_size) {
    std::vector<RatPoint> chosen;
    const std::size_t dim = p.size();
    std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
        if (!chosen.empty() && in_simplex(p, chosen)) return true;
        if (chosen.size() == max_size) return false;
        for (std::size_t i = start; i < others.size(); ++i) {
            chosen.push_back(others[i]);
            if (affine_rank(chosen, dim) + 1 == chosen.size() && rec(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return rec(0);
}

// Coordinates of the affine hull: indices of `dim` ambient coordinates on which the
// projection of the hull is injective.
std::vector<std::size_t> chart_coordinates(const std::vector<RatPoint>& verts, std::size_t ambient,
                                           std::size_t dim) {
    RatMatrix d(verts.size() - 1, ambient);
    for (std::size_t i = 1; i < verts.size(); ++i)
        for (std::size_t j = 0; j < ambient; ++j) d(i - 1, j) = verts[i][j] - verts[0][j];
    std::vector<std::size_t> chosen;
    for (std::size_t j = 0; j < ambient && chosen.size() < dim; ++j) {
        chosen.push_back(j);
        RatMatrix sub(d.rows(), chosen.size());
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (std::size_t c = 0; c < chosen.size(); ++c) sub(i, c) = d(i, chosen[c]);
        if (rank(sub) != chosen.size()) chosen.pop_back();
    }
    if (chosen.size() != dim) throw std::runtime_error("polytope: affine hull projection failed");
    return chosen;
}

// Vertex index sets of the facets of a full-dimensional polytope in Q^d, d >= 2.
std::vector<std::set<std::size_t>> facets(const std::vector<RatPoint>& pts, std::size_t d) {
    std::set<std::set<std::size_t>> found;
    std::vector<std::size_t> idx;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (idx.size() == d) {
            RatMatrix m(d - 1, d);
            for (std::size_t i = 1; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) m(i - 1, j) = pts[idx[i]][j] - pts[idx[0]][j];
            const auto ker = kernel_basis(m);
            if (ker.size() != 1) return;
            const RatVector& normal = ker[0];
            auto level = [&](const RatPoint& x) {
                Rational s = 0;
                for (std::size_t j = 0; j < d; ++j) s += normal[j] * x[j];
                return s;
            };
            const Rational b = level(pts[idx[0]]);
            bool below = false, above = false;
            std::set<std::size_t> on;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                const Rational v = level(pts[i]);
                if (v < b) below = true;
                else if (v > b) above = true;
                else on.insert(i);
            }
            if (!(below && above)) found.insert(on);
            return;
        }
        for (std::size_t i = start; i < pts.size(); ++i) {
            idx.push_back(i);
            rec(i + 1);
            idx.pop_back();
        }
    };
    rec(0);
    return {found.begin(), found.end()};
}

IntVector primitive_direction(const RatVector& v) {
    Integer den = 1;
    for (const auto& x : v) den = lcm(den, x.get_den());
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i] * Rational(den)).get_num();
    return primitive(out);
}

}  // namespace

Polytope Polytope::normalize(std::size_t ambient_dim, const std::vector<RatPoint>& raw_points) {
    if (ambient_dim > kMaxPolytopeDim)
        throw std::invalid_argument("polytope: ambient dimension above 3 is not supported");
    if (raw_points.empty()) throw std::invalid_argument("polytope: empty point list");
    for (const auto& p : raw_points)
        if (p.size() != ambient_dim) throw std::invalid_argument("polytope: point dimension mismatch");

    std::vector<RatPoint> pts(raw_points);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    const std::size_t dim = affine_rank(pts, ambient_dim);
    std::vector<RatPoint> verts;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<RatPoint> others;
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (others.empty() || !in_hull(pts[i], others, dim + 1)) verts.push_back(pts[i]);
    }

    Polytope p;
    p.ambient_dim_ = ambient_dim;
    p.dimension_ = dim;
    p.vertices_ = std::move(verts);
    return p;
}

std::vector<VertexEdgeData> vertex_edge_data(const Polytope& p) {
    const auto& verts = p.vertices();
    const std::size_t d = p.dimension();
    std::vector<std::vector<std::size_t>> adj(verts.size());

    if (d == 1) {
        adj[0] = {1};
        adj[1] = {0};
    } else if (d >= 2) {
        const auto coords = chart_coordinates(verts, p.ambient_dim(), d);
        std::vector<RatPoint> local;
        for (const auto& v : verts) {
            RatPoint x;
            for (auto c : coords) x.push_back(v[c]);
            local.push_back(std::move(x));
        }
        const auto fs = facets(local, d);
        for (std::size_t a = 0; a < verts.size(); ++a)
            for (std::size_t b = a + 1; b < verts.size(); ++b) {
                std::set<std::size_t> meet;
                bool any = false;
                for (const auto& f : fs) {
                    if (!f.contains(a) || !f.contains(b)) continue;
                    if (!any) {
                        meet = f;
                        any = true;
                    } else {
                        std::set<std::size_t> next;
                        std::set_intersection(meet.begin(), meet.end(), f.begin(), f.end(),
                                              std::inserter(next, next.begin()));
                        meet = std::move(next);
                    }
                }
                if (any && meet.size() == 2) {
                    adj[a].push_back(b);
                    adj[b].push_back(a);
                }
            }
    }

    std::vector<VertexEdgeData> out;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        VertexEdgeData ved{verts[i], {}};
        for (auto j : adj[i]) ved.edge_dirs.push_back(primitive_direction(diff(verts[j], verts[i])));
        std::sort(ved.edge_dirs.begin(), ved.edge_dirs.end());
        out.push_back(std::move(ved));
    }
    return out;
}

DelzantCertificate is_delzant(const Polytope& p) {
    DelzantCertificate cert;
    const std::size_t d = p.dimension();
    if (d == 0) return cert;
    for (const auto& ved : vertex_edge_data(p)) {
        if (ved.edge_dirs.size() != d) {
            cert.delzant = false;
            cert.failing_vertex = ved.vertex;
            cert.reason = "not simple: " + std::to_string(ved.edge_dirs.size()) + " edges meet at " +
                          format_point(ved.vertex) + ", expected " + std::to_string(d);
            return cert;
        }
        const IntMatrix edges = IntMatrix::from_rows(ved.edge_dirs, p.ambient_dim());
        Integer index;
        if (d == p.ambient_dim()) {
            index = abs(determinant(edges));
        } else {
            index = 1;
            const auto inv = snf(edges);
            if (inv.size() != d) index = 0;
            else
                for (const auto& x : inv) index *= x;
        }
        if (index != 1) {
            cert.delzant = false;
            cert.failing_vertex = ved.vertex;
            cert.index = index;
            cert.reason = "not smooth: edge directions at " + format_point(ved.vertex) +
                          " span a sublattice of index " + index.get_str();
            return cert;
        }
    }
    return cert;
}

bool equal_up_to_translation(const Polytope& p, const Polytope& q) {
    if (p.ambient_dim() != q.ambient_dim() || p.vertices().size() != q.vertices().size()) return false;
    const RatPoint& p0 = p.vertices().front();
    const RatPoint& q0 = q.vertices().front();
    for (std::size_t i = 0; i < p.vertices().size(); ++i)
        if (diff(p.vertices()[i], p0) != diff(q.vertices()[i], q0)) return false;
    return true;
}

Polytope transform(const Polytope& p, const IntMatrix& u, const RatVector& shift) {
    const std::size_t n = p.ambient_dim();
    if (u.rows() != n || u.cols() != n || shift.size() != n)
        throw std::invalid_argument("polytope transform: dimension mismatch");
    std::vector<RatPoint> image;
    for (const auto& v : p.vertices()) {
        RatPoint w(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) w[i] += Rational(u(i, j)) * v[j];
            w[i] += shift[i];
        }
        image.push_back(std::move(w));
    }
    return Polytope::normalize(n, image);
}

std::string format_point(const RatPoint& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_rational(v[i]);
    return s + ")";
}

}  // namespace symtorus
