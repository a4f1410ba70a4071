#include "doctest.h"
#include "support.hpp"

#include "symtorus/polytope.hpp"

using namespace symtorus;
using namespace testsupport;

namespace {

Polytope poly(std::size_t d, std::vector<RatPoint> pts) { return Polytope::normalize(d, pts); }

RatVector rv(std::initializer_list<int> xs) {
    RatVector v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("normalize keeps only extreme points, sorted") {
    const Polytope p = poly(2, {rv({1, 1}), rv({0, 0}), rv({2, 0}), rv({0, 2}), rv({1, 0}), rv({0, 0})});
    CHECK(p.vertices() == std::vector<RatPoint>{rv({0, 0}), rv({0, 2}), rv({2, 0})});
    CHECK(p.dimension() == 2);
    const Polytope seg = poly(2, {rv({0, 0}), rv({1, 1}), rv({3, 3})});
    CHECK(seg.vertices().size() == 2);
    CHECK(seg.dimension() == 1);
    CHECK_THROWS_AS(poly(4, {rv({0, 0, 0, 0})}), std::invalid_argument);
    CHECK_THROWS_AS(poly(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(poly(2, {rv({0, 0}), rv({1})}), std::invalid_argument);
}

TEST_CASE("Delzant examples") {
    CHECK(is_delzant(poly(1, {rv({-1}), rv({1})})).delzant);
    CHECK(is_delzant(poly(2, {rv({0, 0}), rv({1, 0}), rv({0, 1})})).delzant);
    CHECK(is_delzant(poly(3, {rv({0, 0, 0}), rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})})).delzant);
    const Rational lambda(7, 3);
    CHECK(is_delzant(poly(2, {RatVector{0, 0}, RatVector{lambda, 0}, RatVector{0, lambda}})).delzant);
    CHECK(is_delzant(poly(2, {rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})})).delzant);
    CHECK(is_delzant(poly(2, {rv({0, 0})})).delzant);
    CHECK(is_delzant(poly(3, {rv({0, 0, 0}), rv({1, 0, 0}), rv({0, 1, 0}), rv({1, 1, 0}), rv({0, 0, 1}),
                              rv({1, 0, 1}), rv({0, 1, 1}), rv({1, 1, 1})}))
              .delzant);
    // Hirzebruch-type trapezoid.
    CHECK(is_delzant(poly(2, {rv({0, 0}), rv({3, 0}), rv({0, 1}), rv({2, 1})})).delzant);
}

TEST_CASE("non-Delzant polytopes carry a certificate") {
    const auto cert = is_delzant(poly(2, {rv({0, 0}), rv({2, 1}), rv({1, 2})}));
    CHECK_FALSE(cert.delzant);
    REQUIRE(cert.index);
    CHECK(*cert.index == 3);
    REQUIRE(cert.failing_vertex);
    // The edge directions from the origin are (2,1) and (1,2); their determinant is 3.
    CHECK(abs(cofactor_det(IntMatrix{{2, 1}, {1, 2}})) == 3);

    const auto pyramid =
        is_delzant(poly(3, {rv({0, 0, 0}), rv({2, 0, 0}), rv({0, 2, 0}), rv({2, 2, 0}), rv({1, 1, 1})}));
    CHECK_FALSE(pyramid.delzant);
    CHECK(pyramid.reason.find("not simple") != std::string::npos);

    const auto wedge = is_delzant(poly(2, {rv({0, 0}), rv({1, 0}), rv({0, 2}), rv({1, 2}), rv({-1, 1})}));
    CHECK_FALSE(wedge.delzant);
}

TEST_CASE("edge data of the unit square") {
    const auto data = vertex_edge_data(poly(2, {rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})}));
    REQUIRE(data.size() == 4);
    for (const auto& v : data) {
        CHECK(v.edge_dirs.size() == 2);
        const IntMatrix m = IntMatrix::from_rows(v.edge_dirs, 2);
        CHECK(abs(cofactor_det(m)) == 1);
    }
}

TEST_CASE("Delzant predicate is invariant under unimodular maps and translations") {
    std::mt19937_64 rng(41);
    const std::vector<Polytope> cases = {
        poly(2, {rv({0, 0}), rv({1, 0}), rv({0, 1})}),
        poly(2, {rv({0, 0}), rv({2, 1}), rv({1, 2})}),
        poly(2, {rv({0, 0}), rv({3, 0}), rv({0, 1}), rv({2, 1})}),
        poly(1, {rv({-1}), rv({1})}),
        poly(3, {rv({0, 0, 0}), rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})}),
        poly(3, {rv({0, 0, 0}), rv({2, 0, 0}), rv({0, 2, 0}), rv({2, 2, 0}), rv({1, 1, 1})}),
    };
    for (const auto& p : cases) {
        const auto base = is_delzant(p);
        for (int trial = 0; trial < 20; ++trial) {
            const IntMatrix u = random_unimodular(p.ambient_dim(), rng);
            const Polytope q = transform(p, u, random_rat_vector(p.ambient_dim(), rng));
            const auto cert = is_delzant(q);
            CHECK(cert.delzant == base.delzant);
            CHECK(cert.index == base.index);
            CHECK(q.vertices().size() == p.vertices().size());
        }
    }
}

TEST_CASE("equality up to translation") {
    const Polytope a = poly(2, {rv({0, 0}), rv({1, 0}), rv({0, 1})});
    CHECK(equal_up_to_translation(a, transform(a, IntMatrix::identity(2), {Rational(1, 2), 5})));
    CHECK(equal_up_to_translation(a, transform(a, IntMatrix{{0, 1}, {1, 0}}, {1, 1})));
    CHECK_FALSE(equal_up_to_translation(a, transform(a, IntMatrix{{-1, 0}, {0, 1}}, {0, 0})));
    CHECK_FALSE(equal_up_to_translation(a, poly(2, {rv({0, 0}), rv({2, 0}), rv({0, 2})})));
}
