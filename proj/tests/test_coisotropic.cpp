#include "doctest.h"
#include "support.hpp"

#include "symtorus/coisotropic.hpp"
#include "symtorus/fixtures.hpp"

using namespace symtorus;
using namespace testsupport;

namespace {

/// Product on R^2 x R^2 for c(e1, e2) = e1, written out in coordinates.
std::pair<RatVector, RatVector> heisenberg_mul(const RatVector& t, const RatVector& z, const RatVector& tp,
                                               const RatVector& zp) {
    const Rational c1 = z[0] * zp[1] - z[1] * zp[0];
    return {{t[0] + tp[0] - c1 / 2, t[1] + tp[1]}, {z[0] + zp[0], z[1] + zp[1]}};
}

CoisotropicInvariants with_chern(const RatVector& value) {
    auto inv = fixture_kodaira();
    inv.chern = {ChernEntry{0, 1, value}};
    return inv;
}

}  // namespace

TEST_CASE("Kodaira fixture carries the listed invariants") {
    const auto k = fixture_kodaira();
    CHECK(k.torus.dim == 2);
    CHECK(k.omega_t.is_zero());
    CHECK(k.t_h.dim() == 0);
    CHECK(k.delta.vertices() == std::vector<RatPoint>{RatPoint{0, 0}});
    CHECK(k.period_basis == std::vector<RatVector>{{1, 0}, {0, 1}});
    CHECK(k.chern_on_basis(0, 1) == RatVector{1, 0});
    CHECK(k.chern_on_basis(1, 0) == RatVector{-1, 0});
    CHECK(k.chern_on_basis(0, 0) == RatVector{0, 0});
    CHECK(k.tau == std::vector<TorusElement>{te(0, 0), te(0, 0)});
    CHECK(k.n_dim() == 2);
    CHECK(validate(k).empty());
}

TEST_CASE("other coisotropic fixtures validate") {
    CHECK(validate(fixture_cp2()).empty());
    CHECK(validate(fixture_cp2(Rational(5, 2))).empty());
    CHECK(validate(fixture_s2xt2()).empty());
    CHECK(fixture_s2xt2().n_dim() == 1);
    CHECK(fixture_cp2().n_dim() == 0);
}

TEST_CASE("validation reports inconsistent records") {
    auto bad = fixture_kodaira();
    bad.omega_t(0, 1) = 1;
    CHECK_FALSE(validate(bad).empty());

    bad = fixture_kodaira();
    bad.chern = {ChernEntry{0, 1, {Rational(1, 2), 0}}};
    CHECK_FALSE(validate(bad).empty());

    bad = fixture_kodaira();
    bad.tau.pop_back();
    CHECK_FALSE(validate(bad).empty());

    bad = fixture_kodaira();
    bad.period_basis = {{1, 0}, {2, 0}};
    CHECK_FALSE(validate(bad).empty());

    bad = fixture_cp2();
    bad.delta = Polytope::normalize(2, {{0, 0}, {2, 1}, {1, 2}});
    const auto v = validate(bad);
    REQUIRE(v.size() == 1);
    CHECK(v[0].find("index 3") != std::string::npos);

    bad = fixture_s2xt2();
    bad.delta = Polytope::normalize(2, {{0, 0}, {1, 0}, {0, 1}});
    CHECK_FALSE(validate(bad).empty());
}

TEST_CASE("group product matches the coordinate formula") {
    const auto k = fixture_kodaira();
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const RatVector t = random_rat_vector(2, rng), z = random_rat_vector(2, rng);
        const RatVector tp = random_rat_vector(2, rng), zp = random_rat_vector(2, rng);
        const auto [pt, pz] = heisenberg_mul(t, z, tp, zp);
        const GroupElement p = group_mul({TorusElement(t), z}, {TorusElement(tp), zp}, k);
        CHECK(p.t == TorusElement(pt));
        CHECK(p.zeta == pz);
    }
}

TEST_CASE("group axioms on seeded random triples") {
    const auto r = check_group_axioms(fixture_kodaira(), 1000, 0);
    CHECK(r.trials == 1000);
    CHECK(r.passed());
    CHECK(check_group_axioms(fixture_s2xt2(), 200, 4).passed());
    CHECK(check_group_axioms(with_chern({3, -2}), 200, 5).passed());
}

TEST_CASE("group axioms are deterministic in the seed") {
    std::mt19937_64 a(99), b(99);
    const auto k = fixture_kodaira();
    for (int i = 0; i < 20; ++i) CHECK(random_group_element(k, a) == random_group_element(k, b));
}

TEST_CASE("holonomy extension on the Kodaira lattice") {
    const auto k = fixture_kodaira();
    CHECK(extend_tau(k, IntVector{1, 1}) == te(Rational(1, 2), 0));
    CHECK(extend_tau(k, RatVector{1, 1}) == te(Rational(1, 2), 0));
    CHECK_THROWS_AS(extend_tau(k, RatVector{Rational(1, 2), 0}), std::invalid_argument);
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> d(-20, 20);
    for (int trial = 0; trial < 100; ++trial) {
        const IntVector z{d(rng), d(rng)};
        // Closed form for tau = 0 on the basis and c(e1, e2) = e1: tau_(a, b) = [ab/2, 0].
        const TorusElement expected = te(Rational(z[0] * z[1]) / 2, 0);
        CHECK(extend_tau(k, z) == expected);
        CHECK(extend_tau(k, z, {1, 0}) == expected);
    }
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            IntVector a{0, 0}, b{0, 0};
            a[i] = 1;
            b[j] = 1;
            CHECK(hom_c_check(k, a, b));
        }
}

TEST_CASE("holonomy extension order independence with nonzero basis values") {
    auto inv = fixture_kodaira();
    inv.tau = {te(Rational(1, 3), Rational(1, 5)), te(Rational(2, 7), 0)};
    inv.chern = {ChernEntry{0, 1, {2, 3}}};
    REQUIRE(validate(inv).empty());
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
        const IntVector z{d(rng), d(rng)}, zp{d(rng), d(rng)};
        CHECK(extend_tau(inv, z) == extend_tau(inv, z, {1, 0}));
        CHECK(hom_c_check(inv, z, zp));
    }
}

TEST_CASE("H contains the twisted lattice and is closed") {
    const auto k = fixture_kodaira();
    const auto h = build_h(k);
    CHECK(h.closed());
    CHECK(h.generators.size() == 2);
    CHECK(in_h({te(0, 0), {1, 1}}, k) == false);
    CHECK(in_h({te(Rational(1, 2), 0), {1, 1}}, k));
    CHECK_FALSE(in_h({te(Rational(1, 3), 0), {1, 0}}, k));
    CHECK_FALSE(in_h({te(0, 0), {Rational(1, 2), 0}}, k));
    CHECK(build_h(fixture_s2xt2()).closed());
    const auto s = fixture_s2xt2();
    CHECK(in_h({te(0, Rational(2, 9)), {3}}, s));
    CHECK_FALSE(in_h({te(Rational(1, 9), 0), {3}}, s));
}

TEST_CASE("sigma on the free Lagrangian model") {
    const auto k = fixture_kodaira();
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const RatVector z = random_rat_vector(2, rng);
        const TangentVector u{random_rat_vector(2, rng), random_rat_vector(2, rng)};
        const TangentVector v{random_rat_vector(2, rng), random_rat_vector(2, rng)};
        CHECK(sigma_eval(k, z, u, v) == -sigma_eval(k, z, v, u));
        CHECK(sigma_eval(k, z, u, u) == 0);
    }
    for (int trial = 0; trial < 10; ++trial) {
        const RatVector z = random_rat_vector(2, rng);
        const RatMatrix g = sigma_gram(k, z);
        CHECK(cofactor_det(g) == 1);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                CHECK(g(i, j) == 0);
                CHECK(g(i, j + 2) == (i == j ? -1 : 0));
                CHECK(g(i + 2, j) == (i == j ? 1 : 0));
            }
    }
    CHECK_THROWS_AS(sigma_gram(fixture_cp2(), {}), std::domain_error);
}

TEST_CASE("first Betti number agrees with the abelianized presentation") {
    // Generators x1, x2 (torus loops) and y1, y2 (lifts of the period basis); x central, and
    // [y1, y2] computed in the lifted group.
    auto oracle = [](const RatVector& c12) {
        using Elem = std::pair<RatVector, RatVector>;
        auto mul = [&](const Elem& a, const Elem& b) {
            const Rational w = a.second[0] * b.second[1] - a.second[1] * b.second[0];
            return Elem{{a.first[0] + b.first[0] - w * c12[0] / 2, a.first[1] + b.first[1] - w * c12[1] / 2},
                        {a.second[0] + b.second[0], a.second[1] + b.second[1]}};
        };
        const Elem y1{{0, 0}, {1, 0}}, y2{{0, 0}, {0, 1}};
        const Elem y1_inv{{0, 0}, {-1, 0}}, y2_inv{{0, 0}, {0, -1}};
        const Elem comm = mul(mul(mul(y1, y2), y1_inv), y2_inv);
        REQUIRE(comm.second == RatVector{0, 0});
        IntMatrix rel(1, 4);
        for (std::size_t i = 0; i < 2; ++i) {
            REQUIRE(comm.first[i].get_den() == 1);
            rel(0, i) = comm.first[i].get_num();
        }
        return abelian_invariants(rel, 4);
    };
    const auto k = fixture_kodaira();
    CHECK(nilmanifold_b1(k) == 3);
    CHECK(oracle({1, 0}).free_rank == 3);
    CHECK(oracle({1, 0}).torsion.empty());

    CHECK(nilmanifold_b1(with_chern({0, 0})) == 4);
    CHECK(oracle({0, 0}).free_rank == 4);
    CHECK(nilmanifold_b1(with_chern({2, 0})) == 3);
    CHECK(oracle({2, 0}).free_rank == 3);
    CHECK(oracle({2, 0}).torsion == std::vector<Integer>{2});
    CHECK_THROWS_AS(nilmanifold_b1(fixture_s2xt2()), std::domain_error);
}

TEST_CASE("commutators in the twisted group are central torus elements") {
    const auto k = fixture_kodaira();
    const GroupElement a{te(0, 0), {1, 0}}, b{te(0, 0), {0, 1}};
    const GroupElement comm =
        group_mul(group_mul(a, b, k), group_inverse(group_mul(b, a, k), k), k);
    CHECK(comm.zeta == RatVector{0, 0});
    CHECK(comm.t == te(-1, 0));
}

TEST_CASE("model descriptor") {
    const auto m = model_descriptor(fixture_kodaira());
    CHECK(m.total_dim == 4);
    CHECK(m.n_dim == 2);
    CHECK(m.free_complement_dim == 2);
    const auto c = model_descriptor(fixture_cp2());
    CHECK(c.total_dim == 4);
    CHECK(c.fiber.vertices().size() == 3);
    CHECK(model_descriptor(fixture_s2xt2()).n_dim == 1);
}

TEST_CASE("comparison verdicts") {
    const auto k = fixture_kodaira();
    CHECK(compare(k, k).tag == VerdictTag::Equivalent);

    auto rebased = k;
    rebased.period_basis = {{1, 1}, {0, 1}};
    rebased.tau = {extend_tau(k, IntVector{1, 1}), te(0, 0)};
    CHECK(compare(k, rebased).tag == VerdictTag::Equivalent);

    auto v = compare(k, with_chern({2, 0}));
    CHECK(v.tag == VerdictTag::Inequivalent);
    CHECK(v.separator == "chern");

    auto coarse = k;
    coarse.period_basis = {{2, 0}, {0, 1}};
    v = compare(k, coarse);
    CHECK(v.tag == VerdictTag::Inequivalent);
    CHECK(v.separator == "period_lattice");

    CHECK(compare(k, fixture_cp2()).separator == "hamiltonian_subtorus");
    CHECK(compare(fixture_cp2(), fixture_cp2(2)).separator == "delta");

    auto moved = k;
    moved.tau = {te(Rational(1, 2), 0), te(0, 0)};
    CHECK(compare(k, moved).tag == VerdictTag::Undetermined);
}
