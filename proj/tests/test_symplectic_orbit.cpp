#include "doctest.h"
#include "support.hpp"

#include "symtorus/fixtures.hpp"
#include "symtorus/symplectic_orbit.hpp"

using namespace symtorus;
using namespace testsupport;

namespace {

/// Entrywise (W t)_i = sum_j W_ij t_j computed on raw rationals, then reduced mod 1.
std::vector<TorusElement> oracle_act(const IntMatrix& w, const std::vector<TorusElement>& t) {
    std::vector<TorusElement> out;
    for (std::size_t i = 0; i < w.rows(); ++i) {
        RatVector acc(t.front().dim(), Rational(0));
        for (std::size_t j = 0; j < w.cols(); ++j)
            for (std::size_t c = 0; c < acc.size(); ++c) acc[c] += Rational(w(i, j)) * t[j][c];
        out.emplace_back(acc);
    }
    return out;
}

bool in_signature_group(const IntMatrix& m, std::size_t g, const std::vector<std::size_t>& o) {
    const std::size_t n = 2 * g + o.size();
    if (m.rows() != n || m.cols() != n) return false;
    if (abs(cofactor_det(m)) != 1) return false;
    for (std::size_t i = 0; i < 2 * g; ++i)
        for (std::size_t j = 2 * g; j < n; ++j)
            if (m(i, j) != 0) return false;
    IntMatrix a(2 * g, 2 * g), j(2 * g, 2 * g);
    for (std::size_t r = 0; r < 2 * g; ++r)
        for (std::size_t c = 0; c < 2 * g; ++c) a(r, c) = m(r, c);
    for (std::size_t p = 0; p < g; ++p) {
        j(2 * p, 2 * p + 1) = 1;
        j(2 * p + 1, 2 * p) = -1;
    }
    if (!(a.transpose() * j * a == j)) return false;
    for (std::size_t r = 0; r < o.size(); ++r) {
        Integer s = 0;
        for (std::size_t c = 0; c < o.size(); ++c) s += m(2 * g + r, 2 * g + c) * static_cast<unsigned long>(o[c]);
        if (s != static_cast<unsigned long>(o[r])) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("s2quot fixture carries the listed invariants") {
    const auto s = fixture_s2quot();
    CHECK(s.omega_t == RatMatrix{{0, 1}, {-1, 0}});
    CHECK(s.signature == FuchsianSignature(0, {2, 2}));
    CHECK(s.area == 1);
    CHECK(s.monodromy.gamma == std::vector<TorusElement>{te(Rational(1, 2), 0), te(Rational(1, 2), 0)});
    CHECK(validate(s).empty());
    CHECK(warnings(s).empty());
    CHECK(validate(fixture_t4()).empty());
    CHECK(validate(fixture_s2xt2free()).empty());
}

TEST_CASE("validation of symplectic-orbit records") {
    auto s = fixture_s2quot();
    s.omega_t = RatMatrix(2, 2);
    CHECK_FALSE(validate(s).empty());
    s = fixture_s2quot();
    s.area = 0;
    CHECK_FALSE(validate(s).empty());
    s = fixture_s2quot();
    s.monodromy.gamma[1] = te(0, Rational(1, 2));
    CHECK_FALSE(validate(s).empty());

    auto bad = fixture_s2xt2free();
    bad.signature = FuchsianSignature(0, {2, 3});
    bad.monodromy = MonodromyHom{bad.signature, bad.torus, {}, {}, {te(0, 0), te(0, 0)}};
    CHECK(validate(bad).empty());
    CHECK(warnings(bad).size() == 1);
}

TEST_CASE("generators lie in the signature group") {
    for (std::size_t g = 0; g <= 2; ++g)
        for (const auto& o : std::vector<std::vector<std::size_t>>{{}, {2}, {2, 2}, {2, 3}, {2, 2, 4}, {3, 3, 3}}) {
            const auto gens = signature_group_generators(g, o, 12);
            REQUIRE(gens.generators.size() == gens.reduced.size());
            for (const auto& m : gens.generators) CHECK(in_signature_group(m, g, o));
            for (std::size_t i = 0; i < gens.generators.size(); ++i) {
                const IntMatrix& m = gens.generators[i];
                for (std::size_t r = 0; r < m.rows(); ++r)
                    for (std::size_t c = 0; c < m.cols(); ++c)
                        CHECK(gens.reduced[i](r, c) == mod_floor(m(r, c), 12));
            }
        }
}

TEST_CASE("swap witness for exchanged cone values") {
    const FuchsianSignature sig(0, {2, 2});
    const Rational h(1, 2);
    const std::vector<TorusElement> t1{te(h, 0), te(0, h)}, t2{te(0, h), te(h, 0)};
    const auto v = tuple_orbit_equivalent(sig, 2, t1, t2);
    REQUIRE(v.tag == VerdictTag::Equivalent);
    REQUIRE(v.witness);
    CHECK(oracle_act(*v.witness, t1) == t2);
    CHECK(in_signature_group(*v.witness, 0, {2, 2}));
    CHECK(*v.witness == IntMatrix{{0, 1}, {1, 0}});
}

TEST_CASE("s2quot compared with its swapped fixture") {
    const auto v = compare(fixture_s2quot(), fixture_s2quot_swapped());
    REQUIRE(v.tag == VerdictTag::Equivalent);
    REQUIRE(v.witness);
    CHECK(oracle_act(*v.witness, fixture_s2quot().monodromy.tuple()) == fixture_s2quot_swapped().monodromy.tuple());
}

TEST_CASE("lattice-separated tuples are inequivalent") {
    const FuchsianSignature sig(0, {2, 2});
    const Rational h(1, 2);
    const auto v = tuple_orbit_equivalent(sig, 2, {te(h, 0), te(h, 0)}, {te(0, h), te(0, h)});
    CHECK(v.tag == VerdictTag::Inequivalent);
    CHECK(v.separator == "monodromy");

    auto other = fixture_s2quot();
    other.monodromy.gamma = {te(0, h), te(0, h)};
    CHECK(compare(fixture_s2quot(), other).tag == VerdictTag::Inequivalent);
}

TEST_CASE("genus one orbit search") {
    const FuchsianSignature sig(1, {});
    const Rational third(1, 3);
    const std::vector<TorusElement> t1{te(third, 0), te(0, 0)}, t2{te(0, 0), te(third, 0)};
    const auto v = tuple_orbit_equivalent(sig, 2, t1, t2);
    REQUIRE(v.tag == VerdictTag::Equivalent);
    CHECK(oracle_act(*v.witness, t1) == t2);
    CHECK(in_signature_group(*v.witness, 1, {}));

    const std::vector<TorusElement> t3{te(third, 0), te(third, 0)};
    const auto w = tuple_orbit_equivalent(sig, 2, t1, t3);
    REQUIRE(w.tag == VerdictTag::Equivalent);
    CHECK(oracle_act(*w.witness, t1) == t3);
}

TEST_CASE("orbit search soundness on random genus-one tuples") {
    std::mt19937_64 rng(21);
    const FuchsianSignature sig(1, {2});
    const auto gens = signature_group_generators(1, {2}, 1);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> d(0, 5);
        const std::vector<TorusElement> t1{te(Rational(d(rng), 6), 0), te(0, Rational(d(rng), 6)),
                                           te(0, 0)};
        std::vector<TorusElement> t2 = t1;
        IntMatrix path = IntMatrix::identity(3);
        for (int step = 0; step < 4; ++step) {
            const auto& g = gens.generators[rng() % gens.generators.size()];
            path = g * path;
        }
        t2 = oracle_act(path, t1);
        const auto v = tuple_orbit_equivalent(sig, 2, t1, t2);
        REQUIRE(v.tag == VerdictTag::Equivalent);
        CHECK(oracle_act(*v.witness, t1) == t2);
        CHECK(in_signature_group(*v.witness, 1, {2}));
    }
}

TEST_CASE("node cap yields Undetermined") {
    const FuchsianSignature sig(2, {});
    const std::vector<TorusElement> t1{te(Rational(1, 7), 0), te(0, 0), te(0, 0), te(0, 0)};
    const std::vector<TorusElement> t2{te(0, 0), te(0, 0), te(0, 0), te(Rational(1, 7), 0)};
    const auto v = tuple_orbit_equivalent(sig, 2, t1, t2, 3);
    CHECK(v.tag == VerdictTag::Undetermined);
    const auto full = tuple_orbit_equivalent(sig, 2, t1, t2);
    REQUIRE(full.tag == VerdictTag::Equivalent);
    CHECK(oracle_act(*full.witness, t1) == t2);
}

TEST_CASE("comparison separators") {
    CHECK(compare(fixture_s2quot(), fixture_s2quot()).tag == VerdictTag::Equivalent);
    CHECK(compare(fixture_t4(), fixture_s2xt2free()).separator == "signature");
    auto big = fixture_s2quot();
    big.area = 3;
    CHECK(compare(fixture_s2quot(), big).separator == "area");
    auto flipped = fixture_s2quot();
    flipped.omega_t = RatMatrix{{0, -1}, {1, 0}};
    CHECK(compare(fixture_s2quot(), flipped).separator == "omega_t");
}

TEST_CASE("first Betti number from the invariants") {
    CHECK(first_betti_from_invariants(fixture_t4()) == 4);
    CHECK(first_betti_from_invariants(fixture_s2quot()) == 2);
    CHECK(first_betti_from_invariants(fixture_s2xt2free()) == 2);
    // b1(M/T) = b1(M) - dim T, with b1(M/T) the free rank of the orbifold homology.
    for (const auto& f : {fixture_t4(), fixture_s2quot(), fixture_s2xt2free()})
        CHECK(first_betti_from_invariants(f) - f.torus.dim == orbifold_homology(f.signature).free_rank);
}

TEST_CASE("orbifold bundle descriptor") {
    const auto d = model_descriptor(fixture_s2quot());
    CHECK(d.total_dim == 4);
    CHECK(d.good);
    CHECK(d.euler_characteristic == 1);
    CHECK(d.reduced_generators == std::vector<std::string>{"c1"});
    CHECK(d.reduced_relators == std::vector<std::string>{"c1^2 = 1"});
    CHECK(model_descriptor(fixture_t4()).reduced_generators == std::vector<std::string>{"a1", "b1"});
}
