#pragma once

// Invariants of symplectic torus actions whose principal orbits are symplectic: omega_t,
// the Fuchsian signature of M/T, the area of M/T, and the monodromy tuple up to the action
// of the matrix group G(g; o) of block shape [[A, 0], [C, D]], A in Sp(2g, Z),
// D in GL(m, Z) with D o = o.

#include "symtorus/linalg.hpp"
#include "symtorus/orbifold.hpp"
#include "symtorus/torus.hpp"
#include "symtorus/verdict.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace symtorus {

inline constexpr std::size_t kDefaultNodeCap = 1'000'000;

struct SymplecticOrbitInvariants {
    Torus torus;
    RatMatrix omega_t;
    FuchsianSignature signature;
    Rational area;
    MonodromyHom monodromy;

    friend bool operator==(const SymplecticOrbitInvariants&, const SymplecticOrbitInvariants&) = default;
};

std::vector<std::string> validate(const SymplecticOrbitInvariants& inv);
/// Non-fatal findings, currently only bad signatures.
std::vector<std::string> warnings(const SymplecticOrbitInvariants& inv);

struct SignatureGroupGens {
    std::size_t genus = 0;
    std::vector<std::size_t> orders;
    Integer modulus = 1;
    std::vector<IntMatrix> generators;  ///< integer lifts, each in G(g; o)
    std::vector<IntMatrix> reduced;     ///< the same, entries reduced into [0, modulus)
    std::vector<std::string> labels;
};

/// Finite generating family of a subgroup of G(g; o):
///   A-block: S_i, T_i on each (a_i, b_i) pair and the transvections along a_i - a_{i+1},
///            b_i - b_{i+1};
///   C-block: one elementary matrix per entry;
///   D-block: swaps of cone points with equal orders, and I + w u^T with u o = 0, u w = 0
///            for u, w from integer kernel bases.
SignatureGroupGens signature_group_generators(std::size_t genus, const std::vector<std::size_t>& orders,
                                              const Integer& modulus);

/// (M t)_i = sum_j M_ij t_j in T.
std::vector<TorusElement> act(const IntMatrix& m, const std::vector<TorusElement>& tuple);

/// Orbit search under signature_group_generators modulo the lcm of the entry orders.
/// Equivalent verdicts carry a witness W with act(W, t1) == t2. Inequivalent only when the
/// subgroups of T generated by the entries differ; an exhausted orbit or a hit node cap
/// gives Undetermined.
EquivalenceVerdict tuple_orbit_equivalent(const FuchsianSignature& sig, std::size_t torus_dim,
                                          const std::vector<TorusElement>& t1,
                                          const std::vector<TorusElement>& t2,
                                          std::size_t node_cap = kDefaultNodeCap);

EquivalenceVerdict monodromy_equivalent(const SymplecticOrbitInvariants& a, const SymplecticOrbitInvariants& b,
                                        std::size_t node_cap = kDefaultNodeCap);

/// b1(M) = 2g + dim T.
std::size_t first_betti_from_invariants(const SymplecticOrbitInvariants& inv);

EquivalenceVerdict compare(const SymplecticOrbitInvariants& a, const SymplecticOrbitInvariants& b,
                           std::size_t node_cap = kDefaultNodeCap);

struct OrbifoldBundleDescriptor {
    FuchsianSignature signature;
    OrbifoldPresentation presentation;
    std::vector<std::string> reduced_relators;  ///< after eliminating c_m when g = 0
    std::vector<std::string> reduced_generators;
    MonodromyHom monodromy;
    Rational euler_characteristic;
    std::size_t total_dim = 0;
    bool good = true;
};

OrbifoldBundleDescriptor model_descriptor(const SymplecticOrbitInvariants& inv);

}  // namespace symtorus
