#pragma once

// Invariants of symplectic torus actions with coisotropic principal orbits:
//   omega_t  restriction of the symplectic form to orbits, a form on the Lie algebra t;
//   t_h      the Hamiltonian subtorus, with momentum polytope delta;
//   P        the period lattice in N = (l / t_h)^*, l = ker omega_t;
//   c        antisymmetric bilinear N x N -> l (Chern class), stored on a P-basis;
//   tau      holonomy P -> T, stored on the same P-basis.
//
// The twisted group G = T x N has product
//   (t, z)(t', z') = (t + t' - c(z, z')/2, z + z')
// (torus part written additively), and H = {(t, z) : z in P, t + tau_z in T_h}.

#include "symtorus/linalg.hpp"
#include "symtorus/polytope.hpp"
#include "symtorus/torus.hpp"
#include "symtorus/verdict.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace symtorus {

/// c(e_i, e_j) for period basis vectors e_i, e_j, i < j.
struct ChernEntry {
    std::size_t i = 0;
    std::size_t j = 0;
    RatVector value;

    friend bool operator==(const ChernEntry&, const ChernEntry&) = default;
};

struct CoisotropicInvariants {
    Torus torus;
    RatMatrix omega_t;
    Subtorus t_h;
    Polytope delta;
    std::vector<RatVector> period_basis;  ///< coordinates in a fixed basis of N
    std::vector<ChernEntry> chern;        ///< pairs not listed are zero
    std::vector<TorusElement> tau;        ///< tau on period_basis, same order

    /// Rational basis of l = ker omega_t.
    std::vector<RatVector> isotropy_kernel() const;
    /// dim N = dim l - dim t_h.
    std::size_t n_dim() const;
    /// c(e_i, e_j) on period basis indices, antisymmetric, zero when unlisted.
    RatVector chern_on_basis(std::size_t i, std::size_t j) const;
    /// c(z, z') for arbitrary z, z' in N (coordinates), extended bilinearly.
    RatVector chern_eval(const RatVector& z, const RatVector& zp) const;
    /// Integer coordinates of z in the period basis, if z lies in P.
    std::optional<IntVector> period_coordinates(const RatVector& z) const;
    /// Rational coordinates of z in the period basis.
    RatVector period_rational_coordinates(const RatVector& z) const;
    /// sum coeffs[i] * period_basis[i].
    RatVector period_vector(const IntVector& coeffs) const;

    friend bool operator==(const CoisotropicInvariants&, const CoisotropicInvariants&) = default;
};

std::vector<std::string> validate(const CoisotropicInvariants& inv);

struct GroupElement {
    TorusElement t;
    RatVector zeta;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement group_identity(const CoisotropicInvariants& inv);
GroupElement group_mul(const GroupElement& a, const GroupElement& b, const CoisotropicInvariants& inv);
GroupElement group_inverse(const GroupElement& a, const CoisotropicInvariants& inv);

struct GroupAxiomReport {
    std::size_t trials = 0;
    std::size_t associativity_failures = 0;
    std::size_t identity_failures = 0;
    std::size_t inverse_failures = 0;

    bool passed() const { return associativity_failures + identity_failures + inverse_failures == 0; }
};

/// Random element with torus and N coordinates p/q, 1 <= q <= max_den, |p/q| <= 2.
GroupElement random_group_element(const CoisotropicInvariants& inv, std::mt19937_64& rng, unsigned max_den = 12);

/// Associativity, two-sided identity and inverses on `trials` seeded random triples.
GroupAxiomReport check_group_axioms(const CoisotropicInvariants& inv, std::size_t trials, std::uint64_t seed,
                                    unsigned max_den = 12);

/// tau on sum coeffs[i] e_i, built from the basis values by
///   tau_{z + n e} = tau_z + n tau_e - n c(e, z)/2,
/// processing basis directions in `order` (default: index order).
TorusElement extend_tau(const CoisotropicInvariants& inv, const IntVector& coeffs,
                        const std::vector<std::size_t>& order = {});
/// Same, for z given in N coordinates. Throws std::invalid_argument if z is not in P.
TorusElement extend_tau(const CoisotropicInvariants& inv, const RatVector& zeta);

/// tau_{z'} + tau_z == tau_{z + z'} + c(z', z)/2 in T, for coefficient vectors in P.
bool hom_c_check(const CoisotropicInvariants& inv, const IntVector& z, const IntVector& zp);

/// Membership in H: z in P and t + tau_z in T_h.
bool in_h(const GroupElement& g, const CoisotropicInvariants& inv);

struct HDescription {
    Subtorus continuous;                  ///< T_h x {0}
    std::vector<GroupElement> generators; ///< (-tau_{e_i}, e_i)
    std::vector<std::string> closure_failures;

    bool closed() const { return closure_failures.empty(); }
};

HDescription build_h(const CoisotropicInvariants& inv);

struct ModelDescriptor {
    std::size_t total_dim = 0;
    Polytope fiber;
    Subtorus hamiltonian_subtorus;
    std::vector<RatVector> base_period_basis;
    std::vector<ChernEntry> base_chern;
    std::size_t free_complement_dim = 0;
    std::size_t n_dim = 0;
};

ModelDescriptor model_descriptor(const CoisotropicInvariants& inv);

struct TangentVector {
    RatVector dt;     ///< in t
    RatVector dzeta;  ///< in N
};

/// Symplectic form on G at base point zeta, for the free Lagrangian-orbit case (l = t,
/// trivial T_h), where N = t^* in the dual of the standard basis:
///   omega_t(dt, dt') + dz(X') - dz'(X),  X = dt + c(dz, z)/2,  X' = dt' + c(dz', z)/2.
/// Throws std::domain_error outside that case.
Rational sigma_eval(const CoisotropicInvariants& inv, const RatVector& zeta, const TangentVector& u,
                    const TangentVector& v);

/// Gram matrix of sigma_eval on the standard basis of t + N.
RatMatrix sigma_gram(const CoisotropicInvariants& inv, const RatVector& zeta);

/// First Betti number of G/H for trivial T_h: dim T + dim N - rank <c(e_i, e_j)>.
/// Throws std::domain_error when T_h is nontrivial.
std::size_t nilmanifold_b1(const CoisotropicInvariants& inv);

EquivalenceVerdict compare(const CoisotropicInvariants& a, const CoisotropicInvariants& b);

}  // namespace symtorus
