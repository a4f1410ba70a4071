#pragma once

// Built-in invariant records for the standard examples.

#include "symtorus/coisotropic.hpp"
#include "symtorus/symplectic_orbit.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace symtorus {

/// Kodaira-Thurston manifold, free T^2 action with Lagrangian orbits.
CoisotropicInvariants fixture_kodaira();
/// CP^2 with the standard toric T^2 action, Fubini-Study form scaled by lambda.
CoisotropicInvariants fixture_cp2(const Rational& lambda = 1);
/// T^2 x S^2: one circle translates T^2, the other rotates S^2.
CoisotropicInvariants fixture_s2xt2();

/// S^2 x_{Z/2} T^2 with symplectic orbits; orbit space S^2 / (Z/2).
SymplecticOrbitInvariants fixture_s2quot();
/// s2quot with the two cone-point monodromy values exchanged.
SymplecticOrbitInvariants fixture_s2quot_swapped();
/// T^2 x T^2 with T acting on the second factor.
SymplecticOrbitInvariants fixture_t4();
/// S^2 x T^2 with T acting freely on the second factor.
SymplecticOrbitInvariants fixture_s2xt2free();

using Record = std::variant<CoisotropicInvariants, SymplecticOrbitInvariants>;

std::vector<std::string> fixture_names();
std::optional<Record> fixture(std::string_view name);

}  // namespace symtorus
