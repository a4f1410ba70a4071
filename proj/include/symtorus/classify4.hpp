#pragma once

// Effective symplectic 2-torus actions on compact 4-manifolds fall into exactly one of four
// cases. Either every 2-dimensional orbit is Lagrangian (omega_t = 0) or every orbit is a
// symplectic 2-torus; the record type encodes which.

#include "symtorus/coisotropic.hpp"
#include "symtorus/symplectic_orbit.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace symtorus {

struct ActionDescriptor4 {
    std::variant<CoisotropicInvariants, SymplecticOrbitInvariants> record;

    bool lagrangian() const { return record.index() == 0; }

    friend bool operator==(const ActionDescriptor4&, const ActionDescriptor4&) = default;
};

enum class FourCaseTag { Toric, MixedS2T2, FreeLagrangian, OrbifoldBundle };

std::string to_string(FourCaseTag tag);

struct FourCase {
    FourCaseTag tag = FourCaseTag::Toric;
    std::optional<Polytope> delta;              ///< Toric, MixedS2T2
    std::vector<RatVector> period_basis;        ///< MixedS2T2, FreeLagrangian
    std::vector<ChernEntry> chern;              ///< FreeLagrangian
    std::vector<TorusElement> tau;              ///< FreeLagrangian
    std::optional<FuchsianSignature> signature; ///< OrbifoldBundle
    std::optional<MonodromyHom> monodromy;      ///< OrbifoldBundle
};

/// Raised for records that fail validation or do not fit the four-case shape.
class ClassificationError : public std::runtime_error {
public:
    explicit ClassificationError(std::vector<std::string> problems);
    const std::vector<std::string>& problems() const { return problems_; }

private:
    std::vector<std::string> problems_;
};

FourCase classify(const ActionDescriptor4& d);

/// The built-in S^2 x T^2 record with one circle rotating the sphere.
FourCase case_of_mixed_example();

}  // namespace symtorus
