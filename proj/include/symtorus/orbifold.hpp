#pragma once

// Compact orientable orbisurfaces described by a Fuchsian signature (g; o_1, ..., o_m).

#include "symtorus/linalg.hpp"
#include "symtorus/torus.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace symtorus {

class FuchsianSignature {
public:
    FuchsianSignature() = default;
    /// Orders are sorted ascending; throws std::invalid_argument if some order is below 2.
    FuchsianSignature(std::size_t genus, std::vector<std::size_t> orders);

    std::size_t genus() const { return genus_; }
    const std::vector<std::size_t>& orders() const { return orders_; }
    std::size_t cone_points() const { return orders_.size(); }
    /// 2g + m: number of entries of a monodromy tuple.
    std::size_t tuple_length() const { return 2 * genus_ + orders_.size(); }

    std::string to_string() const;

    friend bool operator==(const FuchsianSignature&, const FuchsianSignature&) = default;

private:
    std::size_t genus_ = 0;
    std::vector<std::size_t> orders_;
};

/// Generators are ordered a_1, b_1, ..., a_g, b_g, c_1, ..., c_m.
struct OrbifoldPresentation {
    std::vector<std::string> generators;
    /// Abelianized relations: one row c_1 + ... + c_m = 0 (when m > 0), then o_k c_k = 0.
    IntMatrix relations;
    /// Nonabelian relators in words, for display.
    std::vector<std::string> relators;
};

OrbifoldPresentation orbifold_presentation(const FuchsianSignature& sig);

/// First orbifold homology group; its free rank is always 2g.
AbelianInvariants orbifold_homology(const FuchsianSignature& sig);

/// (0; o) and (0; o1, o2) with o1 < o2 admit no good orbifold structure.
bool is_bad_signature(const FuchsianSignature& sig);

/// 2 - 2g - sum(1 - 1/o_k).
Rational orbifold_euler(const FuchsianSignature& sig);

struct FreeRankSweep {
    std::size_t signatures = 0;
    std::vector<std::string> failures;  ///< signatures whose homology free rank differs from 2g
};

/// orbifold_homology over all signatures with genus <= max_genus, at most max_cones cone
/// points and orders in [2, max_order].
FreeRankSweep free_rank_sweep(std::size_t max_genus, std::size_t max_cones, std::size_t max_order);

/// Values of the monodromy homomorphism on a_i, b_i (interleaved) and on c_k.
struct MonodromyHom {
    FuchsianSignature signature;
    Torus torus;
    std::vector<TorusElement> alpha;  ///< g values
    std::vector<TorusElement> beta;   ///< g values
    std::vector<TorusElement> gamma;  ///< m values

    /// a_1, b_1, ..., a_g, b_g, c_1, ..., c_m.
    std::vector<TorusElement> tuple() const;
    static MonodromyHom from_tuple(const FuchsianSignature& sig, const Torus& torus,
                                   const std::vector<TorusElement>& tuple);

    friend bool operator==(const MonodromyHom&, const MonodromyHom&) = default;
};

/// Empty iff every value has the torus dimension, order(c_k) divides o_k, and the c_k sum
/// to zero. The values on a_i, b_i are unconstrained.
std::vector<std::string> validate_monodromy(const MonodromyHom& h);

}  // namespace symtorus
