#pragma once

// Rational points of the standard torus T = (R/Z)^k and its subtori.

#include "symtorus/linalg.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace symtorus {

struct Torus {
    std::size_t dim = 1;

    explicit Torus(std::size_t k = 1) : dim(k) {
        if (k == 0) throw std::invalid_argument("Torus: dimension must be at least 1");
    }
    friend bool operator==(const Torus&, const Torus&) = default;
};

/// Point of (R/Z)^k with rational coordinates, each kept in [0, 1). Written additively.
class TorusElement {
public:
    explicit TorusElement(std::size_t dim = 0) : coords_(dim, Rational(0)) {}
    /// Reduces each coordinate mod 1.
    explicit TorusElement(RatVector coords);

    static TorusElement identity(std::size_t dim) { return TorusElement(dim); }

    std::size_t dim() const { return coords_.size(); }
    const RatVector& coords() const { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_.at(i); }
    bool is_identity() const;

    TorusElement operator+(const TorusElement& o) const;
    TorusElement operator-(const TorusElement& o) const;
    TorusElement operator-() const;
    /// n-fold sum, n any integer.
    TorusElement scaled(const Integer& n) const;

    std::string to_string() const;

    friend bool operator==(const TorusElement&, const TorusElement&) = default;
    friend auto operator<=>(const TorusElement& a, const TorusElement& b) {
        return a.coords_ <=> b.coords_;
    }

private:
    RatVector coords_;
};

/// exp: t -> T, coordinatewise reduction mod 1. Its kernel is the integral lattice Z^k.
TorusElement torus_exp(const Torus& torus, const RatVector& v);
/// Smallest n >= 1 with n*t = 0: the lcm of the coordinate denominators.
Integer order(const TorusElement& t);

/// Subtorus given by the saturated lattice of its Lie algebra inside Z^k.
class Subtorus {
public:
    Subtorus() : Subtorus(Torus(1)) {}
    explicit Subtorus(Torus ambient) : ambient_(ambient), lattice_(ambient.dim) {}
    /// Saturates the span of the given integral generators.
    Subtorus(Torus ambient, const std::vector<IntVector>& generators);

    static Subtorus trivial(Torus ambient) { return Subtorus(ambient); }
    static Subtorus full(Torus ambient);

    const Torus& ambient() const { return ambient_; }
    const Lattice& lattice() const { return lattice_; }
    std::size_t dim() const { return lattice_.rank(); }

    /// Membership of a rational torus point: t lies in exp(R-span of the lattice).
    bool contains(const TorusElement& t) const;
    /// Lie algebra containment for a rational vector of t.
    bool contains_direction(const RatVector& v) const;

    friend bool operator==(const Subtorus&, const Subtorus&) = default;

private:
    Torus ambient_;
    Lattice lattice_;
};

/// Smallest subtorus containing all parts (the product of the subgroups).
Subtorus generated_subtorus(const Torus& ambient, const std::vector<Subtorus>& parts);

/// Subgroup of T generated by rational elements, as the lattice scale * <elements, Z^k>,
/// scale = lcm of the element orders. Equal subgroups give structurally equal values.
struct ScaledLattice {
    Integer scale = 1;
    Lattice lattice;

    friend bool operator==(const ScaledLattice&, const ScaledLattice&) = default;
};

ScaledLattice element_subgroup_lattice(std::size_t torus_dim, const std::vector<TorusElement>& ts);

}  // namespace symtorus
