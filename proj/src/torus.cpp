#include "symtorus/torus.hpp"

#include <algorithm>

namespace symtorus {

namespace {

Rational frac(const Rational& q) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    Rational r = q - Rational(fl);
    r.canonicalize();
    return r;
}

}  // namespace

TorusElement::TorusElement(RatVector coords) : coords_(std::move(coords)) {
    for (auto& c : coords_) c = frac(c);
}

bool TorusElement::is_identity() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

TorusElement TorusElement::operator+(const TorusElement& o) const {
    if (o.dim() != dim()) throw std::invalid_argument("TorusElement: dimension mismatch");
    RatVector v(dim());
    for (std::size_t i = 0; i < dim(); ++i) v[i] = coords_[i] + o.coords_[i];
    return TorusElement(std::move(v));
}

TorusElement TorusElement::operator-(const TorusElement& o) const { return *this + (-o); }

TorusElement TorusElement::operator-() const {
    RatVector v(dim());
    for (std::size_t i = 0; i < dim(); ++i) v[i] = -coords_[i];
    return TorusElement(std::move(v));
}

TorusElement TorusElement::scaled(const Integer& n) const {
    RatVector v(dim());
    for (std::size_t i = 0; i < dim(); ++i) v[i] = Rational(n) * coords_[i];
    return TorusElement(std::move(v));
}

std::string TorusElement::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < dim(); ++i) s += (i ? ", " : "") + format_rational(coords_[i]);
    return s + "]";
}

TorusElement torus_exp(const Torus& torus, const RatVector& v) {
    if (v.size() != torus.dim) throw std::invalid_argument("exp: vector length differs from torus dimension");
    return TorusElement(v);
}

Integer order(const TorusElement& t) {
    Integer n = 1;
    for (const auto& c : t.coords()) n = lcm(n, c.get_den());
    return n;
}

Subtorus::Subtorus(Torus ambient, const std::vector<IntVector>& generators)
    : ambient_(ambient), lattice_(saturate(Lattice(ambient.dim, generators))) {}

Subtorus Subtorus::full(Torus ambient) {
    return Subtorus(ambient, IntMatrix::identity(ambient.dim).row_list());
}

bool Subtorus::contains_direction(const RatVector& v) const {
    if (v.size() != ambient_.dim) throw std::invalid_argument("Subtorus: dimension mismatch");
    RatVector x;
    return solve_rational(to_rational(lattice_.basis().transpose()), v, x);
}

bool Subtorus::contains(const TorusElement& t) const {
    if (t.dim() != ambient_.dim) throw std::invalid_argument("Subtorus: dimension mismatch");
    // With L saturated: t in exp(span L) iff order(t) * t lies in L + order(t) * Z^k.
    const Integer n = order(t);
    IntVector scaled(t.dim());
    for (std::size_t i = 0; i < t.dim(); ++i) {
        Rational q = t[i] * Rational(n);
        scaled[i] = q.get_num();
    }
    std::vector<IntVector> gens = lattice_.basis_rows();
    for (std::size_t i = 0; i < t.dim(); ++i) {
        IntVector e(t.dim(), Integer(0));
        e[i] = n;
        gens.push_back(std::move(e));
    }
    return Lattice(t.dim(), gens).contains(scaled);
}

Subtorus generated_subtorus(const Torus& ambient, const std::vector<Subtorus>& parts) {
    std::vector<IntVector> gens;
    for (const auto& p : parts) {
        if (!(p.ambient() == ambient)) throw std::invalid_argument("generated_subtorus: ambient torus mismatch");
        for (auto& r : p.lattice().basis_rows()) gens.push_back(std::move(r));
    }
    return Subtorus(ambient, gens);
}

ScaledLattice element_subgroup_lattice(std::size_t torus_dim, const std::vector<TorusElement>& ts) {
    Integer n = 1;
    for (const auto& t : ts) {
        if (t.dim() != torus_dim) throw std::invalid_argument("element_subgroup_lattice: dimension mismatch");
        n = lcm(n, order(t));
    }
    std::vector<IntVector> gens;
    for (const auto& t : ts) {
        IntVector v(torus_dim);
        for (std::size_t i = 0; i < torus_dim; ++i) v[i] = Rational(t[i] * Rational(n)).get_num();
        gens.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < torus_dim; ++i) {
        IntVector e(torus_dim, Integer(0));
        e[i] = n;
        gens.push_back(std::move(e));
    }
    return ScaledLattice{n, Lattice(torus_dim, gens)};
}

}  // namespace symtorus
