#include "symtorus/coisotropic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symtorus {

namespace {

RatVector zeros(std::size_t n) { return RatVector(n, Rational(0)); }

RatVector add(const RatVector& a, const RatVector& b) {
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVector scale(const RatVector& a, const Rational& s) {
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

Rational dot(const RatVector& a, const RatVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
    RatVector r(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
    return r;
}

bool is_integral(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.get_den() == 1; });
}

RatVector to_rat(const IntVector& v) {
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

// Matrix whose columns are the period basis vectors.
RatMatrix period_matrix(const CoisotropicInvariants& inv) {
    const std::size_t n = inv.n_dim();
    RatMatrix m(n, inv.period_basis.size());
    for (std::size_t j = 0; j < inv.period_basis.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) m(i, j) = inv.period_basis[j].at(i);
    return m;
}

// Common-denominator integer lattice of a list of rational vectors, for equality tests.
std::pair<Integer, Lattice> rational_lattice(const std::vector<RatVector>& gens, std::size_t dim) {
    Integer den = 1;
    for (const auto& v : gens)
        for (const auto& x : v) den = lcm(den, x.get_den());
    std::vector<IntVector> rows;
    for (const auto& v : gens) {
        IntVector r(dim);
        for (std::size_t i = 0; i < dim; ++i) r[i] = Rational(v[i] * Rational(den)).get_num();
        rows.push_back(std::move(r));
    }
    return {den, Lattice(dim, rows)};
}

}  // namespace

std::vector<RatVector> CoisotropicInvariants::isotropy_kernel() const { return kernel_basis(omega_t); }

std::size_t CoisotropicInvariants::n_dim() const {
    const std::size_t l = isotropy_kernel().size();
    return l >= t_h.dim() ? l - t_h.dim() : 0;
}

RatVector CoisotropicInvariants::chern_on_basis(std::size_t i, std::size_t j) const {
    for (const auto& e : chern) {
        if (e.i == i && e.j == j) return e.value;
        if (e.i == j && e.j == i) return scale(e.value, -1);
    }
    return zeros(torus.dim);
}

RatVector CoisotropicInvariants::period_rational_coordinates(const RatVector& z) const {
    RatVector x;
    if (z.size() != n_dim() || !solve_rational(period_matrix(*this), z, x))
        throw std::invalid_argument("vector does not lie in the span of the period lattice");
    return x;
}

std::optional<IntVector> CoisotropicInvariants::period_coordinates(const RatVector& z) const {
    const RatVector x = period_rational_coordinates(z);
    if (!is_integral(x)) return std::nullopt;
    IntVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i].get_num();
    return out;
}

RatVector CoisotropicInvariants::period_vector(const IntVector& coeffs) const {
    RatVector z = zeros(n_dim());
    for (std::size_t i = 0; i < coeffs.size(); ++i) z = add(z, scale(period_basis.at(i), Rational(coeffs[i])));
    return z;
}

RatVector CoisotropicInvariants::chern_eval(const RatVector& z, const RatVector& zp) const {
    const RatVector a = period_rational_coordinates(z);
    const RatVector b = period_rational_coordinates(zp);
    RatVector out = zeros(torus.dim);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (i == j || a[i] == 0 || b[j] == 0) continue;
            out = add(out, scale(chern_on_basis(i, j), a[i] * b[j]));
        }
    return out;
}

std::vector<std::string> validate(const CoisotropicInvariants& inv) {
    std::vector<std::string> v;
    const std::size_t k = inv.torus.dim;

    if (inv.omega_t.rows() != k || inv.omega_t.cols() != k) {
        v.push_back("omega_t: expected a " + std::to_string(k) + "x" + std::to_string(k) + " matrix");
        return v;
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (inv.omega_t(i, j) != -inv.omega_t(j, i)) {
                v.push_back("omega_t: not antisymmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
                i = j = k;
                break;
            }
    if (!v.empty()) return v;

    if (!(inv.t_h.ambient() == inv.torus)) {
        v.push_back("hamiltonian_subtorus: ambient torus differs from the acting torus");
        return v;
    }
    for (const auto& row : inv.t_h.lattice().basis_rows()) {
        const RatVector w = mat_vec(inv.omega_t, to_rat(row));
        if (std::any_of(w.begin(), w.end(), [](const Rational& q) { return q != 0; }))
            v.push_back("hamiltonian_subtorus: Lie algebra not contained in ker omega_t");
    }
    if (!v.empty()) return v;

    const std::size_t th = inv.t_h.dim();
    if (inv.delta.ambient_dim() != th && inv.delta.ambient_dim() != k)
        v.push_back("delta: ambient dimension " + std::to_string(inv.delta.ambient_dim()) +
                    " is neither dim T_h nor dim T");
    if (inv.delta.dimension() != th)
        v.push_back("delta: polytope dimension " + std::to_string(inv.delta.dimension()) +
                    " differs from dim T_h = " + std::to_string(th));
    if (const auto cert = is_delzant(inv.delta); !cert.delzant) v.push_back("delta: " + cert.reason);

    const std::size_t n = inv.n_dim();
    bool shapes_ok = true;
    if (inv.period_basis.size() != n) {
        v.push_back("period_basis: expected " + std::to_string(n) + " vectors (dim N), got " +
                    std::to_string(inv.period_basis.size()));
        shapes_ok = false;
    }
    for (const auto& p : inv.period_basis)
        if (p.size() != n) {
            v.push_back("period_basis: vectors must have length dim N = " + std::to_string(n));
            shapes_ok = false;
            break;
        }
    if (shapes_ok && rank(RatMatrix::from_rows(inv.period_basis, n)) != n) {
        v.push_back("period_basis: vectors are linearly dependent");
        shapes_ok = false;
    }

    bool chern_shape_ok = true;
    for (const auto& e : inv.chern) {
        const std::string at = "chern(" + std::to_string(e.i) + ", " + std::to_string(e.j) + ")";
        if (e.i >= e.j || e.j >= inv.period_basis.size()) {
            v.push_back(at + ": indices must satisfy i < j < dim N");
            chern_shape_ok = false;
            continue;
        }
        if (e.value.size() != k) {
            v.push_back(at + ": value must have length dim T");
            chern_shape_ok = false;
            continue;
        }
        const RatVector w = mat_vec(inv.omega_t, e.value);
        if (std::any_of(w.begin(), w.end(), [](const Rational& q) { return q != 0; })) {
            v.push_back(at + ": value is not in ker omega_t");
        }
        if (!is_integral(e.value)) {
            v.push_back(at + ": value is not integral (c(P x P) must lie in Z^k)");
        }
    }

    bool tau_ok = true;
    if (inv.tau.size() != inv.period_basis.size()) {
        v.push_back("tau: expected one value per period basis vector");
        tau_ok = false;
    }
    for (const auto& t : inv.tau)
        if (t.dim() != k) {
            v.push_back("tau: values must lie in a torus of dimension " + std::to_string(k));
            tau_ok = false;
            break;
        }

    if (shapes_ok && tau_ok && chern_shape_ok) {
        const std::size_t r = inv.period_basis.size();
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                IntVector a(r, Integer(0)), b(r, Integer(0));
                a[i] = 1;
                b[j] = 1;
                if (!hom_c_check(inv, a, b)) {
                    v.push_back("tau: twisted homomorphism condition fails on basis pair (" + std::to_string(i) +
                                ", " + std::to_string(j) + ")");
                }
            }
    }
    return v;
}

GroupElement group_identity(const CoisotropicInvariants& inv) {
    return {TorusElement::identity(inv.torus.dim), zeros(inv.n_dim())};
}

GroupElement group_mul(const GroupElement& a, const GroupElement& b, const CoisotropicInvariants& inv) {
    if (a.zeta.size() != b.zeta.size() || a.t.dim() != b.t.dim())
        throw std::invalid_argument("group_mul: dimension mismatch");
    const RatVector twist = scale(inv.chern_eval(a.zeta, b.zeta), Rational(-1, 2));
    return {a.t + b.t + TorusElement(twist), add(a.zeta, b.zeta)};
}

GroupElement group_inverse(const GroupElement& a, const CoisotropicInvariants&) {
    return {-a.t, scale(a.zeta, -1)};
}

GroupElement random_group_element(const CoisotropicInvariants& inv, std::mt19937_64& rng, unsigned max_den) {
    std::uniform_int_distribution<unsigned> den(1, max_den);
    auto draw = [&] {
        const unsigned q = den(rng);
        std::uniform_int_distribution<int> num(-2 * static_cast<int>(q), 2 * static_cast<int>(q));
        Rational r(num(rng), q);
        r.canonicalize();
        return r;
    };
    RatVector t(inv.torus.dim), z(inv.n_dim());
    for (auto& x : t) x = draw();
    for (auto& x : z) x = draw();
    return {TorusElement(t), z};
}

GroupAxiomReport check_group_axioms(const CoisotropicInvariants& inv, std::size_t trials, std::uint64_t seed,
                                    unsigned max_den) {
    std::mt19937_64 rng(seed);
    const GroupElement e = group_identity(inv);
    GroupAxiomReport r;
    for (std::size_t n = 0; n < trials; ++n) {
        const GroupElement a = random_group_element(inv, rng, max_den);
        const GroupElement b = random_group_element(inv, rng, max_den);
        const GroupElement c = random_group_element(inv, rng, max_den);
        if (!(group_mul(group_mul(a, b, inv), c, inv) == group_mul(a, group_mul(b, c, inv), inv)))
            ++r.associativity_failures;
        if (!(group_mul(a, e, inv) == a) || !(group_mul(e, a, inv) == a)) ++r.identity_failures;
        const GroupElement ai = group_inverse(a, inv);
        if (!(group_mul(a, ai, inv) == e) || !(group_mul(ai, a, inv) == e)) ++r.inverse_failures;
        ++r.trials;
    }
    return r;
}

TorusElement extend_tau(const CoisotropicInvariants& inv, const IntVector& coeffs,
                        const std::vector<std::size_t>& order) {
    const std::size_t r = inv.period_basis.size();
    if (coeffs.size() != r || inv.tau.size() != r)
        throw std::invalid_argument("extend_tau: coefficient count differs from the period basis");
    std::vector<std::size_t> seq = order;
    if (seq.empty()) {
        seq.resize(r);
        std::iota(seq.begin(), seq.end(), 0);
    }
    RatVector rep = zeros(inv.torus.dim);  // representative in t of tau_z
    RatVector z = zeros(inv.n_dim());
    for (auto idx : seq) {
        const Integer& n = coeffs.at(idx);
        if (n == 0) continue;
        const RatVector& e = inv.period_basis[idx];
        rep = add(rep, scale(inv.tau[idx].coords(), Rational(n)));
        if (!z.empty()) rep = add(rep, scale(inv.chern_eval(e, z), Rational(-n) / 2));
        z = add(z, scale(e, Rational(n)));
    }
    return TorusElement(rep);
}

TorusElement extend_tau(const CoisotropicInvariants& inv, const RatVector& zeta) {
    const auto coeffs = inv.period_coordinates(zeta);
    if (!coeffs) throw std::invalid_argument("extend_tau: vector is not in the period lattice");
    return extend_tau(inv, *coeffs);
}

bool hom_c_check(const CoisotropicInvariants& inv, const IntVector& z, const IntVector& zp) {
    IntVector sum(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) sum[i] = z[i] + zp.at(i);
    const TorusElement lhs = extend_tau(inv, zp) + extend_tau(inv, z);
    const RatVector c = inv.chern_eval(inv.period_vector(zp), inv.period_vector(z));
    const TorusElement rhs = extend_tau(inv, sum) + TorusElement(scale(c, Rational(1, 2)));
    if (lhs != rhs) return false;
    // The basis-order extension must also agree with the reverse-order extension.
    std::vector<std::size_t> rev(z.size());
    std::iota(rev.rbegin(), rev.rend(), 0);
    return extend_tau(inv, sum, rev) == extend_tau(inv, sum);
}

bool in_h(const GroupElement& g, const CoisotropicInvariants& inv) {
    std::optional<IntVector> coeffs;
    try {
        coeffs = inv.period_coordinates(g.zeta);
    } catch (const std::invalid_argument&) {
        return false;
    }
    if (!coeffs) return false;
    return inv.t_h.contains(g.t + extend_tau(inv, *coeffs));
}

HDescription build_h(const CoisotropicInvariants& inv) {
    HDescription h{inv.t_h, {}, {}};
    const std::size_t r = inv.period_basis.size();
    for (std::size_t i = 0; i < r; ++i) h.generators.push_back({-inv.tau.at(i), inv.period_basis[i]});

    for (std::size_t i = 0; i < r; ++i) {
        const GroupElement& a = h.generators[i];
        if (!in_h(a, inv)) h.closure_failures.push_back("generator " + std::to_string(i) + " is not in H");
        for (std::size_t j = 0; j < r; ++j) {
            const GroupElement& b = h.generators[j];
            const GroupElement ab = group_mul(a, b, inv);
            const GroupElement ab_inv = group_mul(a, group_inverse(b, inv), inv);
            if (!in_h(ab, inv))
                h.closure_failures.push_back("product g" + std::to_string(i) + " g" + std::to_string(j) +
                                             " leaves H");
            if (!in_h(ab_inv, inv))
                h.closure_failures.push_back("product g" + std::to_string(i) + " g" + std::to_string(j) +
                                             "^-1 leaves H");
        }
    }
    return h;
}

ModelDescriptor model_descriptor(const CoisotropicInvariants& inv) {
    ModelDescriptor d;
    d.total_dim = inv.torus.dim + inv.isotropy_kernel().size();
    d.fiber = inv.delta;
    d.hamiltonian_subtorus = inv.t_h;
    d.base_period_basis = inv.period_basis;
    d.base_chern = inv.chern;
    d.free_complement_dim = inv.torus.dim - inv.t_h.dim();
    d.n_dim = inv.n_dim();
    return d;
}

namespace {

void require_free_lagrangian(const CoisotropicInvariants& inv, const char* what) {
    if (inv.t_h.dim() != 0 || !inv.omega_t.is_zero())
        throw std::domain_error(std::string(what) + ": only the free Lagrangian-orbit case (omega_t = 0, trivial T_h) is supported");
}

}  // namespace

Rational sigma_eval(const CoisotropicInvariants& inv, const RatVector& zeta, const TangentVector& u,
                    const TangentVector& v) {
    require_free_lagrangian(inv, "sigma_eval");
    const std::size_t k = inv.torus.dim;
    if (zeta.size() != k || u.dt.size() != k || v.dt.size() != k || u.dzeta.size() != k || v.dzeta.size() != k)
        throw std::invalid_argument("sigma_eval: dimension mismatch");
    const RatVector x = add(u.dt, scale(inv.chern_eval(u.dzeta, zeta), Rational(1, 2)));
    const RatVector xp = add(v.dt, scale(inv.chern_eval(v.dzeta, zeta), Rational(1, 2)));
    const Rational base = dot(u.dt, mat_vec(inv.omega_t, v.dt));
    return base + dot(u.dzeta, xp) - dot(v.dzeta, x);
}

RatMatrix sigma_gram(const CoisotropicInvariants& inv, const RatVector& zeta) {
    require_free_lagrangian(inv, "sigma_gram");
    const std::size_t k = inv.torus.dim;
    std::vector<TangentVector> basis;
    for (std::size_t i = 0; i < 2 * k; ++i) {
        TangentVector e{zeros(k), zeros(k)};
        if (i < k) e.dt[i] = 1;
        else e.dzeta[i - k] = 1;
        basis.push_back(std::move(e));
    }
    RatMatrix g(2 * k, 2 * k);
    for (std::size_t i = 0; i < 2 * k; ++i)
        for (std::size_t j = 0; j < 2 * k; ++j) g(i, j) = sigma_eval(inv, zeta, basis[i], basis[j]);
    return g;
}

std::size_t nilmanifold_b1(const CoisotropicInvariants& inv) {
    if (inv.t_h.dim() != 0) throw std::domain_error("nilmanifold_b1: T_h must be trivial");
    const std::size_t r = inv.period_basis.size();
    std::vector<RatVector> values;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) values.push_back(inv.chern_on_basis(i, j));
    const std::size_t rk = values.empty() ? 0 : rank(RatMatrix::from_rows(values, inv.torus.dim));
    return inv.torus.dim + inv.n_dim() - rk;
}

EquivalenceVerdict compare(const CoisotropicInvariants& a, const CoisotropicInvariants& b) {
    if (!(a.torus == b.torus)) return EquivalenceVerdict::inequivalent("torus", "torus dimensions differ");
    if (!(a.omega_t == b.omega_t)) return EquivalenceVerdict::inequivalent("omega_t");
    if (!(a.t_h == b.t_h)) return EquivalenceVerdict::inequivalent("hamiltonian_subtorus");
    if (!equal_up_to_translation(a.delta, b.delta)) return EquivalenceVerdict::inequivalent("delta");

    const std::size_t n = a.n_dim();
    if (rational_lattice(a.period_basis, n) != rational_lattice(b.period_basis, n))
        return EquivalenceVerdict::inequivalent("period_lattice");

    // c as a bilinear map on N, compared on the standard basis of N.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            RatVector ei = zeros(n), ej = zeros(n);
            ei[i] = 1;
            ej[j] = 1;
            if (a.chern_eval(ei, ej) != b.chern_eval(ei, ej)) return EquivalenceVerdict::inequivalent("chern");
        }

    // tau compared on b's period basis (same lattice, so coordinates in a's basis are integral).
    for (std::size_t i = 0; i < b.period_basis.size(); ++i)
        if (extend_tau(a, b.period_basis[i]) != b.tau[i])
            return EquivalenceVerdict::undetermined(
                "holonomy values differ; equivalence modulo exp(A) is not decided");
    return EquivalenceVerdict::equivalent();
}

}  // namespace symtorus
