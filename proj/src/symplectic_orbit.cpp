#include "symtorus/symplectic_orbit.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace symtorus {

namespace {

using State = std::vector<std::int64_t>;

struct StateHash {
    std::size_t operator()(const State& s) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto x : s) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

IntMatrix embed(std::size_t n, std::size_t offset, const IntMatrix& block) {
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j) m(offset + i, offset + j) = block(i, j);
    return m;
}

// x -> x + <x, v> v for the form with <a_i, b_i> = 1 on interleaved coordinates.
IntMatrix symplectic_transvection(std::size_t genus, const IntVector& v) {
    const std::size_t n = 2 * genus;
    IntVector jv(n);
    for (std::size_t i = 0; i < genus; ++i) {
        jv[2 * i] = v[2 * i + 1];
        jv[2 * i + 1] = -v[2 * i];
    }
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) += v[r] * jv[c];
    return m;
}

IntMatrix reduce(const IntMatrix& m, const Integer& n) {
    IntMatrix r = m;
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = mod_floor(r(i, j), n);
    return r;
}

State encode(const std::vector<TorusElement>& tuple, const Integer& n) {
    State s;
    for (const auto& t : tuple)
        for (const auto& c : t.coords()) s.push_back(Rational(c * Rational(n)).get_num().get_si());
    return s;
}

struct SmallMatrix {
    std::size_t n = 0;
    std::vector<std::int64_t> e;
};

State apply_mod(const SmallMatrix& m, const State& s, std::size_t k, std::int64_t modulus) {
    State out(s.size(), 0);
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j) {
            const std::int64_t a = m.e[i * m.n + j];
            if (a == 0) continue;
            for (std::size_t c = 0; c < k; ++c) out[i * k + c] = (out[i * k + c] + a * s[j * k + c]) % modulus;
        }
    return out;
}

bool same_signature_shape(const SymplecticOrbitInvariants& a, const SymplecticOrbitInvariants& b) {
    return a.torus == b.torus && a.signature == b.signature;
}

}  // namespace

std::vector<std::string> validate(const SymplecticOrbitInvariants& inv) {
    std::vector<std::string> v;
    const std::size_t k = inv.torus.dim;
    if (inv.omega_t.rows() != k || inv.omega_t.cols() != k) {
        v.push_back("omega_t: expected a " + std::to_string(k) + "x" + std::to_string(k) + " matrix");
    } else {
        bool antisym = true;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (inv.omega_t(i, j) != -inv.omega_t(j, i)) antisym = false;
        if (!antisym) v.push_back("omega_t: not antisymmetric");
        else if (determinant(inv.omega_t) == 0) v.push_back("omega_t: degenerate (orbits must be symplectic)");
    }
    if (inv.area <= 0) v.push_back("area: must be positive");
    if (!(inv.monodromy.signature == inv.signature))
        v.push_back("monodromy: signature differs from the record signature");
    if (!(inv.monodromy.torus == inv.torus)) v.push_back("monodromy: torus differs from the record torus");
    for (auto& m : validate_monodromy(inv.monodromy)) v.push_back(std::move(m));
    return v;
}

std::vector<std::string> warnings(const SymplecticOrbitInvariants& inv) {
    std::vector<std::string> w;
    if (is_bad_signature(inv.signature))
        w.push_back("signature " + inv.signature.to_string() + " is bad: no good orbisurface realizes it");
    return w;
}

SignatureGroupGens signature_group_generators(std::size_t genus, const std::vector<std::size_t>& orders,
                                              const Integer& modulus) {
    if (modulus < 1) throw std::invalid_argument("signature_group_generators: modulus must be positive");
    SignatureGroupGens out;
    out.genus = genus;
    out.orders = orders;
    out.modulus = modulus;
    const std::size_t m = orders.size();
    const std::size_t n = 2 * genus + m;
    auto emit = [&](IntMatrix g, std::string label) {
        out.reduced.push_back(reduce(g, modulus));
        out.generators.push_back(std::move(g));
        out.labels.push_back(std::move(label));
    };

    const IntMatrix s{{0, -1}, {1, 0}};
    const IntMatrix t{{1, 1}, {0, 1}};
    for (std::size_t i = 0; i < genus; ++i) {
        emit(embed(n, 2 * i, s), "S" + std::to_string(i + 1));
        emit(embed(n, 2 * i, t), "T" + std::to_string(i + 1));
    }
    for (std::size_t i = 0; i + 1 < genus; ++i) {
        for (std::size_t which = 0; which < 2; ++which) {
            IntVector v(2 * genus, Integer(0));
            v[2 * i + which] = 1;
            v[2 * (i + 1) + which] = -1;
            const std::string name = which == 0 ? "a" : "b";
            emit(embed(n, 0, symplectic_transvection(genus, v)),
                 "tv(" + name + std::to_string(i + 1) + "-" + name + std::to_string(i + 2) + ")");
        }
    }

    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < 2 * genus; ++c) {
            IntMatrix e = IntMatrix::identity(n);
            e(2 * genus + r, c) = 1;
            emit(std::move(e), "E(" + std::to_string(2 * genus + r) + "," + std::to_string(c) + ")");
        }

    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            if (orders[a] == orders[b]) {
                IntMatrix p = IntMatrix::identity(n);
                const std::size_t i = 2 * genus + a, j = 2 * genus + b;
                p(i, i) = 0;
                p(j, j) = 0;
                p(i, j) = 1;
                p(j, i) = 1;
                emit(std::move(p), "swap(c" + std::to_string(a + 1) + ",c" + std::to_string(b + 1) + ")");
            }

    if (m >= 2) {
        IntMatrix o(1, m);
        for (std::size_t i = 0; i < m; ++i) o(0, i) = static_cast<unsigned long>(orders[i]);
        const auto us = integer_kernel(o);
        for (const auto& u : us) {
            IntMatrix um(1, m);
            for (std::size_t i = 0; i < m; ++i) um(0, i) = u[i];
            for (const auto& w : integer_kernel(um)) {
                IntMatrix d = IntMatrix::identity(n);
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = 0; j < m; ++j) d(2 * genus + i, 2 * genus + j) += w[i] * u[j];
                std::string label = "I+w u^T(u=(";
                for (std::size_t i = 0; i < m; ++i) label += (i ? "," : "") + u[i].get_str();
                label += "),w=(";
                for (std::size_t i = 0; i < m; ++i) label += (i ? "," : "") + w[i].get_str();
                emit(std::move(d), label + "))");
            }
        }
    }
    return out;
}

std::vector<TorusElement> act(const IntMatrix& m, const std::vector<TorusElement>& tuple) {
    if (m.cols() != tuple.size()) throw std::invalid_argument("act: matrix width differs from tuple length");
    std::vector<TorusElement> out;
    const std::size_t k = tuple.empty() ? 0 : tuple.front().dim();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        TorusElement acc(k);
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) acc = acc + tuple[j].scaled(m(i, j));
        out.push_back(std::move(acc));
    }
    return out;
}

EquivalenceVerdict tuple_orbit_equivalent(const FuchsianSignature& sig, std::size_t torus_dim,
                                          const std::vector<TorusElement>& t1,
                                          const std::vector<TorusElement>& t2, std::size_t node_cap) {
    const std::size_t len = sig.tuple_length();
    if (t1.size() != len || t2.size() != len)
        return EquivalenceVerdict::inequivalent("signature", "tuple length differs from 2g + m");

    if (element_subgroup_lattice(torus_dim, t1) != element_subgroup_lattice(torus_dim, t2))
        return EquivalenceVerdict::inequivalent(
            "monodromy", "the entries generate different subgroups of the torus");

    Integer modulus = 1;
    for (const auto* t : {&t1, &t2})
        for (const auto& e : *t) modulus = lcm(modulus, order(e));
    if (modulus > Integer(std::numeric_limits<std::int32_t>::max()))
        return EquivalenceVerdict::undetermined("entry orders exceed the search range");

    const auto gens = signature_group_generators(sig.genus(), sig.orders(), modulus);
    std::vector<SmallMatrix> small;
    for (const auto& g : gens.reduced) {
        SmallMatrix sm{len, {}};
        for (std::size_t i = 0; i < len; ++i)
            for (std::size_t j = 0; j < len; ++j) sm.e.push_back(g(i, j).get_si());
        small.push_back(std::move(sm));
    }

    const std::int64_t mod = modulus.get_si();
    const State start = encode(t1, modulus);
    const State goal = encode(t2, modulus);

    struct Visit {
        State parent;
        int generator = -1;
    };
    std::unordered_map<State, Visit, StateHash> seen;
    seen.emplace(start, Visit{});
    std::deque<State> queue{start};
    bool found = start == goal;
    bool capped = false;

    while (!found && !queue.empty()) {
        State cur = std::move(queue.front());
        queue.pop_front();
        for (std::size_t g = 0; g < small.size() && !found; ++g) {
            State next = apply_mod(small[g], cur, torus_dim, mod);
            if (seen.contains(next)) continue;
            if (seen.size() >= node_cap) {
                capped = true;
                break;
            }
            seen.emplace(next, Visit{cur, static_cast<int>(g)});
            if (next == goal) found = true;
            else queue.push_back(std::move(next));
        }
        if (capped) break;
    }

    if (!found) {
        if (capped)
            return EquivalenceVerdict::undetermined("orbit search stopped at the node cap of " +
                                                    std::to_string(node_cap));
        return EquivalenceVerdict::undetermined(
            "target not in the orbit of the generated subgroup (" + std::to_string(seen.size()) +
            " tuples); the generator family may not exhaust the group");
    }

    IntMatrix witness = IntMatrix::identity(len);
    for (State at = goal; at != start;) {
        const Visit& v = seen.at(at);
        witness = witness * gens.generators[static_cast<std::size_t>(v.generator)];
        at = v.parent;
    }
    if (act(witness, t1) != t2) throw std::logic_error("orbit search produced an invalid witness");
    return EquivalenceVerdict::equivalent(witness);
}

EquivalenceVerdict monodromy_equivalent(const SymplecticOrbitInvariants& a, const SymplecticOrbitInvariants& b,
                                        std::size_t node_cap) {
    if (!same_signature_shape(a, b)) return EquivalenceVerdict::inequivalent("signature");
    return tuple_orbit_equivalent(a.signature, a.torus.dim, a.monodromy.tuple(), b.monodromy.tuple(), node_cap);
}

std::size_t first_betti_from_invariants(const SymplecticOrbitInvariants& inv) {
    return 2 * inv.signature.genus() + inv.torus.dim;
}

EquivalenceVerdict compare(const SymplecticOrbitInvariants& a, const SymplecticOrbitInvariants& b,
                           std::size_t node_cap) {
    if (!(a.torus == b.torus)) return EquivalenceVerdict::inequivalent("torus");
    if (!(a.omega_t == b.omega_t)) return EquivalenceVerdict::inequivalent("omega_t");
    if (!(a.signature == b.signature)) return EquivalenceVerdict::inequivalent("signature");
    if (a.area != b.area) return EquivalenceVerdict::inequivalent("area");
    return monodromy_equivalent(a, b, node_cap);
}

OrbifoldBundleDescriptor model_descriptor(const SymplecticOrbitInvariants& inv) {
    OrbifoldBundleDescriptor d;
    d.signature = inv.signature;
    d.presentation = orbifold_presentation(inv.signature);
    d.monodromy = inv.monodromy;
    d.euler_characteristic = orbifold_euler(inv.signature);
    d.total_dim = inv.torus.dim + 2;
    d.good = !is_bad_signature(inv.signature);

    const auto& o = inv.signature.orders();
    if (inv.signature.genus() == 0 && !o.empty()) {
        // c_m = (c_1 ... c_{m-1})^{-1}.
        const std::size_t m = o.size();
        std::string prod;
        for (std::size_t k = 1; k < m; ++k) {
            d.reduced_generators.push_back("c" + std::to_string(k));
            prod += "c" + std::to_string(k);
        }
        for (std::size_t k = 1; k < m; ++k)
            d.reduced_relators.push_back("c" + std::to_string(k) + "^" + std::to_string(o[k - 1]) + " = 1");
        if (m == 1) {
            d.reduced_relators.push_back("1 = 1");
        } else {
            const std::string last =
                (m == 2 ? prod : "(" + prod + ")") + "^" + std::to_string(o[m - 1]) + " = 1";
            if (std::find(d.reduced_relators.begin(), d.reduced_relators.end(), last) == d.reduced_relators.end())
                d.reduced_relators.push_back(last);
        }
    } else {
        d.reduced_generators = d.presentation.generators;
        d.reduced_relators = d.presentation.relators;
    }
    return d;
}

}  // namespace symtorus
