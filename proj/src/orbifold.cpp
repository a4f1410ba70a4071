#include "symtorus/orbifold.hpp"

#include <algorithm>
#include <stdexcept>

namespace symtorus {

FuchsianSignature::FuchsianSignature(std::size_t genus, std::vector<std::size_t> orders)
    : genus_(genus), orders_(std::move(orders)) {
    for (auto o : orders_)
        if (o < 2) throw std::invalid_argument("Fuchsian signature: cone point orders must be at least 2");
    std::sort(orders_.begin(), orders_.end());
}

std::string FuchsianSignature::to_string() const {
    std::string s = "(" + std::to_string(genus_) + ";";
    if (orders_.empty()) return s + " -)";
    for (std::size_t i = 0; i < orders_.size(); ++i) s += (i ? ", " : " ") + std::to_string(orders_[i]);
    return s + ")";
}

OrbifoldPresentation orbifold_presentation(const FuchsianSignature& sig) {
    OrbifoldPresentation p;
    const std::size_t g = sig.genus();
    const std::size_t m = sig.cone_points();
    for (std::size_t i = 1; i <= g; ++i) {
        p.generators.push_back("a" + std::to_string(i));
        p.generators.push_back("b" + std::to_string(i));
    }
    for (std::size_t k = 1; k <= m; ++k) p.generators.push_back("c" + std::to_string(k));

    const std::size_t n = 2 * g + m;
    const std::size_t rows = m == 0 ? 0 : m + 1;
    p.relations = IntMatrix(rows, n);
    if (m > 0) {
        for (std::size_t k = 0; k < m; ++k) {
            p.relations(0, 2 * g + k) = 1;
            p.relations(k + 1, 2 * g + k) = static_cast<unsigned long>(sig.orders()[k]);
        }
    }

    std::string lhs;
    for (std::size_t k = 1; k <= m; ++k) lhs += "c" + std::to_string(k);
    std::string rhs;
    for (std::size_t i = 1; i <= g; ++i) rhs += "[a" + std::to_string(i) + ",b" + std::to_string(i) + "]";
    if (lhs.empty()) lhs = "1";
    if (rhs.empty()) rhs = "1";
    if (!(lhs == "1" && rhs == "1")) p.relators.push_back(lhs + " = " + rhs);
    for (std::size_t k = 1; k <= m; ++k)
        p.relators.push_back("c" + std::to_string(k) + "^" + std::to_string(sig.orders()[k - 1]) + " = 1");
    return p;
}

AbelianInvariants orbifold_homology(const FuchsianSignature& sig) {
    const auto p = orbifold_presentation(sig);
    return abelian_invariants(p.relations, p.generators.size());
}

bool is_bad_signature(const FuchsianSignature& sig) {
    if (sig.genus() != 0) return false;
    const auto& o = sig.orders();
    if (o.size() == 1) return true;
    return o.size() == 2 && o[0] < o[1];
}

Rational orbifold_euler(const FuchsianSignature& sig) {
    Rational chi = 2 - 2 * static_cast<long>(sig.genus());
    for (auto o : sig.orders()) chi -= 1 - Rational(1, static_cast<unsigned long>(o));
    chi.canonicalize();
    return chi;
}

FreeRankSweep free_rank_sweep(std::size_t max_genus, std::size_t max_cones, std::size_t max_order) {
    FreeRankSweep out;
    std::vector<std::size_t> orders;
    auto visit = [&](auto&& self, std::size_t next_min) -> void {
        for (std::size_t g = 0; g <= max_genus; ++g) {
            const FuchsianSignature sig(g, orders);
            ++out.signatures;
            if (orbifold_homology(sig).free_rank != 2 * g) out.failures.push_back(sig.to_string());
        }
        if (orders.size() == max_cones) return;
        for (std::size_t o = next_min; o <= max_order; ++o) {
            orders.push_back(o);
            self(self, o);
            orders.pop_back();
        }
    };
    visit(visit, 2);
    return out;
}

std::vector<TorusElement> MonodromyHom::tuple() const {
    std::vector<TorusElement> t;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        t.push_back(alpha[i]);
        t.push_back(beta[i]);
    }
    t.insert(t.end(), gamma.begin(), gamma.end());
    return t;
}

MonodromyHom MonodromyHom::from_tuple(const FuchsianSignature& sig, const Torus& torus,
                                      const std::vector<TorusElement>& tuple) {
    if (tuple.size() != sig.tuple_length())
        throw std::invalid_argument("monodromy tuple length differs from 2g + m");
    MonodromyHom h{sig, torus, {}, {}, {}};
    for (std::size_t i = 0; i < sig.genus(); ++i) {
        h.alpha.push_back(tuple[2 * i]);
        h.beta.push_back(tuple[2 * i + 1]);
    }
    h.gamma.assign(tuple.begin() + static_cast<std::ptrdiff_t>(2 * sig.genus()), tuple.end());
    return h;
}

std::vector<std::string> validate_monodromy(const MonodromyHom& h) {
    std::vector<std::string> v;
    const std::size_t g = h.signature.genus();
    const std::size_t m = h.signature.cone_points();
    if (h.alpha.size() != g || h.beta.size() != g)
        v.push_back("monodromy: expected " + std::to_string(g) + " values on each of a_i, b_i");
    if (h.gamma.size() != m)
        v.push_back("monodromy: expected " + std::to_string(m) + " values on the cone loops");
    for (const auto& t : h.tuple())
        if (t.dim() != h.torus.dim) {
            v.push_back("monodromy: value " + t.to_string() + " does not lie in a torus of dimension " +
                        std::to_string(h.torus.dim));
            return v;
        }
    if (!v.empty()) return v;

    TorusElement sum(h.torus.dim);
    for (std::size_t k = 0; k < m; ++k) {
        const Integer ord = order(h.gamma[k]);
        const Integer o = static_cast<unsigned long>(h.signature.orders()[k]);
        if (o % ord != 0)
            v.push_back("monodromy: order " + ord.get_str() + " of value " + h.gamma[k].to_string() +
                        " on c" + std::to_string(k + 1) + " does not divide cone order " + o.get_str());
        sum = sum + h.gamma[k];
    }
    if (!sum.is_identity())
        v.push_back("monodromy: values on the cone loops sum to " + sum.to_string() + ", not to the identity");
    return v;
}

}  // namespace symtorus
