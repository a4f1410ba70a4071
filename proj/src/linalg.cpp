#include "symtorus/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace symtorus {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// In-place row operation pair: (row_a, row_b) <- (s*row_a + t*row_b, x*row_a + y*row_b).
void combine_rows(IntMatrix& m, std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                  const Integer& x, const Integer& y) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Integer va = m(a, j);
        Integer vb = m(b, j);
        m(a, j) = s * va + t * vb;
        m(b, j) = x * va + y * vb;
    }
}

void combine_cols(IntMatrix& m, std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                  const Integer& x, const Integer& y) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer va = m(i, a);
        Integer vb = m(i, b);
        m(i, a) = s * va + t * vb;
        m(i, b) = x * va + y * vb;
    }
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += k * m(src, j);
}

void negate_row(IntMatrix& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

struct Bezout {
    Integer g, s, t;  // s*a + t*b = g >= 0
};

Bezout bezout(const Integer& a, const Integer& b) {
    Bezout r;
    mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Zeroes m(i, col) against pivot row p using a unimodular 2x2 row operation, mirrored on `u`.
void eliminate_row(IntMatrix& m, IntMatrix* u, std::size_t p, std::size_t i, std::size_t col) {
    const Integer a = m(p, col);
    const Integer b = m(i, col);
    if (b == 0) return;
    if (a != 0 && b % a == 0) {
        const Integer k = -(b / a);
        add_row_multiple(m, i, p, k);
        if (u) add_row_multiple(*u, i, p, k);
        return;
    }
    const Bezout z = bezout(a, b);
    const Integer x = -(b / z.g);
    const Integer y = a / z.g;
    combine_rows(m, p, i, z.s, z.t, x, y);
    if (u) combine_rows(*u, p, i, z.s, z.t, x, y);
}

void eliminate_col(IntMatrix& m, IntMatrix& q, std::size_t p, std::size_t j, std::size_t row) {
    const Integer a = m(row, p);
    const Integer b = m(row, j);
    if (b == 0) return;
    if (a != 0 && b % a == 0) {
        const Integer k = -(b / a);
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) += k * m(i, p);
        for (std::size_t i = 0; i < q.rows(); ++i) q(i, j) += k * q(i, p);
        return;
    }
    const Bezout z = bezout(a, b);
    const Integer x = -(b / z.g);
    const Integer y = a / z.g;
    combine_cols(m, p, j, z.s, z.t, x, y);
    combine_cols(q, p, j, z.s, z.t, x, y);
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m(sel, c) == 0) ++sel;
        if (sel == m.rows()) continue;
        m.swap_rows(r, sel);
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational f = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    Integer n{std::string(num)};
    Integer d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(negative ? Integer(-n) : n, d);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) {
    Rational c(q);
    c.canonicalize();
    return c.get_str();
}

RatMatrix to_rational(const IntMatrix& a) {
    RatMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
    return r;
}

HermiteResult hnf(const IntMatrix& a) {
    HermiteResult out{a, IntMatrix::identity(a.rows())};
    IntMatrix& h = out.h;
    std::size_t r = 0;
    for (std::size_t col = 0; col < h.cols() && r < h.rows(); ++col) {
        for (std::size_t i = r + 1; i < h.rows(); ++i) eliminate_row(h, &out.u, r, i, col);
        if (h(r, col) == 0) continue;
        if (h(r, col) < 0) {
            negate_row(h, r);
            negate_row(out.u, r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(r, col).get_mpz_t());
            add_row_multiple(h, i, r, -q);
            add_row_multiple(out.u, i, r, -q);
        }
        ++r;
    }
    return out;
}

SmithResult smith(const IntMatrix& a) {
    IntMatrix m = a;
    IntMatrix p = IntMatrix::identity(a.rows());
    IntMatrix q = IntMatrix::identity(a.cols());
    const std::size_t lim = std::min(m.rows(), m.cols());
    std::size_t t = 0;
    for (; t < lim; ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        bool found = false;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = t; i < m.rows(); ++i)
            for (std::size_t j = t; j < m.cols(); ++j)
                if (m(i, j) != 0 && (!found || abs(m(i, j)) < abs(m(bi, bj)))) {
                    found = true;
                    bi = i;
                    bj = j;
                }
        if (!found) break;
        m.swap_rows(t, bi);
        p.swap_rows(t, bi);
        m.swap_cols(t, bj);
        q.swap_cols(t, bj);

        for (;;) {
            for (std::size_t i = t + 1; i < m.rows(); ++i) eliminate_row(m, &p, t, i, t);
            for (std::size_t j = t + 1; j < m.cols(); ++j) eliminate_col(m, q, t, j, t);
            bool column_clear = true;
            for (std::size_t i = t + 1; i < m.rows(); ++i)
                if (m(i, t) != 0) column_clear = false;
            if (!column_clear) continue;
            bool fixed = false;
            for (std::size_t i = t + 1; i < m.rows() && !fixed; ++i)
                for (std::size_t j = t + 1; j < m.cols(); ++j)
                    if (m(i, j) % m(t, t) != 0) {
                        add_row_multiple(m, t, i, 1);
                        add_row_multiple(p, t, i, 1);
                        fixed = true;
                        break;
                    }
            if (!fixed) break;
        }
        if (m(t, t) < 0) {
            negate_row(m, t);
            negate_row(p, t);
        }
    }
    SmithResult out;
    for (std::size_t i = 0; i < t; ++i) out.diagonal.push_back(m(i, i));
    out.p = std::move(p);
    out.q = std::move(q);
    return out;
}

std::vector<Integer> snf(const IntMatrix& a) { return smith(a).diagonal; }

Integer determinant(const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t sel = k + 1;
            while (sel < n && m(sel, k) == 0) ++sel;
            if (sel == n) return 0;
            m.swap_rows(k, sel);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) /= prev;  // exact by Bareiss
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

Rational determinant(const RatMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("determinant: matrix is not square");
    RatMatrix m = a;
    Rational det = 1;
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && m(sel, c) == 0) ++sel;
        if (sel == n) return 0;
        if (sel != c) {
            m.swap_rows(c, sel);
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            const Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

bool is_unimodular(const IntMatrix& a) { return abs(determinant(a)) == 1; }

std::size_t rank(const RatMatrix& a) {
    RatMatrix m = a;
    return rref(m).size();
}

std::vector<RatVector> kernel_basis(const RatMatrix& a) {
    RatMatrix m = a;
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<IntVector> integer_kernel(const IntMatrix& a) {
    const auto [h, u] = hnf(a.transpose());
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (h(i, j) != 0) zero = false;
        if (zero) rows.push_back(u.row(i));
    }
    return Lattice(a.cols(), rows).basis_rows();
}

bool solve_rational(const RatMatrix& a, const RatVector& b, RatVector& x) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_rational: dimension mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return false;
    x.assign(a.cols(), Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
    return true;
}

Lattice::Lattice(std::size_t ambient_dim, const std::vector<IntVector>& generators) {
    IntMatrix g = IntMatrix::from_rows(generators, ambient_dim);
    IntMatrix h = hnf(g).h;
    std::size_t nonzero = 0;
    while (nonzero < h.rows()) {
        bool zero = true;
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (h(nonzero, j) != 0) zero = false;
        if (zero) break;
        ++nonzero;
    }
    basis_ = IntMatrix(nonzero, ambient_dim);
    for (std::size_t i = 0; i < nonzero; ++i)
        for (std::size_t j = 0; j < ambient_dim; ++j) basis_(i, j) = h(i, j);
}

Lattice Lattice::full(std::size_t n) { return Lattice(n, IntMatrix::identity(n).row_list()); }

bool Lattice::contains(const IntVector& v) const {
    if (v.size() != ambient_dim()) throw std::invalid_argument("Lattice::contains: dimension mismatch");
    IntVector w = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t pivot = 0;
        while (basis_(i, pivot) == 0) ++pivot;
        for (std::size_t j = 0; j < pivot; ++j)
            if (w[j] != 0) return false;
        if (w[pivot] % basis_(i, pivot) != 0) return false;
        const Integer k = w[pivot] / basis_(i, pivot);
        for (std::size_t j = 0; j < w.size(); ++j) w[j] -= k * basis_(i, j);
    }
    return std::all_of(w.begin(), w.end(), [](const Integer& x) { return x == 0; });
}

Lattice Lattice::sum(const Lattice& other) const {
    if (other.ambient_dim() != ambient_dim()) throw std::invalid_argument("Lattice::sum: dimension mismatch");
    auto rows = basis_rows();
    for (auto& r : other.basis_rows()) rows.push_back(std::move(r));
    return Lattice(ambient_dim(), rows);
}

Lattice saturate(const Lattice& l) {
    const std::size_t n = l.ambient_dim();
    const auto perp = integer_kernel(l.basis());
    if (perp.empty()) {
        // Rank n, or the zero lattice in dimension 0.
        return l.rank() == n ? Lattice::full(n) : Lattice(n);
    }
    return Lattice(n, integer_kernel(IntMatrix::from_rows(perp, n)));
}

bool is_saturated(const Lattice& l) { return saturate(l) == l; }

Integer AbelianInvariants::torsion_order() const {
    Integer o = 1;
    for (const auto& d : torsion) o *= d;
    return o;
}

std::string AbelianInvariants::to_string() const {
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    for (const auto& d : torsion) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

AbelianInvariants abelian_invariants(const IntMatrix& relations, std::size_t generators) {
    if (relations.cols() != generators)
        throw std::invalid_argument("abelian_invariants: relation width differs from generator count");
    const auto d = snf(relations);
    AbelianInvariants out;
    out.free_rank = generators - d.size();
    for (const auto& x : d)
        if (x != 1) out.torsion.push_back(x);
    return out;
}

Integer gcd_of(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

IntVector primitive(const IntVector& v) {
    const Integer g = gcd_of(v);
    if (g == 0) return v;
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace symtorus
