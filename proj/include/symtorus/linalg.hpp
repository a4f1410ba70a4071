#pragma once

// Exact integer and rational linear algebra: Hermite and Smith normal forms,
// integer lattices in canonical form, rational kernels.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symtorus {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Parses "p/q", "p" or "-p/q" into a reduced rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
/// "p/q" with the denominator dropped when it is 1.
std::string format_rational(const Rational& q);

/// Dense row-major matrix. Dimensions may be zero.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("Matrix: row length mismatch");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[check(i, j)]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[check(i, j)]; }

    std::vector<T> row(std::size_t i) const {
        std::vector<T> r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }
    std::vector<std::vector<T>> row_list() const {
        std::vector<std::vector<T>> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
        return out;
    }
    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: product dimension mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }
    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << '[';
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? ",[" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j);
            os << ']';
        }
        return os << ']';
    }

private:
    std::size_t check(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("Matrix: index out of range");
        return i * cols_ + j;
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& a);

struct HermiteResult {
    IntMatrix h;  ///< row Hermite normal form, same shape as the input
    IntMatrix u;  ///< unimodular, u * a == h
};

/// Row-style Hermite normal form: pivots positive, entries above each pivot in [0, pivot),
/// zero rows at the bottom.
HermiteResult hnf(const IntMatrix& a);

struct SmithResult {
    std::vector<Integer> diagonal;  ///< nonzero invariant factors d1 | d2 | ...
    IntMatrix p;                    ///< unimodular row transform
    IntMatrix q;                    ///< unimodular column transform, p * a * q = diag
};

SmithResult smith(const IntMatrix& a);
/// Nonzero Smith invariant factors only.
std::vector<Integer> snf(const IntMatrix& a);

/// Determinant by fraction-free elimination. Throws on non-square input.
Integer determinant(const IntMatrix& a);
Rational determinant(const RatMatrix& a);
bool is_unimodular(const IntMatrix& a);

std::size_t rank(const RatMatrix& a);
inline std::size_t rank(const IntMatrix& a) { return rank(to_rational(a)); }

/// Basis of the right kernel {x : a x = 0} over Q, taken from the reduced row echelon form.
std::vector<RatVector> kernel_basis(const RatMatrix& a);
/// Z-basis of {x in Z^n : a x = 0}.
std::vector<IntVector> integer_kernel(const IntMatrix& a);

/// Solves a x = b over Q for a single solution, if one exists.
bool solve_rational(const RatMatrix& a, const RatVector& b, RatVector& x);

/// Lattice in Z^n generated by row vectors, held as its Hermite basis with zero rows
/// removed. Structural equality is lattice equality.
class Lattice {
public:
    explicit Lattice(std::size_t ambient_dim = 0) : basis_(0, ambient_dim) {}
    Lattice(std::size_t ambient_dim, const std::vector<IntVector>& generators);
    static Lattice full(std::size_t n);

    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t rank() const { return basis_.rows(); }
    const IntMatrix& basis() const { return basis_; }
    std::vector<IntVector> basis_rows() const { return basis_.row_list(); }

    bool contains(const IntVector& v) const;
    Lattice sum(const Lattice& other) const;

    friend bool operator==(const Lattice&, const Lattice&) = default;

private:
    IntMatrix basis_;
};

Lattice saturate(const Lattice& l);
bool is_saturated(const Lattice& l);

/// Finitely generated abelian group Z^free_rank + Z/d1 + ... with d1 | d2 | ..., each di >= 2.
struct AbelianInvariants {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    Integer torsion_order() const;
    std::string to_string() const;
    friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Abelian group on `generators` generators with the rows of `relations` as relators.
AbelianInvariants abelian_invariants(const IntMatrix& relations, std::size_t generators);

Integer gcd_of(const IntVector& v);
/// Divides by the gcd of the entries. The zero vector is returned unchanged.
IntVector primitive(const IntVector& v);
Integer lcm(const Integer& a, const Integer& b);
/// Floor-mod into [0, m) for m > 0.
Integer mod_floor(const Integer& a, const Integer& m);

}  // namespace symtorus
