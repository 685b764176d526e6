#ifndef P1_MATRIX_HPP
#define P1_MATRIX_HPP

#include "p1/rational_function.hpp"

#include <functional>
#include <vector>

namespace p1 {

struct singular_matrix : arithmetic_error {
    using arithmetic_error::arithmetic_error;
};

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<FieldElement> {
    static FieldElement zero(const Field& f) { return f.zero(); }
    static FieldElement one(const Field& f) { return f.one(); }
};

template <>
struct scalar_traits<Polynomial> {
    static Polynomial zero(const Field& f) { return Polynomial::zero(f); }
    static Polynomial one(const Field& f) { return Polynomial::one(f); }
};

template <>
struct scalar_traits<LaurentPolynomial> {
    static LaurentPolynomial zero(const Field& f) { return LaurentPolynomial::zero(f); }
    static LaurentPolynomial one(const Field& f) { return LaurentPolynomial::one(f); }
};

template <>
struct scalar_traits<RationalFunction> {
    static RationalFunction zero(const Field& f) { return RationalFunction::zero(f); }
    static RationalFunction one(const Field& f) { return RationalFunction::one(f); }
};

// Dense row-major matrix over an exact scalar type.
template <class S>
class Matrix {
public:
    Matrix(const Field& f, int rows, int cols)
        : field_(f), rows_(rows), cols_(cols),
          entries_(static_cast<size_t>(rows) * cols, scalar_traits<S>::zero(f)) {
        if (rows <= 0 || cols <= 0) throw std::invalid_argument("Matrix: nonpositive size");
    }

    static Matrix identity(const Field& f, int n) {
        Matrix m(f, n, n);
        for (int i = 0; i < n; ++i) m(i, i) = scalar_traits<S>::one(f);
        return m;
    }

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    S& operator()(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const S& operator()(int i, int j) const {
        return entries_[static_cast<size_t>(i) * cols_ + j];
    }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix r = *this;
        for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] + o.entries_[k];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix r = *this;
        for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] - o.entries_[k];
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix: dimension mismatch");
        Matrix r(field_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const S& a = (*this)(i, k);
                for (int j = 0; j < o.cols_; ++j) r(i, j) = r(i, j) + a * o(k, j);
            }
        return r;
    }

    std::vector<S> operator*(const std::vector<S>& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw std::invalid_argument("Matrix: vector dimension mismatch");
        std::vector<S> r(static_cast<size_t>(rows_), scalar_traits<S>::zero(field_));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[i] = r[i] + (*this)(i, j) * v[j];
        return r;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    template <class T>
    Matrix<T> map(const std::function<T(const S&)>& fn) const {
        Matrix<T> r(field_, rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(i, j) = fn((*this)(i, j));
        return r;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }

    Field field_;
    int rows_, cols_;
    std::vector<S> entries_;
};

// Gaussian elimination determinant over a scalar with exact division
// (FieldElement or RationalFunction).
template <class S>
S field_det(Matrix<S> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
    int n = m.rows();
    S det = scalar_traits<S>::one(m.field());
    bool neg = false;
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (!m(r, c).is_zero()) { pivot = r; break; }
        if (pivot < 0) return scalar_traits<S>::zero(m.field());
        if (pivot != c) {
            for (int j = c; j < n; ++j) std::swap(m(pivot, j), m(c, j));
            neg = !neg;
        }
        det = det * m(c, c);
        S inv = m(c, c).inverse();
        for (int r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero()) continue;
            S factor = m(r, c) * inv;
            for (int j = c; j < n; ++j) m(r, j) = m(r, j) - factor * m(c, j);
        }
    }
    return neg ? -det : det;
}

// Gauss-Jordan inverse; throws singular_matrix.
template <class S>
Matrix<S> field_inverse(Matrix<S> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    int n = m.rows();
    Matrix<S> inv = Matrix<S>::identity(m.field(), n);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (!m(r, c).is_zero()) { pivot = r; break; }
        if (pivot < 0) throw singular_matrix("matrix is singular");
        if (pivot != c)
            for (int j = 0; j < n; ++j) {
                std::swap(m(pivot, j), m(c, j));
                std::swap(inv(pivot, j), inv(c, j));
            }
        S pinv = m(c, c).inverse();
        for (int j = 0; j < n; ++j) {
            m(c, j) = m(c, j) * pinv;
            inv(c, j) = inv(c, j) * pinv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || m(r, c).is_zero()) continue;
            S factor = m(r, c);
            for (int j = 0; j < n; ++j) {
                m(r, j) = m(r, j) - factor * m(c, j);
                inv(r, j) = inv(r, j) - factor * inv(c, j);
            }
        }
    }
    return inv;
}

template <class S>
int field_rank(Matrix<S> m) {
    int rank = 0;
    int r0 = 0;
    for (int c = 0; c < m.cols() && r0 < m.rows(); ++c) {
        int pivot = -1;
        for (int r = r0; r < m.rows(); ++r)
            if (!m(r, c).is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != r0)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r0, j));
        S inv = m(r0, c).inverse();
        for (int r = r0 + 1; r < m.rows(); ++r) {
            if (m(r, c).is_zero()) continue;
            S factor = m(r, c) * inv;
            for (int j = c; j < m.cols(); ++j) m(r, j) = m(r, j) - factor * m(r0, j);
        }
        ++rank;
        ++r0;
    }
    return rank;
}

// Deterministic basis of the right nullspace of a base-field matrix, via
// reduced row echelon form; free variables in increasing column order.
std::vector<std::vector<FieldElement>> nullspace(Matrix<FieldElement> m);

Matrix<RationalFunction> to_rational(const Matrix<Polynomial>& m);
Matrix<RationalFunction> to_rational(const Matrix<LaurentPolynomial>& m);
Matrix<LaurentPolynomial> to_laurent(const Matrix<RationalFunction>& m);

// Fraction-free (Bareiss) determinant; no gcd reductions along the way.
Polynomial poly_det(const Matrix<Polynomial>& m);

// Determinant computed by clearing denominators and running Bareiss.
RationalFunction rf_det(const Matrix<RationalFunction>& m);

// Exact inverse via the adjugate of the cleared matrix; throws
// singular_matrix.
Matrix<RationalFunction> matrix_inverse(const Matrix<RationalFunction>& m);

// (lo, hi) exponent span over all nonzero entries; throws on all-zero matrix.
std::pair<int, int> laurent_span(const Matrix<LaurentPolynomial>& m);

} // namespace p1

#endif
