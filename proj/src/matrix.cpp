#include "p1/matrix.hpp"

#include <algorithm>

namespace p1 {

std::vector<std::vector<FieldElement>> nullspace(Matrix<FieldElement> m) {
    const Field& f = m.field();
    int rows = m.rows(), cols = m.cols();
    std::vector<int> pivot_col;
    int r0 = 0;
    for (int c = 0; c < cols && r0 < rows; ++c) {
        int pivot = -1;
        for (int r = r0; r < rows; ++r)
            if (!m(r, c).is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != r0)
            for (int j = 0; j < cols; ++j) std::swap(m(pivot, j), m(r0, j));
        FieldElement inv = m(r0, c).inverse();
        for (int j = c; j < cols; ++j) m(r0, j) = m(r0, j) * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == r0 || m(r, c).is_zero()) continue;
            FieldElement factor = m(r, c);
            for (int j = c; j < cols; ++j) m(r, j) = m(r, j) - factor * m(r0, j);
        }
        pivot_col.push_back(c);
        ++r0;
    }
    std::vector<std::vector<FieldElement>> basis;
    for (int c = 0; c < cols; ++c) {
        if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end()) continue;
        std::vector<FieldElement> v(static_cast<size_t>(cols), f.zero());
        v[static_cast<size_t>(c)] = f.one();
        for (size_t r = 0; r < pivot_col.size(); ++r)
            v[static_cast<size_t>(pivot_col[r])] = -m(static_cast<int>(r), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix<RationalFunction> to_rational(const Matrix<Polynomial>& m) {
    return m.map<RationalFunction>(
        [](const Polynomial& p) { return RationalFunction::from_polynomial(p); });
}

Matrix<RationalFunction> to_rational(const Matrix<LaurentPolynomial>& m) {
    return m.map<RationalFunction>(
        [](const LaurentPolynomial& l) { return RationalFunction::from_laurent(l); });
}

Matrix<LaurentPolynomial> to_laurent(const Matrix<RationalFunction>& m) {
    return m.map<LaurentPolynomial>(
        [](const RationalFunction& r) { return r.to_laurent(); });
}

Polynomial poly_det(const Matrix<Polynomial>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("poly_det: not square");
    const Field& f = m.field();
    int n = m.rows();
    Matrix<Polynomial> b = m;
    Polynomial denom = Polynomial::one(f);
    bool neg = false;
    for (int k = 0; k + 1 < n; ++k) {
        if (b(k, k).is_zero()) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (!b(r, k).is_zero()) { pivot = r; break; }
            if (pivot < 0) return Polynomial::zero(f);
            for (int j = 0; j < n; ++j) std::swap(b(pivot, j), b(k, j));
            neg = !neg;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Polynomial num = b(i, j) * b(k, k) - b(i, k) * b(k, j);
                if (num.is_zero()) {
                    b(i, j) = num;
                    continue;
                }
                auto [q, r] = num.divmod(denom);
                if (!r.is_zero())
                    throw arithmetic_error("poly_det: inexact Bareiss division");
                b(i, j) = q;
            }
            b(i, k) = Polynomial::zero(f);
        }
        denom = b(k, k);
    }
    Polynomial det = b(n - 1, n - 1);
    return neg ? -det : det;
}

namespace {

// common monic denominator of all entries plus the cleared polynomial matrix
std::pair<Polynomial, Matrix<Polynomial>> clear_denominators(const Matrix<RationalFunction>& m) {
    const Field& f = m.field();
    Polynomial d = Polynomial::one(f);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Polynomial& den = m(i, j).den();
            d = d * (den / poly_gcd(d, den));
        }
    Matrix<Polynomial> p(f, m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            p(i, j) = m(i, j).num() * (d / m(i, j).den());
    return {d, p};
}

} // namespace

RationalFunction rf_det(const Matrix<RationalFunction>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("rf_det: not square");
    auto [d, p] = clear_denominators(m);
    Polynomial dn = Polynomial::one(m.field());
    for (int i = 0; i < m.rows(); ++i) dn = dn * d;
    return RationalFunction::from_fraction(poly_det(p), dn);
}

Matrix<RationalFunction> matrix_inverse(const Matrix<RationalFunction>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix_inverse: not square");
    const Field& f = m.field();
    int n = m.rows();
    auto [d, p] = clear_denominators(m);
    Polynomial det_p = poly_det(p);
    if (det_p.is_zero()) throw singular_matrix("matrix is singular");
    // M^-1 = d * adj(P) / det(P)
    Matrix<RationalFunction> inv(f, n, n);
    if (n == 1) {
        inv(0, 0) = RationalFunction::from_fraction(d, p(0, 0));
        return inv;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix<Polynomial> minor(f, n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue; // adjugate transposes: minor of (j, i)
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor(rr, cc) = p(r, c);
                    ++cc;
                }
                ++rr;
            }
            Polynomial cof = poly_det(minor) * d;
            if ((i + j) % 2 == 1) cof = -cof;
            inv(i, j) = RationalFunction::from_fraction(cof, det_p);
        }
    return inv;
}

std::pair<int, int> laurent_span(const Matrix<LaurentPolynomial>& m) {
    bool seen = false;
    int lo = 0, hi = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const LaurentPolynomial& e = m(i, j);
            if (e.is_zero()) continue;
            if (!seen) {
                lo = e.lo();
                hi = e.hi();
                seen = true;
            } else {
                lo = std::min(lo, e.lo());
                hi = std::max(hi, e.hi());
            }
        }
    if (!seen) throw arithmetic_error("laurent_span: all-zero matrix");
    return {lo, hi};
}

} // namespace p1
