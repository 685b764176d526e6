#include "p1/bundle.hpp"

#include <algorithm>

namespace p1 {

Germ Germ::operator+(const Germ& o) const {
    if (coords.size() != o.coords.size()) throw std::invalid_argument("Germ: rank mismatch");
    Germ r = *this;
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] = coords[i] + o.coords[i];
    return r;
}

Germ Germ::operator*(const RationalFunction& f) const {
    Germ r = *this;
    for (auto& c : r.coords) c = c * f;
    return r;
}

std::string Germ::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) out += "; ";
        out += coords[i].to_string();
    }
    return out + ")";
}

VectorBundle::VectorBundle(const Field& f, int rank, const Matrix<LaurentPolynomial>& transition)
    : field_(f), rank_(rank), transition_(transition),
      inverse_(Matrix<LaurentPolynomial>::identity(f, rank)), c1_(0) {
    if (transition.rows() != rank || transition.cols() != rank)
        throw invalid_bundle("transition matrix size does not match rank");
    RationalFunction det = rf_det(to_rational(transition));
    if (det.is_zero()) throw invalid_bundle("transition determinant is zero");
    if (!det.is_laurent() || !det.to_laurent().is_monomial())
        throw invalid_bundle("transition determinant is not a monomial c*t^m");
    c1_ = det.to_laurent().as_monomial().second;
    inverse_ = to_laurent(matrix_inverse(to_rational(transition)));
}

std::vector<RationalFunction> chart_infinity_coords(const VectorBundle& e, const Germ& alpha) {
    Matrix<RationalFunction> tinv = to_rational(e.inverse_transition());
    return tinv * alpha.coords;
}

int order_at(const VectorBundle& e, const Germ& alpha, const Point& p) {
    if (alpha.is_zero()) throw arithmetic_error("order_at: zero germ");
    if (alpha.rank() != e.rank()) throw std::invalid_argument("order_at: rank mismatch");
    const std::vector<RationalFunction>& coords =
        p.is_infinity() ? chart_infinity_coords(e, alpha) : alpha.coords;
    bool seen = false;
    int best = 0;
    for (const auto& c : coords) {
        if (c.is_zero()) continue;
        int v = valuation(c, p);
        if (!seen || v < best) {
            best = v;
            seen = true;
        }
    }
    return best;
}

Divisor germ_divisor(const VectorBundle& e, const Germ& alpha) {
    if (alpha.is_zero()) throw arithmetic_error("germ_divisor: zero germ");
    const Field& k = e.field();
    // common coprime cluster basis of all coordinate zeros and poles
    std::vector<Divisor> coord_divisors;
    for (const auto& c : alpha.coords)
        if (!c.is_zero()) coord_divisors.push_back(principal_divisor(c));
    auto refined = refine(coord_divisors);
    Divisor d(k);
    std::map<Polynomial, int> clusters;
    for (const Divisor& cd : refined)
        for (const auto& [c, m] : cd.finite()) clusters.emplace(c, 0);
    for (const auto& [c, unused] : clusters) {
        Point p = Point::finite(c);
        bool seen = false;
        int v = 0;
        for (const auto& coord : alpha.coords) {
            if (coord.is_zero()) continue;
            int vc = valuation(coord, p);
            if (!seen || vc < v) {
                v = vc;
                seen = true;
            }
        }
        if (v != 0) d.add(c, v);
    }
    d.add_infinity(order_at(e, alpha, Point::infinity(k)));
    return d;
}

int germ_degree(const VectorBundle& e, const Germ& alpha) {
    return divisor_degree(germ_divisor(e, alpha));
}

VectorBundle twist(const VectorBundle& e, int k) {
    if (k == 0) return e;
    auto shift = [&](const Matrix<LaurentPolynomial>& m, int by) {
        return m.map<LaurentPolynomial>(
            [&](const LaurentPolynomial& l) { return l.shift(by); });
    };
    return VectorBundle(e.field(), e.rank(), shift(e.transition(), k),
                        shift(e.inverse_transition(), -k), e.c1() + e.rank() * k);
}

LineSubbundle sub_line_bundle(const VectorBundle& e, const Germ& alpha) {
    if (alpha.is_zero()) throw arithmetic_error("sub_line_bundle: zero germ");
    Divisor d = germ_divisor(e, alpha);
    // subbundle condition: the locally normalized generator does not vanish
    // at any point of the support (some coordinate has valuation exactly 0)
    for (const Point& p : d.support()) {
        int ord = order_at(e, alpha, p);
        if (ord != d.multiplicity(p))
            throw arithmetic_error("sub_line_bundle: generator vanishes after normalization");
    }
    return LineSubbundle{alpha, d, divisor_degree(d)};
}

bool is_isomorphism(const VectorBundle& e, const VectorBundle& f,
                    const Matrix<RationalFunction>& m) {
    if (e.rank() != f.rank() || e.field() != f.field())
        throw std::invalid_argument("is_isomorphism: rank or field mismatch");
    if (m.rows() != e.rank() || m.cols() != e.rank())
        throw std::invalid_argument("is_isomorphism: matrix size mismatch");
    RationalFunction det_m = rf_det(m);
    if (det_m.is_zero()) throw singular_matrix("is_isomorphism: singular matrix");

    // chart 0: polynomial entries, constant nonzero determinant
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_polynomial()) return false;
    if (!det_m.is_polynomial() || !det_m.as_polynomial().is_constant()) return false;

    // chart infinity: N = T_F^-1 * M * T_E must be regular at infinity with
    // unit determinant there
    Matrix<RationalFunction> n =
        to_rational(f.inverse_transition()) * m * to_rational(e.transition());
    for (int i = 0; i < n.rows(); ++i)
        for (int j = 0; j < n.cols(); ++j)
            if (!n(i, j).is_zero() && n(i, j).valuation_at_infinity() < 0) return false;
    RationalFunction det_n = rf_det(n);
    return !det_n.is_zero() && det_n.valuation_at_infinity() == 0;
}

} // namespace p1
