#ifndef P1_BUNDLE_HPP
#define P1_BUNDLE_HPP

#include "p1/divisor.hpp"
#include "p1/matrix.hpp"

namespace p1 {

struct invalid_bundle : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Element of the generic fiber E_xi, written in the chart-0 frame.
struct Germ {
    std::vector<RationalFunction> coords;

    bool is_zero() const {
        for (const auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }
    int rank() const { return static_cast<int>(coords.size()); }

    Germ operator+(const Germ& o) const;
    Germ operator*(const RationalFunction& f) const;

    bool operator==(const Germ& o) const { return coords == o.coords; }

    std::string to_string() const;
};

// Rank-n vector bundle on P^1 given by transition data on the standard
// two-chart cover: a chart-0 section vector v(t) and chart-infinity vector
// w(s), s = 1/t, are related by v(t) = T(t) * w(1/t). The determinant of T
// is a unit c*t^m of k[t,t^-1]; m is the first Chern class.
class VectorBundle {
public:
    // validate_bundle: checks squareness, the monomial determinant, and
    // caches the exact inverse transition.
    VectorBundle(const Field& f, int rank, const Matrix<LaurentPolynomial>& transition);

    const Field& field() const { return field_; }
    int rank() const { return rank_; }
    const Matrix<LaurentPolynomial>& transition() const { return transition_; }
    const Matrix<LaurentPolynomial>& inverse_transition() const { return inverse_; }
    int c1() const { return c1_; }

private:
    VectorBundle(const Field& f, int rank, Matrix<LaurentPolynomial> transition,
                 Matrix<LaurentPolynomial> inverse, int c1)
        : field_(f), rank_(rank), transition_(std::move(transition)),
          inverse_(std::move(inverse)), c1_(c1) {}

    Field field_;
    int rank_;
    Matrix<LaurentPolynomial> transition_;
    Matrix<LaurentPolynomial> inverse_;
    int c1_;

    friend VectorBundle twist(const VectorBundle&, int);
};

struct LineSubbundle {
    Germ generator;
    Divisor divisor;
    int degree;
};

// Order of the germ at a point: the minimum valuation of the coordinates
// in the chart covering the point. Finite clusters must be
// valuation-uniform for every coordinate; refine first if needed.
int order_at(const VectorBundle& e, const Germ& alpha, const Point& p);

Divisor germ_divisor(const VectorBundle& e, const Germ& alpha);
int germ_degree(const VectorBundle& e, const Germ& alpha);

// E(k): transition becomes t^k * T.
VectorBundle twist(const VectorBundle& e, int k);

LineSubbundle sub_line_bundle(const VectorBundle& e, const Germ& alpha);

// Whether M: E_xi -> F_xi is an isomorphism of bundles: chart-0 unimodular
// as given, chart-infinity unimodular after conjugating by the transitions.
bool is_isomorphism(const VectorBundle& e, const VectorBundle& f,
                    const Matrix<RationalFunction>& m);

// Chart-infinity view of a germ: T^-1 * alpha, as rational functions in t.
std::vector<RationalFunction> chart_infinity_coords(const VectorBundle& e, const Germ& alpha);

} // namespace p1

#endif
