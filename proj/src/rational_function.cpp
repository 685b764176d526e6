#include "p1/rational_function.hpp"

namespace p1 {

RationalFunction RationalFunction::from_polynomial(const Polynomial& p) {
    return RationalFunction(p, Polynomial::one(p.field()));
}

RationalFunction RationalFunction::from_fraction(const Polynomial& num, const Polynomial& den) {
    require_same_field(num.field(), den.field(), "RationalFunction::from_fraction");
    if (den.is_zero()) throw arithmetic_error("RationalFunction: zero denominator");
    if (num.is_zero()) return RationalFunction(num.field());
    Polynomial g = poly_gcd(num, den);
    Polynomial n = num / g, d = den / g;
    FieldElement lc = d.leading_coeff();
    return RationalFunction(n * lc.inverse(), d.monic());
}

RationalFunction RationalFunction::from_laurent(const LaurentPolynomial& l) {
    const Field& f = l.field();
    auto [poly, lo] = l.split_monomial();
    if (lo >= 0) return from_polynomial(poly.shift(lo));
    return RationalFunction(poly, Polynomial::variable(f).shift(-lo - 1));
}

const Polynomial& RationalFunction::as_polynomial() const {
    if (!is_polynomial()) throw arithmetic_error("rational function is not a polynomial");
    return num_;
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return from_fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return from_fraction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    return *this * o.inverse();
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw arithmetic_error("inverse of zero rational function");
    return from_fraction(den_, num_);
}

int RationalFunction::valuation_at_infinity() const {
    if (is_zero()) throw arithmetic_error("valuation of zero");
    return den_.degree() - num_.degree();
}

bool RationalFunction::is_laurent() const {
    if (is_zero() || den_.is_one()) return true;
    // den is monic and coprime to num; Laurent iff den = t^k
    for (size_t k = 0; k + 1 < den_.coeffs().size(); ++k)
        if (!den_.coeffs()[k].is_zero()) return false;
    return true;
}

LaurentPolynomial RationalFunction::to_laurent() const {
    if (!is_laurent()) throw arithmetic_error("rational function is not Laurent");
    return LaurentPolynomial::from_polynomial(num_).shift(is_zero() ? 0 : -(den_.is_one() ? 0 : den_.degree()));
}

FieldElement RationalFunction::evaluate(const FieldElement& x) const {
    FieldElement d = den_.evaluate(x);
    if (d.is_zero()) throw arithmetic_error("evaluation at a pole");
    return num_.evaluate(x) / d;
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (den_.is_one()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

} // namespace p1
