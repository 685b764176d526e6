#ifndef P1_LAURENT_HPP
#define P1_LAURENT_HPP

#include "p1/polynomial.hpp"

#include <map>

namespace p1 {

// Element of k[t, t^-1]. Only nonzero coefficients are stored.
class LaurentPolynomial {
public:
    explicit LaurentPolynomial(const Field& f) : field_(f) {}

    static LaurentPolynomial zero(const Field& f) { return LaurentPolynomial(f); }
    static LaurentPolynomial one(const Field& f) { return monomial(f.one(), 0); }
    static LaurentPolynomial monomial(const FieldElement& c, int exp);
    static LaurentPolynomial from_polynomial(const Polynomial& p);

    const Field& field() const { return field_; }
    const std::map<int, FieldElement>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    int lo() const; // minimum exponent, throws on zero
    int hi() const; // maximum exponent, throws on zero

    FieldElement coeff(int exp) const;

    bool is_monomial() const { return terms_.size() == 1; }
    // c*t^m with c != 0 (throws unless is_monomial)
    std::pair<FieldElement, int> as_monomial() const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const FieldElement& c) const;

    // t^k * this, any integer k
    LaurentPolynomial shift(int k) const;
    // substitute t -> 1/t
    LaurentPolynomial invert_variable() const;

    bool operator==(const LaurentPolynomial& o) const {
        return field_ == o.field_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

    // this = t^(-lo) * polynomial part; returns {poly, lo} with poly(0) != 0
    std::pair<Polynomial, int> split_monomial() const;

    std::string to_string(const std::string& var = "t") const;

private:
    void set(int exp, const FieldElement& c);

    Field field_;
    std::map<int, FieldElement> terms_;
};

} // namespace p1

#endif
