#ifndef P1_RATIONAL_FUNCTION_HPP
#define P1_RATIONAL_FUNCTION_HPP

#include "p1/laurent.hpp"
#include "p1/polynomial.hpp"

namespace p1 {

// Element of K = k(t), stored reduced with monic denominator.
class RationalFunction {
public:
    explicit RationalFunction(const Field& f)
        : num_(Polynomial::zero(f)), den_(Polynomial::one(f)) {}

    static RationalFunction zero(const Field& f) { return RationalFunction(f); }
    static RationalFunction one(const Field& f) { return from_polynomial(Polynomial::one(f)); }
    static RationalFunction from_polynomial(const Polynomial& p);
    static RationalFunction from_fraction(const Polynomial& num, const Polynomial& den);
    static RationalFunction from_laurent(const LaurentPolynomial& l);
    static RationalFunction constant(const FieldElement& c) {
        return from_polynomial(Polynomial::constant(c));
    }

    const Field& field() const { return num_.field(); }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    const Polynomial& as_polynomial() const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction inverse() const;

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    // Order of vanishing at infinity: deg(den) - deg(num). Throws on zero.
    int valuation_at_infinity() const;

    // Defined when den is t^k: the Laurent expansion. Throws otherwise.
    LaurentPolynomial to_laurent() const;
    bool is_laurent() const;

    FieldElement evaluate(const FieldElement& x) const; // throws on pole

    std::string to_string(const std::string& var = "t") const;

private:
    RationalFunction(Polynomial num, Polynomial den)
        : num_(std::move(num)), den_(std::move(den)) {}

    Polynomial num_;
    Polynomial den_; // monic, coprime to num_
};

} // namespace p1

#endif
