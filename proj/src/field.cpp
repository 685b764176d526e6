#include "p1/field.hpp"

#include <boost/multiprecision/integer.hpp>

namespace p1 {

namespace {

Int mod_floor(const Int& a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    return r;
}

bool is_prime_trial(const Int& p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (Int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// extended gcd, returns x with a*x = gcd(a,p) mod p
Int mod_inverse(const Int& a, const Int& p) {
    Int old_r = a, r = p;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1 && old_r != -1)
        throw arithmetic_error("element not invertible mod p");
    if (old_r == -1) old_s = -old_s;
    return mod_floor(old_s, p);
}

} // namespace

Field Field::prime(const Int& p) {
    if (!is_prime_trial(p))
        throw std::invalid_argument("Field::prime: " + p.str() + " is not prime");
    return Field(Kind::prime, p);
}

Field Field::rationals() { return Field(Kind::rational, 0); }

FieldElement Field::zero() const { return FieldElement(*this, 0, 1); }

FieldElement Field::one() const { return FieldElement(*this, 1, 1); }

FieldElement Field::from_integer(const Int& n) const {
    if (kind_ == Kind::prime) return FieldElement(*this, mod_floor(n, p_), 1);
    return FieldElement(*this, n, 1);
}

FieldElement Field::from_fraction(const Int& num, const Int& den) const {
    if (den == 0) throw arithmetic_error("zero denominator");
    if (kind_ == Kind::prime) {
        Int d = mod_floor(den, p_);
        if (d == 0) throw arithmetic_error("denominator divisible by p");
        return FieldElement(*this, mod_floor(num, p_) * mod_inverse(d, p_) % p_, 1);
    }
    Int n = num, d = den;
    if (d < 0) { n = -n; d = -d; }
    Int g = boost::multiprecision::gcd(n < 0 ? Int(-n) : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n == 0) d = 1;
    return FieldElement(*this, n, d);
}

std::string Field::to_string() const {
    return kind_ == Kind::prime ? "F_" + p_.str() : "Q";
}

FieldElement FieldElement::operator-() const {
    if (field_.is_prime_field())
        return FieldElement(field_, num_ == 0 ? Int(0) : field_.p_ - num_, 1);
    return FieldElement(field_, -num_, den_);
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(field_, o.field_, "FieldElement::operator+");
    if (field_.is_prime_field())
        return FieldElement(field_, (num_ + o.num_) % field_.p_, 1);
    return field_.from_fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(field_, o.field_, "FieldElement::operator*");
    if (field_.is_prime_field())
        return FieldElement(field_, num_ * o.num_ % field_.p_, 1);
    return field_.from_fraction(num_ * o.num_, den_ * o.den_);
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw arithmetic_error("inverse of zero");
    if (field_.is_prime_field())
        return FieldElement(field_, mod_inverse(num_, field_.p_), 1);
    return field_.from_fraction(den_, num_);
}

int FieldElement::compare(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_, "FieldElement::compare");
    Int lhs = a.num_ * b.den_, rhs = b.num_ * a.den_;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

std::string FieldElement::to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

void require_same_field(const Field& a, const Field& b, const char* where) {
    if (a != b) throw field_mismatch(std::string(where) + ": field mismatch");
}

} // namespace p1
