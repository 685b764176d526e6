#ifndef P1_FIELD_HPP
#define P1_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace p1 {

using Int = boost::multiprecision::cpp_int;

struct field_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct arithmetic_error : std::domain_error {
    using std::domain_error::domain_error;
};

class FieldElement;

// Base field: either F_p for a prime p, or the rationals.
class Field {
public:
    enum class Kind { prime, rational };

    static Field prime(const Int& p);
    static Field rationals();

    Kind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == Kind::prime; }
    const Int& modulus() const { return p_; }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_integer(const Int& n) const;
    FieldElement from_fraction(const Int& num, const Int& den) const;

    std::string to_string() const;

private:
    Field(Kind k, Int p) : kind_(k), p_(std::move(p)) {}
    Kind kind_;
    Int p_; // 0 for rationals

    friend class FieldElement;
};

// Element of a Field. Prime-field elements are residues in [0, p);
// rational elements are kept in lowest terms with positive denominator.
class FieldElement {
public:
    const Field& field() const { return field_; }
    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement inverse() const;

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    bool operator==(const FieldElement& o) const {
        return field_ == o.field_ && num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // Total order used for canonical sorting only (not an ordered-field order).
    static int compare(const FieldElement& a, const FieldElement& b);

    std::string to_string() const;

private:
    FieldElement(Field f, Int num, Int den)
        : field_(std::move(f)), num_(std::move(num)), den_(std::move(den)) {}

    Field field_;
    Int num_;
    Int den_; // always 1 for prime fields

    friend class Field;
};

void require_same_field(const Field& a, const Field& b, const char* where);

} // namespace p1

#endif
