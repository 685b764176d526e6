#ifndef P1_POLYNOMIAL_HPP
#define P1_POLYNOMIAL_HPP

#include "p1/field.hpp"

#include <utility>
#include <vector>

namespace p1 {

// Dense univariate polynomial over a Field. Trailing zero coefficients are
// never stored; the zero polynomial has an empty coefficient vector and no
// ordinary degree (degree() throws on it).
class Polynomial {
public:
    explicit Polynomial(const Field& f) : field_(f) {} // zero polynomial

    static Polynomial zero(const Field& f) { return Polynomial(f); }
    static Polynomial constant(const FieldElement& c);
    static Polynomial one(const Field& f) { return constant(f.one()); }
    static Polynomial variable(const Field& f); // t
    static Polynomial from_coeffs(const Field& f, std::vector<FieldElement> coeffs);

    const Field& field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    // Degree of a nonzero polynomial; the zero polynomial has no degree.
    int degree() const {
        if (coeffs_.empty()) throw arithmetic_error("degree of zero polynomial");
        return static_cast<int>(coeffs_.size()) - 1;
    }

    FieldElement coeff(int k) const;
    const FieldElement& leading_coeff() const;
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const FieldElement& c) const;

    // Euclidean division; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
    Polynomial operator/(const Polynomial& d) const; // requires exact division check by caller
    Polynomial operator%(const Polynomial& d) const;
    bool divides(const Polynomial& multiple) const;

    bool operator==(const Polynomial& o) const {
        return field_ == o.field_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial monic() const;
    bool is_monic() const { return !is_zero() && leading_coeff().is_one(); }

    FieldElement evaluate(const FieldElement& x) const;
    Polynomial derivative() const;

    // x^k * p, k >= 0
    Polynomial shift(int k) const;

    // Canonical total order: degree first (zero smallest), then coefficients
    // from the top down.
    static int compare(const Polynomial& a, const Polynomial& b);
    bool operator<(const Polynomial& o) const { return compare(*this, o) < 0; }

    std::string to_string(const std::string& var = "t") const;

private:
    void strip();

    Field field_;
    std::vector<FieldElement> coeffs_; // coeffs_[k] multiplies t^k
};

// Monic gcd; gcd(0,0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

struct PolyFactor {
    Polynomial factor; // monic
    int multiplicity;
};

struct Factorization {
    FieldElement unit;
    std::vector<PolyFactor> factors; // monic, pairwise coprime
};

// Squarefree decomposition: f = unit * prod factor_i^mult_i with the factors
// monic, squarefree and pairwise coprime. Works in any characteristic.
Factorization factor_squarefree(const Polynomial& f);

// Full irreducible factorization; prime base fields only.
Factorization factor_irreducible(const Polynomial& f);

bool is_irreducible(const Polynomial& f); // prime base fields only

} // namespace p1

#endif
