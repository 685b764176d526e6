#include "p1/laurent.hpp"

namespace p1 {

void LaurentPolynomial::set(int exp, const FieldElement& c) {
    if (c.is_zero())
        terms_.erase(exp);
    else
        terms_.insert_or_assign(exp, c);
}

LaurentPolynomial LaurentPolynomial::monomial(const FieldElement& c, int exp) {
    LaurentPolynomial r(c.field());
    r.set(exp, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::from_polynomial(const Polynomial& p) {
    LaurentPolynomial r(p.field());
    for (size_t k = 0; k < p.coeffs().size(); ++k) r.set(static_cast<int>(k), p.coeffs()[k]);
    return r;
}

int LaurentPolynomial::lo() const {
    if (terms_.empty()) throw arithmetic_error("lo of zero Laurent polynomial");
    return terms_.begin()->first;
}

int LaurentPolynomial::hi() const {
    if (terms_.empty()) throw arithmetic_error("hi of zero Laurent polynomial");
    return terms_.rbegin()->first;
}

FieldElement LaurentPolynomial::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? field_.zero() : it->second;
}

std::pair<FieldElement, int> LaurentPolynomial::as_monomial() const {
    if (!is_monomial()) throw arithmetic_error("not a monomial");
    return {terms_.begin()->second, terms_.begin()->first};
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r(field_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    require_same_field(field_, o.field_, "LaurentPolynomial::operator+");
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.set(e, r.coeff(e) + c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    return *this + (-o);
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    require_same_field(field_, o.field_, "LaurentPolynomial::operator*");
    LaurentPolynomial r(field_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const FieldElement& c) const {
    LaurentPolynomial r(field_);
    for (const auto& [e, a] : terms_) r.set(e, a * c);
    return r;
}

LaurentPolynomial LaurentPolynomial::shift(int k) const {
    LaurentPolynomial r(field_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::invert_variable() const {
    LaurentPolynomial r(field_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

std::pair<Polynomial, int> LaurentPolynomial::split_monomial() const {
    if (is_zero()) return {Polynomial::zero(field_), 0};
    int l = lo();
    std::vector<FieldElement> coeffs(static_cast<size_t>(hi() - l + 1), field_.zero());
    for (const auto& [e, c] : terms_) coeffs[static_cast<size_t>(e - l)] = c;
    return {Polynomial::from_coeffs(field_, std::move(coeffs)), l};
}

std::string LaurentPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool neg = c.num() < 0;
        FieldElement mag = neg ? -c : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (e == 0 || !mag.is_one()) out += mag.to_string();
        if (e != 0) {
            if (!mag.is_one()) out += "*";
            out += var;
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

} // namespace p1
