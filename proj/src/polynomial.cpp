#include "p1/polynomial.hpp"

#include <algorithm>
#include <random>

namespace p1 {

void Polynomial::strip() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const FieldElement& c) {
    Polynomial p(c.field());
    if (!c.is_zero()) p.coeffs_.push_back(c);
    return p;
}

Polynomial Polynomial::variable(const Field& f) {
    Polynomial p(f);
    p.coeffs_ = {f.zero(), f.one()};
    return p;
}

Polynomial Polynomial::from_coeffs(const Field& f, std::vector<FieldElement> coeffs) {
    for (const auto& c : coeffs) require_same_field(f, c.field(), "Polynomial::from_coeffs");
    Polynomial p(f);
    p.coeffs_ = std::move(coeffs);
    p.strip();
    return p;
}

FieldElement Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return field_.zero();
    return coeffs_[k];
}

const FieldElement& Polynomial::leading_coeff() const {
    if (coeffs_.empty()) throw arithmetic_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r(field_);
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_field(field_, o.field_, "Polynomial::operator+");
    Polynomial r(field_);
    size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    r.coeffs_.reserve(n);
    for (size_t k = 0; k < n; ++k) {
        FieldElement c = field_.zero();
        if (k < coeffs_.size()) c += coeffs_[k];
        if (k < o.coeffs_.size()) c += o.coeffs_[k];
        r.coeffs_.push_back(c);
    }
    r.strip();
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_field(field_, o.field_, "Polynomial::operator*");
    if (is_zero() || o.is_zero()) return Polynomial(field_);
    Polynomial r(field_);
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, field_.zero());
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    r.strip();
    return r;
}

Polynomial Polynomial::operator*(const FieldElement& c) const {
    return *this * Polynomial::constant(c);
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    require_same_field(field_, d.field_, "Polynomial::divmod");
    if (d.is_zero()) throw arithmetic_error("polynomial division by zero");
    Polynomial q(field_), r = *this;
    FieldElement lc_inv = d.leading_coeff().inverse();
    int dd = d.degree();
    while (!r.is_zero() && r.degree() >= dd) {
        int k = r.degree() - dd;
        FieldElement c = r.leading_coeff() * lc_inv;
        Polynomial term = Polynomial::constant(c).shift(k);
        q = q + term;
        r = r - term * d;
    }
    return {q, r};
}

Polynomial Polynomial::operator/(const Polynomial& d) const { return divmod(d).first; }

Polynomial Polynomial::operator%(const Polynomial& d) const { return divmod(d).second; }

bool Polynomial::divides(const Polynomial& multiple) const {
    if (is_zero()) return multiple.is_zero();
    return multiple.divmod(*this).second.is_zero();
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return *this * leading_coeff().inverse();
}

FieldElement Polynomial::evaluate(const FieldElement& x) const {
    FieldElement acc = field_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    Polynomial r(field_);
    for (size_t k = 1; k < coeffs_.size(); ++k)
        r.coeffs_.push_back(coeffs_[k] * field_.from_integer(Int(k)));
    r.strip();
    return r;
}

Polynomial Polynomial::shift(int k) const {
    if (is_zero() || k == 0) return *this;
    if (k < 0) throw arithmetic_error("Polynomial::shift: negative shift");
    Polynomial r(field_);
    r.coeffs_.assign(static_cast<size_t>(k), field_.zero());
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.size() != b.coeffs_.size())
        return a.coeffs_.size() < b.coeffs_.size() ? -1 : 1;
    for (size_t k = a.coeffs_.size(); k-- > 0;) {
        int c = FieldElement::compare(a.coeffs_[k], b.coeffs_[k]);
        if (c != 0) return c;
    }
    return 0;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t k = coeffs_.size(); k-- > 0;) {
        const FieldElement& c = coeffs_[k];
        if (c.is_zero()) continue;
        bool neg = c.num() < 0;
        FieldElement mag = neg ? -c : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (k == 0 || !mag.is_one()) out += mag.to_string();
        if (k > 0) {
            if (!mag.is_one()) out += "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

namespace {

// Scale a nonzero rational-coefficient polynomial to primitive integer form.
// Keeps the Euclidean remainder sequence from exploding over Q.
Polynomial primitive_part(const Polynomial& p) {
    if (p.is_zero() || p.field().is_prime_field()) return p;
    Int den_lcm = 1, num_gcd = 0;
    for (const auto& c : p.coeffs())
        den_lcm = boost::multiprecision::lcm(den_lcm, c.den());
    for (const auto& c : p.coeffs())
        num_gcd = boost::multiprecision::gcd(num_gcd, c.num() * (den_lcm / c.den()));
    return p * p.field().from_fraction(den_lcm, num_gcd);
}

} // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    require_same_field(a.field(), b.field(), "poly_gcd");
    Polynomial x = primitive_part(a), y = primitive_part(b);
    while (!y.is_zero()) {
        Polynomial r = primitive_part(x % y);
        x = y;
        y = r;
    }
    return x.monic();
}

namespace {

Polynomial poly_powmod(Polynomial base, Int e, const Polynomial& mod) {
    Polynomial r = Polynomial::one(base.field());
    base = base % mod;
    while (e > 0) {
        if (e % 2 == 1) r = r * base % mod;
        base = base * base % mod;
        e /= 2;
    }
    return r;
}

// p-th root of g(t) = h(t^p) over F_p (Frobenius is the identity on F_p).
Polynomial pth_root(const Polynomial& g, const Int& p) {
    const Field& f = g.field();
    std::vector<FieldElement> coeffs;
    size_t step = static_cast<size_t>(p);
    for (size_t k = 0; k < g.coeffs().size(); k += step) {
        for (size_t j = 1; j < step && k + j < g.coeffs().size(); ++j)
            if (!g.coeffs()[k + j].is_zero())
                throw arithmetic_error("pth_root: not a polynomial in t^p");
        coeffs.push_back(g.coeffs()[k]);
    }
    return Polynomial::from_coeffs(f, std::move(coeffs));
}

// Squarefree part sequence for monic f, characteristic p (0 for Q).
void squarefree_monic(const Polynomial& f, int outer_mult,
                      std::vector<PolyFactor>& out) {
    const Field& k = f.field();
    if (f.is_constant()) return;
    Polynomial df = f.derivative();
    if (df.is_zero()) {
        // f = g(t^p)
        squarefree_monic(pth_root(f, k.modulus()), outer_mult * static_cast<int>(k.modulus()),
                         out);
        return;
    }
    Polynomial c = poly_gcd(f, df);
    Polynomial w = f / c;
    int i = 1;
    while (!w.is_constant()) {
        Polynomial y = poly_gcd(w, c);
        Polynomial z = w / y;
        if (!z.is_constant()) out.push_back({z.monic(), i * outer_mult});
        w = y;
        c = c / y;
        ++i;
    }
    if (!c.is_constant())
        squarefree_monic(pth_root(c, k.modulus()), outer_mult * static_cast<int>(k.modulus()),
                         out);
}

// Distinct-degree factorization of a monic squarefree g over F_p:
// returns pairs (product of irreducibles of degree d, d).
std::vector<std::pair<Polynomial, int>> distinct_degree(const Polynomial& g) {
    const Field& f = g.field();
    const Int& p = f.modulus();
    std::vector<std::pair<Polynomial, int>> out;
    Polynomial rem = g;
    Polynomial x = Polynomial::variable(f);
    Polynomial xq = x; // x^(p^d) mod rem, maintained incrementally
    for (int d = 1; !rem.is_constant(); ++d) {
        if (2 * d > rem.degree()) {
            out.emplace_back(rem, rem.degree());
            break;
        }
        xq = poly_powmod(xq, p, rem);
        Polynomial gd = poly_gcd(xq - x, rem);
        if (!gd.is_constant()) {
            out.emplace_back(gd, d);
            rem = rem / gd;
            xq = xq % rem;
        }
    }
    return out;
}

// Cantor-Zassenhaus equal-degree splitting: g monic squarefree, all
// irreducible factors of degree d. Uses a fixed-seed generator so the
// factorization is deterministic.
void equal_degree(const Polynomial& g, int d, std::mt19937_64& rng,
                  std::vector<Polynomial>& out) {
    const Field& f = g.field();
    const Int& p = f.modulus();
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    int n = g.degree();
    while (true) {
        // random polynomial of degree < n
        std::vector<FieldElement> coeffs;
        for (int k = 0; k < n; ++k)
            coeffs.push_back(f.from_integer(Int(rng() % static_cast<unsigned long long>(p))));
        Polynomial h = Polynomial::from_coeffs(f, std::move(coeffs));
        if (h.is_constant()) continue;
        Polynomial split(f);
        if (p == 2) {
            // trace map h + h^2 + ... + h^(2^(d-1))
            Polynomial tr(f), cur = h % g;
            for (int j = 0; j < d; ++j) {
                tr = (tr + cur) % g;
                cur = cur * cur % g;
            }
            split = poly_gcd(tr, g);
        } else {
            Int e = (boost::multiprecision::pow(Int(p), unsigned(d)) - 1) / 2;
            Polynomial hq = poly_powmod(h, e, g);
            split = poly_gcd(hq - Polynomial::one(f), g);
        }
        if (!split.is_constant() && split.degree() < g.degree()) {
            equal_degree(split, d, rng, out);
            equal_degree(g / split, d, rng, out);
            return;
        }
    }
}

} // namespace

Factorization factor_squarefree(const Polynomial& f) {
    if (f.is_zero()) throw arithmetic_error("factor_squarefree: zero polynomial");
    Factorization fac{f.leading_coeff(), {}};
    squarefree_monic(f.monic(), 1, fac.factors);
    return fac;
}

Factorization factor_irreducible(const Polynomial& f) {
    if (!f.field().is_prime_field())
        throw arithmetic_error("factor_irreducible: prime base fields only");
    Factorization sqf = factor_squarefree(f);
    Factorization out{sqf.unit, {}};
    std::mt19937_64 rng(0x5eed5eedULL);
    for (const auto& [g, m] : sqf.factors) {
        for (const auto& [prod, d] : distinct_degree(g)) {
            std::vector<Polynomial> irr;
            equal_degree(prod, d, rng, irr);
            std::sort(irr.begin(), irr.end());
            for (auto& q : irr) out.factors.push_back({q, m});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const PolyFactor& a, const PolyFactor& b) { return a.factor < b.factor; });
    return out;
}

bool is_irreducible(const Polynomial& f) {
    if (f.is_zero() || f.is_constant()) return false;
    if (f.degree() == 1) return true;
    Factorization fac = factor_irreducible(f);
    return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

} // namespace p1
