#include "p1/divisor.hpp"

#include <algorithm>

namespace p1 {

Point Point::infinity(const Field& f) { return Point(f); }

Point Point::finite(const Polynomial& cluster) {
    if (cluster.is_zero() || cluster.is_constant())
        throw std::invalid_argument("Point::finite: cluster must have degree >= 1");
    if (!cluster.is_monic())
        throw std::invalid_argument("Point::finite: cluster must be monic");
    Polynomial d = cluster.derivative();
    if (d.is_zero() || !poly_gcd(cluster, d).is_one())
        throw std::invalid_argument("Point::finite: cluster must be squarefree");
    Point p(cluster.field());
    p.cluster_ = cluster;
    return p;
}

Point Point::rational(const FieldElement& a) {
    return finite(Polynomial::variable(a.field()) - Polynomial::constant(a));
}

const Polynomial& Point::cluster() const {
    if (is_infinity()) throw arithmetic_error("Point::cluster: point at infinity");
    return *cluster_;
}

bool Point::operator==(const Point& o) const {
    if (field_ != o.field_) return false;
    if (is_infinity() != o.is_infinity()) return false;
    return is_infinity() || *cluster_ == *o.cluster_;
}

std::string Point::to_string() const {
    return is_infinity() ? "inf" : "(" + cluster_->to_string() + ")";
}

namespace {

// Inserts a monic squarefree g into a pairwise-coprime basis, splitting
// existing elements as needed.
void basis_insert(Polynomial g, std::vector<Polynomial>& basis) {
    if (g.is_zero() || g.is_constant()) return;
    for (size_t i = 0; i < basis.size(); ++i) {
        Polynomial h = poly_gcd(g, basis[i]);
        if (h.is_constant()) continue;
        if (h != basis[i]) {
            Polynomial rest = (basis[i] / h).monic();
            basis[i] = h;
            basis.push_back(rest);
        }
        g = (g / h).monic();
        if (g.is_constant()) return;
    }
    basis.push_back(g.monic());
}

std::map<Polynomial, int> express_in_basis(const std::map<Polynomial, int>& finite,
                                           const std::vector<Polynomial>& basis) {
    std::map<Polynomial, int> out;
    for (const auto& [c, m] : finite)
        for (const Polynomial& b : basis)
            if (b.divides(c)) out[b] += m;
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

} // namespace

Divisor Divisor::at_point(const Point& p, int mult) {
    Divisor d(p.field());
    if (mult != 0) {
        if (p.is_infinity())
            d.at_infinity_ = mult;
        else
            d.finite_.emplace(p.cluster(), mult);
    }
    return d;
}

int Divisor::multiplicity(const Point& p) const {
    if (p.is_infinity()) return at_infinity_;
    const Polynomial& c = p.cluster();
    for (const auto& [b, m] : finite_) {
        Polynomial g = poly_gcd(b, c);
        if (g.is_constant()) continue;
        if (g == c) return m; // c inside the cluster b: value is uniform on b
        throw non_uniform_cluster("Divisor::multiplicity: query cluster overlaps support; refine first");
    }
    return 0;
}

void Divisor::add(const Polynomial& cluster, int mult) {
    if (mult == 0) return;
    std::vector<Polynomial> basis;
    for (const auto& [c, m] : finite_) basis_insert(c, basis);
    basis_insert(cluster.monic(), basis);
    std::map<Polynomial, int> raw;
    for (const auto& [c, m] : finite_) raw[c] += m;
    raw[cluster.monic()] += mult;
    finite_ = express_in_basis(raw, basis);
}

int Divisor::degree() const { return divisor_degree(*this); }

Divisor Divisor::operator+(const Divisor& o) const {
    require_same_field(field_, o.field_, "Divisor::operator+");
    std::vector<Polynomial> basis;
    for (const auto& [c, m] : finite_) basis_insert(c, basis);
    for (const auto& [c, m] : o.finite_) basis_insert(c, basis);
    Divisor r(field_);
    std::map<Polynomial, int> a = express_in_basis(finite_, basis);
    std::map<Polynomial, int> b = express_in_basis(o.finite_, basis);
    for (const auto& [c, m] : a) r.finite_[c] += m;
    for (const auto& [c, m] : b) r.finite_[c] += m;
    for (auto it = r.finite_.begin(); it != r.finite_.end();)
        it = it->second == 0 ? r.finite_.erase(it) : std::next(it);
    r.at_infinity_ = at_infinity_ + o.at_infinity_;
    return r;
}

Divisor Divisor::operator-() const {
    Divisor r(field_);
    for (const auto& [c, m] : finite_) r.finite_.emplace(c, -m);
    r.at_infinity_ = -at_infinity_;
    return r;
}

Divisor Divisor::operator-(const Divisor& o) const { return *this + (-o); }

Divisor Divisor::operator*(int n) const {
    Divisor r(field_);
    if (n != 0) {
        for (const auto& [c, m] : finite_) r.finite_.emplace(c, m * n);
        r.at_infinity_ = at_infinity_ * n;
    }
    return r;
}

bool Divisor::operator==(const Divisor& o) const {
    if (field_ != o.field_ || at_infinity_ != o.at_infinity_) return false;
    auto refined = refine({*this, o});
    return refined[0].finite_ == refined[1].finite_;
}

bool Divisor::dominates(const Divisor& o) const {
    require_same_field(field_, o.field_, "Divisor::dominates");
    if (at_infinity_ < o.at_infinity_) return false;
    auto refined = refine({*this, o});
    const auto& a = refined[0].finite_;
    const auto& b = refined[1].finite_;
    for (const auto& [c, m] : a) {
        auto it = b.find(c);
        int mb = it == b.end() ? 0 : it->second;
        if (m < mb) return false;
    }
    for (const auto& [c, m] : b)
        if (a.find(c) == a.end() && 0 < m) return false;
    return true;
}

Divisor Divisor::pointwise_min(const Divisor& a, const Divisor& b) {
    require_same_field(a.field_, b.field_, "Divisor::pointwise_min");
    auto refined = refine({a, b});
    Divisor r(a.field_);
    const auto& fa = refined[0].finite_;
    const auto& fb = refined[1].finite_;
    for (const auto& [c, m] : fa) {
        auto it = fb.find(c);
        int mb = it == fb.end() ? 0 : it->second;
        int mn = std::min(m, mb);
        if (mn != 0) r.finite_.emplace(c, mn);
    }
    for (const auto& [c, m] : fb)
        if (fa.find(c) == fa.end() && m < 0) r.finite_.emplace(c, m);
    r.at_infinity_ = std::min(a.at_infinity_, b.at_infinity_);
    return r;
}

std::vector<Point> Divisor::support() const {
    std::vector<Point> pts;
    for (const auto& [c, m] : finite_) pts.push_back(Point::finite(c));
    if (at_infinity_ != 0) pts.push_back(Point::infinity(field_));
    return pts;
}

std::string Divisor::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [c, m] : finite_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")^" + std::to_string(m);
    }
    if (at_infinity_ != 0) {
        if (!out.empty()) out += " + ";
        out += "inf^" + std::to_string(at_infinity_);
    }
    return out;
}

std::vector<Divisor> refine(const std::vector<Divisor>& divisors) {
    if (divisors.empty()) return {};
    std::vector<Polynomial> basis;
    for (const Divisor& d : divisors)
        for (const auto& [c, m] : d.finite()) basis_insert(c, basis);
    std::vector<Divisor> out;
    for (const Divisor& d : divisors) {
        Divisor r(d.field());
        for (const auto& [c, m] : express_in_basis(d.finite(), basis)) r.add(c, m);
        r.add_infinity(d.at_infinity());
        out.push_back(std::move(r));
    }
    return out;
}

namespace {

// Multiplicity of the cluster c in the nonzero polynomial f. Second member
// is false when the valuation is not uniform across the factors of c.
std::pair<int, bool> cluster_multiplicity(Polynomial f, const Polynomial& c) {
    int k = 0;
    while (true) {
        auto [q, r] = f.divmod(c);
        if (!r.is_zero()) break;
        f = q;
        ++k;
    }
    return {k, poly_gcd(f, c).is_constant()};
}

} // namespace

int valuation(const RationalFunction& f, const Point& p) {
    if (f.is_zero()) throw arithmetic_error("valuation of zero");
    if (p.is_infinity()) return f.valuation_at_infinity();
    require_same_field(f.field(), p.field(), "valuation");
    auto [kn, un] = cluster_multiplicity(f.num(), p.cluster());
    auto [kd, ud] = cluster_multiplicity(f.den(), p.cluster());
    if (!un || !ud)
        throw non_uniform_cluster("valuation: cluster is not uniform for this function; refine first");
    return kn - kd;
}

Divisor principal_divisor(const RationalFunction& f) {
    if (f.is_zero()) throw arithmetic_error("principal_divisor of zero");
    Divisor d(f.field());
    for (const auto& [g, m] : factor_squarefree(f.num()).factors) d.add(g, m);
    for (const auto& [g, m] : factor_squarefree(f.den()).factors) d.add(g, -m);
    d.add_infinity(f.valuation_at_infinity());
    return d;
}

int divisor_degree(const Divisor& d) {
    int deg = d.at_infinity();
    for (const auto& [c, m] : d.finite()) deg += m * c.degree();
    return deg;
}

RationalFunction function_with_divisor(const Divisor& d,
                                       const std::optional<Point>& normalize_at) {
    if (divisor_degree(d) != 0)
        throw arithmetic_error("function_with_divisor: divisor has nonzero degree (not principal)");
    const Field& k = d.field();
    Polynomial num = Polynomial::one(k), den = Polynomial::one(k);
    for (const auto& [c, m] : d.finite()) {
        for (int i = 0; i < std::abs(m); ++i)
            (m > 0 ? num : den) = (m > 0 ? num : den) * c;
    }
    RationalFunction f = RationalFunction::from_fraction(num, den);
    if (normalize_at) {
        const Point& p = *normalize_at;
        if (p.residue_degree() != 1)
            throw arithmetic_error(
                "function_with_divisor: normalization at residue degree > 1 is unsupported");
        if (d.multiplicity(p) != 0)
            throw arithmetic_error("function_with_divisor: normalization point lies in the support");
        FieldElement value = k.zero();
        if (p.is_infinity()) {
            // mult 0 at infinity means deg num = deg den
            value = f.num().leading_coeff() / f.den().leading_coeff();
        } else {
            FieldElement root = -p.cluster().coeff(0); // cluster is monic linear t - a
            value = f.evaluate(root);
        }
        f = f * RationalFunction::constant(value.inverse());
    }
    return f;
}

} // namespace p1
