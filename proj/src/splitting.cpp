#include "p1/splitting.hpp"

#include <algorithm>
#include <random>

namespace p1 {

const char* to_string(CertificateVerdict v) {
    switch (v) {
        case CertificateVerdict::ok: return "ok";
        case CertificateVerdict::degree_sum_mismatch: return "degree_sum_mismatch";
        case CertificateVerdict::a_not_unimodular: return "a_not_unimodular";
        case CertificateVerdict::b_not_unimodular: return "b_not_unimodular";
        case CertificateVerdict::identity_failed: return "identity_failed";
    }
    return "unknown";
}

namespace {

Germ sum_germs(const std::vector<Germ>& germs, const std::vector<size_t>* subset = nullptr) {
    Germ total = germs.front();
    for (auto& c : total.coords) c = RationalFunction::zero(c.field());
    if (subset) {
        for (size_t i : *subset) total = total + germs[i];
    } else {
        for (const Germ& g : germs) total = total + g;
    }
    return total;
}

Matrix<LaurentPolynomial> diagonal_twists(const Field& f, const std::vector<int>& degrees) {
    int n = static_cast<int>(degrees.size());
    Matrix<LaurentPolynomial> d(f, n, n);
    for (int i = 0; i < n; ++i)
        d(i, i) = LaurentPolynomial::monomial(f.one(), degrees[static_cast<size_t>(i)]);
    return d;
}

bool constant_nonzero_det(const Matrix<Polynomial>& m) {
    RationalFunction det = rf_det(to_rational(m));
    return !det.is_zero() && det.is_polynomial() && det.as_polynomial().is_constant();
}

// B(s) as a Laurent-polynomial matrix in t via s = 1/t
Matrix<LaurentPolynomial> b_in_t(const Matrix<Polynomial>& b) {
    return b.map<LaurentPolynomial>([](const Polynomial& p) {
        return LaurentPolynomial::from_polynomial(p).invert_variable();
    });
}

} // namespace

std::vector<size_t> repair_filter(const VectorBundle& e, const std::vector<Germ>& germs,
                                  const Point& p) {
    if (germs.empty()) throw hypothesis_violated("repair_filter: no germs");
    std::vector<int> orders;
    for (const Germ& g : germs) orders.push_back(order_at(e, g, p));
    int min_order = *std::min_element(orders.begin(), orders.end());
    Germ total = sum_germs(germs);
    if (total.is_zero())
        throw degenerate_sum("repair_filter: total sum is zero");
    if (order_at(e, total, p) <= min_order)
        throw hypothesis_violated("repair_filter: order of the sum does not jump at P");
    std::vector<size_t> j;
    for (size_t i = 0; i < germs.size(); ++i)
        if (orders[i] == min_order) j.push_back(i);
    Germ sub = sum_germs(germs, &j);
    if (sub.is_zero())
        throw degenerate_sum("repair_filter: sub-sum over the argmin set vanishes");
    if (order_at(e, sub, p) <= min_order)
        throw internal_check_failure("repair_filter: sub-sum failed to inherit the order jump");
    return j;
}

namespace {

// Residue-degree-1 point distinct from P and outside supp, preferring
// infinity, then t, t-1, t-2, ...
Point auxiliary_point(const Field& k, const Point& p, const Divisor& supp) {
    std::vector<Point> candidates;
    candidates.push_back(Point::infinity(k));
    auto try_point = [&](const Point& q) -> bool {
        return q != p && supp.multiplicity(q) == 0;
    };
    if (try_point(candidates[0])) return candidates[0];
    Int limit = k.is_prime_field() ? k.modulus() : Int(1000);
    for (Int a = 0; a < limit; ++a) {
        Point q = Point::rational(k.from_integer(a));
        if (try_point(q)) return q;
    }
    throw arithmetic_error("repair_boost: no auxiliary rational point available");
}

} // namespace

RepairOutcome repair_boost(const VectorBundle& e, const std::vector<Germ>& germs,
                           const Point& p) {
    const Field& k = e.field();
    if (p.residue_degree() != 1)
        throw std::invalid_argument(
            "repair_boost: normalization at residue degree > 1 is unsupported");
    if (germs.empty()) throw hypothesis_violated("repair_boost: no germs");
    std::vector<int> orders;
    for (const Germ& g : germs) {
        if (g.is_zero()) throw hypothesis_violated("repair_boost: zero germ");
        orders.push_back(order_at(e, g, p));
    }
    for (int o : orders)
        if (o != orders.front())
            throw hypothesis_violated("repair_boost: unequal orders at P; apply repair_filter first");
    Germ total = sum_germs(germs);
    if (total.is_zero() || order_at(e, total, p) <= orders.front())
        throw hypothesis_violated("repair_boost: order of the sum does not jump at P");

    std::vector<Divisor> divisors;
    std::vector<int> degrees;
    for (const Germ& g : germs) {
        divisors.push_back(germ_divisor(e, g));
        degrees.push_back(divisor_degree(divisors.back()));
    }
    size_t jmin = static_cast<size_t>(
        std::min_element(degrees.begin(), degrees.end()) - degrees.begin());
    const Divisor& dj = divisors[jmin];
    Point q = auxiliary_point(k, p, dj);

    RepairOutcome out{{}, Germ{}, degrees[jmin], 0};
    for (size_t i = 0; i < germs.size(); ++i) {
        // D_i = delta(alpha_j) + (deg alpha_i - deg alpha_j) * Q
        Divisor di = dj + Divisor::at_point(q, degrees[i] - degrees[jmin]);
        RationalFunction fi = function_with_divisor(di - divisors[i], p);
        out.coefficients.push_back(fi);
    }
    Germ boosted = germs[0] * out.coefficients[0];
    for (size_t i = 1; i < germs.size(); ++i) boosted = boosted + germs[i] * out.coefficients[i];
    if (boosted.is_zero())
        throw degenerate_sum("repair_boost: rescaled sum vanishes");
    out.new_germ = boosted;
    out.new_degree = germ_degree(e, boosted);
    if (out.new_degree <= out.old_degree)
        throw internal_check_failure("repair_boost: degree did not increase");
    return out;
}

GreedyBasis greedy_basis(const VectorBundle& e) {
    GreedyBasis basis;
    for (int i = 0; i < e.rank(); ++i) {
        auto [g, d] = max_degree_germ(e, basis.germs);
        Divisor div = germ_divisor(e, g);
        if (divisor_degree(div) != d)
            throw internal_check_failure("greedy_basis: germ degree disagrees with scan degree");
        if (!basis.degrees.empty() && d > basis.degrees.back())
            throw internal_check_failure("greedy_basis: degrees not non-increasing");
        basis.germs.push_back(std::move(g));
        basis.degrees.push_back(d);
        basis.divisors.push_back(std::move(div));
    }
    return basis;
}

bool criterion_check(const VectorBundle& e, const GreedyBasis& basis) {
    int n = e.rank();
    if (static_cast<int>(basis.germs.size()) != n)
        throw std::invalid_argument("criterion_check: basis size mismatch");
    Matrix<RationalFunction> m(e.field(), n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) m(i, j) = basis.germs[static_cast<size_t>(j)].coords[static_cast<size_t>(i)];
    if (rf_det(m).is_zero())
        throw std::invalid_argument("criterion_check: germs are K-linearly dependent");
    int sum = 0;
    for (int d : basis.degrees) sum += d;
    return sum == e.c1();
}

SplittingCertificate certificate_from_basis(const VectorBundle& e, const GreedyBasis& basis) {
    const Field& k = e.field();
    int n = e.rank();
    if (!criterion_check(e, basis))
        throw internal_check_failure(
            "certificate_from_basis: basis fails the splitting criterion (counterexample!)");
    SplittingCertificate cert{basis.degrees, Matrix<Polynomial>(k, n, n),
                              Matrix<Polynomial>(k, n, n)};
    // hand-assembled bases may omit the cached divisors
    bool have_divisors = basis.divisors.size() == basis.germs.size();
    for (int i = 0; i < n; ++i) {
        int d = basis.degrees[static_cast<size_t>(i)];
        // move the divisor of e_i entirely to infinity
        Divisor div = have_divisors ? basis.divisors[static_cast<size_t>(i)]
                                    : germ_divisor(e, basis.germs[static_cast<size_t>(i)]);
        Divisor target = Divisor::at_point(Point::infinity(k), d) - div;
        RationalFunction h = function_with_divisor(target);
        Germ scaled = basis.germs[static_cast<size_t>(i)] * h;
        for (int row = 0; row < n; ++row) {
            const RationalFunction& c = scaled.coords[static_cast<size_t>(row)];
            if (!c.is_polynomial())
                throw internal_check_failure("certificate_from_basis: scaled germ not polynomial");
            cert.a(row, i) = c.as_polynomial();
        }
    }
    if (!constant_nonzero_det(cert.a))
        throw internal_check_failure("certificate_from_basis: A is not unimodular over k[t]");

    // B = T^-1 * A * diag(t^d), rewritten in s
    Matrix<LaurentPolynomial> a_l =
        cert.a.map<LaurentPolynomial>([](const Polynomial& p) {
            return LaurentPolynomial::from_polynomial(p);
        });
    Matrix<LaurentPolynomial> b_t =
        e.inverse_transition() * a_l * diagonal_twists(k, basis.degrees);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const LaurentPolynomial& entry = b_t(i, j);
            if (!entry.is_zero() && entry.hi() > 0)
                throw internal_check_failure("certificate_from_basis: B has a positive power of t");
            auto [poly, lo] = entry.invert_variable().split_monomial();
            cert.b(i, j) = poly.shift(std::max(lo, 0));
        }
    if (verify_certificate(e, cert) != CertificateVerdict::ok)
        throw internal_check_failure("certificate_from_basis: self-verification failed");
    return cert;
}

CertificateVerdict verify_certificate(const VectorBundle& e, const SplittingCertificate& cert) {
    int n = e.rank();
    if (static_cast<int>(cert.degrees.size()) != n || cert.a.rows() != n || cert.a.cols() != n ||
        cert.b.rows() != n || cert.b.cols() != n)
        return CertificateVerdict::identity_failed;
    int sum = 0;
    for (int d : cert.degrees) sum += d;
    if (sum != e.c1()) return CertificateVerdict::degree_sum_mismatch;
    if (!constant_nonzero_det(cert.a)) return CertificateVerdict::a_not_unimodular;
    if (!constant_nonzero_det(cert.b)) return CertificateVerdict::b_not_unimodular;
    // T = A * diag(t^d) * B^-1, checked multiplicatively: T * B(1/t) = A * diag
    Matrix<LaurentPolynomial> a_l =
        cert.a.map<LaurentPolynomial>([](const Polynomial& p) {
            return LaurentPolynomial::from_polynomial(p);
        });
    Matrix<LaurentPolynomial> lhs = e.transition() * b_in_t(cert.b);
    Matrix<LaurentPolynomial> rhs = a_l * diagonal_twists(e.field(), cert.degrees);
    if (lhs != rhs) return CertificateVerdict::identity_failed;
    return CertificateVerdict::ok;
}

SplitResult split(const VectorBundle& e) {
    GreedyBasis basis = greedy_basis(e);
    if (!criterion_check(e, basis))
        throw internal_check_failure("split: greedy basis fails the criterion (counterexample!)");
    SplittingCertificate cert = certificate_from_basis(e, basis);
    std::vector<int> oracle = splitting_type_oracle(e);
    if (oracle != basis.degrees)
        throw internal_check_failure("split: greedy type disagrees with the h^0 oracle");
    return SplitResult{basis.degrees, std::move(cert)};
}

namespace {

FieldElement random_element(std::mt19937_64& rng, const Field& k, bool nonzero) {
    while (true) {
        FieldElement c = k.zero();
        if (k.is_prime_field()) {
            Int r = Int(rng()) % k.modulus();
            c = k.from_integer(r);
        } else {
            c = k.from_integer(Int(static_cast<long>(rng() % 7)) - 3);
        }
        if (!nonzero || !c.is_zero()) return c;
    }
}

// left-multiply m by a random elementary matrix whose off-diagonal entry is
// a polynomial of degree <= 2 in the chart coordinate (exponent sign +1 for
// t, -1 for s)
void apply_random_op(std::mt19937_64& rng, Matrix<LaurentPolynomial>& m, int exp_sign) {
    const Field& k = m.field();
    int n = m.rows();
    if (n == 1 || rng() % 4 == 0) {
        // scale a row by a nonzero constant
        int i = static_cast<int>(rng() % static_cast<unsigned>(n));
        FieldElement c = random_element(rng, k, true);
        for (int j = 0; j < n; ++j) m(i, j) = m(i, j) * c;
        return;
    }
    int i = static_cast<int>(rng() % static_cast<unsigned>(n));
    int j = static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    if (j >= i) ++j;
    LaurentPolynomial q(k);
    for (int deg = 0; deg <= 2; ++deg)
        q = q + LaurentPolynomial::monomial(random_element(rng, k, false), deg * exp_sign);
    // row_i += q * row_j
    for (int col = 0; col < n; ++col) m(i, col) = m(i, col) + q * m(j, col);
}

} // namespace

VectorBundle random_bundle(std::uint64_t seed, const Field& f, const std::vector<int>& degrees,
                           int op_count) {
    std::mt19937_64 rng(seed);
    int n = static_cast<int>(degrees.size());
    Matrix<LaurentPolynomial> u = Matrix<LaurentPolynomial>::identity(f, n);
    Matrix<LaurentPolynomial> w = Matrix<LaurentPolynomial>::identity(f, n);
    for (int i = 0; i < op_count; ++i) {
        apply_random_op(rng, u, +1);
        apply_random_op(rng, w, -1);
    }
    Matrix<LaurentPolynomial> t = u * diagonal_twists(f, degrees) * w;
    return VectorBundle(f, n, t);
}

} // namespace p1
