#ifndef P1_TEST_HELPERS_HPP
#define P1_TEST_HELPERS_HPP

#include "p1/io.hpp"
#include "p1/splitting.hpp"

#include <random>
#include <string>
#include <vector>

namespace p1::testing {

inline Field Q() { return Field::rationals(); }
inline Field F(long p) { return Field::prime(Int(p)); }

inline RationalFunction rf(const Field& f, const std::string& expr) {
    return io::parse_rational_function(expr, f);
}

inline Polynomial poly(const Field& f, const std::string& expr) {
    return rf(f, expr).as_polynomial();
}

inline LaurentPolynomial laurent(const Field& f, const std::string& expr) {
    return rf(f, expr).to_laurent();
}

inline Germ germ(const Field& f, const std::string& expr) { return io::parse_germ(expr, f); }

inline Matrix<LaurentPolynomial> lmatrix(const Field& f,
                                         const std::vector<std::vector<std::string>>& rows) {
    int n = static_cast<int>(rows.size());
    int m = static_cast<int>(rows.front().size());
    Matrix<LaurentPolynomial> t(f, n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            t(i, j) = laurent(f, rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    return t;
}

inline Matrix<RationalFunction> rmatrix(const Field& f,
                                        const std::vector<std::vector<std::string>>& rows) {
    int n = static_cast<int>(rows.size());
    int m = static_cast<int>(rows.front().size());
    Matrix<RationalFunction> t(f, n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            t(i, j) = rf(f, rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    return t;
}

inline VectorBundle bundle(const Field& f, const std::vector<std::vector<std::string>>& rows) {
    return VectorBundle(f, static_cast<int>(rows.size()), lmatrix(f, rows));
}

// deterministic random generators for property tests

inline FieldElement random_elem(std::mt19937_64& rng, const Field& f) {
    if (f.is_prime_field()) return f.from_integer(Int(rng()) % f.modulus());
    long num = static_cast<long>(rng() % 11) - 5;
    long den = static_cast<long>(rng() % 4) + 1;
    return f.from_fraction(Int(num), Int(den));
}

inline FieldElement random_nonzero_elem(std::mt19937_64& rng, const Field& f) {
    while (true) {
        FieldElement c = random_elem(rng, f);
        if (!c.is_zero()) return c;
    }
}

inline Polynomial random_poly(std::mt19937_64& rng, const Field& f, int max_degree) {
    int d = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
    std::vector<FieldElement> coeffs;
    for (int k = 0; k <= d; ++k) coeffs.push_back(random_elem(rng, f));
    return Polynomial::from_coeffs(f, coeffs);
}

inline Polynomial random_nonzero_poly(std::mt19937_64& rng, const Field& f, int max_degree) {
    while (true) {
        Polynomial p = random_poly(rng, f, max_degree);
        if (!p.is_zero()) return p;
    }
}

inline RationalFunction random_rf(std::mt19937_64& rng, const Field& f, int max_degree = 3) {
    return RationalFunction::from_fraction(random_poly(rng, f, max_degree),
                                           random_nonzero_poly(rng, f, max_degree));
}

inline RationalFunction random_nonzero_rf(std::mt19937_64& rng, const Field& f,
                                          int max_degree = 3) {
    while (true) {
        RationalFunction r = random_rf(rng, f, max_degree);
        if (!r.is_zero()) return r;
    }
}

inline LaurentPolynomial random_laurent(std::mt19937_64& rng, const Field& f, int span = 3) {
    LaurentPolynomial l(f);
    int terms = static_cast<int>(rng() % 4);
    for (int i = 0; i < terms; ++i) {
        int e = static_cast<int>(rng() % static_cast<unsigned>(2 * span + 1)) - span;
        l = l + LaurentPolynomial::monomial(random_elem(rng, f), e);
    }
    return l;
}

inline Germ random_nonzero_germ(std::mt19937_64& rng, const Field& f, int rank,
                                int max_degree = 2) {
    while (true) {
        Germ g;
        for (int i = 0; i < rank; ++i) g.coords.push_back(random_rf(rng, f, max_degree));
        if (!g.is_zero()) return g;
    }
}

inline std::vector<int> random_degrees(std::mt19937_64& rng, int rank, int lo, int hi) {
    std::vector<int> d;
    for (int i = 0; i < rank; ++i)
        d.push_back(lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)));
    return d;
}

} // namespace p1::testing

#endif
