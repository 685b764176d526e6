#include "p1/sections.hpp"

#include <algorithm>

namespace p1 {

namespace {

struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace

SectionSpace global_sections(const VectorBundle& e, int extra_degree) {
    const Field& k = e.field();
    int n = e.rank();
    const Matrix<LaurentPolynomial>& t = e.transition();
    // any section satisfies w = T^-1 v with v polynomial, so
    // deg_s(w) <= -lo(T^-1)
    int bw = std::max(0, -laurent_span(e.inverse_transition()).first) + extra_degree;
    int lo_t = laurent_span(t).first;
    int ncols = n * (bw + 1); // unknown coefficients c[j][deg]
    int e_lo = lo_t - bw;     // most negative possible exponent of v

    // constraints: coefficient of t^exp in v_i vanishes for exp < 0
    std::vector<std::vector<FieldElement>> rows;
    for (int i = 0; i < n; ++i)
        for (int exp = e_lo; exp < 0; ++exp) {
            std::vector<FieldElement> row(static_cast<size_t>(ncols), k.zero());
            bool nonzero = false;
            for (int j = 0; j < n; ++j)
                for (int deg = 0; deg <= bw; ++deg) {
                    // v_i += T_ij * c[j][deg] * t^(-deg)
                    FieldElement c = t(i, j).coeff(exp + deg);
                    if (!c.is_zero()) {
                        row[static_cast<size_t>(j * (bw + 1) + deg)] = c;
                        nonzero = true;
                    }
                }
            if (nonzero) rows.push_back(std::move(row));
        }

    std::vector<std::vector<FieldElement>> kernel;
    if (rows.empty()) {
        for (int c = 0; c < ncols; ++c) {
            std::vector<FieldElement> v(static_cast<size_t>(ncols), k.zero());
            v[static_cast<size_t>(c)] = k.one();
            kernel.push_back(std::move(v));
        }
    } else {
        Matrix<FieldElement> m(k, static_cast<int>(rows.size()), ncols);
        for (size_t r = 0; r < rows.size(); ++r)
            for (int c = 0; c < ncols; ++c) m(static_cast<int>(r), c) = rows[r][static_cast<size_t>(c)];
        kernel = nullspace(std::move(m));
    }

    SectionSpace space;
    for (const auto& sol : kernel) {
        SectionPair pair;
        std::vector<LaurentPolynomial> w_inv; // w(1/t)
        for (int j = 0; j < n; ++j) {
            std::vector<FieldElement> coeffs;
            for (int deg = 0; deg <= bw; ++deg)
                coeffs.push_back(sol[static_cast<size_t>(j * (bw + 1) + deg)]);
            Polynomial wj = Polynomial::from_coeffs(k, coeffs);
            pair.w.push_back(wj);
            w_inv.push_back(LaurentPolynomial::from_polynomial(wj).invert_variable());
        }
        for (int i = 0; i < n; ++i) {
            LaurentPolynomial vi(k);
            for (int j = 0; j < n; ++j) vi = vi + t(i, j) * w_inv[static_cast<size_t>(j)];
            if (!vi.is_zero() && vi.lo() < 0)
                throw internal_error("global_sections: solver produced non-polynomial v");
            auto [poly, lo] = vi.split_monomial();
            pair.v.push_back(poly.shift(lo));
        }
        space.basis.push_back(std::move(pair));
    }
    return space;
}

int h0(const VectorBundle& e) { return global_sections(e).dimension(); }

Germ section_as_germ(const VectorBundle& e, const SectionPair& s) {
    Germ g;
    for (const auto& vi : s.v) g.coords.push_back(RationalFunction::from_polynomial(vi));
    (void)e;
    return g;
}

std::vector<int> splitting_type_oracle(const VectorBundle& e) {
    int n = e.rank();
    int hi_t = laurent_span(e.transition()).second;
    int hi_tinv = laurent_span(e.inverse_transition()).second;
    int k_lo = -hi_t - 1, k_hi = hi_tinv + 1;
    // h(k) = sum_i max(0, d_i + k + 1); second difference recovers the d_i
    std::vector<int> h;
    for (int k = k_lo - 1; k <= k_hi; ++k) h.push_back(h0(twist(e, k)));
    std::vector<int> type;
    for (int k = k_lo + 1; k <= k_hi; ++k) {
        int dh = h[static_cast<size_t>(k - k_lo + 1)] - h[static_cast<size_t>(k - k_lo)];
        int dh_prev = h[static_cast<size_t>(k - k_lo)] - h[static_cast<size_t>(k - k_lo - 1)];
        int mult = dh - dh_prev;
        if (mult < 0)
            throw internal_error("splitting_type_oracle: non-concave h^0 profile");
        for (int i = 0; i < mult; ++i) type.push_back(-k);
    }
    int last_jump = h.back() - h[h.size() - 2];
    if (last_jump != n)
        throw internal_error("splitting_type_oracle: scan range did not saturate the rank");
    std::sort(type.begin(), type.end(), std::greater<int>());
    int sum = 0;
    for (int d : type) sum += d;
    if (static_cast<int>(type.size()) != n || sum != e.c1())
        throw internal_error("splitting_type_oracle: recovered type inconsistent with c1");
    return type;
}

namespace {

// sigma in K-span(avoid)? Exact rank test over K on [avoid | sigma].
bool in_span(const Field& k, const std::vector<Germ>& avoid, const Germ& sigma) {
    if (avoid.empty()) return sigma.is_zero();
    int n = sigma.rank();
    int r = static_cast<int>(avoid.size());
    Matrix<RationalFunction> m(k, n, r + 1);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < n; ++i) m(i, j) = avoid[static_cast<size_t>(j)].coords[static_cast<size_t>(i)];
    for (int i = 0; i < n; ++i) m(i, r) = sigma.coords[static_cast<size_t>(i)];
    return field_rank(m) == r;
}

} // namespace

std::pair<Germ, int> max_degree_germ(const VectorBundle& e, const std::vector<Germ>& avoid) {
    const Field& k = e.field();
    int n = e.rank();
    if (static_cast<int>(avoid.size()) >= n)
        throw std::invalid_argument("max_degree_germ: avoid set already spans");
    int hi_t = laurent_span(e.transition()).second;
    int hi_tinv = laurent_span(e.inverse_transition()).second;
    // a germ of degree d scales to a section of E(-d); scan top down
    for (int d = hi_t; d >= -hi_tinv; --d) {
        SectionSpace space = global_sections(twist(e, -d));
        for (const auto& s : space.basis) {
            Germ g = section_as_germ(e, s);
            if (g.is_zero()) continue;
            if (!in_span(k, avoid, g)) return {g, d};
        }
    }
    throw internal_error("max_degree_germ: scan exhausted without finding a germ");
}

} // namespace p1
