#ifndef P1_SECTIONS_HPP
#define P1_SECTIONS_HPP

#include "p1/bundle.hpp"

namespace p1 {

// A global section as a pair of chart representatives: v(t) = T(t) * w(1/t).
struct SectionPair {
    std::vector<Polynomial> v; // chart-0, polynomial in t
    std::vector<Polynomial> w; // chart-infinity, polynomial in s
};

struct SectionSpace {
    std::vector<SectionPair> basis;
    int dimension() const { return static_cast<int>(basis.size()); }
};

// Exact basis of H^0(E): unknown coefficients of w up to the derived degree
// bound, constrained by v = T * w(1/t) having no negative powers of t.
// extra_degree widens the bound (completeness self-check in tests).
SectionSpace global_sections(const VectorBundle& e, int extra_degree = 0);

int h0(const VectorBundle& e);

// Splitting type from the h^0 dimension scan of the twists of E,
// independent of the greedy algorithm. Non-increasing.
std::vector<int> splitting_type_oracle(const VectorBundle& e);

// Germ of E of maximal degree among germs outside the K-span of avoid,
// with its degree.
std::pair<Germ, int> max_degree_germ(const VectorBundle& e, const std::vector<Germ>& avoid);

Germ section_as_germ(const VectorBundle& e, const SectionPair& s);

} // namespace p1

#endif
