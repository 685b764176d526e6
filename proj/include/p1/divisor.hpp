#ifndef P1_DIVISOR_HPP
#define P1_DIVISOR_HPP

#include "p1/rational_function.hpp"

#include <map>
#include <optional>
#include <vector>

namespace p1 {

struct non_uniform_cluster : arithmetic_error {
    using arithmetic_error::arithmetic_error;
};

// Closed point of P^1: infinity, or a cluster of conjugate finite points
// given by a monic squarefree polynomial in t.
class Point {
public:
    static Point infinity(const Field& f);
    static Point finite(const Polynomial& cluster);
    // the point t = a
    static Point rational(const FieldElement& a);

    const Field& field() const { return field_; }
    bool is_infinity() const { return !cluster_.has_value(); }
    const Polynomial& cluster() const;
    int residue_degree() const { return is_infinity() ? 1 : cluster_->degree(); }

    bool operator==(const Point& o) const;
    bool operator!=(const Point& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    explicit Point(const Field& f) : field_(f) {}
    Field field_;
    std::optional<Polynomial> cluster_;
};

// Finite-support integer divisor on P^1. Finite support is a set of
// pairwise-coprime clusters; degree weights each cluster by its residue
// degree. Pointwise comparisons of two divisors are only meaningful after
// they are refined to a common coprime basis.
class Divisor {
public:
    explicit Divisor(const Field& f) : field_(f), at_infinity_(0) {}

    static Divisor at_point(const Point& p, int mult);

    const Field& field() const { return field_; }
    const std::map<Polynomial, int>& finite() const { return finite_; }
    int at_infinity() const { return at_infinity_; }

    // Multiplicity at an exact cluster polynomial (0 if absent). The query
    // cluster must be one of the stored clusters or coprime to all of them;
    // a partial overlap means the divisor was not refined against the query.
    int multiplicity(const Point& p) const;

    void add(const Polynomial& cluster, int mult); // merges, validates coprimality lazily
    void add_infinity(int mult) { at_infinity_ += mult; }

    int degree() const;
    bool is_zero() const { return finite_.empty() && at_infinity_ == 0; }

    Divisor operator+(const Divisor& o) const;
    Divisor operator-(const Divisor& o) const;
    Divisor operator-() const;
    Divisor operator*(int n) const;

    bool operator==(const Divisor& o) const; // compares after refining both

    // true iff this >= o at every point (after refining both)
    bool dominates(const Divisor& o) const;
    // pointwise minimum (after refining)
    static Divisor pointwise_min(const Divisor& a, const Divisor& b);

    std::vector<Point> support() const; // finite clusters plus infinity if present

    std::string to_string() const;

private:
    Field field_;
    std::map<Polynomial, int> finite_;
    int at_infinity_;
};

// Rewrite the given divisors over one common pairwise-coprime cluster basis.
std::vector<Divisor> refine(const std::vector<Divisor>& divisors);

// Order of vanishing of f at P. For a finite cluster c the valuation must be
// uniform across the irreducible factors of c (guaranteed when c comes from
// a refined basis); otherwise non_uniform_cluster is thrown.
int valuation(const RationalFunction& f, const Point& p);

Divisor principal_divisor(const RationalFunction& f);

int divisor_degree(const Divisor& d);

// Build f with principal_divisor(f) = d (requires degree 0). With
// normalize_at = P (residue degree 1, not in supp d), also f(P) = 1.
RationalFunction function_with_divisor(const Divisor& d,
                                       const std::optional<Point>& normalize_at = std::nullopt);

} // namespace p1

#endif
