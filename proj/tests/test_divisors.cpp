#include <doctest.h>

#include "helpers.hpp"

#include "p1/divisor.hpp"

using namespace p1;
using namespace p1::testing;

TEST_CASE("point construction and validation") {
    Field q = Q();
    Point inf = Point::infinity(q);
    CHECK(inf.is_infinity());
    CHECK(inf.residue_degree() == 1);
    CHECK_THROWS_AS(inf.cluster(), arithmetic_error);

    Point p0 = Point::rational(q.from_integer(Int(2)));
    CHECK(!p0.is_infinity());
    CHECK(p0.residue_degree() == 1);
    CHECK(p0.cluster() == poly(q, "t-2"));

    Point c = Point::finite(poly(q, "t^2+1"));
    CHECK(c.residue_degree() == 2);
    CHECK(c != p0);
    CHECK(c == Point::finite(poly(q, "t^2+1")));

    CHECK_THROWS_AS(Point::finite(poly(q, "2*t")), std::invalid_argument);  // not monic
    CHECK_THROWS_AS(Point::finite(poly(q, "t^2")), std::invalid_argument);  // not squarefree
    CHECK_THROWS_AS(Point::finite(poly(q, "3")), std::invalid_argument);    // constant
}

TEST_CASE("valuation examples") {
    Field q = Q();
    CHECK(valuation(rf(q, "t^2/(t+1)"), Point::finite(poly(q, "t"))) == 2);
    CHECK(valuation(rf(q, "(t^2+1)/t"), Point::infinity(q)) == -1);

    Field f2 = F(2);
    CHECK(valuation(rf(f2, "t^2+t+1"), Point::finite(poly(f2, "t^2+t+1"))) == 1);

    CHECK(valuation(rf(q, "(t+1)/t^3"), Point::finite(poly(q, "t"))) == -3);
    CHECK(valuation(rf(q, "5"), Point::infinity(q)) == 0);

    CHECK_THROWS_AS(valuation(RationalFunction::zero(q), Point::infinity(q)), arithmetic_error);
    // t vanishes at one root of t^2-t but not the other
    CHECK_THROWS_AS(valuation(rf(q, "t"), Point::finite(poly(q, "t^2-t"))), non_uniform_cluster);
}

TEST_CASE("principal_divisor examples") {
    Field f5 = F(5);
    Divisor d = principal_divisor(rf(f5, "t^2-1"));
    CHECK(d.multiplicity(Point::finite(poly(f5, "t-1"))) == 1);
    CHECK(d.multiplicity(Point::finite(poly(f5, "t+1"))) == 1);
    CHECK(d.at_infinity() == -2);
    CHECK(divisor_degree(d) == 0);

    Field f2 = F(2);
    Divisor e = principal_divisor(rf(f2, "t^2+t+1"));
    CHECK(e.multiplicity(Point::finite(poly(f2, "t^2+t+1"))) == 1);
    CHECK(e.at_infinity() == -2);
    CHECK(divisor_degree(e) == 0);

    Field q = Q();
    CHECK(principal_divisor(rf(q, "7")).is_zero());
    CHECK_THROWS_AS(principal_divisor(RationalFunction::zero(q)), arithmetic_error);
}

TEST_CASE("divisor_degree examples") {
    Field q = Q();
    Divisor d(q);
    CHECK(divisor_degree(d) == 0);
    d.add(poly(q, "t-1"), 1);
    d.add_infinity(-2);
    CHECK(divisor_degree(d) == -1);

    Field f2 = F(2);
    Divisor e(f2);
    e.add(poly(f2, "t^2+t+1"), 1);  // residue degree 2
    e.add_infinity(-2);
    CHECK(divisor_degree(e) == 0);
}

TEST_CASE("divisor arithmetic and comparison") {
    Field q = Q();
    Divisor a(q);
    a.add(poly(q, "t^2-t"), 1);  // splits as (t):1, (t-1):1 under refinement
    Divisor b(q);
    b.add(poly(q, "t"), 2);

    Divisor sum = a + b;
    CHECK(sum.multiplicity(Point::finite(poly(q, "t"))) == 3);
    CHECK(sum.multiplicity(Point::finite(poly(q, "t-1"))) == 1);
    CHECK(divisor_degree(sum) == 4);

    CHECK((a - a).is_zero());
    CHECK(divisor_degree(a * 3) == 6);

    // pointwise min of (t):1,(t-1):1 and (t):2 is (t):1
    Divisor m = Divisor::pointwise_min(a, b);
    CHECK(a.dominates(m));
    CHECK(b.dominates(m));
    CHECK(m.multiplicity(Point::finite(poly(q, "t"))) == 1);
    CHECK(m.multiplicity(Point::finite(poly(q, "t-1"))) == 0);

    // partial overlap without refinement is rejected
    Divisor c(q);
    c.add(poly(q, "t^2-t"), 1);
    CHECK_THROWS_AS(c.multiplicity(Point::finite(poly(q, "t^2-3*t+2"))), non_uniform_cluster);
}

TEST_CASE("refine examples") {
    Field q = Q();
    Divisor a(q);
    a.add(poly(q, "t^2-t"), 1);
    Divisor b(q);
    b.add(poly(q, "t"), 2);
    auto out = refine({a, b});
    CHECK(out[0].multiplicity(Point::finite(poly(q, "t"))) == 1);
    CHECK(out[0].multiplicity(Point::finite(poly(q, "t-1"))) == 1);
    CHECK(out[1].multiplicity(Point::finite(poly(q, "t"))) == 2);
    CHECK(out[1].multiplicity(Point::finite(poly(q, "t-1"))) == 0);

    // disjoint supports stay as given
    Divisor c(q);
    c.add(poly(q, "t+5"), 4);
    auto out2 = refine({b, c});
    CHECK(out2[0] == b);
    CHECK(out2[1] == c);
    CHECK(out2[1].finite().count(poly(q, "t+5")) == 1);

    Divisor d(q);
    d.add(poly(q, "t^2-3*t+2"), 1);  // (t-1)(t-2)
    Divisor e(q);
    e.add(poly(q, "t-2"), 3);
    auto out3 = refine({d, e});
    CHECK(out3[0].multiplicity(Point::finite(poly(q, "t-1"))) == 1);
    CHECK(out3[0].multiplicity(Point::finite(poly(q, "t-2"))) == 1);
    CHECK(out3[1].multiplicity(Point::finite(poly(q, "t-2"))) == 3);
}

TEST_CASE("function_with_divisor examples") {
    Field q = Q();
    Divisor d(q);
    d.add(poly(q, "t"), 1);
    d.add_infinity(-1);
    CHECK(function_with_divisor(d) == rf(q, "t"));

    Field f5 = F(5);
    Divisor e(f5);
    e.add(poly(f5, "t-1"), 1);
    e.add(poly(f5, "t+1"), -1);
    RationalFunction f = function_with_divisor(e, Point::finite(poly(f5, "t")));
    CHECK(f == rf(f5, "(1-t)/(1+t)"));
    CHECK(f.evaluate(f5.zero()) == f5.one());
    CHECK(principal_divisor(f) == e);

    Divisor bad(q);
    bad.add(poly(q, "t"), 1);
    CHECK_THROWS_AS(function_with_divisor(bad), arithmetic_error);  // degree 1, not principal

    // normalization point must avoid the support
    CHECK_THROWS_AS(function_with_divisor(d, Point::finite(poly(q, "t"))), arithmetic_error);
    // and must have residue degree 1
    Divisor g(f5);
    g.add(poly(f5, "t-1"), 1);
    g.add(poly(f5, "t+1"), -1);
    CHECK_THROWS_AS(function_with_divisor(g, Point::finite(poly(f5, "t^2+2"))), arithmetic_error);
}

TEST_CASE("product formula: principal divisors have degree zero") {
    for (const Field& k : {Q(), F(5)}) {
        std::mt19937_64 rng(21);
        for (int iter = 0; iter < 500; ++iter) {
            RationalFunction f = random_nonzero_rf(rng, k);
            CHECK(divisor_degree(principal_divisor(f)) == 0);
        }
    }
}

TEST_CASE("principal_divisor is additive under multiplication") {
    for (const Field& k : {Q(), F(5)}) {
        std::mt19937_64 rng(22);
        for (int iter = 0; iter < 200; ++iter) {
            RationalFunction f = random_nonzero_rf(rng, k);
            RationalFunction g = random_nonzero_rf(rng, k);
            CHECK(principal_divisor(f * g) == principal_divisor(f) + principal_divisor(g));
        }
    }
}

TEST_CASE("valuation rules: additive on products, ultrametric on sums") {
    for (const Field& k : {Q(), F(5)}) {
        std::mt19937_64 rng(23);
        for (int iter = 0; iter < 200; ++iter) {
            RationalFunction f = random_nonzero_rf(rng, k);
            RationalFunction g = random_nonzero_rf(rng, k);
            Point p = (iter % 3 == 0)
                          ? Point::infinity(k)
                          : Point::rational(k.from_integer(Int(static_cast<long>(iter % 5))));
            CHECK(valuation(f * g, p) == valuation(f, p) + valuation(g, p));
            RationalFunction s = f + g;
            if (!s.is_zero())
                CHECK(valuation(s, p) >= std::min(valuation(f, p), valuation(g, p)));
        }
    }
}

TEST_CASE("function_with_divisor round-trips through principal_divisor") {
    for (const Field& k : {Q(), F(5)}) {
        std::mt19937_64 rng(24);
        for (int iter = 0; iter < 200; ++iter) {
            Divisor d = principal_divisor(random_nonzero_rf(rng, k));
            CHECK(principal_divisor(function_with_divisor(d)) == d);
        }
    }
}

TEST_CASE("refine preserves degree and pointwise values") {
    for (const Field& k : {Q(), F(5)}) {
        std::mt19937_64 rng(25);
        for (int iter = 0; iter < 100; ++iter) {
            std::vector<Divisor> ds;
            for (int i = 0; i < 3; ++i) ds.push_back(principal_divisor(random_nonzero_rf(rng, k)));
            auto out = refine(ds);
            REQUIRE(out.size() == ds.size());
            for (size_t i = 0; i < ds.size(); ++i) {
                CHECK(divisor_degree(out[i]) == divisor_degree(ds[i]));
                CHECK(out[i] == ds[i]);
            }
            // the common basis is pairwise coprime
            for (size_t i = 0; i < out.size(); ++i)
                for (const auto& [ci, mi] : out[i].finite())
                    for (size_t j = i; j < out.size(); ++j)
                        for (const auto& [cj, mj] : out[j].finite())
                            if (ci != cj) CHECK(poly_gcd(ci, cj).degree() == 0);
        }
    }
}
