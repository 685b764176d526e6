// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. All checks are exact; the only tolerances are wall-clock budgets.

#include "helpers.hpp"

#include "p1/io.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

using namespace p1;
using namespace p1::testing;

namespace {

struct Criterion {
    std::string name;
    double budget_seconds; // 0 = no budget
    std::function<bool(std::string&)> run;
};

bool run_criterion(int index, const Criterion& c) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
        ok = c.run(detail);
    } catch (const std::exception& ex) {
        detail = std::string("exception: ") + ex.what();
        ok = false;
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                         .count();
    if (ok && c.budget_seconds > 0 && elapsed > c.budget_seconds) {
        detail = "exceeded time budget";
        ok = false;
    }
    std::printf("criterion %d [%s]: %s (%.2fs)%s%s\n", index, c.name.c_str(),
                ok ? "PASS" : "FAIL", elapsed, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    return ok;
}

bool check(bool cond, std::string& detail, const std::string& msg) {
    if (!cond && detail.empty()) detail = msg;
    return cond;
}

// ---- criterion bodies -------------------------------------------------

bool line_bundle_sections(std::string& detail) {
    Field q = Q();
    VectorBundle unit = bundle(q, {{"1"}});
    for (int d = 0; d <= 10; ++d)
        if (!check(h0(twist(unit, d)) == d + 1, detail,
                   "h0(O(" + std::to_string(d) + ")) != " + std::to_string(d + 1)))
            return false;
    for (int d = -5; d <= -1; ++d)
        if (!check(h0(twist(unit, d)) == 0, detail,
                   "h0(O(" + std::to_string(d) + ")) != 0"))
            return false;
    return true;
}

bool diagonal_recovery(std::string& detail) {
    Field q = Q();
    std::mt19937_64 rng(71);
    int cases = 0;
    while (cases < 100) {
        int rank = 1 + static_cast<int>(rng() % 4);
        std::vector<int> degrees = random_degrees(rng, rank, -5, 5);
        VectorBundle e = random_bundle(0, q, degrees, 0); // plain diagonal
        std::vector<int> sorted = degrees;
        std::sort(sorted.rbegin(), sorted.rend());
        SplitResult r = split(e);
        if (!check(r.type == sorted, detail, "diagonal type mismatch")) return false;
        if (!check(verify_certificate(e, r.certificate) == CertificateVerdict::ok, detail,
                   "diagonal certificate rejected"))
            return false;
        ++cases;
    }
    return true;
}

bool extension_pair(std::string& detail) {
    for (const Field& k : {Q(), F(5)}) {
        VectorBundle split_ext = bundle(k, {{"1/t", "1"}, {"0", "t"}});
        SplitResult r0 = split(split_ext);
        if (!check(r0.type == std::vector<int>{0, 0}, detail, "extension type != (0,0)"))
            return false;
        if (!check(verify_certificate(split_ext, r0.certificate) == CertificateVerdict::ok,
                   detail, "extension certificate rejected"))
            return false;

        VectorBundle jumped = bundle(k, {{"1/t", "1/t"}, {"0", "t"}});
        SplitResult r1 = split(jumped);
        if (!check(r1.type == std::vector<int>{1, -1}, detail, "jumped type != (1,-1)"))
            return false;
        if (!check(verify_certificate(jumped, r1.certificate) == CertificateVerdict::ok,
                   detail, "jumped certificate rejected"))
            return false;
    }
    return true;
}

bool oracle_triangle(std::string& detail) {
    std::vector<Field> fields = {F(2), F(3), F(5), F(101), Q()};
    std::mt19937_64 rng(72);
    for (int iter = 0; iter < 200; ++iter) {
        const Field& k = fields[static_cast<size_t>(iter) % fields.size()];
        int rank = 1 + static_cast<int>(rng() % 4);
        std::vector<int> degrees = random_degrees(rng, rank, -4, 4);
        int ops = static_cast<int>(rng() % 9);
        VectorBundle e = random_bundle(rng(), k, degrees, ops);

        std::vector<int> truth = degrees;
        std::sort(truth.rbegin(), truth.rend());

        SplitResult r = split(e); // split() cross-checks the oracle internally
        if (!check(r.type == truth, detail,
                   "ground truth mismatch at instance " + std::to_string(iter)))
            return false;
        if (!check(splitting_type_oracle(e) == truth, detail,
                   "oracle mismatch at instance " + std::to_string(iter)))
            return false;
        if (!check(verify_certificate(e, r.certificate) == CertificateVerdict::ok, detail,
                   "certificate rejected at instance " + std::to_string(iter)))
            return false;
    }
    return true;
}

bool divisor_law_suite(std::string& detail) {
    for (const Field& k : {Q(), F(5)}) {
        std::mt19937_64 rng(73);
        // part 1: delta(f*alpha) = delta(f) + delta(alpha), 500 samples
        for (int iter = 0; iter < 500; ++iter) {
            int rank = 1 + static_cast<int>(rng() % 3);
            VectorBundle e = random_bundle(rng(), k, random_degrees(rng, rank, -2, 2), 3);
            Germ a = random_nonzero_germ(rng, k, rank, 1);
            RationalFunction f = random_nonzero_rf(rng, k, 2);
            if (!check(germ_divisor(e, a * f) == principal_divisor(f) + germ_divisor(e, a),
                       detail, "delta(f*alpha) != delta(f) + delta(alpha)"))
                return false;
        }
        // part 2: pointwise delta(sum) >= min, 500 samples
        int done = 0;
        while (done < 500) {
            int rank = 1 + static_cast<int>(rng() % 3);
            VectorBundle e = random_bundle(rng(), k, random_degrees(rng, rank, -2, 2), 3);
            Germ a = random_nonzero_germ(rng, k, rank, 1);
            Germ b = random_nonzero_germ(rng, k, rank, 1);
            Germ s = a + b;
            if (s.is_zero()) continue;
            Divisor lower = Divisor::pointwise_min(germ_divisor(e, a), germ_divisor(e, b));
            if (!check(germ_divisor(e, s).dominates(lower), detail,
                       "delta(sum) fails to dominate the pointwise min"))
                return false;
            ++done;
        }
    }
    return true;
}

bool repair_suite(std::string& detail) {
    for (const Field& k : {Q(), F(5)}) {
        std::mt19937_64 rng(74);
        auto poly_germ = [&](int rank) {
            Germ g;
            for (int i = 0; i < rank; ++i)
                g.coords.push_back(RationalFunction::from_polynomial(random_poly(rng, k, 2)));
            return g;
        };

        // part 1: the argmin sub-sum inherits the order jump
        int filter_done = 0;
        while (filter_done < 100) {
            int rank = 2 + static_cast<int>(rng() % 2);
            VectorBundle e = random_bundle(rng(), k, random_degrees(rng, rank, -1, 1), 3);
            Point p = Point::rational(k.from_integer(Int(static_cast<long>(rng() % 3))));
            RationalFunction jump = RationalFunction::from_polynomial(p.cluster());

            std::vector<Germ> germs = {poly_germ(rank), poly_germ(rank), Germ{}};
            Germ total01 = germs[0] + germs[1];
            if (germs[0].is_zero() || germs[1].is_zero() || total01.is_zero()) continue;
            germs[2] = total01 * (jump * jump - RationalFunction::one(k));
            if (germs[2].is_zero()) continue;

            std::vector<size_t> j;
            try {
                j = repair_filter(e, germs, p);
            } catch (const std::exception&) {
                continue;
            }
            Germ sub;
            sub.coords.assign(static_cast<size_t>(rank), RationalFunction::zero(k));
            int min_order = 0;
            bool first = true;
            for (size_t idx : j) {
                sub = sub + germs[idx];
                int o = order_at(e, germs[idx], p);
                min_order = first ? o : std::min(min_order, o);
                first = false;
            }
            if (sub.is_zero()) continue;
            if (!check(order_at(e, sub, p) > min_order, detail,
                       "argmin sub-sum order did not jump"))
                return false;
            ++filter_done;
        }

        // part 2: repair_boost strictly raises the degree and dominates
        int boost_done = 0;
        while (boost_done < 100) {
            int rank = 2 + static_cast<int>(rng() % 2);
            VectorBundle e = random_bundle(rng(), k, random_degrees(rng, rank, -1, 1), 3);
            Point p = Point::rational(k.from_integer(Int(static_cast<long>(rng() % 3))));
            RationalFunction jump = RationalFunction::from_polynomial(p.cluster());
            RationalFunction jump2 = jump * jump;

            Germ a = poly_germ(rank);
            if (a.is_zero()) continue;
            int ord_a = order_at(e, a, p);
            Germ g = poly_germ(rank);
            Germ b = a * (jump2 - RationalFunction::one(k)) + g * jump2;
            if (b.is_zero()) continue;
            if (order_at(e, b, p) != ord_a) continue;
            Germ s = a + b;
            if (s.is_zero() || order_at(e, s, p) <= ord_a) continue;

            RepairOutcome out;
            try {
                out = repair_boost(e, {a, b}, p);
            } catch (const std::exception&) {
                continue;
            }
            if (!check(out.new_degree > out.old_degree, detail,
                       "repair did not raise the degree"))
                return false;
            int deg_a = germ_degree(e, a);
            int deg_b = germ_degree(e, b);
            const Germ& alpha_j = (deg_a <= deg_b) ? a : b;
            if (!check(germ_divisor(e, out.new_germ).dominates(germ_divisor(e, alpha_j)),
                       detail, "repaired divisor fails to dominate"))
                return false;
            ++boost_done;
        }
    }
    return true;
}

bool structural_invariants(std::string& detail) {
    for (const Field& k : {Q(), F(5)}) {
        std::mt19937_64 rng(75);
        for (int iter = 0; iter < 25; ++iter) {
            int rank = 1 + static_cast<int>(rng() % 3);
            VectorBundle e = random_bundle(rng(), k, random_degrees(rng, rank, -2, 2), 4);
            std::vector<int> base = split(e).type;
            if (!check(std::accumulate(base.begin(), base.end(), 0) == e.c1(), detail,
                       "sum of type != c1"))
                return false;
            int shift = static_cast<int>(rng() % 7) - 3;
            std::vector<int> shifted = split(twist(e, shift)).type;
            if (!check(shifted.size() == base.size(), detail, "rank changed under twist"))
                return false;
            for (size_t i = 0; i < base.size(); ++i)
                if (!check(shifted[i] == base[i] + shift, detail,
                           "twist did not shift the type componentwise"))
                    return false;
        }
    }
    return true;
}

bool tamper_detection(std::string& detail) {
    std::vector<Field> fields = {F(3), F(5), Q()};
    std::mt19937_64 rng(76);
    for (int iter = 0; iter < 30; ++iter) {
        const Field& k = fields[static_cast<size_t>(iter) % fields.size()];
        int rank = 2 + static_cast<int>(rng() % 2);
        VectorBundle e = random_bundle(rng(), k, random_degrees(rng, rank, -2, 2), 4);
        SplittingCertificate good = split(e).certificate;
        if (!check(verify_certificate(e, good) == CertificateVerdict::ok, detail,
                   "honest certificate rejected"))
            return false;

        SplittingCertificate bump = good;
        bump.degrees[static_cast<size_t>(rng()) % bump.degrees.size()] += 1;
        if (!check(verify_certificate(e, bump) == CertificateVerdict::degree_sum_mismatch,
                   detail, "degree bump not flagged as degree_sum_mismatch"))
            return false;

        SplittingCertificate bad_a = good;
        Polynomial tpoly = Polynomial::from_coeffs(k, {k.zero(), k.one()});
        int col = static_cast<int>(rng() % static_cast<unsigned>(rank));
        for (int i = 0; i < rank; ++i) bad_a.a(i, col) = bad_a.a(i, col) * tpoly;
        if (!check(verify_certificate(e, bad_a) == CertificateVerdict::a_not_unimodular,
                   detail, "A tamper not flagged as a_not_unimodular"))
            return false;

        SplittingCertificate bad_b = good;
        int col2 = static_cast<int>(rng() % static_cast<unsigned>(rank));
        for (int i = 0; i < rank; ++i) bad_b.b(i, col2) = bad_b.b(i, col2) * tpoly;
        if (!check(verify_certificate(e, bad_b) == CertificateVerdict::b_not_unimodular,
                   detail, "B tamper not flagged as b_not_unimodular"))
            return false;
    }
    return true;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"line bundle section counts", 1.0, line_bundle_sections},
        {"diagonal recovery", 5.0, diagonal_recovery},
        {"extension pair", 1.0, extension_pair},
        {"oracle triangle", 120.0, oracle_triangle},
        {"order-of-germ scaling and sum laws", 30.0, divisor_law_suite},
        {"repair operations", 30.0, repair_suite},
        {"structural invariants", 0.0, structural_invariants},
        {"certificate tamper detection", 0.0, tamper_detection},
    };
    bool all_ok = true;
    for (size_t i = 0; i < criteria.size(); ++i)
        if (!run_criterion(static_cast<int>(i) + 1, criteria[i])) all_ok = false;
    return all_ok ? 0 : 1;
}
