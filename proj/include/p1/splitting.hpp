#ifndef P1_SPLITTING_HPP
#define P1_SPLITTING_HPP

#include "p1/sections.hpp"

#include <cstdint>

namespace p1 {

struct internal_check_failure : std::logic_error {
    using std::logic_error::logic_error;
};

struct GreedyBasis {
    std::vector<Germ> germs;
    std::vector<int> degrees;     // non-increasing
    std::vector<Divisor> divisors;
};

// T = A * diag(t^d_i) * B(s)^-1 with A unimodular over k[t] and B
// unimodular over k[s]: the explicit Birkhoff-factorization witness.
struct SplittingCertificate {
    std::vector<int> degrees; // non-increasing
    Matrix<Polynomial> a;     // in t
    Matrix<Polynomial> b;     // in s
};

enum class CertificateVerdict {
    ok,
    degree_sum_mismatch,
    a_not_unimodular,
    b_not_unimodular,
    identity_failed,
};

const char* to_string(CertificateVerdict v);

struct RepairOutcome {
    std::vector<RationalFunction> coefficients;
    Germ new_germ;
    int old_degree;
    int new_degree;
};

// The sub-sum over the argmin set of orders at P is degenerate (zero); the
// order jump conclusion has no value to report.
struct degenerate_sum : arithmetic_error {
    using arithmetic_error::arithmetic_error;
};

struct hypothesis_violated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Argmin set J of order_at(germ_i, P); requires the order of the total sum
// to jump above the minimum, and asserts the sub-sum over J inherits the
// jump. Throws degenerate_sum when the J-sum vanishes.
std::vector<size_t> repair_filter(const VectorBundle& e, const std::vector<Germ>& germs,
                                  const Point& p);

// Given germs of equal order at a residue-degree-1 point P whose sum jumps,
// rescales them by functions f_i with f_i(P) = 1 so the rescaled sum has
// degree strictly above the smallest input degree.
RepairOutcome repair_boost(const VectorBundle& e, const std::vector<Germ>& germs,
                           const Point& p);

GreedyBasis greedy_basis(const VectorBundle& e);

// Whether the basis realizes a direct-sum decomposition; decided by the
// finite wedge-degree test sum_i deg(e_i) = c1.
bool criterion_check(const VectorBundle& e, const GreedyBasis& basis);

SplittingCertificate certificate_from_basis(const VectorBundle& e, const GreedyBasis& basis);

CertificateVerdict verify_certificate(const VectorBundle& e, const SplittingCertificate& cert);

struct SplitResult {
    std::vector<int> type;
    SplittingCertificate certificate;
};

// End-to-end: greedy basis, criterion, certificate; always cross-checked
// against the independent h^0-scan oracle.
SplitResult split(const VectorBundle& e);

// Ground-truth generator: U * diag(t^d) * W with U random unimodular over
// k[t] and W random unimodular over k[s]; splitting type is the sorted
// degree vector by construction.
VectorBundle random_bundle(std::uint64_t seed, const Field& f, const std::vector<int>& degrees,
                           int op_count);

} // namespace p1

#endif
