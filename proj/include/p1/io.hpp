#ifndef P1_IO_HPP
#define P1_IO_HPP

#include "p1/splitting.hpp"

#include <json.hpp>

#include <string>

namespace p1::io {

using json = nlohmann::ordered_json;

struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

json field_to_json(const Field& f);
Field field_from_json(const json& j);

// Bundle document:
// {"field": {...}, "rank": n, "transition": [[entry, ...], ...]}
// where an entry is a list of [exponent, "coeff"] pairs.
json bundle_to_json(const VectorBundle& e);
VectorBundle bundle_from_json(const json& j);
VectorBundle parse_bundle(const std::string& text);
std::string serialize_bundle(const VectorBundle& e);

// Canonical dense coefficient string, constant term first: "c0,c1,...,cd".
std::string dense_coeff_string(const Polynomial& p);

// [{"cluster": "...", "mult": n}, ..., {"infinity": n}] with clusters
// sorted by degree, then coefficientwise from the constant term up.
json divisor_to_json(const Divisor& d);

json certificate_to_json(const SplittingCertificate& cert, const Field& f);
SplittingCertificate certificate_from_json(const Field& f, const json& j);

// Integer-coefficient polynomial expressions in t with + - * ^ ( ) and at
// most one top-level / separating numerator and denominator.
RationalFunction parse_rational_function(const std::string& text, const Field& f);

// Semicolon-separated coordinate list.
Germ parse_germ(const std::string& text, const Field& f);

} // namespace p1::io

#endif
