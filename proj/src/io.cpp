#include "p1/io.hpp"

#include <algorithm>
#include <cctype>

namespace p1::io {

namespace {

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    size_t start = s[0] == '-' ? 1 : 0;
    if (start == s.size()) return false;
    for (size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

FieldElement parse_coeff(const Field& f, const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_literal(s)) throw parse_error("malformed coefficient: '" + s + "'");
        return f.from_integer(Int(s));
    }
    if (f.is_prime_field())
        throw parse_error("fractional coefficient over a prime field: '" + s + "'");
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-')
        throw parse_error("malformed rational coefficient: '" + s + "'");
    Int d(den);
    if (d == 0) throw parse_error("zero denominator in coefficient: '" + s + "'");
    return f.from_fraction(Int(num), d);
}

LaurentPolynomial entry_from_json(const Field& f, const json& j, const std::string& where) {
    if (!j.is_array()) throw parse_error(where + ": entry must be a list of [exp, coeff] pairs");
    LaurentPolynomial l(f);
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() ||
            !term[1].is_string())
            throw parse_error(where + ": term must be [exponent, \"coeff\"]");
        int exp = term[0].get<int>();
        l = l + LaurentPolynomial::monomial(parse_coeff(f, term[1].get<std::string>()), exp);
    }
    return l;
}

json entry_to_json(const LaurentPolynomial& l) {
    json out = json::array();
    for (const auto& [e, c] : l.terms()) out.push_back(json::array({e, c.to_string()}));
    return out;
}

json poly_entry_to_json(const Polynomial& p) {
    return entry_to_json(LaurentPolynomial::from_polynomial(p));
}

Polynomial poly_entry_from_json(const Field& f, const json& j, const std::string& where) {
    LaurentPolynomial l = entry_from_json(f, j, where);
    if (l.is_zero()) return Polynomial::zero(f);
    if (l.lo() < 0) throw parse_error(where + ": negative exponent in polynomial entry");
    auto [poly, lo] = l.split_monomial();
    return poly.shift(lo);
}

} // namespace

json field_to_json(const Field& f) {
    if (f.is_prime_field())
        return json{{"kind", "prime"}, {"p", f.modulus().convert_to<long long>()}};
    return json{{"kind", "rational"}};
}

Field field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw parse_error("field: expected {\"kind\": ...}");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "rational") return Field::rationals();
    if (kind == "prime") {
        if (!j.contains("p") || !j["p"].is_number_integer())
            throw parse_error("field: prime field needs an integer \"p\"");
        long long p = j["p"].get<long long>();
        try {
            return Field::prime(Int(p));
        } catch (const std::invalid_argument& ex) {
            throw parse_error(std::string("field: ") + ex.what());
        }
    }
    throw parse_error("field: unknown kind '" + kind + "'");
}

json bundle_to_json(const VectorBundle& e) {
    json t = json::array();
    for (int i = 0; i < e.rank(); ++i) {
        json row = json::array();
        for (int j = 0; j < e.rank(); ++j) row.push_back(entry_to_json(e.transition()(i, j)));
        t.push_back(std::move(row));
    }
    return json{{"field", field_to_json(e.field())}, {"rank", e.rank()}, {"transition", t}};
}

VectorBundle bundle_from_json(const json& j) {
    if (!j.is_object()) throw parse_error("bundle: expected a JSON object");
    if (!j.contains("field")) throw parse_error("bundle: missing \"field\"");
    Field f = field_from_json(j["field"]);
    if (!j.contains("rank") || !j["rank"].is_number_integer())
        throw parse_error("bundle: missing integer \"rank\"");
    int rank = j["rank"].get<int>();
    if (rank <= 0) throw parse_error("bundle: rank must be positive");
    if (!j.contains("transition") || !j["transition"].is_array() ||
        static_cast<int>(j["transition"].size()) != rank)
        throw parse_error("bundle: \"transition\" must be a rank x rank matrix");
    Matrix<LaurentPolynomial> t(f, rank, rank);
    for (int i = 0; i < rank; ++i) {
        const json& row = j["transition"][static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != rank)
            throw parse_error("bundle: transition row " + std::to_string(i) +
                              " has wrong length");
        for (int c = 0; c < rank; ++c)
            t(i, c) = entry_from_json(f, row[static_cast<size_t>(c)],
                                      "transition[" + std::to_string(i) + "][" +
                                          std::to_string(c) + "]");
    }
    return VectorBundle(f, rank, t);
}

VectorBundle parse_bundle(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& ex) {
        throw parse_error(std::string("bundle: ") + ex.what());
    }
    return bundle_from_json(j);
}

std::string serialize_bundle(const VectorBundle& e) { return bundle_to_json(e).dump(); }

std::string dense_coeff_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= p.degree(); ++k) {
        if (k) out += ",";
        out += p.coeff(k).to_string();
    }
    return out;
}

json divisor_to_json(const Divisor& d) {
    std::vector<std::pair<Polynomial, int>> clusters(d.finite().begin(), d.finite().end());
    std::sort(clusters.begin(), clusters.end(),
              [](const auto& a, const auto& b) {
                  if (a.first.degree() != b.first.degree())
                      return a.first.degree() < b.first.degree();
                  for (int k = 0; k <= a.first.degree(); ++k) {
                      int c = FieldElement::compare(a.first.coeff(k), b.first.coeff(k));
                      if (c != 0) return c < 0;
                  }
                  return false;
              });
    json out = json::array();
    for (const auto& [c, m] : clusters)
        out.push_back(json{{"cluster", dense_coeff_string(c)}, {"mult", m}});
    out.push_back(json{{"infinity", d.at_infinity()}});
    return out;
}

json certificate_to_json(const SplittingCertificate& cert, const Field&) {
    auto matrix_json = [](const Matrix<Polynomial>& m, const std::string& var) {
        json entries = json::array();
        for (int i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (int j = 0; j < m.cols(); ++j) row.push_back(poly_entry_to_json(m(i, j)));
            entries.push_back(std::move(row));
        }
        return json{{"variable", var}, {"entries", entries}};
    };
    return json{{"degrees", cert.degrees},
                {"A", matrix_json(cert.a, "t")},
                {"B", matrix_json(cert.b, "s")}};
}

SplittingCertificate certificate_from_json(const Field& f, const json& j) {
    if (!j.is_object() || !j.contains("degrees") || !j.contains("A") || !j.contains("B"))
        throw parse_error("certificate: expected {degrees, A, B}");
    std::vector<int> degrees = j["degrees"].get<std::vector<int>>();
    int n = static_cast<int>(degrees.size());
    if (n == 0) throw parse_error("certificate: empty degree vector");
    auto matrix_from = [&](const json& mj, const std::string& name) {
        if (!mj.is_object() || !mj.contains("entries") || !mj["entries"].is_array() ||
            static_cast<int>(mj["entries"].size()) != n)
            throw parse_error("certificate: matrix " + name + " malformed");
        Matrix<Polynomial> m(f, n, n);
        for (int i = 0; i < n; ++i) {
            const json& row = mj["entries"][static_cast<size_t>(i)];
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw parse_error("certificate: matrix " + name + " row " + std::to_string(i) +
                                  " has wrong length");
            for (int c = 0; c < n; ++c)
                m(i, c) = poly_entry_from_json(f, row[static_cast<size_t>(c)],
                                               name + "[" + std::to_string(i) + "][" +
                                                   std::to_string(c) + "]");
        }
        return m;
    };
    return SplittingCertificate{degrees, matrix_from(j["A"], "A"), matrix_from(j["B"], "B")};
}

namespace {

// Recursive-descent parser for integer-coefficient polynomial expressions.
class PolyParser {
public:
    PolyParser(const std::string& text, const Field& f) : text_(text), field_(f) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error("expression at position " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial p = eat('-') ? -term() : term();
        while (true) {
            if (eat('+'))
                p = p + term();
            else if (eat('-'))
                p = p - term();
            else
                return p;
        }
    }

    Polynomial term() {
        Polynomial p = power();
        while (true) {
            skip_ws();
            if (eat('*'))
                p = p * power();
            else if (pos_ < text_.size() && (text_[pos_] == 't' || text_[pos_] == '(' ||
                                             std::isdigit(static_cast<unsigned char>(text_[pos_]))))
                p = p * power(); // juxtaposition, e.g. 2t or 3(t+1)
            else
                return p;
        }
    }

    Polynomial power() {
        Polynomial p = primary();
        if (eat('^')) {
            int e = integer_exponent();
            Polynomial r = Polynomial::one(field_);
            for (int i = 0; i < e; ++i) r = r * p;
            return r;
        }
        return p;
    }

    Polynomial primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == 't') {
            ++pos_;
            return Polynomial::variable(field_);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return Polynomial::constant(field_.from_integer(Int(text_.substr(start, pos_ - start))));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    int integer_exponent() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected exponent");
        return std::stoi(text_.substr(start, pos_ - start));
    }

    const std::string& text_;
    const Field& field_;
    size_t pos_ = 0;
};

} // namespace

RationalFunction parse_rational_function(const std::string& text, const Field& f) {
    // split at the single top-level '/'
    int depth = 0;
    size_t slash = std::string::npos;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        if (text[i] == '/' && depth == 0) {
            if (slash != std::string::npos)
                throw parse_error("expression: more than one top-level '/'");
            slash = i;
        }
    }
    if (slash == std::string::npos)
        return RationalFunction::from_polynomial(PolyParser(text, f).parse());
    Polynomial num = PolyParser(text.substr(0, slash), f).parse();
    Polynomial den = PolyParser(text.substr(slash + 1), f).parse();
    if (den.is_zero()) throw parse_error("expression: zero denominator");
    return RationalFunction::from_fraction(num, den);
}

Germ parse_germ(const std::string& text, const Field& f) {
    Germ g;
    size_t start = 0;
    while (true) {
        size_t sep = text.find(';', start);
        std::string part =
            sep == std::string::npos ? text.substr(start) : text.substr(start, sep - start);
        g.coords.push_back(parse_rational_function(part, f));
        if (sep == std::string::npos) break;
        start = sep + 1;
    }
    return g;
}

} // namespace p1::io
