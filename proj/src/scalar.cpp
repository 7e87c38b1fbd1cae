#include "topoface/scalar.hpp"

#include "topoface/errors.hpp"

#include <cctype>

namespace topoface {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && s[0] == '-') i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

} // namespace

Scalar parse_scalar(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num, true)) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    if (slash == std::string_view::npos) {
        return Scalar(mpz_class(std::string(num)));
    }
    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den, false)) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Scalar q(n, d);
    q.canonicalize();
    if (q.get_num() != n || q.get_den() != d) {
        throw ParseError("rational '" + std::string(text) + "' is not in lowest terms");
    }
    return q;
}

std::string format_scalar(const Scalar& value) { return value.get_str(); }

double to_double(const Scalar& value) { return value.get_d(); }

int sign(const Scalar& value) { return sgn(value); }

Scalar ratio(long num, long den) {
    if (den == 0) throw Error("zero denominator");
    Scalar q(num, 1);
    q /= den;
    return q;
}

} // namespace topoface
