#include "tmspline/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tmspline {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    std::string_view digits = num;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (!all_digits(digits))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    Rational value;
    if (den.empty()) {
        value = Rational(Integer(std::string(num)));
    } else {
        if (!all_digits(den))
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        Integer d{std::string(den)};
        if (d == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        value = Rational(Integer(std::string(num)), d);
        value.canonicalize();
    }
    return value;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

Rational rational_pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

} // namespace tmspline
