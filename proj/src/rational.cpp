#include "anticomm/rational.hpp"

#include "anticomm/errors.hpp"

#include <cctype>

namespace anticomm {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    s = trim(s);
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw ParseError("malformed rational: '" + std::string(whole) + "'");
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("malformed rational: '" + std::string(whole) + "'");
    std::string text(s.front() == '+' ? s.substr(1) : s);
    return Integer(text);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    const Integer n = parse_integer(text.substr(0, slash), text);
    const Integer d = parse_integer(text.substr(slash + 1), text);
    if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    return Rational(n, d);
}

std::string to_string(const Rational& value) {
    const Integer d = den(value);
    if (d == 1) return num(value).str();
    return num(value).str() + "/" + d.str();
}

}  // namespace anticomm
