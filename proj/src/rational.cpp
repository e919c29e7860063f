#include "lemni/rational.hpp"

#include <cctype>

namespace lemni {

Rational parse_rational(const std::string& text) {
    // Strict [+-]?digits(/digits)?. GMP itself ignores whitespace, and
    // floating literals must be rejected outright.
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
    if (digits == 0) throw ParseError("invalid rational '" + text + "'");
    if (i < text.size()) {
        if (text[i] != '/') throw ParseError("invalid rational '" + text + "'");
        ++i;
        digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
        if (digits == 0 || i != text.size())
            throw ParseError("invalid rational '" + text + "'");
    }

    Rational r;
    try {
        r = Rational(text, 10);
    } catch (const std::invalid_argument&) {
        throw ParseError("invalid rational '" + text + "'");
    }
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

} // namespace lemni
