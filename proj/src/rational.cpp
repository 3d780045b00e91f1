#include "ncsf/rational.hpp"

#include "ncsf/error.hpp"

#include <cctype>

namespace ncsf {

Integer factorial(unsigned n) {
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    const std::size_t digits_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits_start) throw ParseError("expected digits in rational '" + text + "'", i);
    if (i < text.size()) {
        if (text[i] != '/') throw ParseError("unexpected character in rational '" + text + "'", i);
        const std::size_t den_start = ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_start || i != text.size())
            throw ParseError("malformed denominator in rational '" + text + "'", i);
    }
    std::string body = text[0] == '+' ? text.substr(1) : text;
    Rational q;
    if (q.set_str(body, 10) != 0) throw ParseError("malformed rational '" + text + "'", 0);
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'", text.find('/'));
    q.canonicalize();
    return q;
}

}  // namespace ncsf
