#include "nilflat/rational.hpp"

#include <cctype>
#include <sstream>

namespace nilflat {

Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw parse_error("empty rational");
    auto read_int = [&](size_t& i) -> Integer {
        bool neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-'))
            neg = text[i++] == '-';
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (i == start)
            throw parse_error("expected digits in rational '" + text + "'", start);
        Integer v(text.substr(start, i - start));
        return neg ? Integer(-v) : v;
    };
    size_t i = 0;
    Integer num = read_int(i);
    Integer den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = read_int(i);
    }
    if (i != text.size())
        throw parse_error("trailing characters in rational '" + text + "'", i);
    return make_rational(std::move(num), std::move(den));
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

Integer height(const Rational& r) {
    Integer n = numerator(r);
    if (n < 0)
        n = -n;
    Integer d = denominator(r);
    return n > d ? n : d;
}

} // namespace nilflat
