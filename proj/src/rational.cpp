#include "treegb/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace treegb {

Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s, bool allow_sign) {
        std::size_t start = 0;
        if (allow_sign && !s.empty() && (s[0] == '+' || s[0] == '-'))
            start = 1;
        if (start >= s.size())
            return false;
        for (std::size_t k = start; k < s.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k])))
                return false;
        return true;
    };
    std::string_view num = text, den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!is_int(den, false))
            throw std::invalid_argument("malformed rational denominator");
    }
    if (!is_int(num, true))
        throw std::invalid_argument("malformed rational numerator");
    mpz_class n(std::string(num), 10);
    mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (d == 0)
        throw std::invalid_argument("zero denominator");
    Rational out(n, d);
    out.canonicalize();
    return out;
}

std::string format_rational(const Rational& value) {
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace treegb
