#include "rledtw/rational.hpp"

#include <cctype>

namespace rledtw {

Rational rational_from_decimal(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    if (text.find('/') != std::string::npos) {
        Rational q;
        if (q.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
        q.canonicalize();
        if (q < 0) throw std::invalid_argument("negative rational: " + text);
        return q;
    }
    std::size_t dot = text.find('.');
    std::string digits;
    std::size_t frac_len = 0;
    if (dot == std::string::npos) {
        digits = text;
    } else {
        digits = text.substr(0, dot) + text.substr(dot + 1);
        frac_len = text.size() - dot - 1;
    }
    if (digits.empty()) throw std::invalid_argument("malformed decimal: " + text);
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("malformed decimal: " + text);
    }
    BigInt num(digits, 10);
    BigInt den(1);
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace rledtw
