#include "equifreq/numeric.hpp"

#include "equifreq/errors.hpp"

#include <cctype>

namespace equifreq {

BigInt floor_div(const BigInt& a, const BigInt& b) {
    internal_check(b > 0, "floor_div requires a positive divisor");
    BigInt q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

BigInt round_half_up_div(const BigInt& num, const BigInt& den) {
    // round(num/den) with halves toward +infinity is floor((2 num + den) / (2 den)).
    return floor_div(2 * num + den, 2 * den);
}

bool is_perfect_square(const BigInt& n, BigInt& root) {
    if (n < 0) return false;
    root = boost::multiprecision::sqrt(n);  // floor square root
    return root * root == n;
}

BigInt parse_bigint(const std::string& text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    if (i == text.size()) throw ParseError("not an integer: '" + text + "'");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw ParseError("not an integer: '" + text + "'");
        }
    }
    // cpp_int's parser rejects an explicit leading '+'.
    return BigInt(text[0] == '+' ? text.substr(1) : text);
}

std::string fraction_str(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace equifreq
