#include "rational.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace freespace {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// [+-]?digits[.digits][ (e|E)[+-]digits ]
std::optional<Rational> parse_decimal(const std::string& text) {
    std::string s = text;
    bool negative = false;
    std::size_t pos = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = s[pos] == '-';
        ++pos;
    }
    std::string digits;
    long frac_len = 0;
    long exponent = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            digits += s[pos++];
            ++frac_len;
        }
    }
    if (digits.empty()) return std::nullopt;
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
        ++pos;
        bool exp_neg = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            exp_neg = s[pos] == '-';
            ++pos;
        }
        std::string exp_digits;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) exp_digits += s[pos++];
        if (exp_digits.empty() || exp_digits.size() > 6) return std::nullopt;
        exponent = std::stol(exp_digits);
        if (exp_neg) exponent = -exponent;
    }
    if (pos != s.size()) return std::nullopt;

    mpz_class numerator(digits, 10);
    if (negative) numerator = -numerator;
    long shift = exponent - frac_len;
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift >= 0 ? shift : -shift));
    Rational result;
    if (shift >= 0)
        result = Rational(numerator * pow10);
    else
        result = Rational(numerator, pow10);
    result.canonicalize();
    return result;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        std::string num_digits = num;
        if (!num_digits.empty() && (num_digits[0] == '+' || num_digits[0] == '-'))
            num_digits = num_digits.substr(1);
        if (!all_digits(num_digits) || !all_digits(den)) return std::nullopt;
        Rational value;
        try {
            value = Rational(text);
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
        if (value.get_den() == 0) return std::nullopt;
        value.canonicalize();
        return value;
    }
    if (text.find('.') != std::string::npos || text.find('e') != std::string::npos ||
        text.find('E') != std::string::npos)
        return parse_decimal(text);
    std::string digits = text;
    if (digits[0] == '+' || digits[0] == '-') digits = digits.substr(1);
    if (!all_digits(digits)) return std::nullopt;
    Rational value(text);
    value.canonicalize();
    return value;
}

std::string rational_str(const Rational& value) {
    return value.get_str();
}

Rational rational_from_double_exact(double value) {
    return Rational(value);  // mpq from double is exact
}

Rational rational_from_double_decimal(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) return rational_from_double_exact(value);
    auto parsed = parse_decimal(std::string(buf, end));
    return parsed ? *parsed : rational_from_double_exact(value);
}

double to_double(const Rational& value) {
    return value.get_d();
}

mpz_class rational_floor(const Rational& value) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
    return q;
}

}  // namespace freespace
