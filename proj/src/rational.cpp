#include "lagcut/rational.hpp"

#include "lagcut/error.hpp"

#include <cctype>

namespace lagcut {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

// cpp_int reads a leading 0 as an octal prefix.
BigInt decimal(std::string_view digits)
{
    const auto first = digits.find_first_not_of('0');
    return first == std::string_view::npos ? BigInt(0) : BigInt(std::string(digits.substr(first)));
}

[[noreturn]] void reject(std::string_view text)
{
    throw Error(ErrorKind::Parse,
                "not a rational literal: '" + std::string(text) + "' (expected p/q or a decimal)");
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    Rational value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            reject(text);
        BigInt d = decimal(den);
        if (d == 0)
            reject(text);
        value = Rational(decimal(num), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
            reject(text);
        BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
        BigInt digits = decimal(std::string(whole) + std::string(frac));
        value = Rational(digits, scale);
    } else {
        if (!all_digits(body))
            reject(text);
        value = Rational(decimal(body));
    }
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value)
{
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

std::string pi_multiple(const Rational& coefficient)
{
    if (coefficient == 0)
        return "0";
    return to_string(coefficient) + "·π";
}

}  // namespace lagcut
