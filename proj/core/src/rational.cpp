#include "katona/rational.hpp"

#include "katona/errors.hpp"

namespace katona {

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt factorial(int n) {
    if (n < 0) throw DomainError("factorial of negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::string fraction_string(const Rational& r) {
    std::string num = numerator(r).str();
    if (denominator(r) == 1) return num;
    return num + "/" + denominator(r).str();
}

std::string decimal_string(const Rational& r, int digits) {
    BigInt num = numerator(r), den = denominator(r);
    bool neg = num < 0;
    if (neg) num = -num;
    BigInt ip = num / den, rem = num % den;
    std::string out = (neg && (ip != 0 || rem != 0) ? "-" : "") + ip.str();
    if (digits > 0) {
        out += '.';
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            out += char('0' + int(rem / den));
            rem %= den;
        }
    }
    return out;
}

Rational rational_from_string(std::string_view s) {
    auto parse_int = [](std::string_view t) -> BigInt {
        if (t.empty()) throw DomainError("empty number in rational literal");
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw DomainError("bare sign in rational literal");
        for (std::size_t j = i; j < t.size(); ++j)
            if (t[j] < '0' || t[j] > '9')
                throw DomainError("malformed rational literal: " + std::string(t));
        return BigInt(std::string(t));
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    BigInt num = parse_int(s.substr(0, slash));
    BigInt den = parse_int(s.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in rational literal");
    return Rational(num, den);
}

} // namespace katona
