#include "iwalk/rational.hpp"

#include <cctype>

namespace iwalk {

Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int falling_binomial(const Int& x, long k) {
    if (k < 0) return 0;
    Int num = 1;
    for (long a = 0; a < k; ++a) num *= x - a;
    Int den = factorial(k);
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("falling_binomial: non-integral result");
    return q;
}

Int multinomial(long n, std::initializer_list<long> parts) {
    if (n < 0) return 0;
    long used = 0;
    Int den = 1;
    for (long part : parts) {
        if (part < 0) return 0;
        used += part;
        den *= factorial(part);
    }
    if (used > n) return 0;
    den *= factorial(n - used);
    Int q, r;
    Int num = factorial(n);
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("multinomial: non-integral result");
    return q;
}

Rat rat_pow(const Rat& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::invalid_argument("rat_pow: zero base with negative exponent");
        return rat_pow(1 / base, -e);
    }
    Rat acc = 1;
    Rat b = base;
    long k = e;
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

Rat parse_rational(std::string_view text) {
    auto fail = [&] { throw std::invalid_argument("parse_rational: bad rational '" + std::string(text) + "'"); };
    if (text.empty()) fail();
    std::string s(text);
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rat q;
        if (q.set_str(s, 10) != 0) fail();
        if (q.get_den() == 0) fail();
        q.canonicalize();
        return q;
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+") fail();
        for (size_t i = 0; i < digits.size(); ++i) {
            if (i == 0 && (digits[i] == '-' || digits[i] == '+')) continue;
            if (!std::isdigit(static_cast<unsigned char>(digits[i]))) fail();
        }
        Int num(digits, 10);
        Int den = 1;
        for (size_t i = 0; i < frac_len; ++i) den *= 10;
        Rat q(num, den);
        q.canonicalize();
        return q;
    }
    for (size_t i = 0; i < s.size(); ++i) {
        if (i == 0 && (s[i] == '-' || s[i] == '+')) continue;
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail();
    }
    Rat q;
    if (q.set_str(s, 10) != 0) fail();
    return q;
}

std::string rational_str(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rat& q) { return q.get_d(); }

}  // namespace iwalk
