#include "padic/rational.hpp"

#include <cctype>

#include "padic/errors.hpp"

namespace padic {

long vp_integer(const Integer& n, unsigned long p) {
    if (n == 0) return 0;
    Integer rest;
    Integer prime(p);
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

Valuation vp(const Rational& x, unsigned long p) {
    if (x == 0) return std::nullopt;
    return Rational(vp_integer(x.get_num(), p) - vp_integer(x.get_den(), p));
}

Rational unit_part(const Rational& x, unsigned long p) {
    if (x == 0) return x;
    Integer prime(p);
    Integer num, den;
    mpz_remove(num.get_mpz_t(), x.get_num_mpz_t(), prime.get_mpz_t());
    mpz_remove(den.get_mpz_t(), x.get_den_mpz_t(), prime.get_mpz_t());
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    if (x == 0) return Rational(0);
    if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) {
        return std::nullopt;
    }
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Rational rational_pow(unsigned long p, long e) {
    Integer base;
    mpz_ui_pow_ui(base.get_mpz_t(), p, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rational(base);
    Rational r(Integer(1), base);
    r.canonicalize();
    return r;
}

Integer residue_mod(const Rational& unit, const Integer& modulus) {
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), unit.get_den_mpz_t(), modulus.get_mpz_t()) == 0) {
        throw Error("residue_mod: denominator not invertible");
    }
    Integer r = (unit.get_num() * inv) % modulus;
    if (r < 0) r += modulus;
    return r;
}

std::string to_string(const Rational& x) { return x.get_str(10); }

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw ParseError("empty rational");
    auto valid_int = [](const std::string& t) {
        std::size_t i = 0;
        if (!t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        }
        return true;
    };
    auto strip_plus = [](std::string t) {
        if (!t.empty() && t[0] == '+') t.erase(0, 1);
        return t;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw ParseError("bad rational: " + text);
        return Rational(Integer(strip_plus(s), 10));
    }
    std::string n = s.substr(0, slash), d = s.substr(slash + 1);
    if (!valid_int(n) || !valid_int(d)) throw ParseError("bad rational: " + text);
    Integer den(strip_plus(d), 10);
    if (den == 0) throw ParseError("zero denominator: " + text);
    Rational r(Integer(strip_plus(n), 10), den);
    r.canonicalize();
    return r;
}

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long q = 2; q * q <= n; ++q) {
        if (n % q == 0) return false;
    }
    return true;
}

bool is_squarefree(long n) {
    if (n == 0) return false;
    unsigned long m = static_cast<unsigned long>(n < 0 ? -n : n);
    for (unsigned long q = 2; q * q <= m; ++q) {
        if (m % (q * q) == 0) return false;
    }
    return true;
}

}  // namespace padic
