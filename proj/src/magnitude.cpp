#include "padic/magnitude.hpp"

#include <cmath>

#include "padic/errors.hpp"

namespace padic {

namespace {

Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational qpow(const Rational& x, unsigned long e) {
    Rational r(ipow(x.get_num(), e), ipow(x.get_den(), e));
    r.canonicalize();
    return r;
}

}  // namespace

Magnitude Magnitude::zero(unsigned long p) {
    Magnitude m;
    m.p_ = p;
    return m;
}

Magnitude Magnitude::power(unsigned long p, const Rational& e) {
    Magnitude m;
    m.zero_ = false;
    m.p_ = p;
    m.exp_ = e;
    return m;
}

Magnitude Magnitude::real(unsigned long p, const Rational& c) {
    if (c < 0) throw Error("Magnitude::real: negative value");
    if (c == 0) return zero(p);
    Magnitude m;
    m.zero_ = false;
    m.p_ = p;
    m.coeff_ = c;
    m.normalize();
    return m;
}

void Magnitude::normalize() {
    if (zero_) return;
    Valuation v = vp(coeff_, p_);
    long k = v->get_num().get_si();
    if (k != 0) {
        coeff_ = unit_part(coeff_, p_);
        exp_ += k;
    }
}

Magnitude Magnitude::operator*(const Magnitude& o) const {
    unsigned long p = p_ ? p_ : o.p_;
    if (zero_ || o.zero_) return zero(p);
    Magnitude m;
    m.zero_ = false;
    m.p_ = p;
    m.coeff_ = coeff_ * o.coeff_;
    m.exp_ = exp_ + o.exp_;
    m.normalize();
    return m;
}

Magnitude Magnitude::operator/(const Magnitude& o) const {
    if (o.zero_) throw DegenerateConfiguration("Magnitude division by zero");
    unsigned long p = p_ ? p_ : o.p_;
    if (zero_) return zero(p);
    Magnitude m;
    m.zero_ = false;
    m.p_ = p;
    m.coeff_ = coeff_ / o.coeff_;
    m.exp_ = exp_ - o.exp_;
    m.normalize();
    return m;
}

Magnitude Magnitude::pow(const Rational& e) const {
    if (zero_) {
        if (e <= 0) throw DegenerateConfiguration("nonpositive power of zero");
        return *this;
    }
    Magnitude m = *this;
    m.exp_ = exp_ * e;
    if (coeff_ != 1) {
        if (e.get_den() != 1) throw Error("Magnitude::pow: fractional power of non-unit coefficient");
        long n = e.get_num().get_si();
        Rational c = qpow(coeff_, static_cast<unsigned long>(n < 0 ? -n : n));
        m.coeff_ = n < 0 ? Rational(1) / c : c;
    }
    return m;
}

std::optional<Magnitude> Magnitude::sqrt() const {
    if (zero_) return *this;
    auto c = rational_sqrt(coeff_);
    if (!c) return std::nullopt;
    Magnitude m = *this;
    m.coeff_ = *c;
    m.exp_ = exp_ / 2;
    return m;
}

Rational Magnitude::log_p() const {
    if (zero_) throw DegenerateConfiguration("log of zero magnitude");
    if (coeff_ != 1) throw Error("log_p of a magnitude with non-unit coefficient");
    return exp_;
}

std::strong_ordering Magnitude::operator<=>(const Magnitude& o) const {
    if (zero_ || o.zero_) {
        if (zero_ && o.zero_) return std::strong_ordering::equal;
        return zero_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (p_ != o.p_) throw Error("comparing magnitudes over different primes");
    // c1 p^e1 vs c2 p^e2: with e1 - e2 = n/d compare c1^d p^n with c2^d.
    Rational diff = exp_ - o.exp_;
    unsigned long d = diff.get_den().get_ui();
    long n = diff.get_num().get_si();
    Rational lhs = qpow(coeff_, d);
    Rational rhs = qpow(o.coeff_, d);
    Integer pn;
    mpz_ui_pow_ui(pn.get_mpz_t(), p_, static_cast<unsigned long>(n < 0 ? -n : n));
    if (n >= 0) {
        lhs *= pn;
    } else {
        rhs *= pn;
    }
    int c = cmp(lhs, rhs);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

double Magnitude::to_double() const {
    if (zero_) return 0.0;
    return coeff_.get_d() * std::pow(static_cast<double>(p_), exp_.get_d());
}

std::string Magnitude::str() const {
    if (zero_) return "0";
    return to_string(coeff_) + "*" + std::to_string(p_) + "^(" + to_string(exp_) + ")";
}

Magnitude max(const Magnitude& x, const Magnitude& y) { return x < y ? y : x; }
Magnitude min(const Magnitude& x, const Magnitude& y) { return y < x ? y : x; }

Magnitude parse_magnitude(const std::string& text, unsigned long p) {
    if (text == "0") return Magnitude::zero(p);
    auto star = text.find('*');
    auto open = text.find("^(");
    if (star == std::string::npos || open == std::string::npos || text.back() != ')') {
        throw ParseError("bad magnitude: " + text);
    }
    if (text.substr(star + 1, open - star - 1) != std::to_string(p)) {
        throw ParseError("magnitude prime mismatch: " + text);
    }
    Rational c = parse_rational(text.substr(0, star));
    Rational e = parse_rational(text.substr(open + 2, text.size() - open - 3));
    return Magnitude::real(p, c) * Magnitude::power(p, e);
}

}  // namespace padic
