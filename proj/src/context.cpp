#include "padic/context.hpp"

#include "padic/errors.hpp"

namespace padic {

namespace {

Integer ipow(unsigned long p, long k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(k));
    return r;
}

Integer mod_pos(const Integer& x, const Integer& m) {
    Integer r = x % m;
    if (r < 0) r += m;
    return r;
}

// Newton iteration for odd p, starting from a simple root mod p.
Integer lift_odd(unsigned long p, const Rational& u, const Integer& r0, long k) {
    Integer x = r0;
    long prec = 1;
    while (prec < k) {
        prec = std::min(2 * prec, k);
        Integer m = ipow(p, prec);
        Integer target = residue_mod(u, m);
        Integer two_x = mod_pos(2 * x, m);
        Integer inv;
        mpz_invert(inv.get_mpz_t(), two_x.get_mpz_t(), m.get_mpz_t());
        x = mod_pos(x - (x * x - target) * inv, m);
    }
    return mod_pos(x, ipow(p, k));
}

// Bit lifting for p = 2; u = 1 mod 8. Returns x with x^2 = u mod 2^(k+1),
// which pins the root mod 2^k.
Integer lift_two(const Rational& u, long k) {
    long top = std::max<long>(k + 1, 3);
    Integer target = residue_mod(u, ipow(2, top));
    Integer x = 1;
    for (long n = 3; n < top; ++n) {
        Integer m = ipow(2, n + 1);
        if (mod_pos(x * x - target, m) != 0) x += ipow(2, n - 1);
    }
    return x;
}

}  // namespace

HenselRoot::HenselRoot(unsigned long p, Rational unit) : p_(p), unit_(std::move(unit)) {}

long HenselRoot::known_precision() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return precision_;
}

void HenselRoot::extend(long k) const {
    if (k <= precision_) return;
    long target = std::max<long>(k, 2 * precision_);
    if (p_ == 2) {
        Integer x = lift_two(unit_, std::max<long>(target, 3));
        Integer m = ipow(2, target);
        x = mod_pos(x, m);
        Integer x8 = mod_pos(x, 8);
        if (x8 != 1 && x8 != 3) x = mod_pos(-x, m);
        value_ = x;
    } else {
        Integer pm(p_);
        Integer u0 = residue_mod(unit_, pm);
        Integer r0 = 0;
        for (unsigned long r = 1; r < p_; ++r) {
            if (mod_pos(Integer(r) * r - u0, pm) == 0) {
                r0 = r;
                break;
            }
        }
        if (r0 == 0) throw Error("HenselRoot: unit is not a square residue");
        value_ = lift_odd(p_, unit_, r0, target);
    }
    precision_ = target;
}

Integer HenselRoot::residue(long k) const {
    std::lock_guard<std::mutex> lock(mutex_);
    extend(k);
    return mod_pos(value_, ipow(p_, k));
}

std::vector<unsigned long> HenselRoot::digits(long k) const {
    Integer v = residue(k);
    std::vector<unsigned long> out;
    Integer pm(p_);
    for (long i = 0; i < k; ++i) {
        Integer d = v % pm;
        out.push_back(d.get_ui());
        v /= pm;
    }
    return out;
}

SquareClass sqrt_in_Qp(const Rational& x, unsigned long p) {
    SquareClass out;
    if (x == 0) throw Error("sqrt_in_Qp: zero argument");
    long v = vp(x, p)->get_num().get_si();
    if (v % 2 != 0) return out;
    Rational u = unit_part(x, p);
    if (p == 2) {
        if (residue_mod(u, Integer(8)) != 1) return out;
    } else {
        Integer r = residue_mod(u, Integer(p));
        Integer e = Integer((p - 1) / 2);
        Integer pw;
        Integer pm(p);
        mpz_powm(pw.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), pm.get_mpz_t());
        if (pw != 1) return out;
    }
    out.square = true;
    out.half_valuation = v / 2;
    out.root = std::make_shared<HenselRoot>(p, u);
    return out;
}

PadicContext::PadicContext(unsigned long p, std::optional<long> disc, long precision_cap)
    : p_(p), disc_(disc), precision_cap_(precision_cap) {
    if (!is_prime(p)) throw InvalidContext("p = " + std::to_string(p) + " is not prime");
    if (precision_cap <= 0) throw InvalidContext("precision cap must be positive");
    if (disc) {
        long D = *disc;
        if (D == 0 || D == 1 || !is_squarefree(D)) {
            throw InvalidContext("D = " + std::to_string(D) + " must be squarefree and not a square");
        }
        split_ = sqrt_in_Qp(Rational(D), p);
    }
}

}  // namespace padic
