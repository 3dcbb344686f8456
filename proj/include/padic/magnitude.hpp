#pragma once

#include <compare>
#include <optional>
#include <string>

#include "padic/rational.hpp"

namespace padic {

/// Exact nonnegative real number coeff * p^exp, or zero.
///
/// Factors of p are always moved from coeff into exp, so two magnitudes are
/// equal exactly when their fields are. Absolute values have coeff = 1.
class Magnitude {
public:
    Magnitude() = default;

    static Magnitude zero(unsigned long p);
    static Magnitude one(unsigned long p) { return power(p, 0); }
    /// p^e.
    static Magnitude power(unsigned long p, const Rational& e);
    /// The real number c (c >= 0).
    static Magnitude real(unsigned long p, const Rational& c);

    bool is_zero() const { return zero_; }
    const Rational& coeff() const { return coeff_; }
    const Rational& exp() const { return exp_; }
    unsigned long prime() const { return p_; }

    Magnitude operator*(const Magnitude& o) const;
    Magnitude operator/(const Magnitude& o) const;

    /// Rational power; needs coeff = 1 unless e is an integer.
    Magnitude pow(const Rational& e) const;
    /// Exact square root when the coefficient is a rational square.
    std::optional<Magnitude> sqrt() const;
    /// log_p of the value; throws unless coeff = 1 and nonzero.
    Rational log_p() const;

    std::strong_ordering operator<=>(const Magnitude& o) const;
    bool operator==(const Magnitude& o) const { return (*this <=> o) == 0; }

    double to_double() const;
    /// "0" or "c*p^(e)".
    std::string str() const;

private:
    void normalize();

    bool zero_ = true;
    Rational coeff_ = 1;
    Rational exp_ = 0;
    unsigned long p_ = 0;
};

Magnitude max(const Magnitude& x, const Magnitude& y);
Magnitude min(const Magnitude& x, const Magnitude& y);

/// Parses the str() format for a given prime.
Magnitude parse_magnitude(const std::string& text, unsigned long p);

}  // namespace padic
