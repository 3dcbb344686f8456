#pragma once

#include <Eigen/Core>
#include <string>

#include "padic/rational.hpp"

namespace padic {

/// Exact element a + b*sqrt(D) of Q or of one quadratic field Q(sqrt D).
///
/// D = 0 marks a plain rational; b = 0 always normalizes D to 0 so rationals
/// mix freely with elements of any extension.
class FieldElem {
public:
    FieldElem() = default;
    FieldElem(int a) : a_(a) {}
    FieldElem(long a) : a_(a) {}
    FieldElem(const Integer& a) : a_(a) {}
    FieldElem(const Rational& a) : a_(a) { a_.canonicalize(); }
    FieldElem(const Rational& a, const Rational& b, long disc);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long disc() const { return disc_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    FieldElem conj() const;
    /// Field norm a^2 - D b^2.
    Rational norm() const;

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem& operator/=(const FieldElem& o);

    friend FieldElem operator+(FieldElem x, const FieldElem& y) { return x += y; }
    friend FieldElem operator-(FieldElem x, const FieldElem& y) { return x -= y; }
    friend FieldElem operator*(FieldElem x, const FieldElem& y) { return x *= y; }
    friend FieldElem operator/(FieldElem x, const FieldElem& y) { return x /= y; }
    friend bool operator==(const FieldElem& x, const FieldElem& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.disc_ == y.disc_;
    }
    friend bool operator!=(const FieldElem& x, const FieldElem& y) { return !(x == y); }

    /// "a", "b*sqrt(D)" or "a+b*sqrt(D)".
    std::string str() const;

private:
    long merged_disc(const FieldElem& o) const;
    void normalize();

    Rational a_ = 0;
    Rational b_ = 0;
    long disc_ = 0;
};

/// sqrt(D) as a field element.
FieldElem sqrt_disc(long disc);

/// Parses "a", "a+b*sqrt(D)", "a-b*sqrt(D)", "b*sqrt(D)" or "sqrt(D)".
FieldElem parse_field(const std::string& text);

}  // namespace padic

namespace Eigen {

template <>
struct NumTraits<padic::FieldElem> : GenericNumTraits<padic::FieldElem> {
    using Real = padic::FieldElem;
    using NonInteger = padic::FieldElem;
    using Nested = padic::FieldElem;
    using Literal = padic::FieldElem;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 32
    };
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
