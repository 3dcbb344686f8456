#include "padic/field.hpp"

#include <cctype>

#include "padic/errors.hpp"

namespace padic {

FieldElem::FieldElem(const Rational& a, const Rational& b, long disc) : a_(a), b_(b), disc_(disc) {
    if (b_ != 0 && disc_ == 0) throw Error("nonzero sqrt part without a discriminant");
    normalize();
}

void FieldElem::normalize() {
    a_.canonicalize();
    b_.canonicalize();
    if (b_ == 0) disc_ = 0;
}

long FieldElem::merged_disc(const FieldElem& o) const {
    if (disc_ == 0) return o.disc_;
    if (o.disc_ == 0 || o.disc_ == disc_) return disc_;
    throw UnsupportedExtension("elements of Q(sqrt " + std::to_string(disc_) + ") and Q(sqrt " +
                               std::to_string(o.disc_) + ") cannot be combined");
}

FieldElem FieldElem::conj() const {
    FieldElem r = *this;
    r.b_ = -r.b_;
    return r;
}

Rational FieldElem::norm() const { return a_ * a_ - Rational(disc_) * b_ * b_; }

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    disc_ = merged_disc(o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
    disc_ = merged_disc(o);
    a_ -= o.a_;
    b_ -= o.b_;
    normalize();
    return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
    long D = merged_disc(o);
    Rational a = a_ * o.a_ + Rational(D) * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    disc_ = D;
    normalize();
    return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
    if (o.is_zero()) throw DegenerateConfiguration("division by zero");
    Rational n = o.norm();
    FieldElem inv(o.a_ / n, -o.b_ / n, o.disc_);
    return *this *= inv;
}

std::string FieldElem::str() const {
    if (b_ == 0) return to_string(a_);
    std::string root = "sqrt(" + std::to_string(disc_) + ")";
    std::string bpart = b_ == 1 ? root : (b_ == -1 ? "-" + root : to_string(b_) + "*" + root);
    if (a_ == 0) return bpart;
    if (b_ < 0) return to_string(a_) + bpart;
    return to_string(a_) + "+" + bpart;
}

FieldElem sqrt_disc(long disc) { return FieldElem(Rational(0), Rational(1), disc); }

FieldElem parse_field(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw ParseError("empty field element");
    auto pos = s.find("sqrt(");
    if (pos == std::string::npos) return FieldElem(parse_rational(s));

    auto close = s.find(')', pos);
    if (close == std::string::npos || close + 1 != s.size()) throw ParseError("bad field element: " + text);
    long D = 0;
    try {
        D = std::stol(s.substr(pos + 5, close - pos - 5));
    } catch (const std::exception&) {
        throw ParseError("bad discriminant in: " + text);
    }
    if (D == 0) throw ParseError("zero discriminant in: " + text);

    // Split "<a><sign><coef>*" in front of sqrt(.
    std::string head = s.substr(0, pos);
    if (!head.empty() && head.back() == '*') head.pop_back();
    Rational a = 0;
    std::string coef = head;
    for (std::size_t i = head.size(); i-- > 1;) {
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
            a = parse_rational(head.substr(0, i));
            coef = head.substr(i);
            break;
        }
    }
    Rational b;
    if (coef.empty() || coef == "+") {
        b = 1;
    } else if (coef == "-") {
        b = -1;
    } else {
        b = parse_rational(coef);
    }
    return FieldElem(a, b, D);
}

}  // namespace padic
