#include "padic/cfrac.hpp"

#include "padic/errors.hpp"

namespace padic {

CFSpec CFSpec::unit_ones(std::size_t n) {
    CFSpec s;
    s.a.assign(n, FieldElem(1));
    s.b.assign(n, FieldElem(1));
    return s;
}

namespace {

void check(const CFSpec& spec, std::size_t n) {
    if (spec.a.size() != spec.b.size()) throw Error("continued fraction needs as many a_i as b_i");
    if (n > spec.length()) throw Error("convergent index beyond the specified length");
    for (std::size_t i = 0; i < n; ++i) {
        if (spec.a[i].is_zero()) throw DegenerateConfiguration("partial numerator a_" + std::to_string(i + 1) + " is zero");
    }
}

}  // namespace

MobiusMap convergent_map(const CFSpec& spec, std::size_t n) {
    check(spec, n);
    MobiusMap T;
    for (std::size_t i = 0; i < n; ++i) T = T * MobiusMap(FieldElem(0), spec.a[i], FieldElem(1), spec.b[i]);
    return T;
}

ProjPoint convergent_value(const CFSpec& spec, std::size_t n) { return convergent_map(spec, n)(ProjPoint(0)); }

ProjPoint nested_value(const CFSpec& spec, std::size_t n) {
    check(spec, n);
    ProjPoint z(0);
    for (std::size_t i = n; i-- > 0;) {
        if (z.is_inf()) {
            z = ProjPoint(0);
            continue;
        }
        FieldElem den = z.x() + spec.b[i];
        z = den.is_zero() ? ProjPoint::infinity() : ProjPoint(spec.a[i] / den);
    }
    return z;
}

std::vector<Magnitude> gap_sequence(const PadicContext& ctx, const CFSpec& spec, std::size_t N) {
    check(spec, N);
    std::vector<Magnitude> out;
    MobiusMap T;
    for (std::size_t i = 0; i < N; ++i) {
        T = T * MobiusMap(FieldElem(0), spec.a[i], FieldElem(1), spec.b[i]);
        out.push_back(chordal(ctx, T(ProjPoint(0)), T(ProjPoint::infinity())));
    }
    return out;
}

DivergenceCertificate diverges_classically_unit_case(const PadicContext& ctx, const CFSpec& spec) {
    check(spec, spec.length());
    Magnitude one = Magnitude::one(ctx.p());
    for (std::size_t i = 0; i < spec.length(); ++i) {
        if (spec.a[i] != FieldElem(1)) {
            return {false, "undetermined: a_" + std::to_string(i + 1) + " = " + spec.a[i].str() + " is not 1"};
        }
        if (abs_elem(ctx, spec.b[i]) > one) {
            return {false, "undetermined: |b_" + std::to_string(i + 1) + "| > 1"};
        }
    }
    return {true,
            "every t_i lies in PSL(2,O), so each T_n is a chordal isometry with rho(T_n(0), T_n(inf)) = 1; "
            "a limit of T_n(0) would force rho(0, inf) = 0"};
}

}  // namespace padic
