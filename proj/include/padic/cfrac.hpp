#pragma once

#include <string>
#include <vector>

#include "padic/mobius.hpp"

namespace padic {

/// Continued fraction K(a_i | b_i) with t_i(z) = a_i / (z + b_i).
struct CFSpec {
    std::vector<FieldElem> a;
    std::vector<FieldElem> b;

    std::size_t length() const { return a.size(); }
    /// a_i = b_i = 1 for n terms.
    static CFSpec unit_ones(std::size_t n);
};

/// T_n = t_1 o ... o t_n (T_0 is the identity).
MobiusMap convergent_map(const CFSpec& spec, std::size_t n);
/// T_n(0).
ProjPoint convergent_value(const CFSpec& spec, std::size_t n);
/// a_1/(b_1 + a_2/(b_2 + ... a_n/b_n)) evaluated from the tail.
ProjPoint nested_value(const CFSpec& spec, std::size_t n);

/// rho_v(T_n(0), T_n(inf)) for n = 1..N.
std::vector<Magnitude> gap_sequence(const PadicContext& ctx, const CFSpec& spec, std::size_t N);

struct DivergenceCertificate {
    bool diverges = false;
    std::string reason;
};

/// Fires when every a_i = 1 and |b_i| <= 1: all T_n are unitary, the gaps stay 1,
/// and T_n(0) cannot converge.
DivergenceCertificate diverges_classically_unit_case(const PadicContext& ctx, const CFSpec& spec);

}  // namespace padic
