#pragma once

#include <optional>

#include "padic/context.hpp"
#include "padic/field.hpp"
#include "padic/magnitude.hpp"

namespace padic {

/// Valuation of a field element; nullopt for zero.
///
/// Non-split D uses vp(a^2 - D b^2) / 2. Split D embeds sqrt(D) through the
/// canonical Hensel root and lifts until the valuation is pinned down.
Valuation valuation(const PadicContext& ctx, const FieldElem& x);

/// |x| = p^(-v).
Magnitude abs_elem(const PadicContext& ctx, const FieldElem& x);

/// log_p |x|; throws DegenerateConfiguration for zero.
Rational log_abs(const PadicContext& ctx, const FieldElem& x);

/// |zeta_d - 1| for a primitive d-th root of unity.
Magnitude cyclotomic_valuation(unsigned long p, unsigned long d);

/// A square root inside Q or Q(sqrt D) when one exists.
std::optional<FieldElem> sqrt_field(const PadicContext& ctx, const FieldElem& x);

/// Like sqrt_field but throws UnsupportedExtension naming the discriminant needed.
FieldElem require_sqrt(const PadicContext& ctx, const FieldElem& x, const std::string& what);

/// Squarefree part of a nonzero rational (the D with x in D * Q^2).
long squarefree_part(const Rational& x);

}  // namespace padic
