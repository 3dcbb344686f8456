#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "padic/rational.hpp"

namespace padic {

/// Canonical p-adic square root of a unit rational, extended lazily.
///
/// The stored value r satisfies r^2 = u mod p^known_precision and is the root
/// whose residue mod p (mod 8 for p = 2) is the smaller of the two choices.
class HenselRoot {
public:
    HenselRoot(unsigned long p, Rational unit);

    unsigned long prime() const { return p_; }
    const Rational& unit() const { return unit_; }

    /// Residue of the root modulo p^k, computing more digits if needed.
    Integer residue(long k) const;

    /// Base-p digits (least significant first) known so far, at least k of them.
    std::vector<unsigned long> digits(long k) const;

    long known_precision() const;

private:
    void extend(long k) const;

    unsigned long p_;
    Rational unit_;
    mutable std::mutex mutex_;
    mutable Integer value_;
    mutable long precision_ = 0;
};

/// Result of testing whether a nonzero rational is a square in Q_p.
struct SquareClass {
    bool square = false;
    /// vp(x) / 2 when square.
    long half_valuation = 0;
    /// Root of the unit part when square.
    std::shared_ptr<const HenselRoot> root;
};

/// Decides squareness of x != 0 in Q_p and builds the canonical root.
SquareClass sqrt_in_Qp(const Rational& x, unsigned long p);

/// The prime, optional quadratic extension and precision guard shared by all
/// computations.
class PadicContext {
public:
    static constexpr long kDefaultPrecisionCap = 64;

    explicit PadicContext(unsigned long p, std::optional<long> disc = std::nullopt,
                          long precision_cap = kDefaultPrecisionCap);

    unsigned long p() const { return p_; }
    const std::optional<long>& disc() const { return disc_; }
    long precision_cap() const { return precision_cap_; }

    /// True when D is a square in Q_p, so Q(sqrt D) embeds via the Hensel root.
    bool split() const { return split_.square; }

    /// sqrt(D) = p^half_valuation * root; only meaningful when split().
    const SquareClass& disc_root() const { return split_; }

private:
    unsigned long p_;
    std::optional<long> disc_;
    long precision_cap_;
    SquareClass split_;
};

}  // namespace padic
