#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "potts/padic.hpp"

namespace potts {

/// A sequence in c0 over Q_p: finite explicit support (indices >= 1) plus a
/// certified geometric tail bound |x_i|_p <= p^{-tail_exponent} for every
/// index outside the support. Norms and sums only depend on entries above
/// the precision floor, so the truncation is exact at working precision.
class C0Vector {
public:
    using Entries = std::map<std::uint32_t, PadicNumber>;

    C0Vector(const PadicContext& ctx, Entries entries, std::int64_t tail_exponent);
    static C0Vector zero(const PadicContext& ctx) { return C0Vector(ctx, {}, ctx.precision()); }

    const PadicContext& context() const { return ctx_; }
    const Entries& entries() const { return entries_; }
    std::int64_t tail_exponent() const { return tail_exponent_; }

    // Value at an index; outside explicit support this is the certified
    // below-tail zero.
    PadicNumber at(std::uint32_t index) const;

    Norm sup_norm() const;

    // Membership in the closed ball B = { x : ||x|| <= 1/p }.
    bool in_unit_fraction_ball() const;

    /// Sum of all coordinates. Requires the tail to sit below working
    /// precision (tail_exponent >= N), else TailTooFat.
    PadicNumber tail_sum() const;

    std::string str() const;
    static C0Vector parse(const PadicContext& ctx, const std::string& text);

private:
    PadicContext ctx_;
    Entries entries_;
    std::int64_t tail_exponent_;
};

/// Sup norm of the difference; indices below working precision on both
/// sides contribute nothing.
Norm distance(const C0Vector& x, const C0Vector& y);

}  // namespace potts
