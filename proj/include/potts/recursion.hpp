#pragma once

#include <map>
#include <vector>

#include "potts/model.hpp"
#include "potts/sequence.hpp"
#include "potts/weight.hpp"

namespace potts {

/// A boundary field: the hat sequence attached to a vertex, constrained to
/// the ball B (sup norm <= 1/p).
struct BoundaryField {
    C0Vector hat;

    explicit BoundaryField(C0Vector h) : hat(std::move(h)) {
        if (!hat.in_unit_fraction_ball())
            throw DomainError("boundary field must lie in the ball ||x|| <= 1/p");
    }
};

/// Per-state log components h_i - h_0 (convention h_0 = 0); every entry
/// must sit inside the exp_p convergence ball. Unlisted indices read as 0.
class LogField {
public:
    explicit LogField(const PadicContext& ctx, std::map<std::uint32_t, PadicNumber> values = {});

    const PadicContext& context() const { return ctx_; }
    const std::map<std::uint32_t, PadicNumber>& values() const { return values_; }
    PadicNumber at(std::uint32_t index) const;

    LogField with(std::uint32_t index, PadicNumber value) const;

private:
    PadicContext ctx_;
    std::map<std::uint32_t, PadicNumber> values_;
};

/// One evaluation context for the local maps F_i over a fixed argument
/// vector and theta: F_i(x; theta) = ((theta-1) x_i + X + 1) / (X + theta),
/// with the unit denominator inverted once.
class LocalMapCache {
public:
    LocalMapCache(const C0Vector& x, const PadicNumber& theta);

    PadicNumber apply(std::uint32_t index) const;
    const PadicNumber& series_sum() const { return sum_; }

private:
    const C0Vector* x_;
    PadicNumber sum_;
    PadicNumber theta_minus_one_;
    PadicNumber sum_plus_one_;
    PadicNumber inv_denominator_;
};

/// F_i(x; theta); requires x in B and |X + theta| = 1 (else SingularDenominator).
PadicNumber local_map(std::uint32_t index, const C0Vector& x, const PadicNumber& theta);

/// Coordinate-wise (lambda(i)/lambda(0)) * F_i(x; theta)^k; maps B into B
/// when the weight satisfies the strict ratio condition.
C0Vector global_map(const C0Vector& x, const Weight& w, const ModelParams& params);

struct SolveResult {
    BoundaryField field;
    int iterations;
    Norm final_delta;
    std::vector<Norm> deltas;  // successive-difference norms, one per iteration
};

/// Iterates the global map from x0_i = lambda(i)/lambda(0) until successive
/// iterates agree to p^{-target_precision}. Geometric convergence with
/// ratio |theta - 1|_p makes the iteration count predictable.
SolveResult fixed_point_solve(const Weight& w, const ModelParams& params, int target_precision);

/// The weight for which `target` is the translation-invariant fixed point:
/// lambda(i) = hat_i / F_i(hat; theta)^k, lambda(0) = 1.
Weight invert_weight(const BoundaryField& target, const ModelParams& params);

/// hat_i = exp_p(h_i - h_0) * lambda(i)/lambda(0), and its inverse
/// h_i - h_0 = log_p(lambda(0) hat_i / lambda(i)); mutually inverse on
/// their domains at working precision.
BoundaryField hat_from_log(const LogField& h, const Weight& w);
LogField log_from_hat(const BoundaryField& hat, const Weight& w);

/// Field at x from the fields at its direct successors:
/// hat_{i,x} = (lambda(i)/lambda(0)) * prod_m F_i(hat_{x_m}; theta_{x,x_m}).
BoundaryField backward_step(const CayleyTree& tree, std::int64_t vertex,
                            const std::vector<BoundaryField>& successor_fields,
                            const EdgeCouplings& couplings, const Weight& w);

struct CascadeResult {
    Norm initial_diff;
    Norm root_diff;
    int depth;
    bool within_theta_bound;  // root <= initial * (max_e |theta_e - 1|)^depth
    bool within_p_bound;      // root <= initial * p^{-depth}

    Norm ratio() const {
        if (root_diff.is_zero() || initial_diff.is_zero()) return Norm::zero(root_diff.prime());
        return Norm::of(root_diff.prime(), root_diff.exponent() - initial_diff.exponent());
    }
};

/// Runs two boundary assignments seeded on the outermost sphere down to the
/// root and reports how much the recursion contracted their difference.
/// Seed vectors are aligned with the sphere's vertex ids.
CascadeResult uniqueness_cascade(const CayleyTree& tree, const std::vector<BoundaryField>& seeds_a,
                                 const std::vector<BoundaryField>& seeds_b,
                                 const EdgeCouplings& couplings, const Weight& w);

}  // namespace potts
