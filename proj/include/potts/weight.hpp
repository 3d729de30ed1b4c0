#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "potts/model.hpp"
#include "potts/padic.hpp"

namespace potts {

enum class WeightFamily { Explicit, Geometric, PaperExample };

/// A weight: the per-state sequence lambda with lambda(0) = 1 and
/// |lambda(n)|_p -> 0, entering the measure multiplicatively per vertex.
///
/// Values are materialized out to the index where the decay certificate
/// reaches working precision; beyond that value(i) is the certified
/// below-precision zero. The decay certificate d(i) guarantees
/// |lambda(i)|_p <= p^{-d(i)} and continues past the explicit list as an
/// affine rule d(i) = a + b*i.
class Weight {
public:
    static constexpr std::int64_t kExactDecay = INT64_MAX / 4;  // entry known to vanish

    static Weight geometric(const PadicContext& ctx);
    static Weight paper_example(const ModelParams& params);
    static Weight explicit_list(const PadicContext& ctx, std::vector<PadicNumber> values,
                                std::int64_t tail_a, std::int64_t tail_b);

    const PadicContext& context() const { return ctx_; }
    WeightFamily family() const { return family_; }
    std::string family_name() const;

    PadicNumber value(std::uint32_t index) const;
    std::int64_t decay(std::uint32_t index) const;
    std::size_t explicit_count() const { return values_.size(); }

    /// Smallest q with d(i) >= target for every i >= q ("auto" cutoff).
    int support_cutoff(std::int64_t target) const;

    /// Certified bound exponent for everything at or above index q:
    /// |lambda(i)|_p <= p^{-min_decay_from(q)} for all i >= q.
    std::int64_t min_decay_from(std::uint32_t q) const;

    /// max_{i>=1} |lambda(i)/lambda(0)|_p < 1, the no-phase-transition gate.
    bool ratio_condition() const;
    void require_ratio_condition() const;

    Weight perturbed(std::uint32_t index, const PadicNumber& delta) const;
    /// Same values below q, exactly zero from q on (self-consistent
    /// finite-alphabet model; no truncation error).
    Weight truncated(int q) const;

private:
    Weight(const PadicContext& ctx, WeightFamily family) : ctx_(ctx), family_(family) {}
    void push_value(PadicNumber v);
    void validate() const;

    PadicContext ctx_;
    WeightFamily family_;
    std::vector<PadicNumber> values_;
    std::vector<std::int64_t> decay_;
    std::int64_t tail_a_ = 0;
    std::int64_t tail_b_ = 1;
};

/// ||lambda - kappa||_W = max_n |lambda(n) - kappa(n)|_p.
Norm weight_distance(const Weight& a, const Weight& b);

}  // namespace potts
