#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "potts/recursion.hpp"

namespace potts {

/// A spin assignment over the ball V_n, indexed by vertex id.
using Configuration = std::vector<std::uint8_t>;

struct BuildOptions {
    std::int64_t budget = 1'000'000;  // hard cap on enumerated configurations
    int threads = 1;
};

/// Exhaustive finite-volume measure on the depth-n ball with the state
/// alphabet cut at q: mu(sigma) = exp_p(H_n + sum_{W_n} h) prod lambda / Z_n.
/// Rows are in lexicographic configuration order.
class FiniteVolumeMeasure {
public:
    int depth() const { return depth_; }
    int order() const { return order_; }
    int cutoff() const { return cutoff_; }
    std::int64_t volume() const { return volume_; }
    std::uint64_t count() const { return table_.size(); }

    const PadicNumber& partition() const { return partition_; }
    const PadicNumber& mu(std::uint64_t index) const { return table_[index]; }
    const std::vector<PadicNumber>& table() const { return table_; }

    /// Everything omitted by the alphabet cut is below p^{-e}; Norm::zero
    /// when the weight vanishes identically from q on.
    Norm truncation_bound() const;

    Configuration config_of(std::uint64_t index) const;
    std::uint64_t index_of(const Configuration& config) const;

private:
    friend FiniteVolumeMeasure build_measure(const ModelParams&, const Weight&, const LogField&, int,
                                             int, const BuildOptions&);
    int depth_ = 0;
    int order_ = 0;
    int cutoff_ = 0;
    std::int64_t volume_ = 0;
    std::int64_t truncation_exponent_ = 0;  // Weight::kExactDecay means none
    std::vector<PadicNumber> table_;
    PadicNumber partition_ = PadicNumber::zero(PadicContext(2, 1));
};

/// Sum of couplings over monochromatic edges of the ball.
PadicNumber hamiltonian(const Configuration& config, const CayleyTree& tree,
                        const EdgeCouplings& couplings);
PadicNumber hamiltonian(const Configuration& config, const CayleyTree& tree, const ModelParams& params);

FiniteVolumeMeasure build_measure(const ModelParams& params, const Weight& w, const LogField& h,
                                  int depth, int cutoff, const BuildOptions& options = {});

/// Max over depth-(n-1) configurations of
/// | sum_omega mu_n(sigma v omega) - mu_{n-1}(sigma) |_p.
Norm compatibility_check(const ModelParams& params, const Weight& w, const LogField& h, int depth,
                         int cutoff, const BuildOptions& options = {});

/// Z_n in closed form for a translation-invariant solved field:
/// a = (theta + sum_j hat_j)^k per sphere vertex, plus the depth-one base
/// factor (theta + X)(1 + sum_i hat_i F_i) the telescoping starts from.
struct PartitionClosedForm {
    PadicNumber a;
    std::int64_t exponent;     // |V_{n-1}|
    PadicNumber base_factor;

    PadicNumber value() const { return base_factor * a.pow(static_cast<std::uint64_t>(exponent)); }
};

PartitionClosedForm closed_form_partition(const BoundaryField& hat, const Weight& w,
                                          const ModelParams& params, int depth);

struct BoundednessResult {
    Norm max_norm;
    bool bounded;  // max <= |lambda(0)|^2 = 1
};

BoundednessResult boundedness_check(const FiniteVolumeMeasure& measure);

/// Max per-configuration distance between two tables of the same shape.
Norm gibbs_norm_diff(const FiniteVolumeMeasure& a, const FiniteVolumeMeasure& b);

struct ContinuityResult {
    Norm weight_dist;
    Norm field_dist;
    bool field_within;    // field_dist <= weight_dist
    bool field_equality;  // reported, not asserted
    Norm max_measure_diff;
    bool measure_within;
};

ContinuityResult continuity_check(const Weight& lambda, const Weight& kappa, const ModelParams& params,
                                  int depth_cap, int cutoff, const BuildOptions& options = {});

/// The product measure prod_x lambda(sigma(x)) / Z_n sharing the Gibbs
/// normalizer.
struct ProductMeasure {
    std::vector<PadicNumber> table;
};

ProductMeasure product_measure(const FiniteVolumeMeasure& measure, const Weight& w);

/// Classifies configurations by the valuation of the energy-plus-field
/// exponent and verifies |mu/product - 1| <= p^{-n} on the qualifying set.
struct LimitResult {
    std::uint64_t members = 0;
    std::uint64_t total = 0;
    Norm max_deviation;
    bool vacuous = false;  // no configuration qualified
    bool pass = false;
};

LimitResult limit_check(const ModelParams& params, const Weight& w, int depth, int cutoff,
                        const BuildOptions& options = {});

/// CSV export: one quoted configuration and one canonical p-adic literal
/// per row, preceded by comment lines carrying Z_n and the truncation bound.
void write_measure_csv(std::ostream& out, const FiniteVolumeMeasure& measure);

}  // namespace potts
