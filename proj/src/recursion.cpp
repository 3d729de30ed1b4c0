#include "potts/recursion.hpp"

#include <algorithm>

namespace potts {

LogField::LogField(const PadicContext& ctx, std::map<std::uint32_t, PadicNumber> values)
    : ctx_(ctx), values_(std::move(values)) {
    for (const auto& [idx, v] : values_) {
        if (idx == 0) throw DomainError("log field components start at index 1 (h_0 = 0)");
        if (v.context() != ctx_) throw ContextMismatch();
        if (!v.is_zero() && v.valuation() < ctx_.exp_min_valuation())
            throw DomainError("log field component outside the exp_p convergence ball");
    }
}

PadicNumber LogField::at(std::uint32_t index) const {
    auto it = values_.find(index);
    return it != values_.end() ? it->second : PadicNumber::zero(ctx_);
}

LogField LogField::with(std::uint32_t index, PadicNumber value) const {
    auto values = values_;
    values.insert_or_assign(index, std::move(value));
    return LogField(ctx_, std::move(values));
}

LocalMapCache::LocalMapCache(const C0Vector& x, const PadicNumber& theta)
    : x_(&x),
      sum_(x.tail_sum()),
      theta_minus_one_(theta - PadicNumber::from_integer(x.context(), 1)),
      sum_plus_one_(sum_ + PadicNumber::from_integer(x.context(), 1)),
      inv_denominator_(PadicNumber::zero(x.context())) {
    if (theta.context() != x.context()) throw ContextMismatch();
    const PadicNumber den = sum_ + theta;
    if (den.is_zero() || den.valuation() != 0) throw SingularDenominator();
    inv_denominator_ = PadicNumber::from_integer(x.context(), 1) / den;
}

PadicNumber LocalMapCache::apply(std::uint32_t index) const {
    return (theta_minus_one_ * x_->at(index) + sum_plus_one_) * inv_denominator_;
}

PadicNumber local_map(std::uint32_t index, const C0Vector& x, const PadicNumber& theta) {
    return LocalMapCache(x, theta).apply(index);
}

namespace {

void require_in_ball(const C0Vector& x) {
    if (!x.in_unit_fraction_ball()) throw DomainError("argument must lie in the ball ||x|| <= 1/p");
}

std::int64_t result_tail(const Weight& w, int q) {
    return std::min<std::int64_t>(w.decay(static_cast<std::uint32_t>(q)), Weight::kExactDecay / 2);
}

}  // namespace

C0Vector global_map(const C0Vector& x, const Weight& w, const ModelParams& params) {
    w.require_ratio_condition();
    require_in_ball(x);
    const PadicContext& ctx = x.context();
    const int q = w.support_cutoff(ctx.precision());
    const LocalMapCache maps(x, params.theta());
    const auto k = static_cast<std::uint64_t>(params.order());
    C0Vector::Entries entries;
    for (std::uint32_t i = 1; i < static_cast<std::uint32_t>(q); ++i)
        entries.emplace(i, w.value(i) * maps.apply(i).pow(k));
    return C0Vector(ctx, std::move(entries), result_tail(w, q));
}

SolveResult fixed_point_solve(const Weight& w, const ModelParams& params, int target_precision) {
    w.require_ratio_condition();
    const PadicContext& ctx = params.context();
    const int q = w.support_cutoff(ctx.precision());
    C0Vector::Entries start;
    for (std::uint32_t i = 1; i < static_cast<std::uint32_t>(q); ++i) {
        const PadicNumber v = w.value(i);
        if (!v.is_zero()) start.emplace(i, v);
    }
    C0Vector x(ctx, std::move(start), result_tail(w, q));

    const std::int64_t step = params.contraction_factor().exponent();
    const int max_iterations = static_cast<int>((target_precision + step - 1) / step) + 4;
    std::vector<Norm> deltas;
    for (int iter = 1; iter <= max_iterations; ++iter) {
        C0Vector next = global_map(x, w, params);
        const Norm delta = distance(next, x);
        deltas.push_back(delta);
        x = std::move(next);
        if (delta.is_zero() || delta.exponent() >= target_precision)
            return SolveResult{BoundaryField(std::move(x)), iter, delta, std::move(deltas)};
    }
    throw NonConvergence("fixed-point iteration failed to reach the target precision (internal inconsistency)");
}

Weight invert_weight(const BoundaryField& target, const ModelParams& params) {
    const C0Vector& hat = target.hat;
    const PadicContext& ctx = hat.context();
    const LocalMapCache maps(hat, params.theta());
    const auto k = static_cast<std::uint64_t>(params.order());
    std::uint32_t top = 0;
    for (const auto& [idx, v] : hat.entries()) top = std::max(top, idx);
    std::vector<PadicNumber> values;
    values.reserve(top + 1);
    values.push_back(PadicNumber::from_integer(ctx, 1));
    for (std::uint32_t i = 1; i <= top; ++i) {
        const PadicNumber den = maps.apply(i).pow(k);
        if (den.is_zero() || den.valuation() != 0) throw SingularDenominator();
        values.push_back(hat.at(i) / den);
    }
    return Weight::explicit_list(ctx, std::move(values), hat.tail_exponent(), 0);
}

BoundaryField hat_from_log(const LogField& h, const Weight& w) {
    const PadicContext& ctx = h.context();
    const int q = w.support_cutoff(ctx.precision());
    C0Vector::Entries entries;
    for (std::uint32_t i = 1; i < static_cast<std::uint32_t>(q); ++i)
        entries.emplace(i, exp_p(h.at(i)) * w.value(i));
    return BoundaryField(C0Vector(ctx, std::move(entries), result_tail(w, q)));
}

LogField log_from_hat(const BoundaryField& hat, const Weight& w) {
    const PadicContext& ctx = hat.hat.context();
    std::map<std::uint32_t, PadicNumber> values;
    for (const auto& [idx, v] : hat.hat.entries()) {
        const PadicNumber lam = w.value(idx);
        if (lam.is_zero()) throw DivisionByZero();
        values.emplace(idx, log_p(v / lam));
    }
    return LogField(ctx, std::move(values));
}

BoundaryField backward_step(const CayleyTree& tree, std::int64_t vertex,
                            const std::vector<BoundaryField>& successor_fields,
                            const EdgeCouplings& couplings, const Weight& w) {
    w.require_ratio_condition();
    const std::vector<std::int64_t> children = tree.successors(vertex);
    if (children.size() != successor_fields.size())
        throw DomainError("successor field count does not match the vertex degree");
    const PadicContext& ctx = w.context();
    const int q = w.support_cutoff(ctx.precision());

    std::vector<LocalMapCache> maps;
    maps.reserve(children.size());
    for (std::size_t m = 0; m < children.size(); ++m)
        maps.emplace_back(successor_fields[m].hat, couplings.theta(vertex, children[m]));

    C0Vector::Entries entries;
    for (std::uint32_t i = 1; i < static_cast<std::uint32_t>(q); ++i) {
        PadicNumber prod = maps[0].apply(i);
        for (std::size_t m = 1; m < maps.size(); ++m) prod = prod * maps[m].apply(i);
        entries.emplace(i, w.value(i) * prod);
    }
    return BoundaryField(C0Vector(ctx, std::move(entries), result_tail(w, q)));
}

CascadeResult uniqueness_cascade(const CayleyTree& tree, const std::vector<BoundaryField>& seeds_a,
                                 const std::vector<BoundaryField>& seeds_b,
                                 const EdgeCouplings& couplings, const Weight& w) {
    const int depth = tree.depth();
    if (depth < 1) throw DomainError("cascade needs depth at least 1");
    const auto leaves = static_cast<std::size_t>(tree.sphere_size(depth));
    if (seeds_a.size() != leaves || seeds_b.size() != leaves)
        throw DomainError("seed assignments must cover the outermost sphere");

    Norm initial = Norm::zero(w.context().prime());
    for (std::size_t j = 0; j < leaves; ++j)
        initial = Norm::max(initial, distance(seeds_a[j].hat, seeds_b[j].hat));

    std::vector<BoundaryField> cur_a = seeds_a;
    std::vector<BoundaryField> cur_b = seeds_b;
    for (int level = depth - 1; level >= 0; --level) {
        std::vector<BoundaryField> next_a;
        std::vector<BoundaryField> next_b;
        const std::int64_t offset = tree.level_offset(level);
        const std::int64_t child_offset = tree.level_offset(level + 1);
        for (std::int64_t v = offset; v < offset + tree.sphere_size(level); ++v) {
            const std::vector<std::int64_t> children = tree.successors(v);
            std::vector<BoundaryField> fields_a;
            std::vector<BoundaryField> fields_b;
            for (std::int64_t c : children) {
                fields_a.push_back(cur_a[static_cast<std::size_t>(c - child_offset)]);
                fields_b.push_back(cur_b[static_cast<std::size_t>(c - child_offset)]);
            }
            next_a.push_back(backward_step(tree, v, fields_a, couplings, w));
            next_b.push_back(backward_step(tree, v, fields_b, couplings, w));
        }
        cur_a = std::move(next_a);
        cur_b = std::move(next_b);
    }

    const Norm root_diff = distance(cur_a[0].hat, cur_b[0].hat);
    const Norm theta_bound = initial * couplings.max_contraction_factor().pow(depth);
    const Norm p_bound = initial * Norm::of(w.context().prime(), 1).pow(depth);
    return CascadeResult{initial, root_diff, depth, root_diff <= theta_bound, root_diff <= p_bound};
}

}  // namespace potts
