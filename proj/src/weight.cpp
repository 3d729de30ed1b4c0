#include "potts/weight.hpp"

#include <algorithm>

namespace potts {

void Weight::push_value(PadicNumber v) {
    // an inexact zero only certifies |value| <= p^{-abs_precision}
    decay_.push_back(v.is_zero() ? std::min<std::int64_t>(v.abs_precision(), kExactDecay)
                                 : v.valuation());
    values_.push_back(std::move(v));
}

void Weight::validate() const {
    if (values_.empty()) throw DomainError("weight needs at least lambda(0)");
    const PadicNumber one = PadicNumber::from_integer(ctx_, 1);
    if (!eq_at_precision(values_[0], one, ctx_.precision()))
        throw DomainError("weights are normalized to lambda(0) = 1");
    if (tail_b_ < 0) throw DomainError("decay certificate must be nondecreasing");
}

Weight Weight::geometric(const PadicContext& ctx) {
    Weight w(ctx, WeightFamily::Geometric);
    const PadicNumber p = PadicNumber::from_integer(ctx, static_cast<long long>(ctx.prime()));
    PadicNumber cur = PadicNumber::from_integer(ctx, 1);
    for (int i = 0; i < ctx.precision(); ++i) {
        w.push_value(cur);
        cur = cur * p;
    }
    w.tail_a_ = 0;
    w.tail_b_ = 1;
    w.validate();
    return w;
}

Weight Weight::paper_example(const ModelParams& params) {
    // lambda(n) = p^n * ((p(1-theta)+theta) / ((theta-1) p^n (1-p) + 1))^k,
    // the weight whose translation-invariant boundary field is p^n.
    const PadicContext& ctx = params.context();
    Weight w(ctx, WeightFamily::PaperExample);
    const PadicNumber one = PadicNumber::from_integer(ctx, 1);
    const PadicNumber p = PadicNumber::from_integer(ctx, static_cast<long long>(ctx.prime()));
    const PadicNumber& theta = params.theta();
    const PadicNumber numerator = p * (one - theta) + theta;
    const PadicNumber one_minus_p = one - p;
    const PadicNumber theta_minus_one = theta - one;
    const auto k = static_cast<std::uint64_t>(params.order());
    w.push_value(one);
    PadicNumber pn = one;
    for (int n = 1; n < ctx.precision(); ++n) {
        pn = pn * p;
        const PadicNumber den = theta_minus_one * pn * one_minus_p + one;
        w.push_value(pn * (numerator / den).pow(k));
    }
    w.tail_a_ = 0;
    w.tail_b_ = 1;
    w.validate();
    return w;
}

Weight Weight::explicit_list(const PadicContext& ctx, std::vector<PadicNumber> values,
                             std::int64_t tail_a, std::int64_t tail_b) {
    Weight w(ctx, WeightFamily::Explicit);
    for (auto& v : values) {
        if (v.context() != ctx) throw ContextMismatch();
        w.push_value(std::move(v));
    }
    w.tail_a_ = tail_a;
    w.tail_b_ = tail_b;
    w.validate();
    return w;
}

std::string Weight::family_name() const {
    switch (family_) {
        case WeightFamily::Explicit: return "explicit";
        case WeightFamily::Geometric: return "geometric";
        case WeightFamily::PaperExample: return "paper-example";
    }
    return "?";
}

PadicNumber Weight::value(std::uint32_t index) const {
    if (index < values_.size()) return values_[index];
    return PadicNumber::zero(ctx_, decay(index));
}

std::int64_t Weight::decay(std::uint32_t index) const {
    if (index < decay_.size()) return decay_[index];
    if (tail_b_ == 0) return tail_a_;
    const std::int64_t d = tail_a_ + tail_b_ * static_cast<std::int64_t>(index);
    return std::min<std::int64_t>(d, kExactDecay);
}

int Weight::support_cutoff(std::int64_t target) const {
    std::int64_t q;
    if (tail_b_ == 0) {
        if (tail_a_ < target) throw ConfigError("weight decay certificate never reaches the requested precision");
        q = static_cast<std::int64_t>(values_.size());
    } else {
        std::int64_t from_tail = (target - tail_a_ + tail_b_ - 1) / tail_b_;
        q = std::max<std::int64_t>(static_cast<std::int64_t>(values_.size()), from_tail);
    }
    while (q > 1 && decay(static_cast<std::uint32_t>(q - 1)) >= target) --q;
    return static_cast<int>(std::max<std::int64_t>(q, 1));
}

std::int64_t Weight::min_decay_from(std::uint32_t q) const {
    std::int64_t min = decay(q);
    for (std::uint32_t i = q; i < decay_.size(); ++i) min = std::min(min, decay_[i]);
    if (tail_b_ >= 0) {
        const auto tail_start = static_cast<std::int64_t>(std::max<std::uint32_t>(q, static_cast<std::uint32_t>(decay_.size())));
        min = std::min(min, tail_b_ == 0 ? tail_a_ : tail_a_ + tail_b_ * tail_start);
    }
    return min;
}

bool Weight::ratio_condition() const {
    for (std::size_t i = 1; i < decay_.size(); ++i)
        if (decay_[i] < 1) return false;
    return tail_a_ + tail_b_ * static_cast<std::int64_t>(decay_.size()) >= 1;
}

void Weight::require_ratio_condition() const {
    if (!ratio_condition()) throw ConditionL1Violated();
}

Weight Weight::perturbed(std::uint32_t index, const PadicNumber& delta) const {
    if (index == 0) throw DomainError("lambda(0) is pinned to 1");
    std::vector<PadicNumber> values;
    const std::uint32_t count = std::max<std::uint32_t>(static_cast<std::uint32_t>(values_.size()), index + 1);
    values.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) values.push_back(i == index ? value(i) + delta : value(i));
    return explicit_list(ctx_, std::move(values), tail_a_, tail_b_);
}

Weight Weight::truncated(int q) const {
    if (q < 1) throw DomainError("alphabet cutoff must be at least 1");
    std::vector<PadicNumber> values;
    values.reserve(static_cast<std::size_t>(q));
    for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(q); ++i) values.push_back(value(i));
    return explicit_list(ctx_, std::move(values), kExactDecay, 0);
}

Norm weight_distance(const Weight& a, const Weight& b) {
    if (a.context() != b.context()) throw ContextMismatch();
    const std::uint32_t count =
        static_cast<std::uint32_t>(std::max(a.explicit_count(), b.explicit_count()));
    Norm max = Norm::zero(a.context().prime());
    for (std::uint32_t i = 0; i < count; ++i) max = Norm::max(max, (a.value(i) - b.value(i)).norm());
    return max;
}

}  // namespace potts
