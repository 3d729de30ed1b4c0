#include "potts/measure.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <thread>

namespace potts {

namespace {

std::int64_t checked_config_count(int cutoff, std::int64_t volume, std::int64_t budget) {
    std::int64_t total = 1;
    for (std::int64_t i = 0; i < volume; ++i) {
        if (total > budget / cutoff)
            throw StateSpaceTooLarge("state space " + std::to_string(cutoff) + "^" +
                                     std::to_string(volume) + " exceeds the enumeration budget " +
                                     std::to_string(budget));
        total *= cutoff;
    }
    return total;
}

// Per-thread evaluation state: the exponent of a configuration is decided
// by its monochromatic edge count and sphere state counts, the lambda part
// by the full state counts; both are memoized on those keys.
class Builder {
public:
    Builder(const ModelParams& params, const Weight& w, const LogField& h, const CayleyTree& tree,
            int cutoff)
        : params_(params), tree_(tree), cutoff_(cutoff) {
        const auto q = static_cast<std::uint32_t>(cutoff);
        lambda_.reserve(q);
        hvals_.reserve(q);
        for (std::uint32_t i = 0; i < q; ++i) {
            lambda_.push_back(w.value(i));
            hvals_.push_back(h.at(i));
        }
        parent_.resize(static_cast<std::size_t>(tree.size()), -1);
        for (std::int64_t v = 1; v < tree.size(); ++v) parent_[static_cast<std::size_t>(v)] = tree.parent(v);
        sphere_offset_ = tree.level_offset(tree.depth());
    }

    struct Parts {
        PadicNumber exponent;
        PadicNumber exp_value;
        PadicNumber lambda_product;
    };

    Parts parts_of(const Configuration& config) {
        std::uint32_t mono = 0;
        for (std::size_t v = 1; v < config.size(); ++v)
            if (config[v] == config[parent_[v]]) ++mono;
        std::vector<std::uint32_t> ekey(static_cast<std::size_t>(cutoff_) + 1, 0);
        ekey[0] = mono;
        for (std::size_t v = static_cast<std::size_t>(sphere_offset_); v < config.size(); ++v)
            ++ekey[1 + config[v]];
        std::vector<std::uint32_t> lkey(static_cast<std::size_t>(cutoff_), 0);
        for (std::uint8_t s : config) ++lkey[s];

        auto eit = exp_memo_.find(ekey);
        if (eit == exp_memo_.end()) {
            const PadicContext& ctx = params_.context();
            PadicNumber e = PadicNumber::from_integer(ctx, mono) * params_.coupling();
            for (int s = 0; s < cutoff_; ++s)
                if (ekey[static_cast<std::size_t>(s) + 1] != 0)
                    e = e + PadicNumber::from_integer(ctx, ekey[static_cast<std::size_t>(s) + 1]) *
                                hvals_[static_cast<std::size_t>(s)];
            PadicNumber ev = exp_p(e);
            eit = exp_memo_.emplace(std::move(ekey), std::pair{std::move(e), std::move(ev)}).first;
        }
        auto lit = lambda_memo_.find(lkey);
        if (lit == lambda_memo_.end()) {
            PadicNumber prod = PadicNumber::from_integer(params_.context(), 1);
            for (int s = 0; s < cutoff_; ++s)
                if (lkey[static_cast<std::size_t>(s)] != 0)
                    prod = prod * lambda_[static_cast<std::size_t>(s)].pow(lkey[static_cast<std::size_t>(s)]);
            lit = lambda_memo_.emplace(std::move(lkey), std::move(prod)).first;
        }
        return Parts{eit->second.first, eit->second.second, lit->second};
    }

private:
    const ModelParams& params_;
    const CayleyTree& tree_;
    int cutoff_;
    std::int64_t sphere_offset_ = 0;
    std::vector<PadicNumber> lambda_;
    std::vector<PadicNumber> hvals_;
    std::vector<std::int64_t> parent_;
    std::map<std::vector<std::uint32_t>, std::pair<PadicNumber, PadicNumber>> exp_memo_;
    std::map<std::vector<std::uint32_t>, PadicNumber> lambda_memo_;
};

Configuration decode_config(std::uint64_t index, int cutoff, std::int64_t volume) {
    Configuration c(static_cast<std::size_t>(volume));
    for (std::int64_t j = volume - 1; j >= 0; --j) {
        c[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(index % static_cast<std::uint64_t>(cutoff));
        index /= static_cast<std::uint64_t>(cutoff);
    }
    return c;
}

void validate_inputs(const ModelParams& params, const Weight& w, const LogField& h, int depth,
                     int cutoff) {
    if (params.context() != w.context() || params.context() != h.context()) throw ContextMismatch();
    if (depth < 1) throw DomainError("measures start at depth 1");
    if (cutoff < 1 || cutoff > 255) throw DomainError("alphabet cutoff must be in [1, 255]");
}

}  // namespace

Norm FiniteVolumeMeasure::truncation_bound() const {
    if (truncation_exponent_ >= Weight::kExactDecay) return Norm::zero(partition_.context().prime());
    return Norm::of(partition_.context().prime(), truncation_exponent_);
}

Configuration FiniteVolumeMeasure::config_of(std::uint64_t index) const {
    return decode_config(index, cutoff_, volume_);
}

std::uint64_t FiniteVolumeMeasure::index_of(const Configuration& config) const {
    std::uint64_t idx = 0;
    for (std::uint8_t s : config) idx = idx * static_cast<std::uint64_t>(cutoff_) + s;
    return idx;
}

PadicNumber hamiltonian(const Configuration& config, const CayleyTree& tree,
                        const EdgeCouplings& couplings) {
    PadicNumber sum = PadicNumber::zero(couplings.context());
    for (const auto& [parent, child] : edges(tree, tree.depth()))
        if (config[static_cast<std::size_t>(parent)] == config[static_cast<std::size_t>(child)])
            sum = sum + couplings.coupling(parent, child);
    return sum;
}

PadicNumber hamiltonian(const Configuration& config, const CayleyTree& tree, const ModelParams& params) {
    long long mono = 0;
    for (std::int64_t v = 1; v < tree.size(); ++v)
        if (config[static_cast<std::size_t>(v)] == config[static_cast<std::size_t>(tree.parent(v))]) ++mono;
    return PadicNumber::from_integer(params.context(), mono) * params.coupling();
}

FiniteVolumeMeasure build_measure(const ModelParams& params, const Weight& w, const LogField& h,
                                  int depth, int cutoff, const BuildOptions& options) {
    validate_inputs(params, w, h, depth, cutoff);
    const CayleyTree tree(params.order(), depth);
    const std::int64_t volume = tree.size();
    const std::int64_t total = checked_config_count(cutoff, volume, options.budget);

    FiniteVolumeMeasure m;
    m.depth_ = depth;
    m.order_ = params.order();
    m.cutoff_ = cutoff;
    m.volume_ = volume;
    m.truncation_exponent_ = w.min_decay_from(static_cast<std::uint32_t>(cutoff));
    std::vector<PadicNumber> raw;
    raw.reserve(static_cast<std::size_t>(total));

    const int threads = std::max(1, options.threads);
    if (threads == 1 || total < 4096) {
        Builder builder(params, w, h, tree, cutoff);
        PadicNumber z = PadicNumber::zero(params.context());
        for (std::int64_t idx = 0; idx < total; ++idx) {
            auto parts = builder.parts_of(decode_config(static_cast<std::uint64_t>(idx), cutoff, volume));
            PadicNumber weight = parts.exp_value * parts.lambda_product;
            z = z + weight;
            raw.push_back(std::move(weight));
        }
        m.partition_ = z;
    } else {
        const std::int64_t chunk = (total + threads - 1) / threads;
        std::vector<std::vector<PadicNumber>> slices(static_cast<std::size_t>(threads));
        std::vector<PadicNumber> partial(static_cast<std::size_t>(threads),
                                         PadicNumber::zero(params.context()));
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                const std::int64_t lo = t * chunk;
                const std::int64_t hi = std::min<std::int64_t>(total, lo + chunk);
                if (lo >= hi) return;
                Builder builder(params, w, h, tree, cutoff);
                PadicNumber z = PadicNumber::zero(params.context());
                auto& slice = slices[static_cast<std::size_t>(t)];
                slice.reserve(static_cast<std::size_t>(hi - lo));
                for (std::int64_t idx = lo; idx < hi; ++idx) {
                    auto parts =
                        builder.parts_of(decode_config(static_cast<std::uint64_t>(idx), cutoff, volume));
                    PadicNumber weight = parts.exp_value * parts.lambda_product;
                    z = z + weight;
                    slice.push_back(std::move(weight));
                }
                partial[static_cast<std::size_t>(t)] = std::move(z);
            });
        }
        for (auto& th : pool) th.join();
        PadicNumber z = PadicNumber::zero(params.context());
        for (int t = 0; t < threads; ++t) {
            z = z + partial[static_cast<std::size_t>(t)];
            for (auto& v : slices[static_cast<std::size_t>(t)]) raw.push_back(std::move(v));
        }
        m.partition_ = z;
    }

    const PadicNumber inv_z = PadicNumber::from_integer(params.context(), 1) / m.partition_;
    m.table_.reserve(raw.size());
    for (const auto& weight : raw) m.table_.push_back(weight * inv_z);
    return m;
}

Norm compatibility_check(const ModelParams& params, const Weight& w, const LogField& h, int depth,
                         int cutoff, const BuildOptions& options) {
    if (depth < 2) throw DomainError("compatibility relates depth n >= 2 to depth n-1");
    const FiniteVolumeMeasure outer = build_measure(params, w, h, depth, cutoff, options);
    const FiniteVolumeMeasure inner = build_measure(params, w, h, depth - 1, cutoff, options);
    const std::uint64_t stride = outer.count() / inner.count();
    Norm residual = Norm::zero(params.context().prime());
    for (std::uint64_t base = 0; base < inner.count(); ++base) {
        PadicNumber marginal = PadicNumber::zero(params.context());
        for (std::uint64_t ext = 0; ext < stride; ++ext)
            marginal = marginal + outer.mu(base * stride + ext);
        residual = Norm::max(residual, (marginal - inner.mu(base)).norm());
    }
    return residual;
}

PartitionClosedForm closed_form_partition(const BoundaryField& hat, const Weight& w,
                                          const ModelParams& params, int depth) {
    if (depth < 1) throw DomainError("partition functions start at depth 1");
    const PadicContext& ctx = params.context();
    const PadicNumber one = PadicNumber::from_integer(ctx, 1);
    const LocalMapCache maps(hat.hat, params.theta());
    const PadicNumber d = maps.series_sum() + params.theta();
    PadicNumber sum_hf = PadicNumber::zero(ctx, hat.hat.tail_exponent());
    for (const auto& [idx, value] : hat.hat.entries()) sum_hf = sum_hf + value * maps.apply(idx);
    // lambda(0)^k is retained for shape; h_0 = 0 and lambda(0) = 1 are the
    // global normalizations, so the exp factor is exactly 1.
    const auto k = static_cast<std::uint64_t>(params.order());
    PadicNumber a = w.value(0).pow(k) * d.pow(k);
    return PartitionClosedForm{std::move(a), ball_size(params.order(), depth - 1), d * (one + sum_hf)};
}

BoundednessResult boundedness_check(const FiniteVolumeMeasure& measure) {
    const std::uint64_t n = measure.count();
    Norm max = Norm::zero(measure.partition().context().prime());
    for (std::uint64_t i = 0; i < n; ++i) max = Norm::max(max, measure.mu(i).norm());
    return BoundednessResult{max, max <= Norm::of(measure.partition().context().prime(), 0)};
}

Norm gibbs_norm_diff(const FiniteVolumeMeasure& a, const FiniteVolumeMeasure& b) {
    if (a.count() != b.count()) throw DomainError("measure tables have different shapes");
    Norm max = Norm::zero(a.partition().context().prime());
    for (std::uint64_t i = 0; i < a.count(); ++i) max = Norm::max(max, (a.mu(i) - b.mu(i)).norm());
    return max;
}

ContinuityResult continuity_check(const Weight& lambda, const Weight& kappa, const ModelParams& params,
                                  int depth_cap, int cutoff, const BuildOptions& options) {
    const int target = params.context().precision();
    const SolveResult sl = fixed_point_solve(lambda, params, target);
    const SolveResult sk = fixed_point_solve(kappa, params, target);
    const Norm wdist = weight_distance(lambda, kappa);
    const Norm fdist = distance(sl.field.hat, sk.field.hat);
    const LogField hl = log_from_hat(sl.field, lambda);
    const LogField hk = log_from_hat(sk.field, kappa);
    Norm mdist = Norm::zero(params.context().prime());
    for (int n = 1; n <= depth_cap; ++n) {
        const FiniteVolumeMeasure ml = build_measure(params, lambda, hl, n, cutoff, options);
        const FiniteVolumeMeasure mk = build_measure(params, kappa, hk, n, cutoff, options);
        mdist = Norm::max(mdist, gibbs_norm_diff(ml, mk));
    }
    return ContinuityResult{wdist, fdist, fdist <= wdist, fdist == wdist, mdist, mdist <= wdist};
}

ProductMeasure product_measure(const FiniteVolumeMeasure& measure, const Weight& w) {
    const PadicContext& ctx = measure.partition().context();
    const PadicNumber inv_z = PadicNumber::from_integer(ctx, 1) / measure.partition();
    std::vector<PadicNumber> lambda;
    for (int s = 0; s < measure.cutoff(); ++s) lambda.push_back(w.value(static_cast<std::uint32_t>(s)));
    ProductMeasure pm;
    pm.table.reserve(measure.count());
    for (std::uint64_t idx = 0; idx < measure.count(); ++idx) {
        const Configuration cfg = measure.config_of(idx);
        PadicNumber prod = PadicNumber::from_integer(ctx, 1);
        for (std::uint8_t s : cfg) prod = prod * lambda[s];
        pm.table.push_back(prod * inv_z);
    }
    return pm;
}

LimitResult limit_check(const ModelParams& params, const Weight& w, int depth, int cutoff,
                        const BuildOptions& options) {
    const PadicContext& ctx = params.context();
    const SolveResult solved = fixed_point_solve(w, params, ctx.precision());
    const LogField h = log_from_hat(solved.field, w);
    const FiniteVolumeMeasure measure = build_measure(params, w, h, depth, cutoff, options);
    const ProductMeasure pm = product_measure(measure, w);

    const CayleyTree tree(params.order(), depth);
    Builder builder(params, w, h, tree, cutoff);
    const PadicNumber one = PadicNumber::from_integer(ctx, 1);

    LimitResult r{0, measure.count(), Norm::zero(ctx.prime()), false, false};
    for (std::uint64_t idx = 0; idx < measure.count(); ++idx) {
        auto parts = builder.parts_of(measure.config_of(idx));
        const bool member = parts.exponent.is_zero() ? parts.exponent.abs_precision() >= depth
                                                     : parts.exponent.valuation() >= depth;
        if (!member) continue;
        ++r.members;
        if (pm.table[idx].is_zero()) throw DivisionByZero();
        const PadicNumber ratio = measure.mu(idx) / pm.table[idx];
        r.max_deviation = Norm::max(r.max_deviation, (ratio - one).norm());
    }
    r.vacuous = r.members == 0;
    r.pass = r.vacuous || r.max_deviation <= Norm::of(ctx.prime(), depth);
    return r;
}

void write_measure_csv(std::ostream& out, const FiniteVolumeMeasure& measure) {
    const PadicContext& ctx = measure.partition().context();
    out << "# p=" << ctx.prime() << " N=" << ctx.precision() << " k=" << measure.order()
        << " n=" << measure.depth() << " q=" << measure.cutoff() << " |V_n|=" << measure.volume()
        << " rows=" << measure.count() << "\n";
    out << "# Z = " << measure.partition().str() << "\n";
    const Norm tb = measure.truncation_bound();
    out << "# truncation = " << (tb.is_zero() ? std::string("exact") : tb.str()) << "\n";
    out << "index,configuration,mu\n";
    for (std::uint64_t idx = 0; idx < measure.count(); ++idx) {
        const Configuration cfg = measure.config_of(idx);
        out << idx << ",\"";
        for (std::size_t j = 0; j < cfg.size(); ++j) {
            if (j) out << ",";
            out << static_cast<int>(cfg[j]);
        }
        out << "\",\"" << measure.mu(idx).str() << "\"\n";
    }
}

}  // namespace potts
