#include "potts/suites.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

namespace potts {

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

nlohmann::json params_json(std::uint64_t p, int k, const std::string& j, int n, int q, int precision) {
    return nlohmann::json{{"p", p}, {"k", k}, {"J", j}, {"n", n}, {"q", q}, {"N", precision}};
}

PadicNumber random_unit_ball(const PadicContext& ctx, std::mt19937_64& rng, std::int64_t vmin,
                             std::int64_t vmax) {
    std::uniform_int_distribution<std::int64_t> vdist(vmin, vmax);
    std::uniform_int_distribution<std::uint64_t> ddist(0, ctx.prime() - 1);
    const std::int64_t v = vdist(rng);
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(ctx.precision()));
    digits[0] = 1 + ddist(rng) % (ctx.prime() - 1);
    for (std::size_t i = 1; i < digits.size(); ++i) digits[i] = ddist(rng);
    return PadicNumber::from_unit_digits(ctx, v, std::move(digits), v + ctx.precision());
}

C0Vector random_ball_vector(const PadicContext& ctx, std::mt19937_64& rng, int max_support) {
    std::uniform_int_distribution<int> count(0, max_support);
    std::uniform_int_distribution<std::uint32_t> index(1, static_cast<std::uint32_t>(2 * max_support));
    C0Vector::Entries entries;
    const int n = count(rng);
    for (int i = 0; i < n; ++i)
        entries.insert_or_assign(index(rng), random_unit_ball(ctx, rng, 1, std::max<std::int64_t>(2, ctx.precision() / 3)));
    return C0Vector(ctx, std::move(entries), ctx.precision());
}

struct Model {
    PadicContext ctx;
    ModelParams params;
    std::string coupling_str;
};

Model make_model(const SuiteConfig& cfg, std::uint64_t p, int k, long long default_j = 0) {
    const PadicContext ctx(p, cfg.precision.value_or(32));
    PadicNumber j = cfg.coupling ? PadicNumber::parse(ctx, *cfg.coupling)
                                 : PadicNumber::from_integer(ctx, default_j == 0
                                                                      ? static_cast<long long>(p)
                                                                      : default_j);
    std::string j_str = cfg.coupling.value_or(std::to_string(default_j == 0 ? static_cast<long long>(p) : default_j));
    return Model{ctx, ModelParams::make(ctx, k, j), std::move(j_str)};
}

std::vector<std::uint64_t> primes_for(const SuiteConfig& cfg) {
    if (cfg.prime) return {*cfg.prime};
    return {3, 5, 7};
}

std::vector<int> orders_for(const SuiteConfig& cfg) {
    if (cfg.order) return {*cfg.order};
    return {2, 3};
}

BuildOptions build_options(const SuiteConfig& cfg) {
    BuildOptions o;
    o.budget = cfg.budget;
    o.threads = cfg.threads;
    return o;
}

}  // namespace

std::pair<std::int64_t, std::int64_t> parse_affine(const std::string& text) {
    std::int64_t a = 0, b = 0;
    std::string term;
    std::istringstream in(text);
    bool saw_any = false;
    while (std::getline(in, term, '+')) {
        term.erase(std::remove_if(term.begin(), term.end(), [](unsigned char c) { return std::isspace(c); }),
                   term.end());
        if (term.empty()) continue;
        saw_any = true;
        const auto istar = term.find('i');
        if (istar != std::string::npos) {
            std::string coef = term.substr(0, istar);
            if (!coef.empty() && coef.back() == '*') coef.pop_back();
            b += coef.empty() ? 1 : std::stoll(coef);
            if (istar + 1 != term.size()) throw ParseError("malformed tail rule term: " + term);
        } else {
            a += std::stoll(term);
        }
    }
    if (!saw_any) throw ParseError("empty tail rule");
    return {a, b};
}

Weight load_weight(const std::string& spec, const ModelParams& params) {
    if (spec.empty() || spec == "paper-example") return Weight::paper_example(params);
    if (spec == "geometric") return Weight::geometric(params.context());
    if (spec == "explicit") throw ConfigError("explicit weights need a spec file path");

    std::ifstream in(spec);
    if (!in) throw ConfigError("cannot open weight spec file: " + spec);
    std::string family;
    std::map<std::uint32_t, std::string> lambdas;
    std::string tail_rule;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t\r"));
            s.erase(s.find_last_not_of(" \t\r") + 1);
            return s;
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "family") {
            family = value;
        } else if (key.rfind("lambda.", 0) == 0) {
            lambdas[static_cast<std::uint32_t>(std::stoul(key.substr(7)))] = value;
        } else if (key == "tail_valuation") {
            tail_rule = value;
        }
    }
    if (family == "geometric") return Weight::geometric(params.context());
    if (family == "paper-example") return Weight::paper_example(params);
    if (family != "explicit") throw ConfigError("unknown weight family: " + family);
    if (lambdas.empty()) throw ConfigError("explicit weight lists no lambda values");
    std::vector<PadicNumber> values;
    for (std::uint32_t i = 0; i < lambdas.size(); ++i) {
        auto it = lambdas.find(i);
        if (it == lambdas.end()) throw ConfigError("explicit weight indices must be contiguous from 0");
        values.push_back(PadicNumber::parse(params.context(), it->second));
    }
    const auto [a, b] = parse_affine(tail_rule.empty() ? std::to_string(params.context().precision()) : tail_rule);
    return Weight::explicit_list(params.context(), std::move(values), a, b);
}

std::vector<std::string> suite_names() {
    return {"exp-log", "contraction", "compatibility", "partition",
            "boundedness", "continuity", "limit", "cascade"};
}

bool is_suite_name(const std::string& name) {
    const auto names = suite_names();
    return name == "all" || std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CheckResult> suite_exp_log(const SuiteConfig& cfg) {
    std::vector<CheckResult> out;
    const int precision = cfg.precision.value_or(32);
    const std::int64_t guard = precision - 4;
    for (std::uint64_t p : primes_for(cfg)) {
        Stopwatch clock;
        const PadicContext ctx(p, precision);
        const PadicNumber one = PadicNumber::from_integer(ctx, 1);
        std::mt19937_64 rng(cfg.rng_seed ^ (p * 0x9e3779b97f4a7c15ULL));
        int failures = 0;
        Norm worst = Norm::zero(p);
        for (int rep = 0; rep < 1000; ++rep) {
            const PadicNumber x = rep % 97 == 0 ? PadicNumber::zero(ctx)
                                                : random_unit_ball(ctx, rng, 1, 6);
            const PadicNumber ex = exp_p(x);
            const PadicNumber lx = log_p(one + x);
            if (ex.norm() != Norm::of(p, 0)) ++failures;
            if ((ex - one).norm() != x.norm()) ++failures;
            if (lx.norm() != x.norm()) ++failures;
            const PadicNumber round_a = log_p(ex) - x;
            const PadicNumber round_b = exp_p(lx) - (one + x);
            if (!(round_a.is_zero() ? round_a.abs_precision() >= guard : round_a.valuation() >= guard))
                ++failures;
            if (!(round_b.is_zero() ? round_b.abs_precision() >= guard : round_b.valuation() >= guard))
                ++failures;
            worst = Norm::max(worst, Norm::max(round_a.norm(), round_b.norm()));
        }
        out.push_back(CheckResult{
            "exp-log identities (p=" + std::to_string(p) + ", 1000 samples)",
            params_json(p, 0, "-", 0, 0, precision), worst.str(), failures == 0, clock.ms(),
            failures == 0 ? "norm and round-trip identities exact at guarded precision"
                          : std::to_string(failures) + " identity violations"});
    }
    return out;
}

std::vector<CheckResult> suite_contraction(const SuiteConfig& cfg) {
    std::vector<CheckResult> out;
    const int precision = cfg.precision.value_or(32);

    {  // Lipschitz bound and distance-one identity of the local maps
        Stopwatch clock;
        const Model m = make_model(cfg, cfg.prime.value_or(5), cfg.order.value_or(2));
        const PadicNumber one = PadicNumber::from_integer(m.ctx, 1);
        const Norm lip = m.params.contraction_factor();
        std::mt19937_64 rng(cfg.rng_seed + 1);
        int failures = 0;
        for (int rep = 0; rep < 500; ++rep) {
            const C0Vector x = random_ball_vector(m.ctx, rng, 12);
            const C0Vector y = random_ball_vector(m.ctx, rng, 12);
            const LocalMapCache mx(x, m.params.theta());
            const LocalMapCache my(y, m.params.theta());
            const Norm d = distance(x, y);
            for (std::uint32_t i = 1; i <= 13; ++i) {
                if (!((mx.apply(i) - my.apply(i)).norm() <= lip * d)) ++failures;
                if ((mx.apply(i) - one).norm() != lip) ++failures;
            }
        }
        out.push_back(CheckResult{"local-map contraction (500 random pairs in B)",
                                  params_json(m.ctx.prime(), m.params.order(), m.coupling_str, 0, 0, precision),
                                  lip.str(), failures == 0, clock.ms(),
                                  failures == 0 ? "Lipschitz factor |theta-1| and boundary identity hold"
                                                : std::to_string(failures) + " violations"});
    }

    // worked-example reproduction: the solved field is the power sequence
    for (std::uint64_t p : primes_for(cfg)) {
        for (int k : orders_for(cfg)) {
            Stopwatch clock;
            SuiteConfig grid = cfg;
            grid.coupling.reset();  // the worked example pins J = p per prime
            const Model m = make_model(grid, p, k);
            const Weight w = Weight::paper_example(m.params);
            const SolveResult r = fixed_point_solve(w, m.params, precision - 4);
            bool ok = r.iterations <= 40;
            Norm worst = Norm::zero(p);
            const PadicNumber base = PadicNumber::from_integer(m.ctx, static_cast<long long>(p));
            PadicNumber expected = PadicNumber::from_integer(m.ctx, 1);
            for (std::uint32_t i = 1; i <= 19; ++i) {
                expected = expected * base;
                const PadicNumber diff = r.field.hat.at(i) - expected;
                const std::int64_t need = i <= 8 ? static_cast<std::int64_t>(i) + 20 : 20;
                if (!(diff.is_zero() ? diff.abs_precision() >= need : diff.valuation() >= need)) ok = false;
                worst = Norm::max(worst, diff.norm());
            }
            out.push_back(CheckResult{
                "fixed point reproduces the power field (p=" + std::to_string(p) + ", k=" + std::to_string(k) + ")",
                params_json(p, k, std::to_string(p), 0, 0, precision), worst.str(), ok, clock.ms(),
                "converged in " + std::to_string(r.iterations) + " iterations"});
        }
    }
    return out;
}

std::vector<CheckResult> suite_compatibility(const SuiteConfig& cfg) {
    std::vector<CheckResult> out;
    const int precision = cfg.precision.value_or(32);
    const int depth = cfg.depth.value_or(2);
    const int q = cfg.cutoff.value_or(3);
    const Model m = make_model(cfg, cfg.prime.value_or(5), cfg.order.value_or(2));
    const Weight w = load_weight(cfg.weight.value_or("paper-example"), m.params);
    const Norm guard = Norm::of(m.ctx.prime(), precision - 4);
    const BuildOptions opts = build_options(cfg);

    {  // countable weight: marginalization residual sits below the truncation bound
        Stopwatch clock;
        const SolveResult r = fixed_point_solve(w, m.params, precision);
        LogField h = log_from_hat(r.field, w);
        if (cfg.inject_perturbation)
            h = h.with(1, h.at(1) + PadicNumber::from_integer(m.ctx, static_cast<long long>(m.ctx.prime())));
        const Norm truncation = Norm::of(m.ctx.prime(), w.min_decay_from(static_cast<std::uint32_t>(q)));
        const Norm residual = compatibility_check(m.params, w, h, depth, q, opts);
        out.push_back(CheckResult{"marginalization over the outer sphere (countable weight)",
                                  params_json(m.ctx.prime(), m.params.order(), m.coupling_str, depth, q, precision),
                                  residual.str(), residual <= Norm::max(guard, truncation), clock.ms(),
                                  "allowed: max(guarded precision, truncation " + truncation.str() + ")"});
    }

    {  // alphabet-exact model: the identity holds at guarded precision
        Stopwatch clock;
        const Weight wt = w.truncated(q);
        const SolveResult r = fixed_point_solve(wt, m.params, precision);
        LogField h = log_from_hat(r.field, wt);
        if (cfg.inject_perturbation)
            h = h.with(1, h.at(1) + PadicNumber::from_integer(m.ctx, static_cast<long long>(m.ctx.prime())));
        const Norm residual = compatibility_check(m.params, wt, h, depth, q, opts);
        out.push_back(CheckResult{"marginalization over the outer sphere (exact alphabet)",
                                  params_json(m.ctx.prime(), m.params.order(), m.coupling_str, depth, q, precision),
                                  residual.str(), residual <= guard, clock.ms(), ""});
    }

    {  // negative control: a perturbed field must be detected
        Stopwatch clock;
        const Weight wt = w.truncated(q);
        const SolveResult r = fixed_point_solve(wt, m.params, precision);
        const LogField h = log_from_hat(r.field, wt);
        const LogField bad =
            h.with(1, h.at(1) + PadicNumber::from_integer(m.ctx, static_cast<long long>(m.ctx.prime())));
        const Norm residual = compatibility_check(m.params, wt, bad, depth, q, opts);
        const bool detected = !residual.is_zero() && residual >= Norm::of(m.ctx.prime(), 2);
        out.push_back(CheckResult{"negative control: perturbed field breaks marginalization",
                                  params_json(m.ctx.prime(), m.params.order(), m.coupling_str, depth, q, precision),
                                  residual.str(), detected, clock.ms(),
                                  "expected residual at least p^-2"});
    }
    return out;
}

std::vector<CheckResult> suite_partition(const SuiteConfig& cfg) {
    std::vector<CheckResult> out;
    const int precision = cfg.precision.value_or(32);
    const int depth = cfg.depth.value_or(2);
    const int q = cfg.cutoff.value_or(3);
    const Model m = make_model(cfg, cfg.prime.value_or(5), cfg.order.value_or(2));
    const Weight w = load_weight(cfg.weight.value_or("paper-example"), m.params);
    const std::int64_t guard = precision - 4;
    const BuildOptions opts = build_options(cfg);

    const Weight wt = w.truncated(q);
    const SolveResult rt = fixed_point_solve(wt, m.params, precision);
    const LogField ht = log_from_hat(rt.field, wt);

    {
        Stopwatch clock;
        const FiniteVolumeMeasure mn = build_measure(m.params, wt, ht, depth, q, opts);
        const PartitionClosedForm cf = closed_form_partition(rt.field, wt, m.params, depth);
        const PadicNumber diff = cf.value() - mn.partition();
        const bool equal = diff.is_zero() ? diff.abs_precision() >= guard : diff.valuation() >= guard;
        const bool unit = mn.partition().norm() == Norm::of(m.ctx.prime(), 0) &&
                          cf.value().norm() == Norm::of(m.ctx.prime(), 0);
        out.push_back(CheckResult{"closed-form partition equals brute force (exact alphabet)",
                                  params_json(m.ctx.prime(), m.params.order(), m.coupling_str, depth, q, precision),
                                  diff.norm().str(), equal && unit, clock.ms(),
                                  "|Z| = " + mn.partition().norm().str()});
    }

    {
        Stopwatch clock;
        const FiniteVolumeMeasure m1 = build_measure(m.params, wt, ht, depth - 1, q, opts);
        const FiniteVolumeMeasure m2 = build_measure(m.params, wt, ht, depth, q, opts);
        const PartitionClosedForm cf = closed_form_partition(rt.field, wt, m.params, depth);
        const CayleyTree tree(m.params.order(), depth);
        const PadicNumber lifted =
            cf.a.pow(static_cast<std::uint64_t>(tree.sphere_size(depth - 1))) * m1.partition();
        const PadicNumber diff = lifted - m2.partition();
        const bool equal = diff.is_zero() ? diff.abs_precision() >= guard : diff.valuation() >= guard;
        out.push_back(CheckResult{"one-step partition recursion Z_{n} = a^{|W_{n-1}|} Z_{n-1}",
                                  params_json(m.ctx.prime(), m.params.order(), m.coupling_str, depth, q, precision),
                                  diff.norm().str(), equal, clock.ms(), ""});
    }

    {
        Stopwatch clock;
        const SolveResult r = fixed_point_solve(w, m.params, precision);
        const LogField h = log_from_hat(r.field, w);
        const FiniteVolumeMeasure mn = build_measure(m.params, w, h, depth, q, opts);
        const PartitionClosedForm cf = closed_form_partition(r.field, w, m.params, depth);
        const PadicNumber diff = cf.value() - mn.partition();
        const bool ok = diff.norm() <= mn.truncation_bound() &&
                        mn.partition().norm() == Norm::of(m.ctx.prime(), 0);
        out.push_back(CheckResult{"countable-weight partition matches closed form up to truncation",
                                  params_json(m.ctx.prime(), m.params.order(), m.coupling_str, depth, q, precision),
                                  diff.norm().str(), ok, clock.ms(),
                                  "truncation bound " + mn.truncation_bound().str()});
    }
    return out;
}

std::vector<CheckResult> suite_boundedness(const SuiteConfig& cfg) {
    std::vector<CheckResult> out;
    const int precision = cfg.precision.value_or(32);
    const int depth = cfg.depth.value_or(2);
    const int q = cfg.cutoff.value_or(3);
    const Model m = make_model(cfg, cfg.prime.value_or(5), cfg.order.value_or(2));
    const Weight w = load_weight(cfg.weight.value_or("paper-example"), m.params);

    {
        Stopwatch clock;
        const SolveResult r = fixed_point_solve(w, m.params, precision);
        const LogField h = log_from_hat(r.field, w);
        const FiniteVolumeMeasure mn = build_measure(m.params, w, h, depth, q, build_options(cfg));
        const BoundednessResult b = boundedness_check(mn);
        out.push_back(CheckResult{"measure table bounded by |lambda(0)|^2 = 1",
                                  params_json(m.ctx.prime(), m.params.order(), m.coupling_str, depth, q, precision),
                                  b.max_norm.str(), b.bounded, clock.ms(),
                                  "max |mu(sigma)| over " + std::to_string(mn.count()) + " configurations"});
    }

    {
        Stopwatch clock;
        bool ok = true;
        for (int k = 2; k <= 5; ++k)
            for (int n = 1; n <= 10; ++n)
                if (ball_size(k, n) - static_cast<std::int64_t>(k) * ball_size(k, n - 1) != 2) ok = false;
        out.push_back(CheckResult{"ball growth identity |V_n| - k |V_{n-1}| = 2 (k in 2..5, n in 1..10)",
                                  nlohmann::json::object(), "", ok, clock.ms(), ""});
    }
    return out;
}

std::vector<CheckResult> suite_continuity(const SuiteConfig& cfg) {
    std::vector<CheckResult> out;
    const int precision = cfg.precision.value_or(32);
    const int depth = cfg.depth.value_or(2);
    const int q = cfg.cutoff.value_or(3);
    const Model m = make_model(cfg, cfg.prime.value_or(5), cfg.order.value_or(2));
    const Weight lambda = load_weight(cfg.weight.value_or("paper-example"), m.params);
    const std::int64_t shift = 3;
    const PadicNumber delta =
        PadicNumber::from_integer(m.ctx, static_cast<long long>(m.ctx.prime())).pow(3);
    const Weight kappa = lambda.perturbed(1, delta);

    Stopwatch clock;
    const ContinuityResult r = continuity_check(lambda, kappa, m.params, depth, q, build_options(cfg));
    const double elapsed = clock.ms();
    out.push_back(CheckResult{
        "solved fields move no farther than the weights",
        params_json(m.ctx.prime(), m.params.order(), m.coupling_str, depth, q, precision),
        r.field_dist.str(), r.field_within && r.weight_dist == Norm::of(m.ctx.prime(), shift),
        elapsed / 2,
        std::string("weight distance ") + r.weight_dist.str() +
            (r.field_equality ? "; equality observed" : "; strict inequality observed")});
    out.push_back(CheckResult{
        "per-configuration measure distance bounded by the weight distance",
        params_json(m.ctx.prime(), m.params.order(), m.coupling_str, depth, q, precision),
        r.max_measure_diff.str(), r.measure_within, elapsed / 2,
        "depths 1.." + std::to_string(depth)});
    return out;
}

std::vector<CheckResult> suite_limit(const SuiteConfig& cfg) {
    std::vector<CheckResult> out;
    const int precision = cfg.precision.value_or(32);
    const int q = cfg.cutoff.value_or(3);
    const std::uint64_t p = cfg.prime.value_or(5);
    const int k = cfg.order.value_or(2);
    const std::vector<int> depths = cfg.depth ? std::vector<int>{*cfg.depth} : std::vector<int>{1, 2};
    for (int n : depths) {
        Stopwatch clock;
        // J = p^n forces every configuration into the qualifying set
        long long j = 1;
        for (int i = 0; i < n; ++i) {
            if (j > std::numeric_limits<long long>::max() / static_cast<long long>(p))
                throw ConfigError("p^n overflows the coupling literal at depth " + std::to_string(n));
            j *= static_cast<long long>(p);
        }
        const PadicContext ctx(p, precision);
        const ModelParams params = ModelParams::make(ctx, k, PadicNumber::from_integer(ctx, j));
        const Weight w = load_weight(cfg.weight.value_or("paper-example"), params);
        const LimitResult r = limit_check(params, w, n, q, build_options(cfg));
        const bool forced_all = r.members == r.total;
        out.push_back(CheckResult{
            "measure matches the product measure on the qualifying set (n=" + std::to_string(n) + ")",
            params_json(p, k, std::to_string(j), n, q, precision), r.max_deviation.str(),
            r.pass && forced_all && !r.vacuous, clock.ms(),
            "|A_n| = " + std::to_string(r.members) + " of " + std::to_string(r.total) +
                ", allowed deviation " + Norm::of(p, n).str()});
    }
    return out;
}

std::vector<CheckResult> suite_cascade(const SuiteConfig& cfg) {
    std::vector<CheckResult> out;
    const int precision = cfg.precision.value_or(32);
    const int depth = cfg.depth.value_or(6);
    const Model m = make_model(cfg, cfg.prime.value_or(5), cfg.order.value_or(2));
    const Weight w = load_weight(cfg.weight.value_or("paper-example"), m.params);

    Stopwatch clock;
    const CayleyTree tree(m.params.order(), depth);
    const EdgeCouplings ec = EdgeCouplings::homogeneous(tree, m.params);
    std::mt19937_64 rng(cfg.rng_seed + 9);
    int failures = 0;
    Norm worst_ratio = Norm::zero(m.ctx.prime());
    const int pairs = 50;
    for (int rep = 0; rep < pairs; ++rep) {
        std::vector<BoundaryField> a, b;
        for (std::int64_t i = 0; i < tree.sphere_size(depth); ++i) {
            a.emplace_back(random_ball_vector(m.ctx, rng, 12));
            b.emplace_back(random_ball_vector(m.ctx, rng, 12));
        }
        const CascadeResult r = uniqueness_cascade(tree, a, b, ec, w);
        if (!(r.within_p_bound && r.within_theta_bound)) ++failures;
        worst_ratio = Norm::max(worst_ratio, r.ratio());
    }
    out.push_back(CheckResult{
        "backward recursion contracts random boundary pairs to the root",
        params_json(m.ctx.prime(), m.params.order(), m.coupling_str, depth, 0, precision),
        worst_ratio.str(), failures == 0, clock.ms(),
        std::to_string(pairs) + " seed pairs, required ratio at most " +
            Norm::of(m.ctx.prime(), depth).str()});
    return out;
}

std::vector<CheckResult> run_suite(const std::string& name, const SuiteConfig& config) {
    if (name == "exp-log") return suite_exp_log(config);
    if (name == "contraction") return suite_contraction(config);
    if (name == "compatibility") return suite_compatibility(config);
    if (name == "partition") return suite_partition(config);
    if (name == "boundedness") return suite_boundedness(config);
    if (name == "continuity") return suite_continuity(config);
    if (name == "limit") return suite_limit(config);
    if (name == "cascade") return suite_cascade(config);
    if (name == "all") {
        std::vector<CheckResult> out;
        for (const auto& suite : suite_names()) {
            auto rs = run_suite(suite, config);
            out.insert(out.end(), rs.begin(), rs.end());
        }
        return out;
    }
    throw ConfigError("unknown suite name: " + name);
}

}  // namespace potts
