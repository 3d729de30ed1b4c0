#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "potts/measure.hpp"

using namespace potts;

namespace {

ModelParams make_params(std::uint64_t p, int k, long long coupling = 0) {
    const PadicContext ctx(p, 32);
    if (coupling == 0) coupling = static_cast<long long>(p);
    return ModelParams::make(ctx, k, PadicNumber::from_integer(ctx, coupling));
}

struct Solved {
    Weight weight;
    BoundaryField field;
    LogField h;
};

Solved solve_model(const ModelParams& mp, const Weight& w) {
    SolveResult r = fixed_point_solve(w, mp, mp.context().precision());
    LogField h = log_from_hat(r.field, w);
    return Solved{w, std::move(r.field), std::move(h)};
}

}  // namespace

TEST_CASE("hamiltonian on small balls") {
    const ModelParams mp = make_params(5, 2);
    const CayleyTree tree(2, 1);
    const EdgeCouplings ec = EdgeCouplings::homogeneous(tree, mp);

    const Configuration uniform(4, 0);
    const PadicNumber h_all = hamiltonian(uniform, tree, ec);
    CHECK(eq_at_precision(h_all, PadicNumber::from_integer(mp.context(), 15), 30));  // 3 J = 15

    const Configuration rainbow{0, 1, 2, 3};
    CHECK(hamiltonian(rainbow, tree, ec).is_zero());

    std::mt19937_64 rng(3);
    const CayleyTree t2(2, 2);
    const EdgeCouplings ec2 = EdgeCouplings::homogeneous(t2, mp);
    std::uniform_int_distribution<int> state(0, 3);
    for (int rep = 0; rep < 50; ++rep) {
        Configuration cfg(static_cast<std::size_t>(t2.size()));
        for (auto& s : cfg) s = static_cast<std::uint8_t>(state(rng));
        // edge-scan oracle against the homogeneous fast path
        CHECK(eq_at_precision(hamiltonian(cfg, t2, ec2), hamiltonian(cfg, t2, mp), 30));
    }
}

TEST_CASE("vanishing weight entry gives a point mass") {
    const ModelParams mp = make_params(5, 2);
    const PadicContext& ctx = mp.context();
    std::vector<PadicNumber> vals;
    vals.push_back(PadicNumber::from_integer(ctx, 1));
    vals.push_back(PadicNumber::from_integer(ctx, 0));
    const Weight w = Weight::explicit_list(ctx, std::move(vals), Weight::kExactDecay, 0);
    const FiniteVolumeMeasure m = build_measure(mp, w, LogField(ctx), 1, 2);
    CHECK(m.count() == 16);
    const PadicNumber one = PadicNumber::from_integer(ctx, 1);
    CHECK(eq_at_precision(m.mu(0), one, 28));
    for (std::uint64_t i = 1; i < m.count(); ++i) CHECK(m.mu(i).is_zero());
}

TEST_CASE("normalization and unit partition norm") {
    const ModelParams mp = make_params(5, 2);
    const Solved s = solve_model(mp, Weight::paper_example(mp));
    const FiniteVolumeMeasure m = build_measure(mp, s.weight, s.h, 2, 3);
    CHECK(m.count() == 59049);
    CHECK(m.partition().norm() == Norm::of(5, 0));

    // independent re-summation of the normalized table
    PadicNumber total = PadicNumber::zero(mp.context());
    for (std::uint64_t i = 0; i < m.count(); ++i) total = total + m.mu(i);
    CHECK(eq_at_precision(total, PadicNumber::from_integer(mp.context(), 1), 28));
}

TEST_CASE("enumeration budget is a hard gate") {
    const ModelParams mp = make_params(5, 3);
    const Solved s = solve_model(mp, Weight::paper_example(mp));
    CHECK_THROWS_AS(build_measure(mp, s.weight, s.h, 2, 5), StateSpaceTooLarge);  // 5^17 states
}

TEST_CASE("compatibility holds exactly for the self-consistent truncated model") {
    const ModelParams mp = make_params(5, 2);
    const Solved s = solve_model(mp, Weight::paper_example(mp).truncated(3));
    const Norm residual = compatibility_check(mp, s.weight, s.h, 2, 3);
    CHECK(residual <= Norm::of(5, 28));
}

TEST_CASE("compatibility with the countable weight is limited by truncation only") {
    const ModelParams mp = make_params(5, 2);
    const Solved s = solve_model(mp, Weight::paper_example(mp));
    const FiniteVolumeMeasure m = build_measure(mp, s.weight, s.h, 2, 3);
    CHECK(m.truncation_bound() == Norm::of(5, 3));
    const Norm residual = compatibility_check(mp, s.weight, s.h, 2, 3);
    CHECK(residual <= Norm::max(Norm::of(5, 28), m.truncation_bound()));
}

TEST_CASE("single-state alphabet is trivially compatible") {
    const ModelParams mp = make_params(5, 2);
    const Weight w = Weight::paper_example(mp).truncated(1);
    const Norm residual = compatibility_check(mp, w, LogField(mp.context()), 2, 1);
    CHECK(residual.is_zero());
}

TEST_CASE("perturbed field breaks compatibility at a visible scale") {
    const ModelParams mp = make_params(5, 2);
    const Solved s = solve_model(mp, Weight::paper_example(mp).truncated(3));
    const LogField bad = s.h.with(1, s.h.at(1) + PadicNumber::from_integer(mp.context(), 5));
    const Norm residual = compatibility_check(mp, s.weight, bad, 2, 3);
    CHECK(!residual.is_zero());
    CHECK(residual >= Norm::of(5, 2));
}

TEST_CASE("partition function closed form equals brute force") {
    const ModelParams mp = make_params(5, 2);
    const Solved s = solve_model(mp, Weight::paper_example(mp).truncated(3));

    const PartitionClosedForm cf1 = closed_form_partition(s.field, s.weight, mp, 1);
    const PartitionClosedForm cf2 = closed_form_partition(s.field, s.weight, mp, 2);
    CHECK(cf1.exponent == 1);
    CHECK(cf2.exponent == 4);
    CHECK(cf2.value().norm() == Norm::of(5, 0));

    const FiniteVolumeMeasure m1 = build_measure(mp, s.weight, s.h, 1, 3);
    const FiniteVolumeMeasure m2 = build_measure(mp, s.weight, s.h, 2, 3);
    CHECK(eq_at_precision(cf1.value(), m1.partition(), 28));
    CHECK(eq_at_precision(cf2.value(), m2.partition(), 28));

    // the one-step recursion Z_{n+1} = a^{|W_n|} Z_n, checked on raw sums
    const PadicNumber lifted = cf2.a.pow(3) * m1.partition();  // |W_1| = 3
    CHECK(eq_at_precision(lifted, m2.partition(), 28));
}

TEST_CASE("partition agrees with the factorized transfer-sum oracle") {
    // Independent route: fold the tree level by level with per-state sums
    // instead of enumerating configurations.
    //   leaf_sum[j] = sum_l theta^{delta_jl} eps_l lambda(l)
    //   mid_sum[i]  = sum_j theta^{delta_ij} lambda(j) leaf_sum[j]^k
    //   Z_1 = sum_i lambda(i) leaf_sum[i]^{k+1}
    //   Z_2 = sum_i lambda(i) mid_sum[i]^{k+1}
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
        const ModelParams mp = make_params(p, 2);
        const int q = 3;
        const Solved s = solve_model(mp, Weight::paper_example(mp).truncated(q));
        const PadicContext& ctx = mp.context();
        const auto k = static_cast<std::uint64_t>(mp.order());

        std::vector<PadicNumber> eps, lam;
        for (std::uint32_t j = 0; j < static_cast<std::uint32_t>(q); ++j) {
            eps.push_back(exp_p(s.h.at(j)));
            lam.push_back(s.weight.value(j));
        }
        const auto state_sum = [&](const std::vector<PadicNumber>& inner, std::uint32_t i) {
            PadicNumber acc = PadicNumber::zero(ctx);
            for (std::uint32_t j = 0; j < static_cast<std::uint32_t>(q); ++j) {
                PadicNumber term = lam[j] * inner[j];
                if (i == j) term = term * mp.theta();
                acc = acc + term;
            }
            return acc;
        };
        std::vector<PadicNumber> leaf, mid;
        for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(q); ++i) leaf.push_back(state_sum(eps, i));
        std::vector<PadicNumber> leaf_pow;
        for (const auto& v : leaf) leaf_pow.push_back(v.pow(k));
        for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(q); ++i) mid.push_back(state_sum(leaf_pow, i));

        PadicNumber z1 = PadicNumber::zero(ctx);
        PadicNumber z2 = PadicNumber::zero(ctx);
        for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(q); ++i) {
            z1 = z1 + lam[i] * leaf[i].pow(k + 1);
            z2 = z2 + lam[i] * mid[i].pow(k + 1);
        }

        const FiniteVolumeMeasure m1 = build_measure(mp, s.weight, s.h, 1, q);
        const FiniteVolumeMeasure m2 = build_measure(mp, s.weight, s.h, 2, q);
        CHECK(eq_at_precision(z1, m1.partition(), 28));
        CHECK(eq_at_precision(z2, m2.partition(), 28));

        // spot value: the all-zero configuration carries theta^{|L_2|} / Z_2
        const PadicNumber expected0 = mp.theta().pow(9) / m2.partition();
        CHECK(eq_at_precision(m2.mu(0), expected0, 28));
    }
}

TEST_CASE("compatibility holds across primes on the exact alphabet") {
    for (std::uint64_t p : {3ULL, 7ULL}) {
        const ModelParams mp = make_params(p, 2);
        const Solved s = solve_model(mp, Weight::paper_example(mp).truncated(3));
        CHECK(compatibility_check(mp, s.weight, s.h, 2, 3) <= Norm::of(p, 28));
    }
}

TEST_CASE("countable-weight partition matches closed form up to truncation") {
    const ModelParams mp = make_params(5, 2);
    const Solved s = solve_model(mp, Weight::paper_example(mp));
    const FiniteVolumeMeasure m2 = build_measure(mp, s.weight, s.h, 2, 3);
    const PartitionClosedForm cf = closed_form_partition(s.field, s.weight, mp, 2);
    CHECK(m2.partition().norm() == Norm::of(5, 0));
    CHECK(cf.value().norm() == Norm::of(5, 0));
    CHECK((cf.value() - m2.partition()).norm() <= m2.truncation_bound());
}

TEST_CASE("boundedness of the measure table") {
    const ModelParams mp = make_params(5, 2);
    const Solved s = solve_model(mp, Weight::paper_example(mp));
    const FiniteVolumeMeasure m = build_measure(mp, s.weight, s.h, 2, 3);
    const BoundednessResult b = boundedness_check(m);
    CHECK(b.bounded);
    CHECK(b.max_norm == Norm::of(5, 0));  // the all-zero configuration is a unit

    const Weight point = Weight::paper_example(mp).truncated(1);
    const FiniteVolumeMeasure pm = build_measure(mp, point, LogField(mp.context()), 2, 1);
    const BoundednessResult pb = boundedness_check(pm);
    CHECK(pb.bounded);
    CHECK(pb.max_norm == Norm::of(5, 0));
}

TEST_CASE("weight distance") {
    const ModelParams mp = make_params(5, 2);
    const Weight lam = Weight::paper_example(mp);
    CHECK(weight_distance(lam, lam).is_zero());
    const PadicNumber delta = PadicNumber::from_integer(mp.context(), 625);  // unit * 5^4
    const Weight kap = lam.perturbed(2, delta);
    CHECK(weight_distance(lam, kap) == Norm::of(5, 4));
}

TEST_CASE("measure depends continuously on the weight") {
    const ModelParams mp = make_params(5, 2);
    const Weight lam = Weight::paper_example(mp);
    const Weight kap = lam.perturbed(1, PadicNumber::from_integer(mp.context(), 125));
    const ContinuityResult r = continuity_check(lam, kap, mp, 2, 3);
    CHECK(r.weight_dist == Norm::of(5, 3));
    CHECK(r.field_within);
    CHECK(r.field_equality);  // the sup-norm chain is tight here
    CHECK(r.measure_within);
    CHECK(r.max_measure_diff <= Norm::of(5, 3));

    const ContinuityResult same = continuity_check(lam, lam, mp, 1, 3);
    CHECK(same.weight_dist.is_zero());
    CHECK(same.field_dist.is_zero());
    CHECK(same.max_measure_diff.is_zero());
}

TEST_CASE("limit theorem: small couplings force the qualifying set to everything") {
    const ModelParams mp = make_params(5, 2, 5);
    const Weight w = Weight::paper_example(mp);
    const LimitResult r1 = limit_check(mp, w, 1, 3);
    CHECK(r1.total == 81);
    CHECK(r1.members == 81);  // |h_i| <= |J| = 1/5 puts every configuration in A_1
    CHECK(!r1.vacuous);
    CHECK(r1.pass);
    CHECK(r1.max_deviation <= Norm::of(5, 1));
}

TEST_CASE("limit theorem: deeper balls with J = p^2") {
    const ModelParams mp = make_params(5, 2, 25);
    const Weight w = Weight::paper_example(mp);
    const LimitResult r2 = limit_check(mp, w, 2, 3);
    CHECK(r2.total == 59049);
    CHECK(r2.members == r2.total);  // |J| = 5^{-2} forces membership at depth 2
    CHECK(r2.pass);
    CHECK(r2.max_deviation <= Norm::of(5, 2));
}

TEST_CASE("limit theorem: non-members are out of scope, possibly leaving it vacuous") {
    const ModelParams mp = make_params(5, 2, 5);
    const Weight w = Weight::paper_example(mp);
    const LimitResult r = limit_check(mp, w, 2, 3);
    CHECK(r.members < r.total);  // valuation-1 exponents are excluded at depth 2
    CHECK(r.pass);

    // single state, 9 edges, E = 9 J has valuation 1 < 2: nothing qualifies
    const Weight point = w.truncated(1);
    const LimitResult v = limit_check(mp, point, 2, 1);
    CHECK(v.members == 0);
    CHECK(v.vacuous);
    CHECK(v.pass);
}

TEST_CASE("limit theorem refuses vanishing weight entries") {
    // the ratio against the product measure needs lambda(i) != 0
    const ModelParams mp = make_params(5, 2, 5);
    std::vector<PadicNumber> vals;
    vals.push_back(PadicNumber::from_integer(mp.context(), 1));
    vals.push_back(PadicNumber::from_integer(mp.context(), 0));
    const Weight w = Weight::explicit_list(mp.context(), std::move(vals), Weight::kExactDecay, 0);
    CHECK_THROWS_AS(limit_check(mp, w, 1, 2), DivisionByZero);
}

TEST_CASE("product measure shares the normalizer") {
    const ModelParams mp = make_params(5, 2, 5);
    const Solved s = solve_model(mp, Weight::paper_example(mp));
    const FiniteVolumeMeasure m = build_measure(mp, s.weight, s.h, 1, 3);
    const ProductMeasure pm = product_measure(m, s.weight);
    REQUIRE(pm.table.size() == m.count());
    // mu / product = exp_p(energy-plus-field exponent), a unit: norms agree
    for (std::uint64_t i = 0; i < m.count(); ++i) CHECK(pm.table[i].norm() == m.mu(i).norm());
}

TEST_CASE("csv export") {
    const ModelParams mp = make_params(5, 2);
    const Solved s = solve_model(mp, Weight::paper_example(mp));
    const FiniteVolumeMeasure m = build_measure(mp, s.weight, s.h, 1, 3);
    std::ostringstream out;
    write_measure_csv(out, m);
    const std::string text = out.str();
    CHECK(text.find("# Z = ") != std::string::npos);
    CHECK(text.find("index,configuration,mu") != std::string::npos);
    CHECK(text.find("0,\"0,0,0,0\",\"") != std::string::npos);
    std::size_t rows = 0;
    for (char c : text)
        if (c == '\n') ++rows;
    CHECK(rows == 81 + 4);  // 3 comment lines + header + 81 rows
}

TEST_CASE("parallel enumeration is deterministic") {
    const ModelParams mp = make_params(5, 2);
    const Solved s = solve_model(mp, Weight::paper_example(mp));
    BuildOptions par;
    par.threads = 2;
    const FiniteVolumeMeasure a = build_measure(mp, s.weight, s.h, 2, 3);
    const FiniteVolumeMeasure b = build_measure(mp, s.weight, s.h, 2, 3, par);
    CHECK(eq_at_precision(a.partition(), b.partition(), 30));
    CHECK(gibbs_norm_diff(a, b).is_zero());
    for (std::uint64_t i : {0ULL, 1ULL, 29524ULL, 59048ULL}) CHECK(a.mu(i).str() == b.mu(i).str());
}
