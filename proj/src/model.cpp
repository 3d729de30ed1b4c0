#include "potts/model.hpp"

namespace potts {

void check_coupling_norm(const PadicNumber& coupling) {
    if (coupling.is_zero() || coupling.valuation() < coupling.context().exp_min_valuation())
        throw DomainError("coupling norm out of range: need 0 < |J| < p^(-1/(p-1))");
}

ModelParams ModelParams::make(const PadicContext& ctx, int order, const PadicNumber& coupling) {
    if (order < 1) throw DomainError("tree order must be at least 1");
    if (coupling.context() != ctx) throw ContextMismatch();
    check_coupling_norm(coupling);
    PadicNumber theta = exp_p(coupling);
    // |theta| = 1 and |theta - 1| = |J| on the convergence ball
    if (theta.norm() != Norm::of(ctx.prime(), 0) ||
        (theta - PadicNumber::from_integer(ctx, 1)).norm() != coupling.norm())
        throw NonConvergence("exp_p violated its norm identities (internal inconsistency)");
    return ModelParams(ctx, order, coupling, std::move(theta));
}

EdgeCouplings EdgeCouplings::homogeneous(const CayleyTree& tree, const ModelParams& params) {
    EdgeCouplings ec(params.context());
    for (const auto& [parent, child] : edges(tree, tree.depth()))
        ec.edges_.emplace(std::make_pair(parent, child), Edge{params.coupling(), params.theta()});
    return ec;
}

void EdgeCouplings::set(std::int64_t parent, std::int64_t child, const PadicNumber& coupling) {
    if (coupling.context() != ctx_) throw ContextMismatch();
    check_coupling_norm(coupling);
    edges_.insert_or_assign(std::make_pair(parent, child), Edge{coupling, exp_p(coupling)});
}

const PadicNumber& EdgeCouplings::coupling(std::int64_t parent, std::int64_t child) const {
    auto it = edges_.find(std::make_pair(parent, child));
    if (it == edges_.end()) throw OutOfTree("no coupling stored for the requested edge");
    return it->second.coupling;
}

const PadicNumber& EdgeCouplings::theta(std::int64_t parent, std::int64_t child) const {
    auto it = edges_.find(std::make_pair(parent, child));
    if (it == edges_.end()) throw OutOfTree("no coupling stored for the requested edge");
    return it->second.theta;
}

Norm EdgeCouplings::max_contraction_factor() const {
    Norm max = Norm::zero(ctx_.prime());
    for (const auto& [key, edge] : edges_) max = Norm::max(max, edge.coupling.norm());
    return max;
}

}  // namespace potts
