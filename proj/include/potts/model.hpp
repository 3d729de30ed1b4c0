#pragma once

#include <map>
#include <utility>

#include "potts/cayley.hpp"
#include "potts/padic.hpp"

namespace potts {

/// Homogeneous model data: tree order k, coupling J with
/// 0 < |J|_p < p^{-1/(p-1)}, and theta = exp_p(J) cached.
class ModelParams {
public:
    static ModelParams make(const PadicContext& ctx, int order, const PadicNumber& coupling);

    const PadicContext& context() const { return ctx_; }
    int order() const { return order_; }
    const PadicNumber& coupling() const { return coupling_; }
    const PadicNumber& theta() const { return theta_; }

    // Lipschitz constant of the local map: |theta - 1|_p = |J|_p.
    Norm contraction_factor() const { return coupling_.norm(); }

private:
    ModelParams(const PadicContext& ctx, int order, PadicNumber coupling, PadicNumber theta)
        : ctx_(ctx), order_(order), coupling_(std::move(coupling)), theta_(std::move(theta)) {}

    PadicContext ctx_;
    int order_;
    PadicNumber coupling_;
    PadicNumber theta_;
};

/// Per-edge couplings over a depth-limited tree, with exp_p cached per edge.
class EdgeCouplings {
public:
    explicit EdgeCouplings(const PadicContext& ctx) : ctx_(ctx) {}

    static EdgeCouplings homogeneous(const CayleyTree& tree, const ModelParams& params);

    void set(std::int64_t parent, std::int64_t child, const PadicNumber& coupling);

    const PadicNumber& coupling(std::int64_t parent, std::int64_t child) const;
    const PadicNumber& theta(std::int64_t parent, std::int64_t child) const;

    // max over stored edges of |theta_e - 1|_p = |J_e|_p.
    Norm max_contraction_factor() const;

    const PadicContext& context() const { return ctx_; }

private:
    struct Edge {
        PadicNumber coupling;
        PadicNumber theta;
    };
    PadicContext ctx_;
    std::map<std::pair<std::int64_t, std::int64_t>, Edge> edges_;
};

/// Gate shared by ModelParams and EdgeCouplings: nonzero and inside the
/// exp_p convergence ball.
void check_coupling_norm(const PadicNumber& coupling);

}  // namespace potts
