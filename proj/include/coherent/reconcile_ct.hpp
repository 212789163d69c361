#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "coherent/base_forecast.hpp"
#include "coherent/hierarchy.hpp"
#include "coherent/reconcile_cs.hpp"

namespace coherent {

/// One hour of forecasts at every temporal level for every node, stacked
/// node-major with slots ordered coarsest-first.
struct CrossTemporalForecast {
    std::vector<std::string> node_ids;
    TemporalScheme scheme;
    Eigen::MatrixXd values;  // m x slots_per_window

    Eigen::VectorXd stacked() const;
    static CrossTemporalForecast from_stacked(const Eigen::VectorXd& v,
                                              std::vector<std::string> node_ids,
                                              TemporalScheme scheme);
    /// The m_k x max_factor block of finest-level bottom-node values.
    Eigen::MatrixXd bottom_block(const HierarchySpec& spec) const;
};

/// Max relative constraint violation on each axis
/// (|violation| / (1 + max |value|)).
struct CoherenceAudit {
    double temporal = 0.0;
    double cross_sectional = 0.0;
    double both() const { return temporal > cross_sectional ? temporal : cross_sectional; }
};

CoherenceAudit audit_coherence(const CrossTemporalForecast& fc,
                               const SummingMatrix& s_cs,
                               const SummingMatrix& s_te);

enum class TemporalWeighting { structural, series_variance, autocovariance };

/// Residual history of one node arranged per temporal level, one row per
/// complete top-level window.
struct TemporalResiduals {
    std::vector<Eigen::MatrixXd> per_level;  // [level] windows x steps_at(factor)
};

/// W for the temporal projection: structural = diag(row sums of S_te);
/// series-variance = per-level residual variance expanded to slots;
/// autocovariance = block-diagonal per level with the shrunk within-level
/// covariance.
Eigen::MatrixXd temporal_weight_matrix(const TemporalScheme& scheme,
                                       const SummingMatrix& s_te,
                                       TemporalWeighting kind,
                                       const TemporalResiduals* residuals);

/// Trace-minimizing projection of one stacked window onto the temporally
/// coherent subspace.
Eigen::VectorXd reconcile_temporal_one_series(const Eigen::VectorXd& base_stack,
                                              const SummingMatrix& s_te,
                                              const Eigen::MatrixXd& weights);

/// Shared inputs for the cross-temporal reconcilers.
struct CrossTemporalContext {
    HierarchySpec spec;
    TemporalScheme scheme;
    SummingMatrix s_cs;
    SummingMatrix s_te;
    SummingMatrix s_ct;
    std::vector<Eigen::MatrixXd> cs_residuals;      // [level] time x m
    std::vector<TemporalResiduals> te_residuals;    // [node]

    static CrossTemporalContext build(const HierarchySpec& spec,
                                      const ForecastSet& base);
    static CrossTemporalContext build(const HierarchySpec& spec,
                                      const TemporalScheme& scheme,
                                      std::vector<Eigen::MatrixXd> cs_residuals,
                                      std::vector<TemporalResiduals> te_residuals);
};

/// Bottom-up: aggregate the finest bottom-node forecasts everywhere.
CrossTemporalForecast bu_ct(const Eigen::MatrixXd& bottom_base,
                            const CrossTemporalContext& ctx);

/// Per-node temporal reconciliation with autocovariance weights. Coherent on
/// the temporal axis only.
CrossTemporalForecast thf(const CrossTemporalForecast& base,
                          const CrossTemporalContext& ctx);

/// Temporal WLS first, then the level-averaged cross-sectional shrinkage
/// projection at every slot.
CrossTemporalForecast tcs(const CrossTemporalForecast& base,
                          const CrossTemporalContext& ctx);

/// Cross-sectional shrinkage per level first, then the node-averaged
/// temporal autocovariance projection per node.
CrossTemporalForecast cst(const CrossTemporalForecast& base,
                          const CrossTemporalContext& ctx);

struct IterativeOptions {
    double tol = 1e-8;
    int max_iter = 100;
    bool temporal_first = true;
};

struct IterativeResult {
    CrossTemporalForecast forecast;
    int iterations = 0;
    double final_residual = 0.0;
    bool converged = false;
    std::vector<double> residual_trace;  // both-axis residual after each full pass
};

/// Alternating temporal / cross-sectional passes until both axes agree.
IterativeResult ite(const CrossTemporalForecast& base,
                    const CrossTemporalContext& ctx,
                    const IterativeOptions& opts = {});

/// One-shot projection with the Kronecker summing matrix and a
/// block-diagonal W (per-level shrunk cross-sectional covariance).
CrossTemporalForecast oct(const CrossTemporalForecast& base,
                          const CrossTemporalContext& ctx);

} // namespace coherent
