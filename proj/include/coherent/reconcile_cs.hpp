#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "coherent/base_forecast.hpp"
#include "coherent/hierarchy.hpp"

namespace coherent {

/// G maps all m base forecasts to reconciled bottom forecasts; S * G is the
/// projection onto the coherent subspace.
struct MappingMatrix {
    Eigen::MatrixXd g;   // m_k x m
    std::string method;
};

enum class CovKind { identity, shrinkage };

/// W estimate for the trace-minimizing combination. lambda is the shrinkage
/// intensity (NaN for the identity kind).
struct CovarianceEstimate {
    Eigen::MatrixXd w;
    double lambda = 0.0;
    CovKind kind = CovKind::identity;
};

MappingMatrix g_bottom_up(const SummingMatrix& s);

/// Historical-proportion top-down: p_j = sum_t Y_{j,t} / sum_t Y_t over the
/// given bottom history (time x m_k).
MappingMatrix g_top_down(const SummingMatrix& s,
                         const Eigen::MatrixXd& bottom_history);

/// Base forecasts at `level` disaggregated to the bottom by within-subtree
/// historical proportions. level = 0 reduces to top-down, level = depth to
/// bottom-up.
MappingMatrix g_middle_out(const SummingMatrix& s, const HierarchySpec& spec,
                           int level, const Eigen::MatrixXd& bottom_history);

/// Sample covariance of one-step residuals (time x m), optionally shrunk
/// towards its diagonal with the correlation-based intensity lambda.
CovarianceEstimate estimate_w(const Eigen::MatrixXd& residuals, CovKind kind,
                              const std::vector<std::string>* node_names = nullptr);

/// Trace-minimizing mapping G = (S' W^+ S)^{-1} S' W^+.
MappingMatrix g_min_trace(const SummingMatrix& s, const CovarianceEstimate& w);

/// Moore-Penrose inverse with singular values below rel_tol * sigma_max
/// treated as zero.
Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& a, double rel_tol = 1e-12);

/// S * G * base for one vector of all m base forecasts.
Eigen::VectorXd reconcile_vector(const MappingMatrix& g, const SummingMatrix& s,
                                 const Eigen::VectorXd& base);

/// Applies S*G per origin and step at one temporal factor; other levels of
/// the set pass through unchanged.
ForecastSet reconcile(const MappingMatrix& g, const SummingMatrix& s,
                      const ForecastSet& base, int factor);

} // namespace coherent
