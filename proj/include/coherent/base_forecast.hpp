#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "coherent/hierarchy.hpp"

namespace coherent {

/// Least-squares regression onto the 58 predictors plus an intercept.
/// Rank-deficient designs get the minimum-norm solution.
struct LinearModel {
    Eigen::VectorXd coefficients;  // [intercept, predictors...]
    std::string node;
    int factor = 1;

    double predict(const Eigen::RowVectorXd& features) const;
};

LinearModel fit_linear(const Eigen::MatrixXd& x, const Eigen::VectorXd& y);

/// y - X beta, one value per design row.
Eigen::VectorXd insample_residuals(const LinearModel& model,
                                   const Eigen::MatrixXd& x,
                                   const Eigen::VectorXd& y);

/// Every step repeats the last observed value (series[origin]).
std::vector<double> naive_forecast(std::span<const double> series,
                                   std::size_t origin, int h);

/// Multi-step forecast from the end of the given history. Step 1 uses the
/// observed series; later steps feed predictions back into the power lags
/// and windows while wind is held at its last observed value. Calendar
/// dummies advance with the clock.
std::vector<double> forecast_recursive(const LinearModel& model,
                                       std::span<const double> wind,
                                       std::span<const double> power,
                                       std::int64_t start_epoch_sec,
                                       int step_minutes, int h);

/// Forecasts for every node and temporal level over a set of hourly
/// origins, plus the aligned in-sample residuals the covariance
/// estimators feed on.
struct ForecastSet {
    std::vector<std::string> node_ids;  // level-major hierarchy order
    TemporalScheme scheme;
    std::vector<std::int64_t> origins;  // epoch sec, hourly stride

    /// values[level][node] is origins x steps_at(factor).
    std::vector<std::vector<Eigen::MatrixXd>> values;
    /// residuals[level] is time x node, rows aligned across nodes.
    std::vector<Eigen::MatrixXd> residuals;
    /// residual_times[level][row] is the epoch second of that residual row.
    std::vector<std::vector<std::int64_t>> residual_times;

    std::size_t num_nodes() const { return node_ids.size(); }
    double value(std::size_t level, std::size_t node,
                 std::size_t origin, int step) const {
        return values[level][node](static_cast<Eigen::Index>(origin), step);
    }

    /// Checks step counts per factor and that all values are finite.
    void validate() const;
};

} // namespace coherent
