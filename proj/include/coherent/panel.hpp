#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "coherent/hierarchy.hpp"

namespace coherent {

/// Aligned multi-node observations on a regular time grid.
/// Missing cells are NaN until clean() has run.
struct TimeSeriesPanel {
    std::int64_t start_epoch_sec = 0;
    int step_minutes = 10;
    std::vector<std::string> node_ids;
    Eigen::MatrixXd wind;   // time x node, m/s
    Eigen::MatrixXd power;  // time x node, kW

    Eigen::Index rows() const { return power.rows(); }
    Eigen::Index cols() const { return power.cols(); }
    std::int64_t timestamp(Eigen::Index row) const {
        return start_epoch_sec + row * static_cast<std::int64_t>(step_minutes) * 60;
    }
    Eigen::Index index_of(const std::string& node) const;

    std::vector<double> power_column(Eigen::Index col) const;
    std::vector<double> wind_column(Eigen::Index col) const;
};

/// Reads timestamp,turbine_id,wind_speed_mps,power_kw rows onto a dense
/// regular grid in hierarchy bottom order. Absent cells stay NaN.
TimeSeriesPanel load_panel(const std::filesystem::path& csv_path,
                           const HierarchySpec& spec,
                           int step_minutes = 10);

/// Replaces every non-positive or missing cell with the last preceding
/// strictly positive value in the same column; leading invalid cells take
/// the first following valid value.
TimeSeriesPanel clean(const TimeSeriesPanel& panel);

/// Power rows become S * bottom power; wind at aggregate nodes is the mean
/// of the descendant winds.
TimeSeriesPanel aggregate_cross_sectional(const TimeSeriesPanel& panel,
                                          const SummingMatrix& s);

/// Sums power (averages wind) over blocks of `factor` steps anchored to the
/// top of the hour; a trailing partial block is dropped.
TimeSeriesPanel aggregate_temporal(const TimeSeriesPanel& panel, int factor);

struct NodeStats {
    double min = 0, q1 = 0, median = 0, mean = 0, q3 = 0, max = 0;
};

/// Six-number summary per node (quartiles by linear interpolation).
std::vector<NodeStats> describe_panel(const TimeSeriesPanel& panel);

/// Type-7 quantile (linear interpolation between order statistics).
double quantile_linear(std::vector<double> values, double p);

} // namespace coherent
