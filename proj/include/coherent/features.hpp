#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace coherent {

inline constexpr int kNumLags = 6;
inline constexpr int kMinBoxWidth = 2;
inline constexpr int kMaxBoxWidth = 6;
inline constexpr int kQuarterDummies = 3;   // Q2..Q4, Q1 is the baseline
inline constexpr int kHourDummies = 23;     // hours 1..23, hour 0 is the baseline
inline constexpr int kNumFeatures = 58;

/// Equal-weight mean of the `width` observations ending at index k-1.
double moving_average(std::span<const double> series, int width, std::size_t k);
/// Population standard deviation over the same window as moving_average.
double moving_sd(std::span<const double> series, int width, std::size_t k);

/// Column names in design-matrix order.
const std::vector<std::string>& feature_names();

/// Predictor row for the value at time index k. Uses series values strictly
/// before k plus the calendar time at k itself.
Eigen::RowVectorXd feature_row(std::span<const double> wind,
                               std::span<const double> power,
                               std::size_t k,
                               std::int64_t epoch_sec_at_k);

struct DesignMatrix {
    Eigen::MatrixXd x;                     // rows x 58
    Eigen::VectorXd y;                     // power at the row's time index
    std::vector<std::size_t> time_index;   // k per row
};

/// All usable rows of one node's series: k runs from the first index with a
/// full lag window (kNumLags) to the end of the series.
DesignMatrix build_design_matrix(std::span<const double> wind,
                                 std::span<const double> power,
                                 std::int64_t start_epoch_sec,
                                 int step_minutes);

} // namespace coherent
