#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace coherent {

/// Cross-sectional aggregation tree.
///
/// Nodes are stored level-major: root first, then each level left to right
/// in spec order, bottom level last. All leaves must sit at the same depth;
/// the bottom block of the summing matrix is then a contiguous identity.
class HierarchySpec {
public:
    static HierarchySpec from_edges(const std::vector<std::string>& nodes,
                                    const std::vector<std::pair<std::string, std::string>>& edges);
    /// Accepts {"nodes":[...], "edges":[[parent,child],...]}.
    static HierarchySpec from_json(const std::string& text);
    static HierarchySpec from_json_file(const std::filesystem::path& path);

    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::vector<std::string>& bottom_nodes() const { return bottom_; }
    const std::string& root() const { return nodes_.front(); }

    std::size_t num_nodes() const { return nodes_.size(); }    // m
    std::size_t num_bottom() const { return bottom_.size(); }  // m_k
    int depth() const { return depth_; }                       // k, level of the bottom

    int level_of(const std::string& node) const;
    std::size_t index_of(const std::string& node) const;
    bool has_node(const std::string& node) const;
    const std::string& parent_of(const std::string& node) const;  // root has none -> throws
    const std::vector<std::string>& children_of(const std::string& node) const;

    /// Indices into bottom_nodes() of the leaves under `node` (node itself if leaf).
    std::vector<std::size_t> bottom_descendants(const std::string& node) const;
    /// Ancestor of `node` at the given level (level <= level_of(node)).
    const std::string& ancestor_at_level(const std::string& node, int level) const;
    std::vector<std::size_t> nodes_per_level() const;  // m_i for i = 0..k

private:
    HierarchySpec() = default;
    void finalize(const std::vector<std::string>& declared_order);

    std::vector<std::string> nodes_;
    std::vector<std::string> bottom_;
    std::map<std::string, std::string> parent_;
    std::map<std::string, std::vector<std::string>> children_;
    std::map<std::string, int> level_;
    std::map<std::string, std::size_t> index_;
    int depth_ = 0;
};

/// 0/1 aggregation matrix mapping bottom series to every series (S in the
/// usual stacked-vector equation y = S * y_bottom).
struct SummingMatrix {
    Eigen::MatrixXd entries;  // m x m_k
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;

    Eigen::Index rows() const { return entries.rows(); }
    Eigen::Index cols() const { return entries.cols(); }
};

/// Nested temporal aggregation factors over one top-level window.
/// factors are ascending, contain 1 and each divides the largest factor.
struct TemporalScheme {
    int base_step_minutes = 10;
    std::vector<int> factors;

    static TemporalScheme make(int base_step_minutes, std::vector<int> factors);

    int max_factor() const { return factors.back(); }
    int steps_at(int factor) const;     // blocks of this factor per window
    int slots_per_window() const;       // sum of steps_at over all factors
    std::size_t num_levels() const { return factors.size(); }
    std::size_t level_index(int factor) const;

    /// (factor, block index within factor) for each stacked slot,
    /// coarsest level first.
    std::vector<std::pair<int, int>> window_slots() const;
    /// Offset of a factor's first slot in the stacked window.
    int slot_offset(int factor) const;
};

SummingMatrix build_summing_matrix(const HierarchySpec& spec);
SummingMatrix build_temporal_summing_matrix(const TemporalScheme& scheme);
/// Kronecker product: cross-sectional (x) temporal, rows/cols labelled
/// "(node|slot)". Row order is node-major, slots coarsest-first per node.
SummingMatrix build_cross_temporal_summing_matrix(const SummingMatrix& cs,
                                                  const SummingMatrix& te);

} // namespace coherent
