#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "rlfs/errors.hpp"
#include "rlfs/matrix.hpp"

namespace rlfs {

struct TreeParams {
    std::optional<int> max_depth;  // unset = unbounded
    int min_samples_split = 2;

    bool operator==(const TreeParams&) const = default;
};

struct ConfusionMatrix {
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    std::int64_t tn = 0;
    std::int64_t fn = 0;

    std::int64_t total() const { return tp + fp + tn + fn; }
    double accuracy() const { return total() == 0 ? 0.0 : double(tp + tn) / double(total()); }

    bool operator==(const ConfusionMatrix&) const = default;
};

// Gini impurity of a two-class node: 1 - p0^2 - p1^2.
double gini(std::int64_t count0, std::int64_t count1);

// Binary CART classifier. Candidate thresholds are midpoints between
// consecutive distinct sorted values per feature; the split minimizing the
// weighted child Gini wins, with ties resolved to the lowest feature index and
// then the lowest threshold. Samples with x[feature] <= threshold go left.
class DecisionTree {
public:
    struct Node {
        bool is_leaf = true;
        int feature = -1;
        double threshold = 0.0;
        std::int32_t left = -1;
        std::int32_t right = -1;
        std::array<std::int64_t, 2> counts{0, 0};
        int predicted = 0;

        bool operator==(const Node&) const = default;
    };

    // Greedy recursive fit. Growth stops on a pure node, fewer than
    // min_samples_split samples, the depth limit, or when no split strictly
    // reduces the weighted impurity. Deterministic given input order.
    static DecisionTree fit(const Matrix& x, const std::vector<int>& y,
                            const TreeParams& params = {});

    std::vector<int> predict(const Matrix& x) const;
    int predict_row(const Matrix& x, std::size_t row) const;

    // Confusion counts with class 1 as positive.
    ConfusionMatrix evaluate(const Matrix& x, const std::vector<int>& y) const;

    const std::vector<Node>& nodes() const { return nodes_; }
    std::size_t n_features() const { return n_features_; }
    int depth() const;
    std::size_t n_leaves() const;

    bool operator==(const DecisionTree&) const = default;

private:
    std::vector<Node> nodes_;  // nodes_[0] is the root when non-empty
    std::size_t n_features_ = 0;
};

}  // namespace rlfs
