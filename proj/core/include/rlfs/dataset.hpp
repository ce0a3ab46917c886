#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "rlfs/errors.hpp"
#include "rlfs/matrix.hpp"

namespace rlfs {

// A labeled tabular dataset: one row per sample, binary labels with 1 as the
// positive class. Immutable by convention once built.
struct Dataset {
    std::vector<std::string> feature_names;
    Matrix x;
    std::vector<int> y;

    std::size_t n() const { return y.size(); }
    std::size_t d() const { return x.cols(); }

    std::size_t count_label(int label) const;
    // Fraction of samples in the larger class.
    double majority_rate() const;
};

struct SplitDataset {
    Dataset train;
    Dataset test;
    std::uint64_t seed = 0;
    double ratio = 0.9;
    // Source row indices of each side, ascending. Together they partition 0..n-1.
    std::vector<std::size_t> train_indices;
    std::vector<std::size_t> test_indices;
};

// Parses comma separated text with a header row. Every column except
// `label_column` becomes a feature, in header order. Label cells equal to
// `positive_label` map to 1, the single remaining label value maps to 0; a
// third distinct label value is an error. Cells must be finite numbers.
Dataset parse_csv(const std::string& text, const std::string& label_column,
                  const std::string& positive_label);

// parse_csv over the contents of `path`.
Dataset load_csv(const std::filesystem::path& path, const std::string& label_column,
                 const std::string& positive_label);

// Deterministic stratified split. The train side receives round(ratio * n)
// samples; per-class counts are floor(ratio * class_count) with the remainder
// assigned by largest fractional part, so each class deviates from the exact
// proportion by at most one sample. Shuffling within a class uses a generator
// seeded with `seed`.
SplitDataset stratified_split(const Dataset& ds, double ratio, std::uint64_t seed);

}  // namespace rlfs
