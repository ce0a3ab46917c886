#pragma once

#include <string>
#include <vector>

#include "rlfs/dataset.hpp"

namespace rlfs {

enum class NormKind { min_max, l1, l2 };

NormKind norm_kind_from_string(const std::string& name);  // "minmax" | "l1" | "l2"
std::string to_string(NormKind kind);

// Feature scaling applied before the subset search. MinMax is per feature and
// carries (min, max) fitted on training data; l1 and l2 rescale each sample
// row to unit norm and need no fitting.
struct Normalizer {
    NormKind kind = NormKind::min_max;
    std::vector<double> mins;  // min_max only, one entry per feature
    std::vector<double> maxs;

    bool fitted() const { return !mins.empty(); }
};

Normalizer fit_min_max(const Dataset& train);

Normalizer make_l1();
Normalizer make_l2();

// Fits `kind` on `train`; a no-op for the row normalizers.
Normalizer fit_normalizer(NormKind kind, const Dataset& train);

// Applies the normalizer to a dataset; labels and feature names pass through.
// MinMax maps a constant feature to 0 and does not clip values outside the
// fitted range. Zero rows are returned unchanged by l1/l2.
Dataset transform(const Normalizer& method, const Dataset& ds);

}  // namespace rlfs
