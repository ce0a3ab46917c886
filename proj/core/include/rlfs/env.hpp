#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>

#include "rlfs/dataset.hpp"
#include "rlfs/tree.hpp"

namespace rlfs {

enum class Action : int { exclude = 0, select = 1 };

// A subset of feature columns, bit i = feature i. Limited to 64 features,
// which is far beyond what a tabular search can visit anyway.
class FeatureSubset {
public:
    FeatureSubset() = default;
    FeatureSubset(std::uint64_t bits, int n_features);

    static FeatureSubset empty_of(int n_features);
    static FeatureSubset full_of(int n_features);

    int size() const { return n_; }        // number of features d
    int count() const;                     // selected features
    bool test(int i) const;
    void set(int i, bool on);
    std::uint64_t bits() const { return bits_; }

    bool is_empty() const { return bits_ == 0; }
    bool is_full() const;
    // Neither empty nor full; the punishment rule targets the other two.
    bool valid() const { return !is_empty() && !is_full(); }

    // Feature 0 is the leftmost character, e.g. "101" selects features 0 and 2.
    std::string to_bitstring() const;
    static FeatureSubset from_bitstring(const std::string& s);

    bool operator==(const FeatureSubset&) const = default;

private:
    std::uint64_t bits_ = 0;
    int n_ = 0;
};

// Position in the decision chain: feature `index` is the next to decide;
// index == d is terminal. Bits of `partial` at positions >= index are unset.
struct EnvState {
    int index = 0;
    FeatureSubset partial;

    bool operator==(const EnvState&) const = default;
};

struct RewardConfig {
    enum class Split { test, train, holdout };
    enum class Mode { terminal, per_step };

    double threshold = 0.7;      // accuracy above this doubles the reward
    double bonus_factor = 2.0;
    double punishment = 0.8;     // deducted for the empty or full subset
    Split reward_split = Split::test;
    Mode reward_mode = Mode::terminal;
};

RewardConfig::Split reward_split_from_string(const std::string& name);
RewardConfig::Mode reward_mode_from_string(const std::string& name);
std::string to_string(RewardConfig::Split split);
std::string to_string(RewardConfig::Mode mode);

// Deterministic chain MDP over feature indices: each step decides one feature,
// the episode ends after all d decisions.
class FeatureSelectionEnv {
public:
    explicit FeatureSelectionEnv(int n_features);

    int d() const { return d_; }
    EnvState reset() const;
    bool terminal(const EnvState& s) const { return s.index >= d_; }

    // Records the action bit and advances; done when all features are decided.
    std::pair<EnvState, bool> step(const EnvState& s, Action a) const;

private:
    int d_;
};

// Copies the selected columns into a new dataset.
Dataset select_features(const Dataset& ds, const FeatureSubset& subset);

struct SubsetScore {
    double accuracy = 0.0;
    ConfusionMatrix confusion;
};

// Accuracy of a tree fit on `train` restricted to `subset`, evaluated on
// `eval` restricted likewise. The empty subset is scored as the majority-class
// predictor on `eval` (no tree can be fit on zero columns).
SubsetScore score_subset(const FeatureSubset& subset, const Dataset& train,
                         const Dataset& eval, const TreeParams& params);

// Classifier-backed reward: the accuracy, doubled when it exceeds the
// threshold, minus the punishment when the subset is empty or full.
// The bonus applies before the punishment.
double compute_reward(const FeatureSubset& subset, const Dataset& train, const Dataset& eval,
                      const TreeParams& params, const RewardConfig& rc);

// Memoizes subset scores for one (train, eval, params) context. At most 2^d
// subsets exist, so a full search stays cheap. One instance per training run;
// not synchronized.
class RewardEvaluator {
public:
    RewardEvaluator(Dataset train, Dataset eval, TreeParams tree_params, RewardConfig reward_config);

    int d() const { return static_cast<int>(train_.d()); }
    const Dataset& train() const { return train_; }
    const Dataset& eval() const { return eval_; }
    const TreeParams& tree_params() const { return tree_params_; }
    const RewardConfig& config() const { return reward_config_; }

    double reward(const FeatureSubset& subset);
    double accuracy(const FeatureSubset& subset);
    SubsetScore score(const FeatureSubset& subset);

    std::size_t cache_size() const { return cache_.size(); }

private:
    struct Entry {
        SubsetScore score;
        double reward = 0.0;
    };
    const Entry& lookup(const FeatureSubset& subset);

    Dataset train_;
    Dataset eval_;
    TreeParams tree_params_;
    RewardConfig reward_config_;
    std::unordered_map<std::uint64_t, Entry> cache_;
};

}  // namespace rlfs
