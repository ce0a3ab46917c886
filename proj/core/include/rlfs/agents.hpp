#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rlfs/env.hpp"

namespace rlfs {

enum class Algorithm { q_learning, sarsa };

Algorithm algorithm_from_string(const std::string& name);  // "qlearning" | "sarsa"
std::string to_string(Algorithm algorithm);

// d x 2 table of action values, zero initialized.
class QTable {
public:
    QTable() = default;
    explicit QTable(int n_states) : values_(n_states, {0.0, 0.0}) {}

    int n_states() const { return static_cast<int>(values_.size()); }
    double at(int s, Action a) const { return values_[s][static_cast<int>(a)]; }
    double& at(int s, Action a) { return values_[s][static_cast<int>(a)]; }
    double max_at(int s) const;
    Action greedy_at(int s) const;  // ties resolve to exclude

    bool operator==(const QTable&) const = default;

private:
    std::vector<std::array<double, 2>> values_;
};

struct AgentConfig {
    Algorithm algorithm = Algorithm::q_learning;
    double alpha = 0.03;
    double gamma = 1.0;
    int episodes = 1000;
    double epsilon_start = 1.0;
    double epsilon_end = 0.01;
    std::uint64_t seed = 0;
};

struct EpisodeTrace {
    int episode = 0;
    FeatureSubset subset;  // mask realized by this episode
    double reward = 0.0;   // total reward collected in the episode
    double epsilon = 0.0;
};

struct TrainResult {
    QTable q;
    std::vector<EpisodeTrace> traces;
};

// Off-policy one-step update:
//   q[s][a] <- (1 - alpha) * q[s][a] + alpha * (r + gamma * max_a' q[s'][a'])
// with the bootstrap term 0 when s_next is terminal (empty optional).
void q_learning_update(QTable& q, int s, Action a, double r, std::optional<int> s_next,
                       double alpha, double gamma);

// On-policy one-step update bootstrapping from the action actually chosen:
//   q[s][a] <- (1 - alpha) * q[s][a] + alpha * (r + gamma * q[s'][a'])
// a_next must be present when s_next is non-terminal.
void sarsa_update(QTable& q, int s, Action a, double r, std::optional<int> s_next,
                  std::optional<Action> a_next, double alpha, double gamma);

// Epsilon-greedy: with probability epsilon a uniformly random action,
// otherwise the greedy action with ties resolved to exclude. The generator is
// advanced once for the exploration check and once more when exploring.
Action select_action(const QTable& q, int s, double epsilon, std::mt19937_64& rng);

// Exponential schedule from epsilon_start down to epsilon_end on the final
// episode. A single-episode budget never decays.
double epsilon_at(const AgentConfig& cfg, int episode);

// Runs cfg.episodes episodes against the evaluator's datasets and returns the
// learned table plus one trace row per episode. All randomness flows through
// one generator seeded with cfg.seed, so runs are reproducible bit for bit.
TrainResult train(RewardEvaluator& rewards, const AgentConfig& cfg);

}  // namespace rlfs
