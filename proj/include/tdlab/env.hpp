#pragma once

#include "tdlab/mdp.hpp"

#include <random>
#include <span>
#include <string>

namespace tdlab {

/// Rewards the learner sees are clamped to [-1, 1] at the environment
/// boundary; raw rewards are kept alongside for episode-return metrics.
double clip_reward(double r);

enum class FeatureMode { Coords, OneHot, CoordsAndOneHot };

FeatureMode feature_mode_from_string(const std::string& s);
std::string to_string(FeatureMode mode);

struct GridworldConfig {
    int width = 5;
    int height = 5;
    double goal_reward = 1.0;
    double step_reward = 0.0;
    double gamma = 0.99;
    FeatureMode features = FeatureMode::CoordsAndOneHot;
    bool random_start = true;  // otherwise every episode starts at cell (0, 0)
};

/// Episodic deterministic gridworld: actions up/down/left/right, walls
/// bounce, the goal sits in the far corner and terminates the episode.
/// Immutable after construction; interaction state lives with the caller.
class Env {
public:
    Env(Mdp mdp, FeatureMap features, GridworldConfig cfg);

    const Mdp& mdp() const { return mdp_; }
    const FeatureMap& features() const { return features_; }
    const GridworldConfig& config() const { return cfg_; }
    int n_states() const { return mdp_.n_states; }
    int n_actions() const { return mdp_.n_actions; }
    double gamma() const { return mdp_.gamma; }

    int initial_state(std::mt19937_64& rng) const;

    struct StepResult {
        int next_state;
        double reward_raw;
        double reward_clipped;
        bool terminated;
    };
    StepResult step(int state, int action) const;

private:
    Mdp mdp_;
    FeatureMap features_;
    GridworldConfig cfg_;
    std::vector<int> next_state_;   // (s * n_actions + a), deterministic moves
    std::vector<int> start_states_;
};

Env make_gridworld(const GridworldConfig& cfg);

/// With probability 1-epsilon the lowest-index maximizer, otherwise uniform
/// over all actions. Throws on an empty value vector.
int epsilon_greedy(std::span<const double> q_values, double epsilon,
                   std::mt19937_64& rng);
int epsilon_greedy(const Eigen::VectorXd& q_values, double epsilon,
                   std::mt19937_64& rng);

/// Lowest-index argmax, the tie-breaking rule used everywhere in this repo.
int argmax_lowest(std::span<const double> values);
int argmax_lowest(const Eigen::VectorXd& values);

}  // namespace tdlab
