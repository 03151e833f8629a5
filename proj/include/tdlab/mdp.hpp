#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <vector>

namespace tdlab {

/// Finite MDP with expected rewards R(s,a) and per-action transition
/// matrices P_a(s, s'). Terminal states must self-loop with zero reward;
/// their values are pinned to zero by every solver below.
struct Mdp {
    int n_states = 0;
    int n_actions = 0;
    std::vector<Eigen::MatrixXd> transition;  // [a](s, s'), rows are distributions
    Eigen::MatrixXd reward;                   // (s, a)
    double gamma = 0.0;
    std::vector<std::uint8_t> terminal;       // per-state flag

    bool is_terminal(int s) const { return terminal[static_cast<std::size_t>(s)] != 0; }

    // Throws std::invalid_argument on malformed shapes, non-stochastic rows,
    // or gamma outside [0, 1).
    void validate() const;
};

/// Per-state feature vectors, one row per state. Dimension is fixed.
struct FeatureMap {
    Eigen::MatrixXd phi;  // (n_states, dim)

    int dim() const { return static_cast<int>(phi.cols()); }
    Eigen::VectorXd operator()(int s) const { return phi.row(s).transpose(); }
};

/// Explicit per-state action distribution.
struct Policy {
    Eigen::MatrixXd probs;  // (s, a), rows sum to 1

    static Policy uniform(int n_states, int n_actions);
    static Policy single_action(int n_states, int n_actions, int action);
    /// Greedy w.r.t. an action-value table, ties to the lowest index.
    static Policy greedy(const Eigen::MatrixXd& q);

    void validate_for(const Mdp& mdp) const;
};

/// Policy-conditioned transition matrix P_pi(s, s') = sum_a pi(a|s) P_a(s, s').
Eigen::MatrixXd policy_transition(const Mdp& mdp, const Policy& policy);

/// Policy-conditioned expected reward vector R_pi(s).
Eigen::VectorXd policy_reward(const Mdp& mdp, const Policy& policy);

/// Exact v_pi via the direct linear solve v = (I - gamma P_pi)^{-1} R_pi,
/// with terminal rows zeroed. Verifies the Bellman residual to 1e-10.
Eigen::VectorXd solve_policy_values(const Mdp& mdp, const Policy& policy);

/// Independent control oracle: Bellman-optimality fixed point by iteration.
struct ValueIterationResult {
    Eigen::MatrixXd q;      // (s, a)
    Eigen::VectorXd v;      // max_a q(s, a)
    std::vector<int> greedy_action;
};

ValueIterationResult value_iteration(const Mdp& mdp, double tol = 1e-12,
                                     int max_iters = 1'000'000);

/// Two-state evaluation example with scalar features phi = [1, 2]:
/// s1 -> s2 -> s2, all rewards zero. Divergence-prone under off-policy
/// state weightings. When learnable_u is set, the intended value family is
/// the factored-affine one, v(s) = w (phi(s) + u).
struct TvrExample {
    Mdp mdp;
    FeatureMap features;
    bool learnable_u = false;
};

TvrExample make_tvr(double gamma, bool learnable_u = false);

/// Baird's star: six spoke states plus a hub, solid action jumps to the hub,
/// dashed action scatters over the spokes. Features overparameterize the
/// (all-zero) true values. Uniform state weighting diverges under TD(0).
struct BairdExample {
    Mdp mdp;
    FeatureMap features;
    Policy solid_policy;          // evaluated policy: always jump to the hub
    Eigen::VectorXd theta0;       // conventional starting point
};

BairdExample make_baird(double gamma = 0.99);

}  // namespace tdlab
