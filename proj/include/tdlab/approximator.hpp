#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>

namespace tdlab {

using ParamVector = Eigen::VectorXd;

/// A parameterized value function family. Parameters are owned by the
/// caller (flat vectors), so a target copy is just a vector copy and two
/// networks of the same family can share one Approximator instance.
///
/// Families with one output per action serve as q(s, .); single-output
/// families serve as state values.
class Approximator {
public:
    virtual ~Approximator() = default;

    virtual int param_count() const = 0;
    virtual int n_outputs() const = 0;

    /// Scalar output for one state (and output head). Tabular families key
    /// on state_index; feature families ignore it.
    virtual double value(const ParamVector& params, int state_index,
                         const Eigen::VectorXd& features, int output) const = 0;

    /// All output heads at once (action values at a state).
    virtual Eigen::VectorXd values(const ParamVector& params, int state_index,
                                   const Eigen::VectorXd& features) const;

    /// Exact gradient of value(...) w.r.t. params, written over `grad`
    /// (resized to param_count).
    virtual void gradient(const ParamVector& params, int state_index,
                          const Eigen::VectorXd& features, int output,
                          ParamVector& grad) const = 0;

    virtual ParamVector initial_params(std::uint64_t seed) const = 0;

    virtual std::string describe() const = 0;
};

/// Exact table q(s, a); params laid out s-major.
std::unique_ptr<Approximator> make_tabular(int n_states, int n_actions);

/// q(s, a) = w_a . phi(s), one weight row per action. Zero-initialized.
std::unique_ptr<Approximator> make_linear(int feature_dim, int n_actions);

/// v(s) = w . (phi(s) + u) with params [w, u]. With freeze_u the u block
/// reports zero gradient, reducing the family to the linear one.
std::unique_ptr<Approximator> make_factored_affine(int feature_dim,
                                                   bool freeze_u = false);

/// Two ReLU hidden layers of equal width, linear output head per action.
/// He-uniform fan-in initialization, biases zero, seeded.
std::unique_ptr<Approximator> make_mlp(int feature_dim, int n_actions,
                                       int hidden_width);

/// Capacity ladder for the MLP family.
int capacity_width(const std::string& name);  // small/medium/large/extra-large

struct OptimizerSpec {
    enum class Kind { Sgd, Adam };
    Kind kind = Kind::Sgd;
    double step = 0.01;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

OptimizerSpec::Kind optimizer_kind_from_string(const std::string& s);
std::string to_string(OptimizerSpec::Kind kind);

/// Applies ascent directions: TD updates are delta * grad q pushed through
/// the optimizer with a plus sign, not gradients of a fixed loss.
class Optimizer {
public:
    Optimizer(OptimizerSpec spec, int param_count);

    /// params += step * direction (SGD) or the bias-corrected Adam step.
    /// A non-finite direction skips the update and returns false; callers
    /// treat that as hard divergence.
    bool apply(ParamVector& params, const Eigen::VectorXd& direction);

    const OptimizerSpec& spec() const { return spec_; }

private:
    OptimizerSpec spec_;
    Eigen::VectorXd m_, v_;
    long t_ = 0;
};

/// Deep copy for target-network use. Subsequent online updates leave the
/// returned vector untouched (value semantics).
inline ParamVector sync_target(const ParamVector& online) { return online; }

/// Text snapshot: dimension header then one row-major value per line.
void save_params(const std::filesystem::path& path, const ParamVector& params);
ParamVector load_params(const std::filesystem::path& path);

}  // namespace tdlab
