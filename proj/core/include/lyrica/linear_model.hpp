#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace lyrica {

struct SparseEntry {
  std::uint32_t index = 0;
  double value = 0.0;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Entries sorted by index, no duplicates.
using SparseVector = std::vector<SparseEntry>;

SparseVector to_sparse(std::span<const double> dense);

enum class ModelKind { Logistic, Ridge };

std::string_view to_string(ModelKind kind);
ModelKind parse_model_kind(std::string_view text);

/// Weights and bias of a linear scorer over a fixed feature space.
struct LinearModel {
  ModelKind kind = ModelKind::Logistic;
  std::vector<double> weights;
  double bias = 0.0;
  double l2 = 1.0;
  std::uint64_t seed = 0;

  /// w . x + b. Indices beyond the weight vector are ignored.
  double score(const SparseVector& x) const;
  double score(std::span<const double> dense) const;
  /// Logistic models: sigmoid(score). Ridge models: score.
  double predict(const SparseVector& x) const;

  friend bool operator==(const LinearModel&, const LinearModel&) = default;
};

double sigmoid(double z);

struct LogisticOptions {
  double l2 = 1.0;
  int iterations = 500;
  /// Stop once the squared gradient norm falls below this.
  double tolerance = 1e-12;
  std::uint64_t seed = 0;
};

/// Objective value recorded after every accepted gradient step.
struct TrainingTrace {
  std::vector<double> objective;
};

/// Mean log-loss plus l2 / (2N) * |w|^2; the bias is not penalised.
double logistic_objective(const LinearModel& model, std::span<const SparseVector> rows,
                          std::span<const double> labels);

/// Full-batch gradient descent with Armijo backtracking, so the objective
/// never increases between iterations. Labels must be 0 or 1.
LinearModel train_logistic(std::span<const SparseVector> rows, std::span<const double> labels,
                           std::size_t dimension, const LogisticOptions& options,
                           TrainingTrace* trace = nullptr);

struct RidgeOptions {
  double l2 = 1.0;
  int max_iterations = 2000;
  double tolerance = 1e-10;
};

/// Sum of squared residuals plus l2 * |w|^2; the bias is not penalised.
double ridge_objective(const LinearModel& model, std::span<const SparseVector> rows,
                       std::span<const double> targets);

/// Solves the ridge normal equations by conjugate gradients, starting from
/// zero weights and the mean target as bias.
LinearModel train_ridge(std::span<const SparseVector> rows, std::span<const double> targets,
                        std::size_t dimension, const RidgeOptions& options);

}  // namespace lyrica
