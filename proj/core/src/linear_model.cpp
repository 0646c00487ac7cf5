#include "lyrica/linear_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lyrica {

SparseVector to_sparse(std::span<const double> dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0.0) out.push_back({static_cast<std::uint32_t>(i), dense[i]});
  }
  return out;
}

std::string_view to_string(ModelKind kind) {
  return kind == ModelKind::Logistic ? "logistic" : "ridge";
}

ModelKind parse_model_kind(std::string_view text) {
  if (text == "logistic") return ModelKind::Logistic;
  if (text == "ridge") return ModelKind::Ridge;
  throw std::invalid_argument("unknown model kind '" + std::string(text) + "'");
}

double LinearModel::score(const SparseVector& x) const {
  double s = bias;
  for (const auto& e : x) {
    if (e.index < weights.size()) s += weights[e.index] * e.value;
  }
  return s;
}

double LinearModel::score(std::span<const double> dense) const {
  double s = bias;
  for (std::size_t i = 0; i < dense.size() && i < weights.size(); ++i) s += weights[i] * dense[i];
  return s;
}

double LinearModel::predict(const SparseVector& x) const {
  return kind == ModelKind::Logistic ? sigmoid(score(x)) : score(x);
}

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

namespace {

// log(1 + exp(z)) without overflow.
double softplus(double z) { return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

void check_shapes(std::span<const SparseVector> rows, std::span<const double> labels) {
  if (rows.size() != labels.size()) throw std::invalid_argument("rows and labels differ in length");
  if (rows.empty()) throw std::invalid_argument("no training rows");
}

double squared_norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

struct LogisticState {
  std::span<const SparseVector> rows;
  std::span<const double> labels;
  double l2;

  double objective(const std::vector<double>& w, double b) const {
    double loss = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      double s = b;
      for (const auto& e : rows[i]) s += w[e.index] * e.value;
      loss += softplus(s) - labels[i] * s;
    }
    const double n = static_cast<double>(rows.size());
    return loss / n + 0.5 * l2 * squared_norm(w) / n;
  }

  void gradient(const std::vector<double>& w, double b, std::vector<double>& gw, double& gb) const {
    std::fill(gw.begin(), gw.end(), 0.0);
    gb = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      double s = b;
      for (const auto& e : rows[i]) s += w[e.index] * e.value;
      const double r = sigmoid(s) - labels[i];
      for (const auto& e : rows[i]) gw[e.index] += r * e.value;
      gb += r;
    }
    const double n = static_cast<double>(rows.size());
    for (std::size_t j = 0; j < gw.size(); ++j) gw[j] = (gw[j] + l2 * w[j]) / n;
    gb /= n;
  }
};

}  // namespace

double logistic_objective(const LinearModel& model, std::span<const SparseVector> rows,
                          std::span<const double> labels) {
  check_shapes(rows, labels);
  return LogisticState{rows, labels, model.l2}.objective(model.weights, model.bias);
}

LinearModel train_logistic(std::span<const SparseVector> rows, std::span<const double> labels,
                           std::size_t dimension, const LogisticOptions& options,
                           TrainingTrace* trace) {
  check_shapes(rows, labels);
  for (const auto& row : rows) {
    for (const auto& e : row) {
      if (e.index >= dimension) throw std::invalid_argument("feature index exceeds dimension");
    }
  }
  if (options.l2 < 0) throw std::invalid_argument("l2 must be non-negative");
  for (double y : labels) {
    if (y != 0.0 && y != 1.0) throw std::invalid_argument("logistic labels must be 0 or 1");
  }

  const LogisticState state{rows, labels, options.l2};
  std::vector<double> w(dimension, 0.0);
  double b = 0.0;
  std::vector<double> gw(dimension), trial(dimension);
  double gb = 0.0;
  double f = state.objective(w, b);
  if (trace) trace->objective.push_back(f);

  constexpr double kArmijo = 1e-4;
  double step = 1.0;
  for (int it = 0; it < options.iterations; ++it) {
    state.gradient(w, b, gw, gb);
    const double g2 = squared_norm(gw) + gb * gb;
    if (g2 < options.tolerance) break;

    bool accepted = false;
    double f_trial = f;
    double b_trial = b;
    while (step > 1e-12) {
      for (std::size_t j = 0; j < dimension; ++j) trial[j] = w[j] - step * gw[j];
      b_trial = b - step * gb;
      f_trial = state.objective(trial, b_trial);
      if (f_trial <= f - kArmijo * step * g2) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    w.swap(trial);
    b = b_trial;
    f = f_trial;
    if (trace) trace->objective.push_back(f);
    step *= 2.0;
  }

  LinearModel model;
  model.kind = ModelKind::Logistic;
  model.weights = std::move(w);
  model.bias = b;
  model.l2 = options.l2;
  model.seed = options.seed;
  return model;
}

double ridge_objective(const LinearModel& model, std::span<const SparseVector> rows,
                       std::span<const double> targets) {
  check_shapes(rows, targets);
  double loss = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double r = targets[i] - model.score(rows[i]);
    loss += r * r;
  }
  return loss + model.l2 * squared_norm(model.weights);
}

LinearModel train_ridge(std::span<const SparseVector> rows, std::span<const double> targets,
                        std::size_t dimension, const RidgeOptions& options) {
  check_shapes(rows, targets);
  for (const auto& row : rows) {
    for (const auto& e : row) {
      if (e.index >= dimension) throw std::invalid_argument("feature index exceeds dimension");
    }
  }
  if (options.l2 < 0) throw std::invalid_argument("l2 must be non-negative");

  // Unknowns x = (w, b); system A x = c with
  //   A = [X'X + l2 I, X'1; 1'X, N],  c = [X'y; sum y].
  const std::size_t n = rows.size();
  const std::size_t dim = dimension + 1;
  auto apply = [&](const std::vector<double>& x, std::vector<double>& out) {
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      double s = x[dimension];
      for (const auto& e : rows[i]) s += x[e.index] * e.value;
      for (const auto& e : rows[i]) out[e.index] += s * e.value;
      out[dimension] += s;
    }
    for (std::size_t j = 0; j < dimension; ++j) out[j] += options.l2 * x[j];
  };

  std::vector<double> rhs(dim, 0.0);
  double target_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : rows[i]) rhs[e.index] += targets[i] * e.value;
    target_sum += targets[i];
  }
  rhs[dimension] = target_sum;

  std::vector<double> x(dim, 0.0);
  x[dimension] = target_sum / static_cast<double>(n);
  std::vector<double> ax(dim), r(dim), p(dim), ap(dim);
  apply(x, ax);
  for (std::size_t j = 0; j < dim; ++j) r[j] = rhs[j] - ax[j];
  p = r;
  double rr = squared_norm(r);
  const double stop = options.tolerance * options.tolerance * std::max(squared_norm(rhs), 1e-300);
  for (int it = 0; it < options.max_iterations && rr > stop; ++it) {
    apply(p, ap);
    double pap = 0.0;
    for (std::size_t j = 0; j < dim; ++j) pap += p[j] * ap[j];
    if (!(pap > 0.0)) break;
    const double alpha = rr / pap;
    for (std::size_t j = 0; j < dim; ++j) {
      x[j] += alpha * p[j];
      r[j] -= alpha * ap[j];
    }
    const double rr_next = squared_norm(r);
    const double beta = rr_next / rr;
    for (std::size_t j = 0; j < dim; ++j) p[j] = r[j] + beta * p[j];
    rr = rr_next;
  }

  LinearModel model;
  model.kind = ModelKind::Ridge;
  model.bias = x[dimension];
  x.pop_back();
  model.weights = std::move(x);
  model.l2 = options.l2;
  return model;
}

}  // namespace lyrica
