// Copyright 2026 The SciKG Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scikg/classifier.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "scikg/error.h"

namespace scikg {

namespace {

constexpr char kMagic[] = "scikg-classifier";
constexpr int kVersion = 1;

// Uniform double in [0, 1) from the top 53 bits, independent of the standard
// library's distribution implementations.
double Uniform01(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void Shuffle(std::vector<size_t> &order, std::mt19937_64 &rng) {
  for (size_t i = order.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(Uniform01(rng) * static_cast<double>(i));
    std::swap(order[i - 1], order[j]);
  }
}

// Column-wise softmax in place.
void Softmax(Eigen::MatrixXd &z) {
  for (Eigen::Index c = 0; c < z.cols(); ++c) {
    auto col = z.col(c);
    col.array() -= col.maxCoeff();
    col = col.array().exp();
    col /= col.sum();
  }
}

std::string Hex(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%a", x);
  return buf;
}

void WriteMatrix(std::ostream &out, const char *name, const Eigen::MatrixXd &m) {
  out << name << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ' ';
      out << Hex(m(r, c));
    }
    out << '\n';
  }
}

Eigen::MatrixXd ReadMatrix(std::istream &in, const char *name) {
  std::string tag;
  Eigen::Index rows = 0, cols = 0;
  if (!(in >> tag >> rows >> cols) || tag != name || rows < 0 || cols < 0) {
    throw Error(std::string("classifier checkpoint: expected matrix ") + name);
  }
  Eigen::MatrixXd m(rows, cols);
  std::string word;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (!(in >> word)) throw Error(std::string("classifier checkpoint: truncated ") + name);
      char *end = nullptr;
      m(r, c) = std::strtod(word.c_str(), &end);
      if (end == word.c_str() || *end != '\0') {
        throw Error("classifier checkpoint: bad number '" + word + "'");
      }
    }
  }
  return m;
}

}  // namespace

ConsistencyClassifier::ConsistencyClassifier(int input_dim, int hidden_units,
                                             std::vector<std::string> labels, uint64_t seed)
    : labels_(std::move(labels)) {
  if (input_dim <= 0 || hidden_units <= 0) throw Error("classifier: dimensions must be positive");
  if (labels_.size() < 2) throw Error("classifier: need at least two classes");
  const int classes = static_cast<int>(labels_.size());
  std::mt19937_64 rng(seed);
  auto init = [&](Eigen::MatrixXd &w, int rows, int cols) {
    double a = std::sqrt(6.0 / (rows + cols));
    w.resize(rows, cols);
    // Row-major fill so the draw order is fixed regardless of storage order.
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) w(r, c) = (2 * Uniform01(rng) - 1) * a;
    }
  };
  init(w1_, hidden_units, input_dim);
  init(w2_, classes, hidden_units);
  b1_ = Eigen::VectorXd::Zero(hidden_units);
  b2_ = Eigen::VectorXd::Zero(classes);
}

ConsistencyClassifier ConsistencyClassifier::Train(const std::vector<TrainingExample> &examples,
                                                   std::vector<std::string> labels,
                                                   const ClassifierParams &params,
                                                   TrainingSummary *summary) {
  if (examples.empty()) throw Error("classifier: no training examples");
  if (labels.size() < 2) throw Error("classifier: need at least two classes");
  if (params.batch_size <= 0 || params.max_epochs <= 0) {
    throw Error("classifier: batch size and epochs must be positive");
  }
  const int dim = static_cast<int>(examples.front().input.size());
  const int classes = static_cast<int>(labels.size());
  std::vector<bool> seen(classes, false);
  for (const TrainingExample &e : examples) {
    if (static_cast<int>(e.input.size()) != dim) throw Error("classifier: inconsistent input width");
    if (e.label < 0 || e.label >= classes) throw Error("classifier: label out of range");
    seen[e.label] = true;
  }
  if (std::count(seen.begin(), seen.end(), true) < 2) {
    throw Error("classifier: training data has fewer than two classes");
  }

  ConsistencyClassifier model(dim, params.hidden_units, std::move(labels), params.seed);
  // Separate stream for shuffling so initialization does not depend on it.
  std::mt19937_64 rng(params.seed ^ 0x9e3779b97f4a7c15ULL);

  const size_t n = examples.size();
  Eigen::MatrixXd inputs(dim, static_cast<Eigen::Index>(n));
  for (size_t i = 0; i < n; ++i) {
    inputs.col(static_cast<Eigen::Index>(i)) =
        Eigen::Map<const Eigen::VectorXd>(examples[i].input.data(), dim);
  }

  Eigen::MatrixXd v_w1 = Eigen::MatrixXd::Zero(model.w1_.rows(), model.w1_.cols());
  Eigen::VectorXd v_b1 = Eigen::VectorXd::Zero(model.b1_.size());
  Eigen::MatrixXd v_w2 = Eigen::MatrixXd::Zero(model.w2_.rows(), model.w2_.cols());
  Eigen::VectorXd v_b2 = Eigen::VectorXd::Zero(model.b2_.size());

  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  double best_loss = std::numeric_limits<double>::infinity();
  int stale = 0;
  int epoch = 0;
  double epoch_loss = 0;
  while (epoch < params.max_epochs) {
    ++epoch;
    Shuffle(order, rng);
    epoch_loss = 0;
    for (size_t start = 0; start < n; start += params.batch_size) {
      size_t end = std::min(n, start + static_cast<size_t>(params.batch_size));
      const Eigen::Index b = static_cast<Eigen::Index>(end - start);
      Eigen::MatrixXd x(dim, b);
      Eigen::MatrixXd y = Eigen::MatrixXd::Zero(classes, b);
      for (Eigen::Index k = 0; k < b; ++k) {
        size_t idx = order[start + static_cast<size_t>(k)];
        x.col(k) = inputs.col(static_cast<Eigen::Index>(idx));
        y(examples[idx].label, k) = 1;
      }
      Eigen::MatrixXd h = ((model.w1_ * x).colwise() + model.b1_).array().tanh().matrix();
      Eigen::MatrixXd p = (model.w2_ * h).colwise() + model.b2_;
      Softmax(p);
      for (Eigen::Index k = 0; k < b; ++k) {
        double prob = (p.col(k).array() * y.col(k).array()).sum();
        epoch_loss -= std::log(std::max(prob, 1e-300));
      }

      Eigen::MatrixXd dz = (p - y) / static_cast<double>(b);
      Eigen::MatrixXd g_w2 = dz * h.transpose();
      Eigen::VectorXd g_b2 = dz.rowwise().sum();
      Eigen::MatrixXd dh =
          ((model.w2_.transpose() * dz).array() * (1.0 - h.array().square())).matrix();
      Eigen::MatrixXd g_w1 = dh * x.transpose();
      Eigen::VectorXd g_b1 = dh.rowwise().sum();

      v_w1 = params.momentum * v_w1 - params.learning_rate * g_w1;
      v_b1 = params.momentum * v_b1 - params.learning_rate * g_b1;
      v_w2 = params.momentum * v_w2 - params.learning_rate * g_w2;
      v_b2 = params.momentum * v_b2 - params.learning_rate * g_b2;
      model.w1_ += v_w1;
      model.b1_ += v_b1;
      model.w2_ += v_w2;
      model.b2_ += v_b2;
    }
    epoch_loss /= static_cast<double>(n);
    if (best_loss - epoch_loss >= params.plateau_delta) {
      best_loss = epoch_loss;
      stale = 0;
    } else if (++stale >= params.plateau_epochs) {
      break;
    }
  }

  if (summary != nullptr) {
    size_t correct = 0;
    for (size_t i = 0; i < n; ++i) {
      if (model.PredictClass(examples[i].input) == examples[i].label) ++correct;
    }
    summary->epochs = epoch;
    summary->final_loss = epoch_loss;
    summary->training_accuracy = static_cast<double>(correct) / static_cast<double>(n);
  }
  return model;
}

Eigen::VectorXd ConsistencyClassifier::Forward(const Eigen::Ref<const Eigen::VectorXd> &x) const {
  Eigen::VectorXd h = (w1_ * x + b1_).array().tanh().matrix();
  Eigen::MatrixXd z = w2_ * h + b2_;
  Softmax(z);
  return z.col(0);
}

std::vector<double> ConsistencyClassifier::Predict(std::span<const double> input) const {
  if (static_cast<int>(input.size()) != input_dim()) {
    throw Error("classifier: expected input of width " + std::to_string(input_dim()) + ", got " +
                std::to_string(input.size()));
  }
  Eigen::VectorXd p =
      Forward(Eigen::Map<const Eigen::VectorXd>(input.data(), static_cast<Eigen::Index>(input.size())));
  return std::vector<double>(p.data(), p.data() + p.size());
}

int ConsistencyClassifier::PredictClass(std::span<const double> input) const {
  std::vector<double> p = Predict(input);
  // First maximum, so ties go to the earlier label.
  return static_cast<int>(std::max_element(p.begin(), p.end()) - p.begin());
}

void ConsistencyClassifier::Save(std::ostream &out) const {
  out << kMagic << ' ' << kVersion << '\n';
  out << "labels " << labels_.size() << '\n';
  for (const std::string &label : labels_) out << label << '\n';
  WriteMatrix(out, "w1", w1_);
  WriteMatrix(out, "b1", b1_);
  WriteMatrix(out, "w2", w2_);
  WriteMatrix(out, "b2", b2_);
}

ConsistencyClassifier ConsistencyClassifier::Load(std::istream &in) {
  std::string magic;
  int version = 0;
  if (!(in >> magic >> version) || magic != kMagic) throw Error("not a classifier checkpoint");
  if (version != kVersion) {
    throw Error("unsupported classifier checkpoint version " + std::to_string(version));
  }
  std::string tag;
  size_t count = 0;
  if (!(in >> tag >> count) || tag != "labels") throw Error("classifier checkpoint: missing labels");
  std::string line;
  std::getline(in, line);
  ConsistencyClassifier model;
  for (size_t i = 0; i < count; ++i) {
    if (!std::getline(in, line)) throw Error("classifier checkpoint: truncated labels");
    model.labels_.push_back(line);
  }
  model.w1_ = ReadMatrix(in, "w1");
  model.b1_ = ReadMatrix(in, "b1");
  model.w2_ = ReadMatrix(in, "w2");
  model.b2_ = ReadMatrix(in, "b2");
  if (model.b1_.size() != model.w1_.rows() || model.w2_.cols() != model.w1_.rows() ||
      model.w2_.rows() != static_cast<Eigen::Index>(count) || model.b2_.size() != model.w2_.rows()) {
    throw Error("classifier checkpoint: inconsistent dimensions");
  }
  return model;
}

bool ConsistencyClassifier::operator==(const ConsistencyClassifier &other) const {
  auto same = [](const auto &a, const auto &b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
  };
  return labels_ == other.labels_ && same(w1_, other.w1_) && same(b1_, other.b1_) &&
         same(w2_, other.w2_) && same(b2_, other.b2_);
}

}  // namespace scikg
