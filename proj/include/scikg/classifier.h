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

#ifndef SCIKG_CLASSIFIER_H_
#define SCIKG_CLASSIFIER_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace scikg {

struct ClassifierParams {
  int hidden_units = 128;
  int max_epochs = 200;
  int batch_size = 32;
  double learning_rate = 0.05;
  double momentum = 0.9;
  // Stop once the epoch loss has not improved by plateau_delta for
  // plateau_epochs consecutive epochs.
  int plateau_epochs = 10;
  double plateau_delta = 1e-4;
  uint64_t seed = 42;
};

struct TrainingExample {
  std::vector<double> input;
  int label = 0;
};

struct TrainingSummary {
  int epochs = 0;
  double final_loss = 0;
  double training_accuracy = 0;
};

// One-hidden-layer perceptron (tanh hidden units, softmax output) mapping a
// concatenated (subject, object) embedding to a distribution over relation
// labels. Training is single-threaded with a fixed evaluation order, so the
// same seed, data and parameters give bitwise identical weights.
class ConsistencyClassifier {
 public:
  // Randomly initialized network. `labels` are the output classes in order.
  ConsistencyClassifier(int input_dim, int hidden_units, std::vector<std::string> labels,
                        uint64_t seed);

  // Throws Error when there are no examples or fewer than two classes, or an
  // input has the wrong width.
  static ConsistencyClassifier Train(const std::vector<TrainingExample> &examples,
                                     std::vector<std::string> labels,
                                     const ClassifierParams &params,
                                     TrainingSummary *summary = nullptr);

  int input_dim() const { return static_cast<int>(w1_.cols()); }
  int hidden_units() const { return static_cast<int>(w1_.rows()); }
  const std::vector<std::string> &labels() const { return labels_; }

  // Probability per label, in labels() order.
  std::vector<double> Predict(std::span<const double> input) const;
  int PredictClass(std::span<const double> input) const;
  const std::string &PredictLabel(std::span<const double> input) const {
    return labels_[PredictClass(input)];
  }

  // Text checkpoint with hex-float weights; Load(Save(x)) == x bit for bit.
  void Save(std::ostream &out) const;
  static ConsistencyClassifier Load(std::istream &in);

  bool operator==(const ConsistencyClassifier &other) const;

 private:
  ConsistencyClassifier() = default;

  Eigen::VectorXd Forward(const Eigen::Ref<const Eigen::VectorXd> &x) const;

  std::vector<std::string> labels_;
  Eigen::MatrixXd w1_;  // hidden x input
  Eigen::VectorXd b1_;
  Eigen::MatrixXd w2_;  // classes x hidden
  Eigen::VectorXd b2_;
};

}  // namespace scikg

#endif  // SCIKG_CLASSIFIER_H_
