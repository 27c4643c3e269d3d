// Copyright 2026 The DPareto Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Core>

namespace dpareto::mech {

// Row-major example matrix with +/-1 labels. The first train_count rows are
// the training split, the remainder the test split. After preprocessing
// every row has Euclidean norm <= 1.
struct Dataset {
  Eigen::MatrixXd features;
  Eigen::VectorXd labels;
  Eigen::Index train_count = 0;

  Eigen::Index n_total() const { return features.rows(); }
  Eigen::Index n_train() const { return train_count; }
  Eigen::Index n_test() const { return features.rows() - train_count; }
  Eigen::Index dims() const { return features.cols(); }
};

enum class DatasetFormat { kCsv, kLibsvm };

struct LoadOptions {
  // Keep at most this many rows (0 = all), chosen deterministically by seed.
  std::int64_t subsample = 0;
  std::uint64_t seed = 0;
  // Fraction of rows assigned to the test split after a seeded shuffle;
  // 0 keeps file order and puts everything in the training split.
  double test_fraction = 0.0;
  // Scale all rows by the maximum row norm so norms lie in [0, 1].
  bool normalize = true;
};

// CSV needs a header row with a column named "label"; libsvm is the usual
// "label idx:value ..." sparse text with 1-based indices. Labels map to
// +1 (> 0) / -1 (<= 0). Parse failures name the line number.
Dataset load_dataset(const std::string& path, DatasetFormat format,
                     const LoadOptions& options);

// Two separable Gaussian blobs with +/-1 labels, balanced and already
// normalized; deterministic in the seed.
Dataset make_synthetic_dataset(int n_train, int n_test, int dims,
                               double separation, std::uint64_t seed);

}  // namespace dpareto::mech
