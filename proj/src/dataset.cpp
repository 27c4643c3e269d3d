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

#include "dpareto/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "dpareto/errors.hpp"
#include "dpareto/rng.hpp"

namespace dpareto::mech {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

double parse_number(const std::string& token, std::size_t line_number) {
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (end == token.c_str() || !std::isfinite(v)) {
    throw ConfigError("line " + std::to_string(line_number) + ": bad number '" + token + "'");
  }
  return v;
}

struct RawData {
  std::vector<std::vector<double>> rows;
  std::vector<double> labels;
  Eigen::Index dims = 0;
};

RawData read_csv(std::istream& in) {
  RawData raw;
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("csv: empty file");
  const auto header = split_csv_line(line);
  std::size_t label_column = header.size();
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "label") label_column = i;
  }
  if (label_column == header.size()) {
    throw ConfigError("csv: header has no column named 'label'");
  }
  raw.dims = static_cast<Eigen::Index>(header.size() - 1);

  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      throw ConfigError("line " + std::to_string(line_number) + ": expected " +
                        std::to_string(header.size()) + " fields, got " +
                        std::to_string(fields.size()));
    }
    std::vector<double> row;
    row.reserve(static_cast<std::size_t>(raw.dims));
    for (std::size_t i = 0; i < fields.size(); ++i) {
      const double v = parse_number(fields[i], line_number);
      if (i == label_column) {
        raw.labels.push_back(v);
      } else {
        row.push_back(v);
      }
    }
    raw.rows.push_back(std::move(row));
  }
  return raw;
}

RawData read_libsvm(std::istream& in) {
  RawData raw;
  std::string line;
  std::size_t line_number = 0;
  Eigen::Index max_index = 0;
  std::vector<std::vector<std::pair<Eigen::Index, double>>> sparse_rows;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string token;
    if (!(ss >> token)) continue;
    raw.labels.push_back(parse_number(token, line_number));
    std::vector<std::pair<Eigen::Index, double>> entries;
    while (ss >> token) {
      const auto colon = token.find(':');
      if (colon == std::string::npos) {
        throw ConfigError("line " + std::to_string(line_number) +
                          ": expected index:value, got '" + token + "'");
      }
      const double index = parse_number(token.substr(0, colon), line_number);
      const double value = parse_number(token.substr(colon + 1), line_number);
      if (index < 1 || index != std::floor(index)) {
        throw ConfigError("line " + std::to_string(line_number) +
                          ": feature indices are 1-based integers");
      }
      const auto idx = static_cast<Eigen::Index>(index);
      max_index = std::max(max_index, idx);
      entries.emplace_back(idx - 1, value);
    }
    sparse_rows.push_back(std::move(entries));
  }
  raw.dims = max_index;
  raw.rows.assign(sparse_rows.size(), std::vector<double>(static_cast<std::size_t>(max_index), 0.0));
  for (std::size_t r = 0; r < sparse_rows.size(); ++r) {
    for (const auto& [c, v] : sparse_rows[r]) {
      raw.rows[r][static_cast<std::size_t>(c)] = v;
    }
  }
  return raw;
}

Dataset assemble(const RawData& raw, const LoadOptions& options) {
  std::vector<int> keep(raw.rows.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = static_cast<int>(i);

  if (options.subsample > 0 && options.subsample < static_cast<std::int64_t>(keep.size())) {
    RngEngine engine = RngStream{options.seed, 1}.engine();
    keep = sample_indices(static_cast<int>(raw.rows.size()),
                          static_cast<int>(options.subsample), engine);
    std::sort(keep.begin(), keep.end());
  }

  Eigen::Index train_count = static_cast<Eigen::Index>(keep.size());
  if (options.test_fraction > 0.0) {
    if (!(options.test_fraction < 1.0)) {
      throw ConfigError("dataset: test_fraction must lie in [0, 1)");
    }
    RngEngine engine = RngStream{options.seed, 2}.engine();
    const std::vector<int> order = random_permutation(static_cast<int>(keep.size()), engine);
    std::vector<int> shuffled(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
      shuffled[i] = keep[static_cast<std::size_t>(order[i])];
    }
    keep = std::move(shuffled);
    const auto n_test = static_cast<Eigen::Index>(
        std::floor(options.test_fraction * static_cast<double>(keep.size())));
    train_count = static_cast<Eigen::Index>(keep.size()) - n_test;
    if (train_count < 1) throw ConfigError("dataset: empty training split");
  }

  Dataset data;
  data.features.resize(static_cast<Eigen::Index>(keep.size()), raw.dims);
  data.labels.resize(static_cast<Eigen::Index>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const auto& row = raw.rows[static_cast<std::size_t>(keep[i])];
    for (Eigen::Index c = 0; c < raw.dims; ++c) {
      data.features(static_cast<Eigen::Index>(i), c) = row[static_cast<std::size_t>(c)];
    }
    data.labels[static_cast<Eigen::Index>(i)] =
        raw.labels[static_cast<std::size_t>(keep[i])] > 0.0 ? 1.0 : -1.0;
  }
  data.train_count = train_count;

  if (options.normalize && data.features.rows() > 0) {
    const double max_norm = data.features.rowwise().norm().maxCoeff();
    if (max_norm > 0.0) data.features /= max_norm;
  }
  return data;
}

}  // namespace

Dataset load_dataset(const std::string& path, DatasetFormat format,
                     const LoadOptions& options) {
  std::ifstream file(path);
  if (!file) throw ConfigError("dataset: cannot open '" + path + "'");
  const RawData raw = format == DatasetFormat::kCsv ? read_csv(file) : read_libsvm(file);
  if (raw.rows.empty()) throw ConfigError("dataset: no data rows in '" + path + "'");
  return assemble(raw, options);
}

Dataset make_synthetic_dataset(int n_train, int n_test, int dims,
                               double separation, std::uint64_t seed) {
  if (n_train < 1 || n_test < 0 || dims < 1) {
    throw DomainError("synthetic dataset: need n_train >= 1, n_test >= 0, dims >= 1");
  }
  const int n = n_train + n_test;
  Dataset data;
  data.features.resize(n, dims);
  data.labels.resize(n);
  data.train_count = n_train;

  RngEngine engine = RngStream{seed, 3}.engine();
  const double center = separation / (2.0 * std::sqrt(static_cast<double>(dims)));
  const double spread = separation / (4.0 * std::sqrt(static_cast<double>(dims)));
  for (int i = 0; i < n; ++i) {
    const double label = (i % 2 == 0) ? 1.0 : -1.0;
    data.labels[i] = label;
    for (int c = 0; c < dims; ++c) {
      data.features(i, c) = label * center + spread * engine.normal();
    }
  }
  const double max_norm = data.features.rowwise().norm().maxCoeff();
  if (max_norm > 0.0) data.features /= max_norm;
  return data;
}

}  // namespace dpareto::mech
