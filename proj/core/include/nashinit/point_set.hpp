// Copyright 2026 The nashinit Authors
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

#ifndef NASHINIT_POINT_SET_HPP_
#define NASHINIT_POINT_SET_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace nashinit {

// Row-major collection of equal-length real vectors.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t dim) : dim_(dim) {}
  PointSet(std::size_t dim, std::vector<double> data)
      : dim_(dim), data_(std::move(data)) {
    if (dim_ == 0 || data_.size() % dim_ != 0) {
      throw std::invalid_argument("point data is not a multiple of dim");
    }
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : data_.size() / dim_; }
  bool empty() const { return data_.empty(); }

  std::span<const double> operator[](std::size_t i) const {
    return std::span<const double>(data_).subspan(i * dim_, dim_);
  }
  std::span<double> mutable_row(std::size_t i) {
    return std::span<double>(data_).subspan(i * dim_, dim_);
  }
  void push_back(std::span<const double> point) {
    if (point.size() != dim_) throw std::invalid_argument("point dim mismatch");
    data_.insert(data_.end(), point.begin(), point.end());
  }
  void reserve(std::size_t count) { data_.reserve(count * dim_); }
  std::span<const double> data() const { return data_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

inline double squared_distance(std::span<const double> a,
                               std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    sum += d * d;
  }
  return sum;
}

}  // namespace nashinit

#endif  // NASHINIT_POINT_SET_HPP_
