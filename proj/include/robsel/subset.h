// Copyright 2026 The Robsel Authors.
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

#ifndef ROBSEL_SUBSET_H_
#define ROBSEL_SUBSET_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace robsel {

// Fixed-width bit vector over a ground set {0, ..., n-1}. This is the only
// subset representation solvers exchange.
class Subset {
 public:
  Subset() = default;
  explicit Subset(int universe_size);

  // Throws InvalidSubsetError if any index is outside [0, universe_size).
  static Subset FromItems(int universe_size, std::span<const int> items);
  static Subset FromItems(int universe_size, std::initializer_list<int> items);
  static Subset Full(int universe_size);

  int universe_size() const { return universe_size_; }

  bool contains(int item) const {
    return (words_[item >> 6] >> (item & 63)) & 1u;
  }
  void insert(int item) { words_[item >> 6] |= uint64_t{1} << (item & 63); }
  void erase(int item) { words_[item >> 6] &= ~(uint64_t{1} << (item & 63)); }
  void flip(int item) { words_[item >> 6] ^= uint64_t{1} << (item & 63); }

  // Returns a copy with `item` added.
  Subset With(int item) const {
    Subset copy = *this;
    copy.insert(item);
    return copy;
  }

  // Popcount.
  int size() const;
  bool empty() const { return size() == 0; }

  // Ascending item indices.
  std::vector<int> items() const;

  uint64_t Hash() const;

  // Renders as "{v1,v3}" using 1-based labels, or with the supplied labels.
  std::string ToString() const;
  std::string Join(const std::vector<std::string>& labels, char sep) const;

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.universe_size_ == b.universe_size_ && a.words_ == b.words_;
  }

  // Lexicographic order on the ascending item lists: {0,1} < {0,2} < {1}.
  // A proper prefix sorts first, so {0} < {0,1}.
  friend bool ItemOrderLess(const Subset& a, const Subset& b);

 private:
  int universe_size_ = 0;
  std::vector<uint64_t> words_;
};

struct SubsetHash {
  size_t operator()(const Subset& s) const { return s.Hash(); }
};

}  // namespace robsel

#endif  // ROBSEL_SUBSET_H_
