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

#include "robsel/subset.h"

#include <algorithm>
#include <bit>

#include "robsel/errors.h"
#include "robsel/rng.h"

namespace robsel {

Subset::Subset(int universe_size)
    : universe_size_(universe_size), words_((universe_size + 63) / 64, 0) {
  if (universe_size < 0) {
    throw InvalidSubsetError("negative universe size");
  }
}

Subset Subset::FromItems(int universe_size, std::span<const int> items) {
  Subset s(universe_size);
  for (int item : items) {
    if (item < 0 || item >= universe_size) {
      throw InvalidSubsetError("item index " + std::to_string(item) +
                               " outside ground set of size " +
                               std::to_string(universe_size));
    }
    s.insert(item);
  }
  return s;
}

Subset Subset::FromItems(int universe_size, std::initializer_list<int> items) {
  return FromItems(universe_size,
                   std::span<const int>(items.begin(), items.size()));
}

Subset Subset::Full(int universe_size) {
  Subset s(universe_size);
  for (int i = 0; i < universe_size; ++i) s.insert(i);
  return s;
}

int Subset::size() const {
  int count = 0;
  for (uint64_t w : words_) count += std::popcount(w);
  return count;
}

std::vector<int> Subset::items() const {
  std::vector<int> out;
  for (size_t w = 0; w < words_.size(); ++w) {
    uint64_t word = words_[w];
    while (word != 0) {
      const int bit = std::countr_zero(word);
      out.push_back(static_cast<int>(w * 64 + bit));
      word &= word - 1;
    }
  }
  return out;
}

uint64_t Subset::Hash() const {
  uint64_t h = SplitMix64(static_cast<uint64_t>(universe_size_));
  for (uint64_t w : words_) h = SplitMix64(h ^ w);
  return h;
}

std::string Subset::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int item : items()) {
    if (!first) out += ',';
    out += 'v' + std::to_string(item + 1);
    first = false;
  }
  return out + "}";
}

std::string Subset::Join(const std::vector<std::string>& labels,
                         char sep) const {
  std::string out;
  bool first = true;
  for (int item : items()) {
    if (!first) out += sep;
    out += item < static_cast<int>(labels.size()) ? labels[item]
                                                   : std::to_string(item);
    first = false;
  }
  return out;
}

bool ItemOrderLess(const Subset& a, const Subset& b) {
  const std::vector<int> ia = a.items();
  const std::vector<int> ib = b.items();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(),
                                      ib.end());
}

}  // namespace robsel
