// Copyright 2026 The Authors.
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

#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace submax {

// Subset of a ground set {0, ..., n-1}, stored as a bitset sized to n.
// Invariants: all members are < universe_size(); bits past n are zero, so
// word-wise comparison and hashing are well defined.
class ElementSet {
 public:
  ElementSet() = default;

  explicit ElementSet(int universe) : n_(universe) {
    if (universe < 0) throw std::invalid_argument("universe must be >= 0");
    words_.assign(word_count(universe), 0);
  }

  ElementSet(int universe, std::initializer_list<int> ids)
      : ElementSet(universe) {
    for (int e : ids) add(e);
  }

  static ElementSet full(int universe) {
    ElementSet s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~0ULL;
    s.clear_tail();
    s.count_ = universe;
    return s;
  }

  int universe_size() const { return n_; }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(int e) const {
    assert(e >= 0 && e < n_);
    return (words_[static_cast<std::size_t>(e) >> 6] >> (e & 63)) & 1u;
  }

  void add(int e) {
    check_range(e);
    std::uint64_t& w = words_[static_cast<std::size_t>(e) >> 6];
    const std::uint64_t bit = 1ULL << (e & 63);
    if (!(w & bit)) {
      w |= bit;
      ++count_;
    }
  }

  void remove(int e) {
    check_range(e);
    std::uint64_t& w = words_[static_cast<std::size_t>(e) >> 6];
    const std::uint64_t bit = 1ULL << (e & 63);
    if (w & bit) {
      w &= ~bit;
      --count_;
    }
  }

  void unite_with(const ElementSet& other) {
    require_same_universe(other);
    int c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      words_[w] |= other.words_[w];
      c += std::popcount(words_[w]);
    }
    count_ = c;
  }

  ElementSet union_with(const ElementSet& other) const {
    ElementSet out = *this;
    out.unite_with(other);
    return out;
  }

  ElementSet intersect_with(const ElementSet& other) const {
    require_same_universe(other);
    ElementSet out(n_);
    int c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      out.words_[w] = words_[w] & other.words_[w];
      c += std::popcount(out.words_[w]);
    }
    out.count_ = c;
    return out;
  }

  ElementSet minus(const ElementSet& other) const {
    require_same_universe(other);
    ElementSet out(n_);
    int c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      out.words_[w] = words_[w] & ~other.words_[w];
      c += std::popcount(out.words_[w]);
    }
    out.count_ = c;
    return out;
  }

  bool intersects(const ElementSet& other) const {
    require_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & other.words_[w]) return true;
    }
    return false;
  }

  bool subset_of(const ElementSet& other) const {
    require_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & ~other.words_[w]) return false;
    }
    return true;
  }

  // Lowest member of *this \ other, or -1 when the difference is empty.
  int first_missing_from(const ElementSet& other) const {
    require_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      const std::uint64_t d = words_[w] & ~other.words_[w];
      if (d) return static_cast<int>(w * 64 + std::countr_zero(d));
    }
    return -1;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count_));
    for_each([&out](int e) { out.push_back(e); });
    return out;
  }

  // Visits members in ascending id order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        fn(static_cast<int>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  static std::size_t word_count(int n) {
    return (static_cast<std::size_t>(n) + 63) / 64;
  }

  void check_range(int e) const {
    if (e < 0 || e >= n_) throw std::out_of_range("element id out of range");
  }

  void require_same_universe(const ElementSet& other) const {
    if (n_ != other.n_)
      throw std::invalid_argument("sets over different universes");
  }

  void clear_tail() {
    if (n_ % 64 != 0 && !words_.empty())
      words_.back() &= (~0ULL >> (64 - n_ % 64));
  }

  int n_ = 0;
  int count_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace submax
