// Copyright 2026 The toystab Authors
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

#ifndef TOYSTAB_GF2_HPP
#define TOYSTAB_GF2_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace toystab {

/// Dense bit vector over GF(2), packed into 64-bit words.
///
/// Comparison order is "integer" order: bit 0 is the least significant
/// position, so the vector with the higher topmost differing bit is greater.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  size_t size() const { return size_; }

  bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  void set(size_t i, bool v) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }

  void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

  bool any() const {
    for (uint64_t w : words_) {
      if (w) {
        return true;
      }
    }
    return false;
  }

  size_t popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
      total += static_cast<size_t>(std::popcount(w));
    }
    return total;
  }

  std::optional<size_t> first_set() const {
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i]) {
        return i * 64 + static_cast<size_t>(std::countr_zero(words_[i]));
      }
    }
    return std::nullopt;
  }

  BitVec& operator^=(const BitVec& o) {
    require_same_size(o);
    for (size_t i = 0; i < words_.size(); ++i) {
      words_[i] ^= o.words_[i];
    }
    return *this;
  }

  friend BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
  }

  /// Parity of popcount(*this & o).
  bool and_parity(const BitVec& o) const {
    require_same_size(o);
    uint64_t acc = 0;
    for (size_t i = 0; i < words_.size(); ++i) {
      acc ^= words_[i] & o.words_[i];
    }
    return std::popcount(acc) & 1;
  }

  bool operator==(const BitVec& o) const = default;

  std::strong_ordering operator<=>(const BitVec& o) const {
    if (size_ != o.size_) {
      return size_ <=> o.size_;
    }
    for (size_t i = words_.size(); i-- > 0;) {
      if (words_[i] != o.words_[i]) {
        return words_[i] <=> o.words_[i];
      }
    }
    return std::strong_ordering::equal;
  }

 private:
  void require_same_size(const BitVec& o) const {
    if (size_ != o.size_) {
      throw std::invalid_argument("bit vector size mismatch");
    }
  }

  size_t size_ = 0;
  std::vector<uint64_t> words_;
};

/// Incremental row basis over GF(2). Rows are kept in echelon form with
/// pivots at their lowest set column.
class Gf2Basis {
 public:
  /// Reduces v against the basis; inserts the remainder if non-zero.
  /// Returns true if v was independent of the current basis.
  bool insert(BitVec v) {
    reduce(v);
    auto pivot = v.first_set();
    if (!pivot) {
      return false;
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(*pivot);
    return true;
  }

  bool contains(BitVec v) const {
    reduce(v);
    return !v.any();
  }

  size_t rank() const { return rows_.size(); }
  const std::vector<BitVec>& rows() const { return rows_; }

 private:
  void reduce(BitVec& v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (v.get(pivots_[i])) {
        v ^= rows_[i];
      }
    }
  }

  std::vector<BitVec> rows_;
  std::vector<size_t> pivots_;
};

/// Solves rows[i] . x = rhs[i] over GF(2); returns one solution (free
/// variables zero) or nullopt if the system is inconsistent.
inline std::optional<BitVec> gf2_solve(std::vector<BitVec> rows,
                                       std::vector<bool> rhs, size_t width) {
  if (rows.size() != rhs.size()) {
    throw std::invalid_argument("gf2_solve: rows/rhs length mismatch");
  }
  std::vector<BitVec> echelon;
  std::vector<bool> echelon_rhs;
  std::vector<size_t> pivots;
  for (size_t i = 0; i < rows.size(); ++i) {
    BitVec row = std::move(rows[i]);
    bool b = rhs[i];
    for (size_t j = 0; j < echelon.size(); ++j) {
      if (row.get(pivots[j])) {
        row ^= echelon[j];
        b = b ^ echelon_rhs[j];
      }
    }
    auto pivot = row.first_set();
    if (!pivot) {
      if (b) {
        return std::nullopt;
      }
      continue;
    }
    echelon.push_back(std::move(row));
    echelon_rhs.push_back(b);
    pivots.push_back(*pivot);
  }
  // Back-substitute with pivots in descending column order.
  std::vector<size_t> order(echelon.size());
  for (size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return pivots[a] > pivots[b]; });
  BitVec x(width);
  for (size_t idx : order) {
    bool v = echelon_rhs[idx] ^ echelon[idx].and_parity(x);
    // and_parity included x[pivot], which is still 0 here.
    x.set(pivots[idx], v);
  }
  return x;
}

/// Basis of rowspace(a) ∩ rowspace(b) (Zassenhaus construction).
inline std::vector<BitVec> gf2_row_space_intersection(
    const std::vector<BitVec>& a, const std::vector<BitVec>& b) {
  struct PairRow {
    BitVec left, right;
  };
  std::vector<PairRow> pivots;
  std::vector<size_t> pivot_cols;
  Gf2Basis result;
  auto feed = [&](BitVec left, BitVec right) {
    for (size_t i = 0; i < pivots.size(); ++i) {
      if (left.get(pivot_cols[i])) {
        left ^= pivots[i].left;
        right ^= pivots[i].right;
      }
    }
    if (auto pivot = left.first_set()) {
      pivot_cols.push_back(*pivot);
      pivots.push_back({std::move(left), std::move(right)});
    } else {
      result.insert(std::move(right));
    }
  };
  for (const BitVec& r : a) {
    feed(r, r);
  }
  for (const BitVec& r : b) {
    BitVec zero(r.size());
    feed(r, zero);
  }
  return result.rows();
}

}  // namespace toystab

#endif  // TOYSTAB_GF2_HPP
