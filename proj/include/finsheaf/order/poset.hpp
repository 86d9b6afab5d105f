#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "finsheaf/core.hpp"

namespace finsheaf::order {

// Violations reported by poset::from_matrix. The witness holds the offending
// indices (unused slots are zero).
class poset_error : public error {
 public:
  enum class violation { not_reflexive, not_antisymmetric, not_transitive, bad_shape };

  poset_error(violation v, std::array<std::size_t, 3> w)
      : error(kind_name(v), message(v, w)), violation_(v), witness_(w) {}

  violation which() const noexcept { return violation_; }
  std::array<std::size_t, 3> const& witness() const noexcept { return witness_; }

 private:
  static std::string kind_name(violation v) {
    switch (v) {
      case violation::not_reflexive: return "NotReflexive";
      case violation::not_antisymmetric: return "NotAntisymmetric";
      case violation::not_transitive: return "NotTransitive";
      case violation::bad_shape: return "BadShape";
    }
    return "PosetError";
  }

  static std::string message(violation v, std::array<std::size_t, 3> const& w) {
    auto const i = std::to_string(w[0]);
    auto const j = std::to_string(w[1]);
    auto const k = std::to_string(w[2]);
    switch (v) {
      case violation::not_reflexive: return "NotReflexive(" + i + ")";
      case violation::not_antisymmetric: return "NotAntisymmetric(" + i + "," + j + ")";
      case violation::not_transitive: return "NotTransitive(" + i + "," + j + "," + k + ")";
      case violation::bad_shape: return "order matrix is not square";
    }
    return "poset error";
  }

  violation violation_;
  std::array<std::size_t, 3> witness_;
};

// A finite partial order on 0..n-1. The order matrix is the single source of
// truth; everything else is derived from it.
class poset {
 public:
  poset() = default;

  // check_poset: validates reflexivity, antisymmetry and transitivity, in
  // that order, reporting the lexicographically first violation.
  static poset from_matrix(std::vector<std::vector<bool>> const& m) {
    std::size_t const n = m.size();
    for (auto const& row : m) {
      if (row.size() != n) {
        throw poset_error(poset_error::violation::bad_shape, {0, 0, 0});
      }
    }
    poset p;
    p.n_ = n;
    p.leq_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        p.leq_[i * n + j] = m[i][j] ? 1 : 0;
      }
    }
    p.validate();
    return p;
  }

  // Reflexive-transitive closure of the given strict relation pairs (a < b).
  // Cycles surface as NotAntisymmetric.
  static poset from_relations(std::size_t n, std::vector<std::pair<elem, elem>> const& lt) {
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      m[i][i] = true;
    }
    for (auto [a, b] : lt) {
      if (a >= n || b >= n) {
        throw error("BadIndex", "relation " + std::to_string(a) + "<" + std::to_string(b) +
                                    " out of range for size " + std::to_string(n));
      }
      m[a][b] = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!m[i][k]) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (m[k][j]) {
            m[i][j] = true;
          }
        }
      }
    }
    return from_matrix(m);
  }

  static poset antichain(std::size_t n) { return from_relations(n, {}); }

  static poset chain(std::size_t n) {
    std::vector<std::pair<elem, elem>> lt;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      lt.emplace_back(static_cast<elem>(i), static_cast<elem>(i + 1));
    }
    return from_relations(n, lt);
  }

  std::size_t size() const noexcept { return n_; }

  bool leq(elem a, elem b) const { return leq_[a * n_ + b] != 0; }
  bool lt(elem a, elem b) const { return a != b && leq(a, b); }
  bool comparable(elem a, elem b) const { return leq(a, b) || leq(b, a); }

  // b covers a.
  bool covers(elem a, elem b) const {
    if (!lt(a, b)) {
      return false;
    }
    for (elem c = 0; c < n_; ++c) {
      if (lt(a, c) && lt(c, b)) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::pair<elem, elem>> cover_pairs() const {
    std::vector<std::pair<elem, elem>> out;
    for (elem a = 0; a < n_; ++a) {
      for (elem b = 0; b < n_; ++b) {
        if (covers(a, b)) {
          out.emplace_back(a, b);
        }
      }
    }
    return out;
  }

  poset opposite() const {
    poset p;
    p.n_ = n_;
    p.leq_.assign(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        p.leq_[i * n_ + j] = leq_[j * n_ + i];
      }
    }
    return p;
  }

  std::vector<std::vector<bool>> matrix() const {
    std::vector<std::vector<bool>> m(n_, std::vector<bool>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        m[i][j] = leq_[i * n_ + j] != 0;
      }
    }
    return m;
  }

  subset up(elem x) const {
    require_subset_size(n_, "poset");
    subset s = 0;
    for (elem y = 0; y < n_; ++y) {
      if (leq(x, y)) {
        s |= bit(y);
      }
    }
    return s;
  }

  subset down(elem x) const {
    require_subset_size(n_, "poset");
    subset s = 0;
    for (elem y = 0; y < n_; ++y) {
      if (leq(y, x)) {
        s |= bit(y);
      }
    }
    return s;
  }

  bool is_up_set(subset s) const {
    for (auto x : members(s)) {
      if ((up(x) & ~s) != 0) {
        return false;
      }
    }
    return true;
  }

  bool is_down_set(subset s) const {
    for (auto x : members(s)) {
      if ((down(x) & ~s) != 0) {
        return false;
      }
    }
    return true;
  }

  // Height of each element: length of the longest chain ending in it.
  std::vector<std::size_t> heights() const {
    std::vector<std::size_t> h(n_, 0);
    auto order = linear_extension();
    for (auto x : order) {
      for (elem y = 0; y < n_; ++y) {
        if (lt(y, x)) {
          h[x] = std::max(h[x], h[y] + 1);
        }
      }
    }
    return h;
  }

  // Elements sorted so that x < y implies x appears before y; ties broken
  // by index.
  std::vector<elem> linear_extension() const {
    std::vector<std::size_t> below(n_, 0);
    for (elem x = 0; x < n_; ++x) {
      for (elem y = 0; y < n_; ++y) {
        if (lt(y, x)) {
          ++below[x];
        }
      }
    }
    std::vector<elem> order(n_);
    for (elem x = 0; x < n_; ++x) {
      order[x] = x;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](elem a, elem b) { return below[a] < below[b]; });
    return order;
  }

  friend bool operator==(poset const&, poset const&) = default;

 private:
  void validate() const {
    using v = poset_error::violation;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!leq_[i * n_ + i]) {
        throw poset_error(v::not_reflexive, {i, 0, 0});
      }
    }
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (leq_[i * n_ + j] && leq_[j * n_ + i]) {
          throw poset_error(v::not_antisymmetric, {i, j, 0});
        }
      }
    }
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (!leq_[i * n_ + j]) {
          continue;
        }
        for (std::size_t k = 0; k < n_; ++k) {
          if (leq_[j * n_ + k] && !leq_[i * n_ + k]) {
            throw poset_error(v::not_transitive, {i, j, k});
          }
        }
      }
    }
  }

  std::size_t n_ = 0;
  std::vector<std::uint8_t> leq_;
};

// Monotone with respect to the given orders (antitone when contravariant).
inline bool is_monotone(poset const& dom, poset const& cod, std::vector<elem> const& values,
                        bool contravariant = false) {
  if (values.size() != dom.size()) {
    return false;
  }
  for (elem x = 0; x < dom.size(); ++x) {
    if (values[x] >= cod.size()) {
      return false;
    }
    for (elem y = 0; y < dom.size(); ++y) {
      if (!dom.leq(x, y)) {
        continue;
      }
      bool const ok = contravariant ? cod.leq(values[y], values[x]) : cod.leq(values[x], values[y]);
      if (!ok) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace finsheaf::order
