#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finsheaf/core.hpp"
#include "finsheaf/order/poset.hpp"

namespace finsheaf::order {

class lattice_error : public error {
 public:
  lattice_error(std::string kind, std::string const& msg, elem x = 0, elem y = 0)
      : error(std::move(kind), msg), x_(x), y_(y) {}

  elem x() const noexcept { return x_; }
  elem y() const noexcept { return y_; }

 private:
  elem x_;
  elem y_;
};

// A finite lattice: a poset together with its derived meet/join tables.
class lattice {
 public:
  lattice() = default;

  // check_lattice. Reports NoBottom / NoTop first, then the first pair (in
  // lexicographic order) lacking a meet, then lacking a join.
  static lattice from_poset(poset p) {
    lattice l;
    std::size_t const n = p.size();
    l.order_ = std::move(p);
    l.n_ = n;
    if (n == 0) {
      throw lattice_error("NoBottom", "NoBottom (empty poset)");
    }
    auto least = l.find_least(full_subset_vec(n));
    if (!least) {
      throw lattice_error("NoBottom", "NoBottom");
    }
    auto greatest = l.find_greatest(full_subset_vec(n));
    if (!greatest) {
      throw lattice_error("NoTop", "NoTop");
    }
    l.bot_ = *least;
    l.top_ = *greatest;
    l.meet_.assign(n * n, 0);
    l.join_.assign(n * n, 0);
    for (elem x = 0; x < n; ++x) {
      for (elem y = x; y < n; ++y) {
        std::vector<elem> lower;
        std::vector<elem> upper;
        for (elem z = 0; z < n; ++z) {
          if (l.order_.leq(z, x) && l.order_.leq(z, y)) {
            lower.push_back(z);
          }
          if (l.order_.leq(x, z) && l.order_.leq(y, z)) {
            upper.push_back(z);
          }
        }
        auto m = l.find_greatest(lower);
        if (!m) {
          throw lattice_error("NoMeet", "NoMeet(" + std::to_string(x) + "," + std::to_string(y) + ")",
                              x, y);
        }
        auto j = l.find_least(upper);
        if (!j) {
          throw lattice_error("NoJoin", "NoJoin(" + std::to_string(x) + "," + std::to_string(y) + ")",
                              x, y);
        }
        l.meet_[x * n + y] = l.meet_[y * n + x] = *m;
        l.join_[x * n + y] = l.join_[y * n + x] = *j;
      }
    }
    return l;
  }

  static lattice from_relations(std::size_t n, std::vector<std::pair<elem, elem>> const& lt) {
    return from_poset(poset::from_relations(n, lt));
  }

  std::size_t size() const noexcept { return n_; }
  poset const& order() const noexcept { return order_; }

  bool leq(elem a, elem b) const { return order_.leq(a, b); }
  bool lt(elem a, elem b) const { return order_.lt(a, b); }
  elem meet(elem a, elem b) const { return meet_[a * n_ + b]; }
  elem join(elem a, elem b) const { return join_[a * n_ + b]; }
  elem bot() const noexcept { return bot_; }
  elem top() const noexcept { return top_; }

  template <typename Range>
  elem join_all(Range const& xs) const {
    elem acc = bot_;
    for (auto x : xs) {
      acc = join(acc, static_cast<elem>(x));
    }
    return acc;
  }

  template <typename Range>
  elem meet_all(Range const& xs) const {
    elem acc = top_;
    for (auto x : xs) {
      acc = meet(acc, static_cast<elem>(x));
    }
    return acc;
  }

  elem join_of(subset s) const { return join_all(members(s)); }
  elem meet_of(subset s) const { return meet_all(members(s)); }

  subset up(elem x) const { return order_.up(x); }
  subset down(elem x) const { return order_.down(x); }

  lattice opposite() const {
    lattice l;
    l.n_ = n_;
    l.order_ = order_.opposite();
    l.meet_ = join_;
    l.join_ = meet_;
    l.bot_ = top_;
    l.top_ = bot_;
    l.labels_ = labels_;
    return l;
  }

  // First triple (x,y,z) with x ∧ (y ∨ z) != (x ∧ y) ∨ (x ∧ z), if any.
  std::optional<std::array<elem, 3>> distributivity_failure() const {
    for (elem x = 0; x < n_; ++x) {
      for (elem y = 0; y < n_; ++y) {
        for (elem z = 0; z < n_; ++z) {
          if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) {
            return std::array<elem, 3>{x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

  bool is_distributive() const { return !distributivity_failure().has_value(); }

  std::vector<elem> atoms() const {
    std::vector<elem> out;
    for (elem x = 0; x < n_; ++x) {
      if (order_.covers(bot_, x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  // Optional human-readable element names (used by text/DOT output).
  std::vector<std::string> const& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

  std::string label(elem x) const {
    return x < labels_.size() ? labels_[x] : std::to_string(x);
  }

  friend bool operator==(lattice const& a, lattice const& b) { return a.order_ == b.order_; }

 private:
  static std::vector<elem> full_subset_vec(std::size_t n) {
    std::vector<elem> v(n);
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<elem>(i);
    }
    return v;
  }

  std::optional<elem> find_least(std::vector<elem> const& xs) const {
    for (auto c : xs) {
      bool ok = true;
      for (auto z : xs) {
        if (!order_.leq(c, z)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        return c;
      }
    }
    return std::nullopt;
  }

  std::optional<elem> find_greatest(std::vector<elem> const& xs) const {
    for (auto c : xs) {
      bool ok = true;
      for (auto z : xs) {
        if (!order_.leq(z, c)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        return c;
      }
    }
    return std::nullopt;
  }

  std::size_t n_ = 0;
  poset order_;
  std::vector<elem> meet_;
  std::vector<elem> join_;
  elem bot_ = 0;
  elem top_ = 0;
  std::vector<std::string> labels_;
};

// Built-in lattices. Index conventions are fixed and relied upon by tests.
namespace lattices {

// 0 < 1 < ... < n-1.
inline lattice chain(std::size_t n) { return lattice::from_poset(poset::chain(n)); }

// Subsets of {0..k-1}; element i is the subset with bitmask i.
inline lattice boolean(std::size_t k) {
  std::size_t const n = std::size_t{1} << k;
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      m[a][b] = (a & ~b) == 0;
    }
    names[a] = format_subset(a);
  }
  auto l = lattice::from_poset(poset::from_matrix(m));
  l.set_labels(std::move(names));
  return l;
}

// 2x2 Boolean lattice: 0 = ⊥, 1 = a, 2 = b, 3 = ⊤.
inline lattice bool4() {
  auto l = boolean(2);
  l.set_labels({"bot", "a", "b", "top"});
  return l;
}

// Pentagon: 0 = ⊥, 1 < 2 on one side, 3 on the other, 4 = ⊤.
inline lattice n5() {
  auto l = lattice::from_relations(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
  l.set_labels({"bot", "a", "b", "c", "top"});
  return l;
}

// Diamond: 0 = ⊥, atoms 1,2,3, 4 = ⊤.
inline lattice m3() {
  auto l = lattice::from_relations(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  l.set_labels({"bot", "a", "b", "c", "top"});
  return l;
}

// Down-sets of p ordered by inclusion, indexed by ascending bitmask.
inline std::pair<lattice, std::vector<subset>> down_sets(poset const& p) {
  require_subset_size(p.size(), "poset");
  std::vector<subset> sets;
  if (p.size() > 20) {
    throw cap_exceeded("poset for down-set enumeration", p.size(), 20);
  }
  for (subset s = 0; s <= full_subset(p.size()); ++s) {
    if (p.is_down_set(s)) {
      sets.push_back(s);
    }
  }
  std::size_t const n = sets.size();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      m[a][b] = (sets[a] & ~sets[b]) == 0;
    }
    names[a] = format_subset(sets[a]);
  }
  auto l = lattice::from_poset(poset::from_matrix(m));
  l.set_labels(std::move(names));
  return {std::move(l), std::move(sets)};
}

inline lattice product(lattice const& a, lattice const& b) {
  std::size_t const n = a.size() * b.size();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto ai = static_cast<elem>(i / b.size());
      auto bi = static_cast<elem>(i % b.size());
      auto aj = static_cast<elem>(j / b.size());
      auto bj = static_cast<elem>(j % b.size());
      m[i][j] = a.leq(ai, aj) && b.leq(bi, bj);
    }
  }
  return lattice::from_poset(poset::from_matrix(m));
}

}  // namespace lattices

}  // namespace finsheaf::order
