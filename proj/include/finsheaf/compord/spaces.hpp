#pragma once

// Finite topological spaces, the spaces X^↓ and X^↑ of a finite compact
// ordered space (a finite poset with the discrete topology), compact
// saturated sets and the Hofmann–Mislove correspondence.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "finsheaf/core.hpp"
#include "finsheaf/order/domain.hpp"
#include "finsheaf/order/lattice.hpp"
#include "finsheaf/order/poset.hpp"

namespace finsheaf::compord {

using order::lattice;
using order::poset;

class space {
 public:
  space() = default;

  // Opens must contain ∅ and the whole set and be closed under binary
  // unions and intersections; duplicates are dropped, order is by bitmask.
  space(std::size_t n, std::vector<subset> opens) : n_(n), opens_(std::move(opens)) {
    require_subset_size(n, "space");
    std::sort(opens_.begin(), opens_.end());
    opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
    auto has = [&](subset s) { return std::binary_search(opens_.begin(), opens_.end(), s); };
    for (auto u : opens_) {
      if ((u & ~full_subset(n)) != 0) {
        throw error("NotTopology", "open set " + format_subset(u) + " has points out of range");
      }
    }
    if (!has(0) || !has(full_subset(n))) {
      throw error("NotTopology", "the empty set and the whole space must be open");
    }
    for (auto u : opens_) {
      for (auto v : opens_) {
        if (!has(u | v) || !has(u & v)) {
          throw error("NotTopology", "opens " + format_subset(u) + " and " + format_subset(v) +
                                         " are not closed under union and intersection");
        }
      }
    }
  }

  std::size_t size() const noexcept { return n_; }
  std::vector<subset> const& opens() const noexcept { return opens_; }
  bool is_open(subset s) const { return std::binary_search(opens_.begin(), opens_.end(), s); }

  // Smallest open containing x.
  subset neighbourhood(elem x) const {
    subset s = full_subset(n_);
    for (auto u : opens_) {
      if (contains(u, x)) {
        s &= u;
      }
    }
    return s;
  }

  // x ⊑ y iff every open containing x contains y (so opens are ⊑-up-sets).
  bool specializes(elem x, elem y) const { return contains(neighbourhood(x), y); }

  bool is_t0() const {
    for (elem x = 0; x < n_; ++x) {
      for (elem y = x + 1; y < n_; ++y) {
        if (specializes(x, y) && specializes(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

 private:
  std::size_t n_ = 0;
  std::vector<subset> opens_;
};

inline void require_t0(space const& s) {
  for (elem x = 0; x < s.size(); ++x) {
    for (elem y = x + 1; y < s.size(); ++y) {
      if (s.specializes(x, y) && s.specializes(y, x)) {
        throw error("NotT0", "points " + std::to_string(x) + " and " + std::to_string(y) +
                                 " have the same neighbourhoods");
      }
    }
  }
}

inline poset specialization_order(space const& s) {
  require_t0(s);
  std::vector<std::vector<bool>> m(s.size(), std::vector<bool>(s.size()));
  for (elem x = 0; x < s.size(); ++x) {
    for (elem y = 0; y < s.size(); ++y) {
      m[x][y] = s.specializes(x, y);
    }
  }
  return poset::from_matrix(m);
}

// Alexandrov topologies of a poset: down-sets (X^↓) and up-sets (X^↑).
// A finite compact ordered space is discrete, so these are all of its
// down-closed (resp. up-closed) opens.
inline space down_space(poset const& x) {
  std::vector<subset> opens;
  for (subset s = 0; s <= full_subset(x.size()); ++s) {
    if (x.is_down_set(s)) {
      opens.push_back(s);
    }
  }
  return space(x.size(), std::move(opens));
}

inline space up_space(poset const& x) {
  std::vector<subset> opens;
  for (subset s = 0; s <= full_subset(x.size()); ++s) {
    if (x.is_up_set(s)) {
      opens.push_back(s);
    }
  }
  return space(x.size(), std::move(opens));
}

// A family of point sets ordered by inclusion; element i is sets[i].
struct set_lattice {
  lattice lat;
  std::vector<subset> sets;

  std::size_t index_of(subset s) const {
    auto it = std::lower_bound(sets.begin(), sets.end(), s);
    if (it == sets.end() || *it != s) {
      return sets.size();
    }
    return static_cast<std::size_t>(it - sets.begin());
  }
};

inline set_lattice inclusion_lattice(std::vector<subset> sets) {
  std::sort(sets.begin(), sets.end());
  std::size_t const n = sets.size();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = (sets[i] & ~sets[j]) == 0;
    }
    names[i] = format_subset(sets[i]);
  }
  auto l = lattice::from_poset(poset::from_matrix(m));
  l.set_labels(std::move(names));
  return {std::move(l), std::move(sets)};
}

inline set_lattice opens_lattice(space const& s) { return inclusion_lattice(s.opens()); }

// K(S): intersections of opens. Every subset of a finite space is compact,
// so this is the family of saturated sets.
inline set_lattice compact_saturated(space const& s) {
  require_t0(s);
  std::vector<subset> sat{full_subset(s.size())};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<subset> next = sat;
    for (auto k : sat) {
      for (auto u : s.opens()) {
        next.push_back(k & u);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    grew = next.size() != sat.size();
    sat = std::move(next);
  }
  return inclusion_lattice(std::move(sat));
}

// Complement is an order-reversing bijection Ω(X^↓) → K(X^↑).
inline bool complement_duality_check(poset const& x) {
  auto down = opens_lattice(down_space(x));
  auto k = compact_saturated(up_space(x));
  if (down.sets.size() != k.sets.size()) {
    return false;
  }
  subset const all = full_subset(x.size());
  std::vector<std::size_t> image(down.sets.size());
  for (std::size_t i = 0; i < down.sets.size(); ++i) {
    image[i] = k.index_of(all & ~down.sets[i]);
    if (image[i] == k.sets.size()) {
      return false;
    }
  }
  for (elem i = 0; i < down.sets.size(); ++i) {
    for (elem j = 0; j < down.sets.size(); ++j) {
      if (down.lat.leq(i, j) != k.lat.leq(static_cast<elem>(image[j]), static_cast<elem>(image[i]))) {
        return false;
      }
    }
  }
  return true;
}

struct hofmann_mislove_result {
  bool holds = true;
  std::string failure;
};

// Φ(K) = {U open : K ⊆ U} is an order isomorphism K(S)^op → σFilt(Ω(S))
// with inverse k ↦ ⋂k.
inline hofmann_mislove_result hofmann_mislove_check(space const& s,
                                                    order::domain_caps const& caps = {}) {
  auto const k = compact_saturated(s);
  auto const om = opens_lattice(s);
  auto const filters = order::scott_open_filters(om.lat, caps);
  hofmann_mislove_result res;
  auto fail = [&](std::string msg) {
    res.holds = false;
    res.failure = std::move(msg);
    return res;
  };
  if (filters.size() != k.sets.size()) {
    return fail(std::to_string(k.sets.size()) + " compact saturated sets but " +
                std::to_string(filters.size()) + " Scott-open filters");
  }
  std::vector<std::size_t> phi(k.sets.size());
  std::vector<bool> hit(filters.size(), false);
  for (std::size_t i = 0; i < k.sets.size(); ++i) {
    subset above = 0;
    for (std::size_t u = 0; u < om.sets.size(); ++u) {
      if ((k.sets[i] & ~om.sets[u]) == 0) {
        above |= bit(u);
      }
    }
    phi[i] = order::index_of_filter(filters, above);
    if (phi[i] == filters.size()) {
      return fail("Phi(" + format_subset(k.sets[i]) + ") is not a Scott-open filter");
    }
    if (hit[phi[i]]) {
      return fail("Phi is not injective at " + format_subset(k.sets[i]));
    }
    hit[phi[i]] = true;
    subset inter = full_subset(s.size());
    for (auto u : members(filters[phi[i]].members)) {
      inter &= om.sets[u];
    }
    if (inter != k.sets[i]) {
      return fail("intersection of Phi(" + format_subset(k.sets[i]) + ") is " +
                  format_subset(inter));
    }
  }
  for (std::size_t i = 0; i < k.sets.size(); ++i) {
    for (std::size_t j = 0; j < k.sets.size(); ++j) {
      bool const sub = (k.sets[i] & ~k.sets[j]) == 0;
      bool const rev = (filters[phi[j]].members & ~filters[phi[i]].members) == 0;
      if (sub != rev) {
        return fail("order not reversed at " + format_subset(k.sets[i]) + ", " +
                    format_subset(k.sets[j]));
      }
    }
  }
  return res;
}

}  // namespace finsheaf::compord
