#pragma once

// Frame-specific predicates on finite lattices: normality, the well-inside
// relation and regularity, and the self-duality of compact regular frames.
// A finite lattice is a frame exactly when it is distributive; that is
// checked on entry rather than assumed.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finsheaf/core.hpp"
#include "finsheaf/order/domain.hpp"
#include "finsheaf/order/lattice.hpp"

namespace finsheaf::order {

inline void require_frame(lattice const& l, char const* kind) {
  if (auto w = l.distributivity_failure()) {
    throw error(kind, std::string(kind) + ": distributivity fails at (" + std::to_string((*w)[0]) +
                          "," + std::to_string((*w)[1]) + "," + std::to_string((*w)[2]) + ")");
  }
}

struct normality_result {
  bool normal = true;
  // First (g, h) in lexicographic order with g ∨ h = ⊤ and no separating
  // u, v.
  std::optional<std::pair<elem, elem>> witness;
};

inline normality_result is_normal_frame(lattice const& l) {
  require_frame(l, "NotDistributive");
  normality_result res;
  for (elem g = 0; g < l.size(); ++g) {
    for (elem h = 0; h < l.size(); ++h) {
      if (l.join(g, h) != l.top()) {
        continue;
      }
      bool found = false;
      for (elem u = 0; u < l.size() && !found; ++u) {
        if (l.join(u, g) != l.top()) {
          continue;
        }
        for (elem v = 0; v < l.size(); ++v) {
          if (l.join(v, h) == l.top() && l.meet(u, v) == l.bot()) {
            found = true;
            break;
          }
        }
      }
      if (!found) {
        res.normal = false;
        res.witness = std::make_pair(g, h);
        return res;
      }
    }
  }
  return res;
}

// x ≺ y: some c has c ∧ x = ⊥ and c ∨ y = ⊤.
inline bool well_inside(lattice const& l, elem x, elem y) {
  for (elem c = 0; c < l.size(); ++c) {
    if (l.meet(c, x) == l.bot() && l.join(c, y) == l.top()) {
      return true;
    }
  }
  return false;
}

struct regularity_result {
  bool regular = true;
  std::optional<elem> witness;  // first y with y != sup{x : x ≺ y}
};

// Finite frames are compact, so compact regular reduces to regular.
inline regularity_result compact_regular_check(lattice const& l) {
  require_frame(l, "NotFrame");
  regularity_result res;
  for (elem y = 0; y < l.size(); ++y) {
    elem s = l.bot();
    for (elem x = 0; x < l.size(); ++x) {
      if (well_inside(l, x, y)) {
        s = l.join(s, x);
      }
    }
    if (s != y) {
      res.regular = false;
      res.witness = y;
      return res;
    }
  }
  return res;
}

// x ↦ {y : x ∨ y = ⊤} as a subset of l.
inline subset codisjoint_filter(lattice const& l, elem x) {
  subset s = 0;
  for (elem y = 0; y < l.size(); ++y) {
    if (l.join(x, y) == l.top()) {
      s |= bit(y);
    }
  }
  return s;
}

// k ↦ sup{x : some y ∈ k has x ∧ y = ⊥}.
inline elem disjoint_sup(lattice const& l, subset k) {
  elem s = l.bot();
  for (elem x = 0; x < l.size(); ++x) {
    for (auto y : members(k)) {
      if (l.meet(x, y) == l.bot()) {
        s = l.join(s, x);
        break;
      }
    }
  }
  return s;
}

struct selfdual_result {
  bool holds = true;
  std::string failure;
  std::vector<std::size_t> forward;  // x ↦ index into scott_open_filters(l)
};

// The map x ↦ {y : x ∨ y = ⊤} is an order isomorphism L → σFilt(L) whose
// inverse is k ↦ sup{x : ∃y ∈ k, x ∧ y = ⊥}.
inline selfdual_result lawson_selfdual_check(lattice const& l, domain_caps const& caps = {}) {
  require_frame(l, "NotFrame");
  selfdual_result res;
  auto const ks = scott_open_filters(l, caps);
  auto fail = [&](std::string msg) {
    res.holds = false;
    res.failure = std::move(msg);
    return res;
  };
  if (ks.size() != l.size()) {
    return fail("size mismatch between L and its Scott-open filters");
  }
  res.forward.resize(l.size());
  std::vector<bool> hit(ks.size(), false);
  for (elem x = 0; x < l.size(); ++x) {
    auto idx = index_of_filter(ks, codisjoint_filter(l, x));
    if (idx == ks.size()) {
      return fail("image of " + std::to_string(x) + " is not a Scott-open filter");
    }
    res.forward[x] = idx;
    hit[idx] = true;
    if (disjoint_sup(l, ks[idx].members) != x) {
      return fail("inverse does not recover " + std::to_string(x));
    }
  }
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (!hit[i]) {
      return fail("filter " + format_subset(ks[i].members) + " not in the image");
    }
  }
  for (elem x = 0; x < l.size(); ++x) {
    for (elem y = 0; y < l.size(); ++y) {
      bool const inc = (ks[res.forward[x]].members & ~ks[res.forward[y]].members) == 0;
      if (inc != l.leq(x, y)) {
        return fail("order not preserved at (" + std::to_string(x) + "," + std::to_string(y) + ")");
      }
    }
  }
  return res;
}

}  // namespace finsheaf::order
