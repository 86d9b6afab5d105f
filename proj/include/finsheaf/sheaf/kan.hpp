#pragma once

// Moving presheaves between a finite lattice L and the K-side base
// Q = σFilt(L)^op. The transfer takes the colimit of G over a Scott-open
// filter k; the restriction takes the limit over the filters containing x.
// Both are computed literally in Set and compared with the values at the
// least element of k and at ↑x, which is what they collapse to when every
// filter is principal.

#include <string>
#include <utility>
#include <vector>

#include "finsheaf/core.hpp"
#include "finsheaf/order/domain.hpp"
#include "finsheaf/sheaf/axioms.hpp"
#include "finsheaf/sheaf/presheaf.hpp"

namespace finsheaf::sheaf {

struct kan_result {
  order::lawson_dual_result dual;
  presheaf sheaf;
  check_report checks;  // the literal (co)limits agreed with the collapsed values
};

inline lattice k_side_base(order::lawson_dual_result const& d) { return d.dual.opposite(); }

// (κ* Lan_λ G)(k) = colim_{x∈k} G(x), realised as G(least k).
inline kan_result kan_transfer(presheaf const& g, order::domain_caps const& caps = {}) {
  auto const& l = g.base();
  kan_result res{order::lawson_dual(l, caps), {}, {}};
  auto const& fs = res.dual.filters;
  lattice q = k_side_base(res.dual);
  std::vector<algebra_ref> objs;
  comparison col;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    objs.push_back(g.at(fs[i].least));
    if (col.iso) {
      col = colimit_comparison(g, fs[i].members, fs[i].least);
    }
  }
  res.checks.add("colimit_is_least_value", col.iso, col.witness);
  cover_maps covers;
  for (auto [lo, hi] : q.order().cover_pairs()) {
    covers.emplace(std::make_pair(lo, hi), g.restrict(fs[hi].least, fs[lo].least));
  }
  res.sheaf = presheaf::from_covers(std::move(q), std::move(objs), std::move(covers));
  return res;
}

// (λ* Ran_κ F)(x) = lim_{k ∋ x} F(k), realised as F(↑x).
inline kan_result kan_restrict(lattice const& l, presheaf const& f,
                               order::domain_caps const& caps = {}) {
  kan_result res{order::lawson_dual(l, caps), {}, {}};
  if (!(k_side_base(res.dual) == f.base())) {
    throw error("BaseMismatch", "presheaf is not over the Lawson dual of the given lattice");
  }
  auto const& fs = res.dual.filters;
  std::vector<elem> principal(l.size());
  for (elem x = 0; x < l.size(); ++x) {
    auto idx = order::index_of_filter(fs, l.up(x));
    if (idx == fs.size()) {
      throw internal_inconsistency("principal filter of " + std::to_string(x) + " is missing");
    }
    principal[x] = static_cast<elem>(idx);
  }
  std::vector<algebra_ref> objs;
  comparison lim;
  for (elem x = 0; x < l.size(); ++x) {
    objs.push_back(f.at(principal[x]));
    subset around = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (contains(fs[i].members, x)) {
        around |= bit(i);
      }
    }
    if (lim.iso) {
      lim = limit_comparison(f, around, principal[x]);
    }
  }
  res.checks.add("limit_is_principal_value", lim.iso, lim.witness);
  cover_maps covers;
  for (auto [lo, hi] : l.order().cover_pairs()) {
    covers.emplace(std::make_pair(lo, hi), f.restrict(principal[hi], principal[lo]));
  }
  res.sheaf = presheaf::from_covers(l, std::move(objs), std::move(covers));
  return res;
}

// Identical bases, objects and restriction maps.
inline bool same_presheaf(presheaf const& a, presheaf const& b) {
  if (!(a.base() == b.base())) {
    return false;
  }
  for (elem p = 0; p < a.size(); ++p) {
    if (!(*a.at(p) == *b.at(p))) {
      return false;
    }
  }
  for (elem q = 0; q < a.size(); ++q) {
    for (elem p = 0; p < a.size(); ++p) {
      if (a.base().leq(p, q) && a.restrict(q, p).map != b.restrict(q, p).map) {
        return false;
      }
    }
  }
  return true;
}

// Softness on the Ω side: F(⊤) → colim_{x∈k} F(x) is onto for every
// Scott-open filter k.
inline comparison omega_soft(presheaf const& f, order::domain_caps const& caps = {}) {
  auto const& l = f.base();
  comparison c;
  for (auto const& k : order::scott_open_filters(l, caps)) {
    auto col = colimit_in_set(f, k.members);
    std::vector<bool> hit(col.classes, false);
    for (elem a = 0; a < f.at(l.top())->size(); ++a) {
      hit[col.of(l.top(), a)] = true;
    }
    for (std::size_t i = 0; i < hit.size(); ++i) {
      if (!hit[i]) {
        c.iso = false;
        c.witness = "colimit class " + std::to_string(i) + " over " + format_subset(k.members) +
                    " is not reached from F(top)";
        return c;
      }
    }
  }
  return c;
}

// The value of G at the point filter ↑x: the stalk at x when L is the
// Alexandrov topology of a finite poset.
inline algebra_ref stalk(presheaf const& g, elem x) {
  auto col = colimit_comparison(g, g.base().up(x), x);
  if (!col.iso) {
    throw internal_inconsistency("stalk colimit: " + col.witness);
  }
  return g.at(x);
}

}  // namespace finsheaf::sheaf
