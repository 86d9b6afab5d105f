#pragma once

// From presheaves back to congruence-valued maps, the preservation
// conditions on θ, the poset of soft representations and morphisms of
// representations.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "finsheaf/alg/congruence.hpp"
#include "finsheaf/alg/limits.hpp"
#include "finsheaf/core.hpp"
#include "finsheaf/order/maps.hpp"
#include "finsheaf/sheaf/axioms.hpp"
#include "finsheaf/sheaf/presheaf.hpp"

namespace finsheaf::sheaf {

struct extract_result {
  rep_map h;
  // iso[p]: A/θ(p) → F(p), natural in p; γ∗H_F ≅ F.
  std::vector<homomorphism> iso;
};

// θ(p) = kernel of A → F(⊤) → F(p).
inline extract_result extract_H(presheaf const& f, homomorphism const& phi) {
  elem const top = f.base().top();
  if (!(*phi.cod == *f.at(top))) {
    throw error("AlgebraMismatch", "phi does not land in F(top)");
  }
  if (!phi.bijective()) {
    throw error("PhiNotIso", "phi: A -> F(top) is not an isomorphism");
  }
  auto soft = soft_from_top(f);
  if (!soft.iso) {
    throw error("NotSoft", soft.witness);
  }
  extract_result res;
  res.h.base = f.base();
  res.h.algebra = phi.dom;
  std::vector<alg::quotient_result> qs;
  for (elem p = 0; p < f.size(); ++p) {
    auto leg = alg::compose(f.restrict(top, p), phi);
    res.h.theta.push_back(alg::kernel_congruence(leg));
    qs.push_back(alg::quotient(phi.dom, res.h.theta.back()));
    // Induced map on the quotient: through block leaders.
    std::vector<elem> m(qs.back().alg->size());
    for (elem a = 0; a < phi.dom->size(); ++a) {
      m[qs.back().proj(a)] = leg(a);
    }
    auto iso = alg::make_homomorphism(qs.back().alg, f.at(p), std::move(m));
    if (!iso.bijective()) {
      throw internal_inconsistency("induced comparison at " + std::to_string(p) +
                                   " is not an isomorphism");
    }
    res.iso.push_back(std::move(iso));
  }
  for (elem q = 0; q < f.size(); ++q) {
    for (elem p = 0; p < f.size(); ++p) {
      if (!f.base().leq(p, q)) {
        continue;
      }
      auto lhs = alg::compose(res.iso[p], alg::induced_map(qs[q], qs[p]));
      auto rhs = alg::compose(f.restrict(q, p), res.iso[q]);
      if (lhs.map != rhs.map) {
        throw internal_inconsistency("comparison isomorphisms are not natural at (" +
                                     std::to_string(p) + "," + std::to_string(q) + ")");
      }
    }
  }
  return res;
}

// The preservation properties of θ in the contravariant dictionary:
//   empty infimum      θ(⊥) = ∇
//   binary infima      θ(p∨q) = θ(p) ∩ θ(q)
//   binary suprema     θ(p∧q) = θ(p) ∨ θ(q)
//   directed suprema   θ(inf D) = ⋁ θ(D) for codirected D
//   top                θ(⊤) = Δ
// plus pairwise commuting of the image. Each item is cross-checked against
// the matching property of γ∗H; a disagreement throws.
struct rep_condition_report {
  bool empty_inf = true;
  bool binary_inf = true;
  bool binary_sup = true;
  bool directed_sup = true;
  bool top = true;
  bool commuting = true;
  check_report details;

  bool finite_infima() const { return empty_inf && binary_inf; }
  bool nonempty_suprema() const { return binary_sup && directed_sup; }
  bool arbitrary_suprema() const { return nonempty_suprema() && top; }
  // γ∗H is a K-sheaf exactly when this holds.
  bool sheaf_condition() const { return finite_infima() && nonempty_suprema() && commuting; }
  // γ∗H is a K-sheaf representation of A exactly when this holds.
  bool representation_condition() const { return sheaf_condition() && top; }
};

inline rep_condition_report rep_condition(rep_map const& h, sheaf_report const* known = nullptr,
                                          axiom_caps const& caps = {}) {
  validate(h);
  auto const& l = h.base;
  auto const& a = *h.algebra;
  std::size_t const n = l.size();
  rep_condition_report r;
  std::string w;

  r.empty_inf = h.theta[l.bot()].is_all();
  r.details.add("empty_inf", r.empty_inf);

  for (elem p = 0; p < n && r.binary_inf; ++p) {
    for (elem q = p + 1; q < n; ++q) {
      if (!(h.theta[l.join(p, q)] == alg::meet(h.theta[p], h.theta[q]))) {
        r.binary_inf = false;
        w = "p=" + std::to_string(p) + " q=" + std::to_string(q);
        break;
      }
    }
  }
  r.details.add("binary_inf", r.binary_inf, w);

  w.clear();
  for (elem p = 0; p < n && r.binary_sup; ++p) {
    for (elem q = p + 1; q < n; ++q) {
      if (!(h.theta[l.meet(p, q)] == alg::join(a, h.theta[p], h.theta[q]))) {
        r.binary_sup = false;
        w = "p=" + std::to_string(p) + " q=" + std::to_string(q);
        break;
      }
    }
  }
  r.details.add("binary_sup", r.binary_sup, w);

  w.clear();
  for (subset d = 1; d <= full_subset(n) && n <= caps.subset_enumeration; ++d) {
    if (!order::is_codirected(l, d)) {
      continue;
    }
    auto sup = alg::congruence::diagonal(a.size());
    for (auto x : members(d)) {
      sup = alg::join(a, sup, h.theta[x]);
    }
    if (!(sup == h.theta[l.meet_of(d)])) {
      r.directed_sup = false;
      w = format_subset(d);
      break;
    }
  }
  r.details.add("directed_sup", r.directed_sup, w);

  r.top = h.theta[l.top()].is_diagonal();
  r.details.add("top", r.top);

  w.clear();
  for (elem p = 0; p < n && r.commuting; ++p) {
    for (elem q = p + 1; q < n; ++q) {
      if (!alg::commute(h.theta[p], h.theta[q])) {
        r.commuting = false;
        w = h.theta[p].to_string() + " , " + h.theta[q].to_string();
        break;
      }
    }
  }
  r.details.add("commuting", r.commuting, w);

  // Cross-checks against γ∗H.
  auto rep = gamma_star(h);
  sheaf_report local;
  if (known == nullptr) {
    local = axiom_report(rep.sheaf, caps);
    known = &local;
  }
  auto mismatch = [](char const* what) {
    throw internal_inconsistency(std::string("rep_condition disagrees with the presheaf on ") +
                                 what);
  };
  if (r.empty_inf != known->k1) {
    mismatch("empty infimum / K1");
  }
  if (r.binary_sup != known->k4) {
    mismatch("binary suprema / K4");
  }
  if (r.directed_sup != known->k3) {
    mismatch("directed suprema / K3");
  }
  if (r.top != rep.phi.bijective()) {
    mismatch("top / global sections");
  }
  bool separated = true;
  for (elem p = 0; p < n && separated; ++p) {
    for (elem q = p + 1; q < n; ++q) {
      if (!jointly_injective(rep.sheaf, p, q).iso) {
        separated = false;
        break;
      }
    }
  }
  if (r.binary_inf != separated) {
    mismatch("binary infima / product mediating map");
  }
  return r;
}

// 𝒩: every θ: P^op → Con(A) preserving finite infima and arbitrary suprema
// with pairwise commuting image, in lexicographic order of Con(A) indices.
struct soft_reps {
  alg::congruence_lattice_result con;
  std::vector<rep_map> reps;
  std::vector<std::vector<elem>> values;   // indices into con.cons
  std::vector<std::vector<bool>> order;    // order[i][j]: reps[i] ⊆ reps[j] pointwise
};

inline soft_reps enumerate_soft_reps(algebra_ref const& a, lattice const& p,
                                     alg::congruence_caps const& ccaps = {}) {
  soft_reps out;
  out.con = alg::congruence_lattice(*a, ccaps);
  order::preservation flags;
  flags.finite_infima = true;
  flags.arbitrary_suprema = true;
  order::for_each_monotone_map(p, out.con.lat, flags, true, [&](std::vector<elem> const& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        if (!alg::commute(out.con.cons[v[i]], out.con.cons[v[j]])) {
          return true;
        }
      }
    }
    rep_map h{p, a, {}};
    for (auto x : v) {
      h.theta.push_back(out.con.cons[x]);
    }
    out.reps.push_back(std::move(h));
    out.values.push_back(v);
    return true;
  });
  std::size_t const m = out.reps.size();
  out.order.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      bool le = true;
      for (std::size_t x = 0; x < p.size() && le; ++x) {
        le = out.con.lat.leq(out.values[i][x], out.values[j][x]);
      }
      out.order[i][j] = le;
    }
  }
  return out;
}

// A morphism (F, φ) → (G, ψ): a natural transformation α with α_⊤ ∘ φ = ψ.
// Every component is searched among all homomorphisms F(p) → G(p).
inline std::optional<std::vector<homomorphism>> find_rep_morphism(representation const& from,
                                                                  representation const& to) {
  auto const& f = from.sheaf;
  auto const& g = to.sheaf;
  if (!(f.base() == g.base())) {
    throw error("BaseMismatch", "representations over different bases");
  }
  auto const& l = f.base();
  std::size_t const n = l.size();
  // Assign from the top down so every restriction from an assigned point is
  // checked as soon as its lower end is assigned.
  std::vector<elem> order_pts(n);
  for (elem i = 0; i < n; ++i) {
    order_pts[i] = i;
  }
  auto heights = l.order().heights();
  std::stable_sort(order_pts.begin(), order_pts.end(),
                   [&](elem x, elem y) { return heights[x] > heights[y]; });
  std::vector<std::vector<homomorphism>> cands(n);
  for (elem p = 0; p < n; ++p) {
    cands[p] = alg::all_homomorphisms(f.at(p), g.at(p));
  }
  std::vector<homomorphism const*> chosen(n, nullptr);
  std::optional<std::vector<homomorphism>> found;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (found) {
      return;
    }
    if (i == n) {
      std::vector<homomorphism> out;
      for (auto const* h : chosen) {
        out.push_back(*h);
      }
      found = std::move(out);
      return;
    }
    elem const p = order_pts[i];
    for (auto const& cand : cands[p]) {
      if (p == l.top() && alg::compose(cand, from.phi).map != to.phi.map) {
        continue;
      }
      bool ok = true;
      for (elem q = 0; q < n && ok; ++q) {
        if (chosen[q] == nullptr || !l.leq(p, q)) {
          continue;
        }
        auto lhs = alg::compose(cand, f.restrict(q, p));
        auto rhs = alg::compose(g.restrict(q, p), *chosen[q]);
        ok = lhs.map == rhs.map;
      }
      if (!ok) {
        continue;
      }
      chosen[p] = &cand;
      go(i + 1);
      chosen[p] = nullptr;
      if (found) {
        return;
      }
    }
  };
  go(0);
  return found;
}

}  // namespace finsheaf::sheaf
