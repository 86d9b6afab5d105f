#pragma once

// Presheaves of finite algebras over a finite lattice P (functors P^op → Alg)
// and the canonical representation p ↦ A/θ(p) of a congruence-valued map.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finsheaf/alg/algebra.hpp"
#include "finsheaf/alg/congruence.hpp"
#include "finsheaf/alg/limits.hpp"
#include "finsheaf/core.hpp"
#include "finsheaf/order/lattice.hpp"

namespace finsheaf::sheaf {

using order::lattice;
using alg::algebra_ref;
using alg::homomorphism;
using alg::congruence;

// Restriction maps F(q) → F(p) keyed by the cover (p, q), p covered by q.
using cover_maps = std::map<std::pair<elem, elem>, homomorphism>;

class presheaf {
 public:
  presheaf() = default;

  // Only covers are given. Every composite along every cover path is derived
  // and the paths are required to agree; any mismatch is InvalidPresheaf.
  static presheaf from_covers(lattice base, std::vector<algebra_ref> objects, cover_maps covers) {
    presheaf f;
    std::size_t const n = base.size();
    if (objects.size() != n) {
      throw error("InvalidPresheaf", "expected " + std::to_string(n) + " objects, got " +
                                         std::to_string(objects.size()));
    }
    for (std::size_t i = 1; i < n; ++i) {
      if (!(objects[i]->sig() == objects[0]->sig())) {
        throw error("InvalidPresheaf", "objects at 0 and " + std::to_string(i) +
                                           " have different signatures");
      }
    }
    for (auto const& [pq, h] : covers) {
      auto [p, q] = pq;
      if (p >= n || q >= n || !base.order().covers(p, q)) {
        throw error("InvalidPresheaf", "restriction given for a non-cover (" + std::to_string(p) +
                                           "," + std::to_string(q) + ")");
      }
      if (!(*h.dom == *objects[q]) || !(*h.cod == *objects[p])) {
        throw error("InvalidPresheaf", "restriction at cover (" + std::to_string(p) + "," +
                                           std::to_string(q) + ") has the wrong ends");
      }
    }
    for (auto [p, q] : base.order().cover_pairs()) {
      if (covers.find({p, q}) == covers.end()) {
        throw error("InvalidPresheaf", "missing restriction for cover (" + std::to_string(p) +
                                           "," + std::to_string(q) + ")");
      }
    }
    f.base_ = std::move(base);
    f.objects_ = std::move(objects);
    f.res_.assign(n * n, std::nullopt);
    for (elem p = 0; p < n; ++p) {
      f.res_[p * n + p] = alg::identity_hom(f.objects_[p]);
    }
    for (elem q = 0; q < n; ++q) {
      for (elem p = 0; p < n; ++p) {
        if (f.base_.lt(p, q)) {
          f.derive(q, p, covers);
        }
      }
    }
    return f;
  }

  lattice const& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return base_.size(); }
  algebra_ref const& at(elem p) const { return objects_[p]; }
  std::vector<algebra_ref> const& objects() const noexcept { return objects_; }

  // The restriction F(q) → F(p) for p ≤ q.
  homomorphism const& restrict(elem q, elem p) const {
    auto const& r = res_[q * base_.size() + p];
    if (!r) {
      throw error("NotComparable", "no restriction from " + std::to_string(q) + " to " +
                                       std::to_string(p));
    }
    return *r;
  }

  cover_maps covers() const {
    cover_maps out;
    for (auto [p, q] : base_.order().cover_pairs()) {
      out.emplace(std::make_pair(p, q), restrict(q, p));
    }
    return out;
  }

 private:
  homomorphism const& derive(elem q, elem p, cover_maps const& covers) {
    std::size_t const n = base_.size();
    auto& slot = res_[q * n + p];
    if (slot) {
      return *slot;
    }
    // Every path q → p leaves p through some upper cover r of p below q.
    std::optional<homomorphism> found;
    for (elem r = 0; r < n; ++r) {
      if (!base_.order().covers(p, r) || !base_.leq(r, q)) {
        continue;
      }
      auto const& upper = derive(q, r, covers);
      auto c = alg::compose(covers.at({p, r}), upper);
      if (!found) {
        found = std::move(c);
      } else if (found->map != c.map) {
        throw error("InvalidPresheaf", "cover paths from " + std::to_string(q) + " to " +
                                           std::to_string(p) + " disagree (through " +
                                           std::to_string(r) + ")");
      }
    }
    slot = std::move(found);
    return *slot;
  }

  lattice base_;
  std::vector<algebra_ref> objects_;
  std::vector<std::optional<homomorphism>> res_;
};

// A congruence-valued map θ on P read contravariantly: p ≤ q ⟹ θ(q) ⊆ θ(p).
struct rep_map {
  lattice base;
  algebra_ref algebra;
  std::vector<congruence> theta;

  friend bool operator==(rep_map const& a, rep_map const& b) {
    return a.base == b.base && *a.algebra == *b.algebra && a.theta == b.theta;
  }
};

inline void validate(rep_map const& h) {
  std::size_t const n = h.base.size();
  if (h.theta.size() != n) {
    throw error("InvalidRepMap", "theta has " + std::to_string(h.theta.size()) +
                                     " entries for a base of size " + std::to_string(n));
  }
  for (auto const& t : h.theta) {
    alg::require_same_carrier(*h.algebra, t);
    if (!alg::is_compatible(*h.algebra, t)) {
      throw error("NotCongruence", "theta value " + t.to_string() + " is not a congruence");
    }
  }
  for (elem p = 0; p < n; ++p) {
    for (elem q = 0; q < n; ++q) {
      if (h.base.leq(p, q) && !h.theta[q].subset_of(h.theta[p])) {
        throw error("NotMonotone", "theta(" + std::to_string(q) + ") is not contained in theta(" +
                                       std::to_string(p) + ")");
      }
    }
  }
}

// A presheaf together with a comparison map from A into its global sections.
struct representation {
  presheaf sheaf;
  homomorphism phi;  // A → F(⊤)
};

// F(p) = A/θ(p) with the induced maps; φ is the quotient map A → A/θ(⊤).
inline representation gamma_star(rep_map const& h) {
  validate(h);
  std::size_t const n = h.base.size();
  std::vector<alg::quotient_result> qs;
  qs.reserve(n);
  std::vector<algebra_ref> objs;
  for (elem p = 0; p < n; ++p) {
    qs.push_back(alg::quotient(h.algebra, h.theta[p]));
    objs.push_back(qs.back().alg);
  }
  cover_maps covers;
  for (auto [p, q] : h.base.order().cover_pairs()) {
    covers.emplace(std::make_pair(p, q), alg::induced_map(qs[q], qs[p]));
  }
  auto f = presheaf::from_covers(h.base, std::move(objs), std::move(covers));
  return {std::move(f), qs[h.base.top()].proj};
}

// The constant presheaf with identity restrictions.
inline presheaf constant_presheaf(lattice const& base, algebra_ref const& a) {
  cover_maps covers;
  for (auto [p, q] : base.order().cover_pairs()) {
    covers.emplace(std::make_pair(p, q), alg::identity_hom(a));
  }
  return presheaf::from_covers(base, std::vector<algebra_ref>(base.size(), a), std::move(covers));
}

}  // namespace finsheaf::sheaf
