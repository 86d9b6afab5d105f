#pragma once

// Commuting closed sets of a finite compact ordered space and interpolating
// decompositions X → Y^↓, matched against frame homomorphisms
// Ω(Y^↓) → Ω(X) with pairwise commuting image.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "finsheaf/core.hpp"
#include "finsheaf/order/lattice.hpp"
#include "finsheaf/order/maps.hpp"
#include "finsheaf/order/poset.hpp"
#include "finsheaf/compord/spaces.hpp"

namespace finsheaf::compord {

struct commute_result {
  bool commute = true;          // the interpolation criterion
  bool pushout_agrees = true;   // the poset-pushout cross-check gave the same answer
  std::string witness;          // a pair x_i ≤ x_j with no interpolant
};

// For x_i ∈ C_i, x_j ∈ C_j with x_i ≤ x_j, some z ∈ C1 ∩ C2 has x_i ≤ z ≤ x_j.
inline bool interpolation_criterion(poset const& x, subset c1, subset c2, std::string* witness) {
  subset const both = c1 & c2;
  auto check = [&](subset ci, subset cj) {
    for (auto a : members(ci)) {
      for (auto b : members(cj)) {
        if (!x.leq(a, b)) {
          continue;
        }
        bool found = false;
        for (auto z : members(both)) {
          if (x.leq(a, z) && x.leq(z, b)) {
            found = true;
            break;
          }
        }
        if (!found) {
          if (witness != nullptr) {
            *witness = std::to_string(a) + "<=" + std::to_string(b);
          }
          return false;
        }
      }
    }
    return true;
  };
  return check(c1, c2) && check(c2, c1);
}

// Gluing C1 and C2 along C1 ∩ C2 in posets gives the transitive closure of
// the two induced orders on C1 ∪ C2; the square is a pushout in the finite
// discrete case iff that closure is the order induced from X.
inline bool poset_pushout_matches(poset const& x, subset c1, subset c2) {
  subset const u = c1 | c2;
  auto pts = members(u);
  std::size_t const k = pts.size();
  std::vector<std::vector<bool>> rel(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      elem const a = pts[i];
      elem const b = pts[j];
      bool const in1 = contains(c1, a) && contains(c1, b);
      bool const in2 = contains(c2, a) && contains(c2, b);
      rel[i][j] = (in1 || in2) && x.leq(a, b);
    }
  }
  for (std::size_t m = 0; m < k; ++m) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (rel[i][m] && rel[m][j]) {
          rel[i][j] = true;
        }
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (rel[i][j] != x.leq(pts[i], pts[j])) {
        return false;
      }
    }
  }
  return true;
}

inline commute_result closed_commute(poset const& x, subset c1, subset c2) {
  commute_result r;
  r.commute = interpolation_criterion(x, c1, c2, &r.witness);
  r.pushout_agrees = poset_pushout_matches(x, c1, c2) == r.commute;
  return r;
}

// Opens of the discrete space X commute when their complements do.
inline bool opens_commute(poset const& x, subset u1, subset u2) {
  subset const all = full_subset(x.size());
  return interpolation_criterion(x, all & ~u1, all & ~u2, nullptr);
}

// For x1 ≤ x2 some z has x1 ≤ z ≤ x2, q(x1) ≤ q(z) and q(x2) ≤ q(z).
inline bool interpolating_check(std::vector<elem> const& q, poset const& x, poset const& y) {
  if (q.size() != x.size()) {
    throw error("BadMap", "decomposition has " + std::to_string(q.size()) +
                              " values for " + std::to_string(x.size()) + " points");
  }
  for (auto v : q) {
    if (v >= y.size()) {
      throw error("BadMap", "decomposition value out of range");
    }
  }
  for (elem a = 0; a < x.size(); ++a) {
    for (elem b = 0; b < x.size(); ++b) {
      if (!x.leq(a, b)) {
        continue;
      }
      bool found = false;
      for (elem z = 0; z < x.size() && !found; ++z) {
        found = x.leq(a, z) && x.leq(z, b) && y.leq(q[a], q[z]) && y.leq(q[b], q[z]);
      }
      if (!found) {
        return false;
      }
    }
  }
  return true;
}

struct decomposition_report {
  std::size_t functions = 0;             // all q: X → Y
  std::size_t interpolating = 0;         // side (a)
  std::size_t frame_homs = 0;            // all frame homomorphisms Ω(Y^↓) → Ω(X)
  std::size_t commuting_frame_homs = 0;  // side (b)
  bool bijection = true;
  std::string witness;
  std::vector<std::vector<elem>> decompositions;  // the interpolating q, lexicographic
};

// q ↦ ψ_q = q^{-1} restricted to down-sets of Y. Ω(X) is the powerset of X
// with element index = bitmask.
inline decomposition_report decomposition_bijection_check(poset const& x, poset const& y,
                                                          std::size_t cap = 4) {
  if (x.size() > cap) {
    throw cap_exceeded("X", x.size(), cap);
  }
  if (y.size() > cap) {
    throw cap_exceeded("Y", y.size(), cap);
  }
  decomposition_report r;
  auto [down_y, dsets] = order::lattices::down_sets(y);
  auto omega_x = order::lattices::boolean(x.size());
  order::preservation frame;
  frame.finite_infima = true;
  frame.arbitrary_suprema = true;
  std::vector<std::vector<elem>> commuting;
  order::for_each_monotone_map(down_y, omega_x, frame, false, [&](std::vector<elem> const& v) {
    ++r.frame_homs;
    for (auto u1 : v) {
      for (auto u2 : v) {
        if (!opens_commute(x, u1, u2)) {
          return true;
        }
      }
    }
    commuting.push_back(v);
    return true;
  });
  r.commuting_frame_homs = commuting.size();

  std::vector<std::vector<elem>> images;
  std::vector<elem> q(x.size(), 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    total *= y.size();
  }
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = x.size(); i-- > 0;) {
      q[i] = static_cast<elem>(c % y.size());
      c /= y.size();
    }
    ++r.functions;
    std::vector<elem> psi(dsets.size());
    for (std::size_t d = 0; d < dsets.size(); ++d) {
      subset pre = 0;
      for (elem a = 0; a < x.size(); ++a) {
        if (contains(dsets[d], q[a])) {
          pre |= bit(a);
        }
      }
      psi[d] = static_cast<elem>(pre);
    }
    bool const interp = interpolating_check(q, x, y);
    bool image_commutes = true;
    for (auto u1 : psi) {
      for (auto u2 : psi) {
        image_commutes = image_commutes && opens_commute(x, u1, u2);
      }
    }
    if (interp != image_commutes && r.bijection) {
      r.bijection = false;
      r.witness = "q=" + format_list(q) + " interpolating=" + (interp ? "1" : "0") +
                  " but commuting image=" + (image_commutes ? "1" : "0");
    }
    if (interp) {
      ++r.interpolating;
      r.decompositions.push_back(q);
      images.push_back(std::move(psi));
    }
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end() && r.bijection) {
    r.bijection = false;
    r.witness = "two decompositions have the same preimage map";
  }
  std::sort(commuting.begin(), commuting.end());
  if (images != commuting && r.bijection) {
    r.bijection = false;
    r.witness = std::to_string(images.size()) + " preimage maps vs " +
                std::to_string(commuting.size()) + " commuting frame homomorphisms";
  }
  return r;
}

// DOT drawing of a decomposition: both Hasse diagrams, q as labelled arrows.
inline std::string decomposition_dot(poset const& x, poset const& y, std::vector<elem> const& q) {
  std::ostringstream os;
  os << "digraph decomposition {\n  rankdir=BT;\n";
  auto cluster = [&](poset const& p, char const* name, char tag) {
    os << "  subgraph cluster_" << name << " {\n    label=\"" << name << "\";\n";
    for (elem i = 0; i < p.size(); ++i) {
      os << "    " << tag << i << " [label=\"" << i << "\"];\n";
    }
    for (auto [a, b] : p.cover_pairs()) {
      os << "    " << tag << a << " -> " << tag << b << " [arrowhead=none];\n";
    }
    os << "  }\n";
  };
  cluster(x, "X", 'x');
  cluster(y, "Y", 'y');
  for (elem i = 0; i < q.size(); ++i) {
    os << "  x" << i << " -> y" << q[i] << " [style=dashed, label=\"q\", constraint=false];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace finsheaf::compord
