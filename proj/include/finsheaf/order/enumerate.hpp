#pragma once

// Enumeration of finite posets and lattices up to isomorphism.
//
// Canonical labeling: elements are first sorted by the iso-invariant key
// (number of elements below, number above); among the permutations that
// respect this sorted key, the one producing the lexicographically least
// row-major order matrix is chosen. The matrix of that relabeling is the
// canonical form.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "finsheaf/core.hpp"
#include "finsheaf/order/lattice.hpp"
#include "finsheaf/order/poset.hpp"

namespace finsheaf::order {

inline poset relabel(poset const& p, std::vector<elem> const& perm) {
  // perm[new] = old
  std::size_t const n = p.size();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = p.leq(perm[i], perm[j]);
    }
  }
  return poset::from_matrix(m);
}

inline std::string matrix_key(poset const& p) {
  std::string s(p.size() * p.size(), '0');
  for (elem i = 0; i < p.size(); ++i) {
    for (elem j = 0; j < p.size(); ++j) {
      if (p.leq(i, j)) {
        s[i * p.size() + j] = '1';
      }
    }
  }
  return s;
}

struct canonical_result {
  std::string key;
  std::vector<elem> perm;  // perm[new] = old
};

inline canonical_result canonical_form(poset const& p) {
  std::size_t const n = p.size();
  if (n > 10) {
    throw cap_exceeded("poset for canonical labeling", n, 10);
  }
  std::vector<std::pair<std::size_t, std::size_t>> inv(n);
  for (elem x = 0; x < n; ++x) {
    for (elem y = 0; y < n; ++y) {
      if (p.lt(y, x)) {
        ++inv[x].first;
      }
      if (p.lt(x, y)) {
        ++inv[x].second;
      }
    }
  }
  std::vector<elem> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::stable_sort(base.begin(), base.end(), [&](elem a, elem b) { return inv[a] < inv[b]; });
  // Blocks of equal invariant; permute within each block independently.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && inv[base[j]] == inv[base[i]]) {
      ++j;
    }
    blocks.emplace_back(i, j);
    i = j;
  }
  canonical_result best;
  bool have = false;
  std::vector<elem> perm = base;
  for (auto& b : blocks) {
    std::sort(perm.begin() + static_cast<long>(b.first), perm.begin() + static_cast<long>(b.second));
  }
  // Odometer over the per-block permutations.
  while (true) {
    std::string key(n * n, '0');
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (p.leq(perm[i], perm[j])) {
          key[i * n + j] = '1';
        }
      }
    }
    if (!have || key < best.key) {
      best.key = key;
      best.perm = perm;
      have = true;
    }
    std::size_t bi = 0;
    for (; bi < blocks.size(); ++bi) {
      auto [lo, hi] = blocks[bi];
      if (std::next_permutation(perm.begin() + static_cast<long>(lo), perm.begin() + static_cast<long>(hi))) {
        break;
      }
    }
    if (bi == blocks.size()) {
      break;
    }
  }
  return best;
}

inline bool isomorphic(poset const& a, poset const& b) {
  if (a.size() != b.size()) {
    return false;
  }
  std::vector<elem> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (elem i = 0; i < a.size() && ok; ++i) {
      for (elem j = 0; j < a.size(); ++j) {
        if (a.leq(i, j) != b.leq(perm[i], perm[j])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Calls visit for every naturally labeled poset on n elements (i < j in the
// order implies i < j as indices). Every finite poset has such a labeling.
template <typename Visit>
void for_each_natural_poset(std::size_t n, Visit&& visit) {
  std::vector<std::pair<elem, elem>> slots;
  for (elem i = 0; i < n; ++i) {
    for (elem j = i + 1; j < n; ++j) {
      slots.emplace_back(i, j);
    }
  }
  if (slots.size() > 28) {
    throw cap_exceeded("natural poset enumeration size", n, 8);
  }
  std::uint64_t const total = std::uint64_t{1} << slots.size();
  std::vector<std::uint8_t> m(n * n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(m.begin(), m.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      m[i * n + i] = 1;
    }
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if ((mask >> s) & 1U) {
        m[slots[s].first * n + slots[s].second] = 1;
      }
    }
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i) {
      for (std::size_t j = i + 1; j < n && transitive; ++j) {
        if (!m[i * n + j]) {
          continue;
        }
        for (std::size_t k = j + 1; k < n; ++k) {
          if (m[j * n + k] && !m[i * n + k]) {
            transitive = false;
            break;
          }
        }
      }
    }
    if (!transitive) {
      continue;
    }
    std::vector<std::vector<bool>> mm(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        mm[i][j] = m[i * n + j] != 0;
      }
    }
    visit(poset::from_matrix(mm));
  }
}

// Posets on exactly n elements up to isomorphism, in canonical form, sorted
// by canonical key.
inline std::vector<poset> posets_up_to_iso(std::size_t n) {
  std::map<std::string, poset> found;
  for_each_natural_poset(n, [&](poset const& p) {
    auto c = canonical_form(p);
    if (!found.count(c.key)) {
      found.emplace(c.key, relabel(p, c.perm));
    }
  });
  std::vector<poset> out;
  for (auto& [k, p] : found) {
    out.push_back(p);
  }
  return out;
}

// Lattices on exactly n elements up to isomorphism. Built from the posets on
// the n-2 middle elements with a bottom and a top adjoined; each survivor is
// canonicalized as a whole lattice.
inline std::vector<lattice> lattices_up_to_iso(std::size_t n) {
  std::vector<lattice> out;
  if (n == 0) {
    return out;
  }
  if (n == 1) {
    out.push_back(lattices::chain(1));
    return out;
  }
  std::map<std::string, lattice> found;
  std::size_t const mid = n - 2;
  for_each_natural_poset(mid, [&](poset const& q) {
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      m[0][i] = true;
      m[i][n - 1] = true;
    }
    for (elem i = 0; i < mid; ++i) {
      for (elem j = 0; j < mid; ++j) {
        m[i + 1][j + 1] = q.leq(i, j);
      }
    }
    auto p = poset::from_matrix(m);
    try {
      auto l = lattice::from_poset(p);
      (void)l;
    } catch (error const&) {
      return;
    }
    auto c = canonical_form(p);
    if (!found.count(c.key)) {
      found.emplace(c.key, lattice::from_poset(relabel(p, c.perm)));
    }
  });
  for (auto& [k, l] : found) {
    out.push_back(l);
  }
  return out;
}

// Independent recount: naturally labeled posets on all n elements that are
// lattices, deduplicated by pairwise isomorphism search.
inline std::size_t count_lattices_pairwise(std::size_t n) {
  std::vector<poset> reps;
  for_each_natural_poset(n, [&](poset const& p) {
    try {
      (void)lattice::from_poset(p);
    } catch (error const&) {
      return;
    }
    for (auto const& r : reps) {
      if (isomorphic(r, p)) {
        return;
      }
    }
    reps.push_back(p);
  });
  return reps.size();
}

inline std::size_t count_posets_pairwise(std::size_t n) {
  std::vector<poset> reps;
  for_each_natural_poset(n, [&](poset const& p) {
    for (auto const& r : reps) {
      if (isomorphic(r, p)) {
        return;
      }
    }
    reps.push_back(p);
  });
  return reps.size();
}

// Every labeled poset on n points (equivalently every T0 topology on n
// points, through the specialization order), sorted by order matrix.
inline std::vector<poset> labeled_posets(std::size_t n) {
  std::set<std::string> seen;
  std::vector<std::pair<std::string, poset>> out;
  for (auto const& p : posets_up_to_iso(n)) {
    std::vector<elem> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      auto q = relabel(p, perm);
      auto k = matrix_key(q);
      if (seen.insert(k).second) {
        out.emplace_back(k, q);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::sort(out.begin(), out.end(),
            [](auto const& a, auto const& b) { return a.first < b.first; });
  std::vector<poset> res;
  for (auto& [k, p] : out) {
    res.push_back(p);
  }
  return res;
}

}  // namespace finsheaf::order
