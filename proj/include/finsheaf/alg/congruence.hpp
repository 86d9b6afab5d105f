#pragma once

// Congruences in canonical leader form, kernels, generated congruences, the
// congruence lattice, relation composition and quotients.

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "finsheaf/alg/algebra.hpp"
#include "finsheaf/core.hpp"
#include "finsheaf/order/lattice.hpp"

namespace finsheaf::alg {

// An equivalence relation on 0..n-1 stored as the array mapping every element
// to the least element of its block. Equal relations have equal arrays.
class congruence {
 public:
  congruence() = default;

  // From arbitrary block labels (equal labels = same block).
  template <typename Label>
  static congruence from_labels(std::vector<Label> const& labels) {
    congruence c;
    c.leader_.resize(labels.size());
    std::map<Label, elem> first;
    for (elem i = 0; i < labels.size(); ++i) {
      auto [it, fresh] = first.emplace(labels[i], i);
      c.leader_[i] = it->second;
      (void)fresh;
    }
    return c;
  }

  static congruence from_blocks(std::size_t n, std::vector<std::vector<elem>> const& blocks) {
    std::vector<elem> label(n);
    std::iota(label.begin(), label.end(), 0);
    std::vector<bool> seen(n, false);
    for (auto const& b : blocks) {
      for (auto x : b) {
        if (x >= n || seen[x]) {
          throw error("BadPartition", "blocks do not form a partition of 0.." + std::to_string(n - 1));
        }
        seen[x] = true;
        label[x] = b.front();
      }
    }
    return from_labels(label);
  }

  static congruence diagonal(std::size_t n) {
    congruence c;
    c.leader_.resize(n);
    std::iota(c.leader_.begin(), c.leader_.end(), 0);
    return c;
  }

  static congruence all(std::size_t n) {
    congruence c;
    c.leader_.assign(n, 0);
    return c;
  }

  std::size_t size() const noexcept { return leader_.size(); }
  std::vector<elem> const& leaders() const noexcept { return leader_; }
  elem leader(elem x) const { return leader_[x]; }
  bool related(elem a, elem b) const { return leader_[a] == leader_[b]; }

  std::size_t num_blocks() const {
    std::size_t k = 0;
    for (elem i = 0; i < leader_.size(); ++i) {
      k += leader_[i] == i ? 1 : 0;
    }
    return k;
  }

  std::vector<std::vector<elem>> blocks() const {
    std::vector<std::vector<elem>> out;
    std::vector<std::size_t> slot(leader_.size(), 0);
    for (elem i = 0; i < leader_.size(); ++i) {
      if (leader_[i] == i) {
        slot[i] = out.size();
        out.push_back({i});
      } else {
        out[slot[leader_[i]]].push_back(i);
      }
    }
    return out;
  }

  bool is_diagonal() const { return num_blocks() == leader_.size(); }
  bool is_all() const { return num_blocks() <= 1; }

  // this ⊆ other
  bool subset_of(congruence const& other) const {
    for (elem i = 0; i < leader_.size(); ++i) {
      if (!other.related(i, leader_[i])) {
        return false;
      }
    }
    return true;
  }

  std::string to_string() const {
    std::string s;
    bool first_block = true;
    for (auto const& b : blocks()) {
      s += first_block ? "" : "|";
      first_block = false;
      for (auto x : b) {
        s += std::to_string(x);
        if (b.size() > 1 && x != b.back()) {
          s += ",";
        }
      }
    }
    return "{" + s + "}";
  }

  friend bool operator==(congruence const&, congruence const&) = default;
  friend bool operator<(congruence const& a, congruence const& b) { return a.leader_ < b.leader_; }

 private:
  std::vector<elem> leader_;
};

inline void require_same_carrier(algebra const& a, congruence const& t) {
  if (t.size() != a.size()) {
    throw error("AlgebraMismatch", "congruence on " + std::to_string(t.size()) +
                                       " elements used with an algebra of size " +
                                       std::to_string(a.size()));
  }
}

// Intersection.
inline congruence meet(congruence const& a, congruence const& b) {
  if (a.size() != b.size()) {
    throw error("AlgebraMismatch", "meet of congruences on different carriers");
  }
  std::vector<std::pair<elem, elem>> labels(a.size());
  for (elem i = 0; i < a.size(); ++i) {
    labels[i] = {a.leader(i), b.leader(i)};
  }
  return congruence::from_labels(labels);
}

// Whether θ is compatible with every operation of a (θ is assumed to be an
// equivalence relation, which the leader form guarantees).
inline bool is_compatible(algebra const& a, congruence const& t) {
  require_same_carrier(a, t);
  for (std::size_t op = 0; op < a.sig().size(); ++op) {
    std::size_t const k = a.sig()[op].arity;
    if (k == 0) {
      continue;
    }
    bool ok = true;
    std::vector<elem> lead(k);
    for_each_tuple(a.size(), k, [&](std::vector<elem> const& args) {
      if (!ok) {
        return;
      }
      for (std::size_t i = 0; i < k; ++i) {
        lead[i] = t.leader(args[i]);
      }
      if (!t.related(a.apply(op, args), a.apply(op, lead))) {
        ok = false;
      }
    });
    if (!ok) {
      return false;
    }
  }
  return true;
}

inline congruence kernel_congruence(homomorphism const& h) {
  return congruence::from_labels(h.map);
}

namespace detail {

struct union_find {
  std::vector<elem> parent;

  explicit union_find(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  elem find(elem x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(elem a, elem b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    if (b < a) {
      std::swap(a, b);
    }
    parent[b] = a;
    return true;
  }
};

}  // namespace detail

// Least congruence containing the given pairs: union-find on the pairs, then
// repeated one-position substitution through every operation table until
// nothing new is merged.
inline congruence congruence_generated(algebra const& a,
                                       std::vector<std::pair<elem, elem>> const& pairs) {
  detail::union_find uf(a.size());
  for (auto [x, y] : pairs) {
    if (x >= a.size() || y >= a.size()) {
      throw error("BadIndex", "pair out of range");
    }
    uf.unite(x, y);
  }
  bool changed = true;
  std::vector<elem> other;
  while (changed) {
    changed = false;
    for (std::size_t op = 0; op < a.sig().size(); ++op) {
      std::size_t const k = a.sig()[op].arity;
      if (k == 0) {
        continue;
      }
      for_each_tuple(a.size(), k, [&](std::vector<elem> const& args) {
        for (std::size_t i = 0; i < k; ++i) {
          elem const root = uf.find(args[i]);
          if (root == args[i]) {
            continue;
          }
          other = args;
          other[i] = root;
          if (uf.unite(a.apply(op, args), a.apply(op, other))) {
            changed = true;
          }
        }
      });
    }
  }
  std::vector<elem> labels(a.size());
  for (elem i = 0; i < a.size(); ++i) {
    labels[i] = uf.find(i);
  }
  return congruence::from_labels(labels);
}

inline congruence join(algebra const& a, congruence const& x, congruence const& y) {
  require_same_carrier(a, x);
  require_same_carrier(a, y);
  std::vector<std::pair<elem, elem>> pairs;
  for (elem i = 0; i < a.size(); ++i) {
    if (x.leader(i) != i) {
      pairs.emplace_back(i, x.leader(i));
    }
    if (y.leader(i) != i) {
      pairs.emplace_back(i, y.leader(i));
    }
  }
  return congruence_generated(a, pairs);
}

struct congruence_caps {
  std::size_t partition_enumeration = 8;  // carrier bound for the partition route
  std::size_t carrier = 64;               // bound for the principal-join route
  std::size_t lattice_size = 5000;
};

struct congruence_lattice_result {
  order::lattice lat;
  std::vector<congruence> cons;  // element i of lat is cons[i]

  std::size_t index_of(congruence const& t) const {
    auto it = std::find(cons.begin(), cons.end(), t);
    if (it == cons.end()) {
      throw error("NotCongruence", "not a congruence of this algebra: " + t.to_string());
    }
    return static_cast<std::size_t>(it - cons.begin());
  }

  elem diagonal() const { return lat.bot(); }
  elem all() const { return lat.top(); }
};

namespace detail {

// Restricted growth strings: every set partition of 0..n-1 once.
template <typename F>
void for_each_partition(std::size_t n, F&& f) {
  if (n == 0) {
    f(std::vector<elem>{});
    return;
  }
  std::vector<elem> rgs(n, 0);
  std::vector<elem> maxp(n, 0);
  while (true) {
    f(rgs);
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] == maxp[i - 1] + 1) {
      --i;
    }
    if (i == 0) {
      return;
    }
    ++rgs[i];
    maxp[i] = std::max(maxp[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      maxp[j] = maxp[i];
    }
  }
}

}  // namespace detail

// All congruences, ordered with Δ first: by number of blocks descending,
// then by leader array. For carriers up to `partition_enumeration` every set
// partition is tested for compatibility; above that the congruences are
// generated as the join-closure of the principal congruences Cg(a, b).
inline std::vector<congruence> all_congruences(algebra const& a, congruence_caps const& caps = {}) {
  std::vector<congruence> cons;
  if (a.size() <= caps.partition_enumeration) {
    detail::for_each_partition(a.size(), [&](std::vector<elem> const& rgs) {
      auto t = congruence::from_labels(rgs);
      if (is_compatible(a, t)) {
        cons.push_back(t);
      }
    });
  } else {
    if (a.size() > caps.carrier) {
      throw error("CarrierTooLarge", "carrier " + std::to_string(a.size()) + " above cap " +
                                         std::to_string(caps.carrier));
    }
    std::vector<congruence> frontier;
    std::map<std::vector<elem>, bool> seen;
    auto add = [&](congruence const& t) {
      if (seen.emplace(t.leaders(), true).second) {
        if (seen.size() > caps.lattice_size) {
          throw cap_exceeded("congruence lattice", seen.size(), caps.lattice_size);
        }
        cons.push_back(t);
        frontier.push_back(t);
      }
    };
    add(congruence::diagonal(a.size()));
    std::vector<congruence> principal;
    for (elem x = 0; x < a.size(); ++x) {
      for (elem y = x + 1; y < a.size(); ++y) {
        auto t = congruence_generated(a, {{x, y}});
        if (std::find(principal.begin(), principal.end(), t) == principal.end()) {
          principal.push_back(t);
        }
      }
    }
    for (auto const& p : principal) {
      add(p);
    }
    while (!frontier.empty()) {
      auto t = frontier.back();
      frontier.pop_back();
      for (auto const& p : principal) {
        add(join(a, t, p));
      }
    }
  }
  std::sort(cons.begin(), cons.end(), [](congruence const& x, congruence const& y) {
    if (x.num_blocks() != y.num_blocks()) {
      return x.num_blocks() > y.num_blocks();
    }
    return x < y;
  });
  return cons;
}

inline congruence_lattice_result congruence_lattice(algebra const& a,
                                                    congruence_caps const& caps = {}) {
  if (a.size() > caps.partition_enumeration && a.size() > caps.carrier) {
    throw error("CarrierTooLarge", "carrier " + std::to_string(a.size()) + " above cap");
  }
  auto cons = all_congruences(a, caps);
  std::size_t const n = cons.size();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = cons[i].subset_of(cons[j]);
    }
  }
  auto lat = order::lattice::from_poset(order::poset::from_matrix(m));
  std::vector<std::string> labels;
  for (auto const& t : cons) {
    labels.push_back(t.to_string());
  }
  lat.set_labels(std::move(labels));
  congruence_lattice_result res{std::move(lat), std::move(cons)};
  // The lattice operations must be intersection and generated join.
  for (elem i = 0; i < n; ++i) {
    for (elem j = i; j < n; ++j) {
      if (res.cons[res.lat.meet(i, j)] != meet(res.cons[i], res.cons[j])) {
        throw internal_inconsistency("congruence meet is not intersection");
      }
      if (res.cons[res.lat.join(i, j)] != join(a, res.cons[i], res.cons[j])) {
        throw internal_inconsistency("congruence join is not the generated join");
      }
    }
  }
  return res;
}

// A binary relation on 0..n-1 as a boolean matrix.
class relation {
 public:
  relation() = default;
  explicit relation(std::size_t n) : n_(n), m_(n * n, 0) {}

  static relation of(congruence const& t) {
    relation r(t.size());
    for (elem a = 0; a < t.size(); ++a) {
      for (elem b = 0; b < t.size(); ++b) {
        r.set(a, b, t.related(a, b));
      }
    }
    return r;
  }

  std::size_t size() const noexcept { return n_; }
  bool at(elem a, elem b) const { return m_[a * n_ + b] != 0; }
  void set(elem a, elem b, bool v = true) { m_[a * n_ + b] = v ? 1 : 0; }

  std::vector<std::pair<elem, elem>> pairs() const {
    std::vector<std::pair<elem, elem>> out;
    for (elem a = 0; a < n_; ++a) {
      for (elem b = 0; b < n_; ++b) {
        if (at(a, b)) {
          out.emplace_back(a, b);
        }
      }
    }
    return out;
  }

  friend bool operator==(relation const&, relation const&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> m_;
};

// R ∘ S = {(a, c) : (a, b) ∈ R and (b, c) ∈ S for some b}.
inline relation compose_relations(relation const& r, relation const& s) {
  if (r.size() != s.size()) {
    throw error("AlgebraMismatch", "composition of relations on different carriers");
  }
  relation out(r.size());
  for (elem a = 0; a < r.size(); ++a) {
    for (elem b = 0; b < r.size(); ++b) {
      if (!r.at(a, b)) {
        continue;
      }
      for (elem c = 0; c < r.size(); ++c) {
        if (s.at(b, c)) {
          out.set(a, c);
        }
      }
    }
  }
  return out;
}

inline relation compose_relations(congruence const& t1, congruence const& t2) {
  return compose_relations(relation::of(t1), relation::of(t2));
}

inline bool commute(congruence const& t1, congruence const& t2) {
  return compose_relations(t1, t2) == compose_relations(t2, t1);
}

inline bool commute(algebra const& a, congruence const& t1, congruence const& t2) {
  require_same_carrier(a, t1);
  require_same_carrier(a, t2);
  return commute(t1, t2);
}

struct quotient_result {
  algebra_ref alg;
  homomorphism proj;
};

// Carrier = block leaders in ascending order; tables induced through leaders.
inline quotient_result quotient(algebra_ref const& a, congruence const& t) {
  require_same_carrier(*a, t);
  std::vector<elem> index(a->size(), 0);
  std::vector<elem> reps;
  for (elem i = 0; i < a->size(); ++i) {
    if (t.leader(i) == i) {
      index[i] = static_cast<elem>(reps.size());
      reps.push_back(i);
    }
  }
  std::vector<elem> proj(a->size());
  for (elem i = 0; i < a->size(); ++i) {
    proj[i] = index[t.leader(i)];
  }
  std::size_t const m = reps.size();
  std::vector<std::vector<elem>> tables;
  for (std::size_t op = 0; op < a->sig().size(); ++op) {
    std::size_t const k = a->sig()[op].arity;
    std::vector<elem> tab(ipow(m, k));
    std::vector<elem> lifted(k);
    std::size_t idx = 0;
    for_each_tuple(m, k, [&](std::vector<elem> const& args) {
      for (std::size_t i = 0; i < k; ++i) {
        lifted[i] = reps[args[i]];
      }
      tab[idx++] = proj[a->apply(op, lifted)];
    });
    tables.push_back(std::move(tab));
  }
  auto q = share(algebra(a->sig(), m, std::move(tables), a->name() + "/" + t.to_string()));
  return {q, make_homomorphism(a, q, std::move(proj))};
}

}  // namespace finsheaf::alg
