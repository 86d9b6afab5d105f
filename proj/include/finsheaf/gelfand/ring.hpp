#pragma once

// Finite commutative unital rings as algebras over (add, mul, neg, 0, 1),
// their ideal lattices, primes, maximals and radicals.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "finsheaf/alg/algebra.hpp"
#include "finsheaf/alg/congruence.hpp"
#include "finsheaf/alg/limits.hpp"
#include "finsheaf/core.hpp"
#include "finsheaf/order/lattice.hpp"
#include "finsheaf/order/poset.hpp"

namespace finsheaf::gelfand {

using alg::algebra;
using alg::algebra_ref;
using alg::congruence;
using order::lattice;

inline constexpr std::size_t op_add = 0;
inline constexpr std::size_t op_mul = 1;
inline constexpr std::size_t op_neg = 2;
inline constexpr std::size_t op_zero = 3;
inline constexpr std::size_t op_one = 4;

class ring {
 public:
  ring() = default;

  // Scans every ring axiom; throws NotRing with the first failure.
  explicit ring(algebra_ref a) : a_(std::move(a)) {
    if (!(a_->sig() == alg::ring_signature())) {
      throw error("NotRing", "algebra does not have the ring signature");
    }
    if (auto f = axiom_failure()) {
      throw error("NotRing", *f);
    }
  }

  algebra_ref const& ref() const noexcept { return a_; }
  std::size_t size() const noexcept { return a_->size(); }
  std::string const& name() const noexcept { return a_->name(); }

  elem add(elem x, elem y) const { return a_->table(op_add)[x * size() + y]; }
  elem mul(elem x, elem y) const { return a_->table(op_mul)[x * size() + y]; }
  elem neg(elem x) const { return a_->table(op_neg)[x]; }
  elem sub(elem x, elem y) const { return add(x, neg(y)); }
  elem zero() const { return a_->constant(op_zero); }
  elem one() const { return a_->constant(op_one); }

  bool is_unit(elem x) const {
    for (elem y = 0; y < size(); ++y) {
      if (mul(x, y) == one()) {
        return true;
      }
    }
    return false;
  }

  bool is_idempotent(elem x) const { return mul(x, x) == x; }

 private:
  std::optional<std::string> axiom_failure() const {
    std::size_t const n = size();
    auto at = [](elem x, elem y, elem z) {
      return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
    };
    for (elem x = 0; x < n; ++x) {
      if (add(x, zero()) != x) {
        return "zero is not additively neutral at " + std::to_string(x);
      }
      if (add(x, neg(x)) != zero()) {
        return "neg is not an additive inverse at " + std::to_string(x);
      }
      if (mul(x, one()) != x) {
        return "one is not multiplicatively neutral at " + std::to_string(x);
      }
      for (elem y = 0; y < n; ++y) {
        if (add(x, y) != add(y, x)) {
          return "addition is not commutative at " + at(x, y, 0);
        }
        if (mul(x, y) != mul(y, x)) {
          return "multiplication is not commutative at " + at(x, y, 0);
        }
        for (elem z = 0; z < n; ++z) {
          if (add(add(x, y), z) != add(x, add(y, z))) {
            return "addition is not associative at " + at(x, y, z);
          }
          if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
            return "multiplication is not associative at " + at(x, y, z);
          }
          if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z))) {
            return "distributivity fails at " + at(x, y, z);
          }
        }
      }
    }
    return std::nullopt;
  }

  algebra_ref a_;
};

inline ring make_ring(std::size_t n, std::vector<elem> add, std::vector<elem> mul, elem zero,
                      elem one, std::string name) {
  std::vector<elem> neg(n, 0);
  for (elem x = 0; x < n; ++x) {
    for (elem y = 0; y < n; ++y) {
      if (x * n + y < add.size() && add[x * n + y] == zero) {
        neg[x] = y;
      }
    }
  }
  return ring(alg::share(algebra(alg::ring_signature(), n,
                                 {std::move(add), std::move(mul), std::move(neg), {zero}, {one}},
                                 std::move(name))));
}

inline ring make_zn(std::size_t n) {
  if (n == 0) {
    throw error("BadRing", "Z/n needs n >= 1");
  }
  std::vector<elem> add(n * n);
  std::vector<elem> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<elem>((a + b) % n);
      mul[a * n + b] = static_cast<elem>((a * b) % n);
    }
  }
  return make_ring(n, std::move(add), std::move(mul), 0, static_cast<elem>(1 % n),
                   "Z" + std::to_string(n));
}

inline ring ring_product(ring const& r, ring const& s) {
  auto p = alg::algebras::product(*r.ref(), *s.ref());
  p.set_name(r.name() + "x" + s.name());
  return ring(alg::share(std::move(p)));
}

inline std::optional<alg::homomorphism> ring_isomorphism(ring const& r, ring const& s) {
  return alg::find_isomorphism(r.ref(), s.ref());
}

// Ideals and congruences determine each other through cosets.
inline congruence ideal_congruence(ring const& r, subset ideal) {
  std::vector<elem> label(r.size());
  for (elem x = 0; x < r.size(); ++x) {
    label[x] = x;
    for (elem y = 0; y < x; ++y) {
      if (contains(ideal, r.sub(x, y))) {
        label[x] = label[y];
        break;
      }
    }
  }
  return congruence::from_labels(label);
}

inline subset congruence_ideal(ring const& r, congruence const& t) {
  subset s = 0;
  for (elem x = 0; x < r.size(); ++x) {
    if (t.related(x, r.zero())) {
      s |= bit(x);
    }
  }
  return s;
}

inline bool is_ideal(ring const& r, subset s) {
  if (!contains(s, r.zero())) {
    return false;
  }
  for (auto x : members(s)) {
    for (auto y : members(s)) {
      if (!contains(s, r.add(x, y))) {
        return false;
      }
    }
    for (elem a = 0; a < r.size(); ++a) {
      if (!contains(s, r.mul(a, x))) {
        return false;
      }
    }
  }
  return true;
}

inline subset principal_ideal(ring const& r, elem x) {
  subset s = 0;
  for (elem a = 0; a < r.size(); ++a) {
    s |= bit(r.mul(a, x));
  }
  return s;
}

inline subset ideal_sum(ring const& r, subset i, subset j) {
  subset s = 0;
  for (auto x : members(i)) {
    for (auto y : members(j)) {
      s |= bit(r.add(x, y));
    }
  }
  return s;
}

// Smallest ideal containing `gens`.
inline subset ideal_generated(ring const& r, subset gens) {
  subset s = bit(r.zero());
  for (auto g : members(gens)) {
    s = ideal_sum(r, s, principal_ideal(r, g));
  }
  return s;
}

struct ideal_lattice_result {
  lattice lat;                  // ordered by inclusion; meet = ∩, join = +
  std::vector<subset> ideals;   // element i is ideals[i], ascending bitmask
  std::vector<bool> prime;
  std::vector<bool> maximal;

  elem index_of(subset s) const {
    auto it = std::lower_bound(ideals.begin(), ideals.end(), s);
    if (it == ideals.end() || *it != s) {
      throw error("NotIdeal", "subset " + format_subset(s) + " is not an ideal");
    }
    return static_cast<elem>(it - ideals.begin());
  }
};

inline lattice inclusion_order(std::vector<subset> const& sets) {
  std::size_t const n = sets.size();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = (sets[i] & ~sets[j]) == 0;
    }
    names[i] = format_subset(sets[i]);
  }
  auto l = lattice::from_poset(order::poset::from_matrix(m));
  l.set_labels(std::move(names));
  return l;
}

inline bool is_prime_ideal(ring const& r, subset p) {
  if (p == full_subset(r.size())) {
    return false;
  }
  for (elem a = 0; a < r.size(); ++a) {
    for (elem b = 0; b < r.size(); ++b) {
      if (contains(p, r.mul(a, b)) && !contains(p, a) && !contains(p, b)) {
        return false;
      }
    }
  }
  return true;
}

// Principal ideals closed under sums.
inline ideal_lattice_result ideal_lattice(ring const& r, std::size_t cap = 64) {
  if (r.size() > cap) {
    throw cap_exceeded("ring size for ideal lattice", r.size(), cap);
  }
  require_subset_size(r.size(), "ring");
  std::vector<subset> ideals;
  for (elem x = 0; x < r.size(); ++x) {
    ideals.push_back(principal_ideal(r, x));
  }
  std::sort(ideals.begin(), ideals.end());
  ideals.erase(std::unique(ideals.begin(), ideals.end()), ideals.end());
  for (bool grew = true; grew;) {
    grew = false;
    std::size_t const k = ideals.size();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        subset const s = ideal_sum(r, ideals[i], ideals[j]);
        if (!std::binary_search(ideals.begin(), ideals.end(), s) &&
            std::find(ideals.begin() + static_cast<std::ptrdiff_t>(k), ideals.end(), s) ==
                ideals.end()) {
          ideals.push_back(s);
          grew = true;
        }
      }
    }
    std::sort(ideals.begin(), ideals.end());
  }
  ideal_lattice_result res;
  res.lat = inclusion_order(ideals);
  subset const all = full_subset(r.size());
  for (auto i : ideals) {
    res.prime.push_back(is_prime_ideal(r, i));
    bool maximal = i != all;
    for (auto j : ideals) {
      if (maximal && j != all && j != i && (i & ~j) == 0) {
        maximal = false;
      }
    }
    res.maximal.push_back(maximal);
  }
  res.ideals = std::move(ideals);
  return res;
}

// Intersection of the primes containing i (the whole ring if there are none).
inline subset radical(ring const& r, ideal_lattice_result const& il, subset i) {
  subset s = full_subset(r.size());
  for (std::size_t k = 0; k < il.ideals.size(); ++k) {
    if (il.prime[k] && (i & ~il.ideals[k]) == 0) {
      s &= il.ideals[k];
    }
  }
  return s;
}

// Elementwise radical {a : a^k ∈ i for some k}, an independent route.
inline subset nil_radical_of(ring const& r, subset i) {
  subset s = 0;
  for (elem a = 0; a < r.size(); ++a) {
    elem p = a;
    for (std::size_t k = 0; k <= r.size(); ++k) {
      if (contains(i, p)) {
        s |= bit(a);
        break;
      }
      p = r.mul(p, a);
    }
  }
  return s;
}

// A sub-family of ideals (closed under ∩ and containing R) as a lattice.
struct ideal_family {
  lattice lat;
  std::vector<subset> ideals;
};

inline ideal_family family_of(std::vector<subset> ideals) {
  std::sort(ideals.begin(), ideals.end());
  ideal_family f;
  f.lat = inclusion_order(ideals);
  f.ideals = std::move(ideals);
  return f;
}

inline std::vector<subset> radical_ideals(ring const& r, ideal_lattice_result const& il) {
  std::vector<subset> out;
  for (auto i : il.ideals) {
    if (radical(r, il, i) == i) {
      out.push_back(i);
    }
  }
  return out;
}

// Units of R/J read through cosets: x is invertible modulo J iff xy - 1 ∈ J
// for some y.
inline bool invertible_modulo(ring const& r, subset j, elem x) {
  for (elem y = 0; y < r.size(); ++y) {
    if (contains(j, r.sub(r.mul(x, y), r.one()))) {
      return true;
    }
  }
  return false;
}

// J is Jacobson radical: if 1 + ra is invertible modulo J for all r, a ∈ J.
inline bool is_jacobson_radical_ideal(ring const& r, subset j) {
  for (elem a = 0; a < r.size(); ++a) {
    if (contains(j, a)) {
      continue;
    }
    bool all_invertible = true;
    for (elem x = 0; x < r.size() && all_invertible; ++x) {
      all_invertible = invertible_modulo(r, j, r.add(r.one(), r.mul(x, a)));
    }
    if (all_invertible) {
      return false;
    }
  }
  return true;
}

// Local: the non-units form an ideal.
inline bool is_local(ring const& r) {
  subset non_units = 0;
  for (elem x = 0; x < r.size(); ++x) {
    if (!r.is_unit(x)) {
      non_units |= bit(x);
    }
  }
  return r.size() > 1 && is_ideal(r, non_units);
}

// Parses "zn:<n>" or "product:<spec>,<spec>" (nested left to right).
inline ring parse_ring_spec(std::string const& spec) {
  if (spec.rfind("zn:", 0) == 0) {
    std::size_t n = 0;
    try {
      n = std::stoul(spec.substr(3));
    } catch (std::exception const&) {
      throw error("ParseError", "bad ring size in '" + spec + "'");
    }
    return make_zn(n);
  }
  if (spec.rfind("product:", 0) == 0) {
    std::string rest = spec.substr(8);
    std::optional<ring> acc;
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      std::size_t next = rest.find(',', pos);
      if (next == std::string::npos) {
        next = rest.size();
      }
      std::string part = rest.substr(pos, next - pos);
      ring f = parse_ring_spec(part.find(':') == std::string::npos ? "zn:" + part : part);
      acc = acc ? ring_product(*acc, f) : f;
      pos = next + 1;
    }
    return *acc;
  }
  throw error("ParseError", "unknown ring spec '" + spec + "' (expected zn:N or product:A,B)");
}

}  // namespace finsheaf::gelfand
