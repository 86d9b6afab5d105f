#pragma once

// Images, pullbacks, pushouts of quotient spans, homomorphism and
// isomorphism search, and the four-way commuting report.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finsheaf/alg/algebra.hpp"
#include "finsheaf/alg/congruence.hpp"
#include "finsheaf/core.hpp"

namespace finsheaf::alg {

struct factorization {
  homomorphism e;  // surjection onto the image
  homomorphism m;  // injection into the codomain
};

// Image carrier indexed by ascending least preimage.
inline factorization image_factorization(homomorphism const& h) {
  auto const& a = *h.dom;
  std::vector<elem> image_index(h.cod->size(), static_cast<elem>(-1));
  std::vector<elem> values;  // image element i ↦ codomain element
  for (elem x = 0; x < a.size(); ++x) {
    elem const y = h.map[x];
    if (image_index[y] == static_cast<elem>(-1)) {
      image_index[y] = static_cast<elem>(values.size());
      values.push_back(y);
    }
  }
  std::size_t const k = values.size();
  std::vector<std::vector<elem>> tables;
  for (std::size_t op = 0; op < a.sig().size(); ++op) {
    std::size_t const ar = a.sig()[op].arity;
    std::vector<elem> tab(ipow(k, ar));
    std::vector<elem> args_cod(ar);
    std::size_t idx = 0;
    for_each_tuple(k, ar, [&](std::vector<elem> const& args) {
      for (std::size_t i = 0; i < ar; ++i) {
        args_cod[i] = values[args[i]];
      }
      elem const y = h.cod->apply(op, args_cod);
      if (image_index[y] == static_cast<elem>(-1)) {
        throw internal_inconsistency("image of a homomorphism is not closed");
      }
      tab[idx++] = image_index[y];
    });
    tables.push_back(std::move(tab));
  }
  auto im = share(algebra(a.sig(), k, std::move(tables), "im"));
  std::vector<elem> e(a.size());
  for (elem x = 0; x < a.size(); ++x) {
    e[x] = image_index[h.map[x]];
  }
  return {make_homomorphism(h.dom, im, std::move(e)), make_homomorphism(im, h.cod, values)};
}

struct pullback_result {
  algebra_ref alg;
  homomorphism p1;
  homomorphism p2;
  std::vector<std::pair<elem, elem>> pairs;  // element i is pairs[i]
};

// Subalgebra of B × C of the pairs agreeing in D, in lexicographic order.
inline pullback_result pullback(homomorphism const& h1, homomorphism const& h2) {
  if (!(*h1.cod == *h2.cod)) {
    throw error("CodomainMismatch", "pullback of homomorphisms with different codomains");
  }
  auto const& b = *h1.dom;
  auto const& c = *h2.dom;
  std::vector<std::pair<elem, elem>> pairs;
  std::vector<elem> index(b.size() * c.size(), static_cast<elem>(-1));
  for (elem x = 0; x < b.size(); ++x) {
    for (elem y = 0; y < c.size(); ++y) {
      if (h1.map[x] == h2.map[y]) {
        index[x * c.size() + y] = static_cast<elem>(pairs.size());
        pairs.emplace_back(x, y);
      }
    }
  }
  std::size_t const k = pairs.size();
  std::vector<std::vector<elem>> tables;
  for (std::size_t op = 0; op < b.sig().size(); ++op) {
    std::size_t const ar = b.sig()[op].arity;
    std::vector<elem> tab(ipow(k, ar));
    std::vector<elem> xb(ar);
    std::vector<elem> xc(ar);
    std::size_t idx = 0;
    for_each_tuple(k, ar, [&](std::vector<elem> const& args) {
      for (std::size_t i = 0; i < ar; ++i) {
        xb[i] = pairs[args[i]].first;
        xc[i] = pairs[args[i]].second;
      }
      elem const r = index[b.apply(op, xb) * c.size() + c.apply(op, xc)];
      if (r == static_cast<elem>(-1)) {
        throw internal_inconsistency("pullback carrier not closed");
      }
      tab[idx++] = r;
    });
    tables.push_back(std::move(tab));
  }
  if (k == 0 && b.sig().has_constants()) {
    throw internal_inconsistency("empty pullback for a signature with constants");
  }
  auto p = share(algebra(b.sig(), k, std::move(tables), "pullback"));
  std::vector<elem> m1(k);
  std::vector<elem> m2(k);
  for (std::size_t i = 0; i < k; ++i) {
    m1[i] = pairs[i].first;
    m2[i] = pairs[i].second;
  }
  return {p, make_homomorphism(p, h1.dom, m1), make_homomorphism(p, h2.dom, m2), pairs};
}

struct pushout_result {
  algebra_ref alg;  // A/(θ1 ∨ θ2)
  quotient_result q1;
  quotient_result q2;
  homomorphism eta1;  // A/θ1 → H
  homomorphism eta2;  // A/θ2 → H
  congruence sup;
};

// The map induced on quotients by a ⊆ b: A/a → A/b.
inline homomorphism induced_map(quotient_result const& from, quotient_result const& to) {
  std::size_t const n = from.alg->size();
  std::vector<elem> m(n, 0);
  std::vector<bool> set(n, false);
  for (elem x = 0; x < from.proj.map.size(); ++x) {
    elem const i = from.proj.map[x];
    elem const j = to.proj.map[x];
    if (set[i] && m[i] != j) {
      throw error("NotRefinement", "quotient map does not factor");
    }
    m[i] = j;
    set[i] = true;
  }
  return make_homomorphism(from.alg, to.alg, std::move(m));
}

inline pushout_result pushout_of_quotients(algebra_ref const& a, congruence const& t1,
                                           congruence const& t2) {
  auto s = join(*a, t1, t2);
  auto q = quotient(a, s);
  auto q1 = quotient(a, t1);
  auto q2 = quotient(a, t2);
  auto eta1 = induced_map(q1, q);
  auto eta2 = induced_map(q2, q);
  return {q.alg, q1, q2, eta1, eta2, s};
}

// All homomorphisms dom → cod, in lexicographic order of value arrays.
inline void for_each_homomorphism(algebra_ref const& dom, algebra_ref const& cod,
                                  std::function<bool(std::vector<elem> const&)> const& visit,
                                  std::vector<std::optional<elem>> const& fixed = {}) {
  auto const& a = *dom;
  auto const& b = *cod;
  if (!(a.sig() == b.sig())) {
    throw error("AlgebraMismatch", "homomorphisms between different signatures");
  }
  std::size_t const n = a.size();
  // A constraint (op, args) is checked once all arguments and the result are
  // assigned; it is attached to the largest index involved.
  struct item {
    std::size_t op;
    std::vector<elem> args;
    elem result;
  };
  std::vector<std::vector<item>> at(n);
  for (std::size_t op = 0; op < a.sig().size(); ++op) {
    std::size_t const k = a.sig()[op].arity;
    for_each_tuple(n, k, [&](std::vector<elem> const& args) {
      elem const r = a.apply(op, args);
      elem last = r;
      for (auto x : args) {
        last = std::max(last, x);
      }
      at[last].push_back({op, args, r});
    });
  }
  std::vector<elem> val(n, 0);
  std::vector<elem> img;
  bool stop = false;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (stop) {
      return;
    }
    if (i == n) {
      if (!visit(val)) {
        stop = true;
      }
      return;
    }
    for (elem v = 0; v < b.size() && !stop; ++v) {
      if (i < fixed.size() && fixed[i] && *fixed[i] != v) {
        continue;
      }
      val[i] = v;
      bool ok = true;
      for (auto const& it : at[i]) {
        img.resize(it.args.size());
        for (std::size_t j = 0; j < it.args.size(); ++j) {
          img[j] = val[it.args[j]];
        }
        if (b.apply(it.op, img) != val[it.result]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        go(i + 1);
      }
    }
  };
  go(0);
}

inline std::vector<homomorphism> all_homomorphisms(algebra_ref const& dom, algebra_ref const& cod,
                                                   std::size_t cap = 1'000'000) {
  std::vector<homomorphism> out;
  for_each_homomorphism(dom, cod, [&](std::vector<elem> const& v) {
    if (out.size() >= cap) {
      throw cap_exceeded("homomorphism enumeration", out.size() + 1, cap);
    }
    out.push_back({dom, cod, v});
    return true;
  });
  return out;
}

inline std::optional<homomorphism> find_isomorphism(algebra_ref const& a, algebra_ref const& b) {
  if (a->size() != b->size() || !(a->sig() == b->sig())) {
    return std::nullopt;
  }
  std::optional<homomorphism> found;
  for_each_homomorphism(a, b, [&](std::vector<elem> const& v) {
    homomorphism h{a, b, v};
    if (h.bijective()) {
      found = h;
      return false;
    }
    return true;
  });
  return found;
}

inline bool isomorphic(algebra_ref const& a, algebra_ref const& b) {
  return find_isomorphism(a, b).has_value();
}

// The four readings of "θ1 and θ2 commute" which must agree:
//   composites   θ1∘θ2 = θ2∘θ1
//   sup_kernel   θ1 ∨ θ2 equals θ1∘θ2 as a relation
//   regular      A → A/θ1 ×_H A/θ2 is surjective, H = A/(θ1∨θ2)
//   pullback     A/(θ1∧θ2) → A/θ1 ×_H A/θ2 is an isomorphism
struct commuting_report {
  bool composites = false;
  bool sup_kernel = false;
  bool regular = false;
  bool pullback = false;

  bool agree() const {
    return composites == sup_kernel && sup_kernel == regular && regular == pullback;
  }
  bool value() const { return composites; }
  std::string describe() const {
    auto b = [](bool v) { return v ? "1" : "0"; };
    return std::string("composites=") + b(composites) + " sup_kernel=" + b(sup_kernel) +
           " regular=" + b(regular) + " pullback=" + b(pullback);
  }
};

inline commuting_report commuting_equivalences_report(algebra_ref const& a, congruence const& t1,
                                                      congruence const& t2) {
  require_same_carrier(*a, t1);
  require_same_carrier(*a, t2);
  commuting_report r;
  auto const c12 = compose_relations(t1, t2);
  r.composites = c12 == compose_relations(t2, t1);

  auto po = pushout_of_quotients(a, t1, t2);
  r.sup_kernel = relation::of(po.sup) == c12;

  auto pb = pullback(po.eta1, po.eta2);
  // Mediating map A → pullback: x ↦ (q1(x), q2(x)).
  std::vector<bool> hit(pb.alg->size(), false);
  for (elem x = 0; x < a->size(); ++x) {
    auto const key = std::make_pair(po.q1.proj.map[x], po.q2.proj.map[x]);
    auto it = std::lower_bound(pb.pairs.begin(), pb.pairs.end(), key);
    if (it == pb.pairs.end() || *it != key) {
      throw internal_inconsistency("mediating map misses the pullback");
    }
    hit[static_cast<std::size_t>(it - pb.pairs.begin())] = true;
  }
  r.regular = std::all_of(hit.begin(), hit.end(), [](bool v) { return v; });

  auto qm = quotient(a, meet(t1, t2));
  std::vector<elem> med(qm.alg->size());
  for (elem x = 0; x < a->size(); ++x) {
    auto const key = std::make_pair(po.q1.proj.map[x], po.q2.proj.map[x]);
    auto it = std::lower_bound(pb.pairs.begin(), pb.pairs.end(), key);
    med[qm.proj.map[x]] = static_cast<elem>(it - pb.pairs.begin());
  }
  auto h = make_homomorphism(qm.alg, pb.alg, med);
  r.pullback = h.bijective();
  return r;
}

}  // namespace finsheaf::alg
