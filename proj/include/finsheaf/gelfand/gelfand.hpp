#pragma once

// The Gelfand condition, Jacobson radical ideals, the soft sheaf
// representation of a finite Gelfand ring over JRId(R), and the Pierce
// representation over the ideals of its Boolean ring of idempotents.

#include <optional>
#include <string>
#include <vector>

#include "finsheaf/core.hpp"
#include "finsheaf/gelfand/ring.hpp"
#include "finsheaf/order/domain.hpp"
#include "finsheaf/order/frame.hpp"
#include "finsheaf/sheaf/axioms.hpp"
#include "finsheaf/sheaf/kan.hpp"
#include "finsheaf/sheaf/presheaf.hpp"
#include "finsheaf/sheaf/rep.hpp"

namespace finsheaf::gelfand {

struct gelfand_report {
  bool syntactic = true;     // x + y = 1 ⟹ ∃a, b: (1 + xa)(1 + yb) = 1
  bool semantic = true;      // every prime lies in a unique maximal ideal
  bool frame_normal = true;  // RId(R) is a normal frame
  std::string witness;

  bool agree() const { return syntactic == semantic && semantic == frame_normal; }
  bool all() const { return syntactic && semantic && frame_normal; }
};

inline bool gelfand_syntactic(ring const& r, std::string* witness = nullptr) {
  for (elem x = 0; x < r.size(); ++x) {
    for (elem y = 0; y < r.size(); ++y) {
      if (r.add(x, y) != r.one()) {
        continue;
      }
      bool found = false;
      for (elem a = 0; a < r.size() && !found; ++a) {
        elem const u = r.add(r.one(), r.mul(x, a));
        for (elem b = 0; b < r.size(); ++b) {
          if (r.mul(u, r.add(r.one(), r.mul(y, b))) == r.one()) {
            found = true;
            break;
          }
        }
      }
      if (!found) {
        if (witness != nullptr) {
          *witness = "x=" + std::to_string(x) + " y=" + std::to_string(y);
        }
        return false;
      }
    }
  }
  return true;
}

inline gelfand_report is_gelfand(ring const& r, ideal_lattice_result const& il) {
  gelfand_report rep;
  rep.syntactic = gelfand_syntactic(r, &rep.witness);
  for (std::size_t p = 0; p < il.ideals.size(); ++p) {
    if (!il.prime[p]) {
      continue;
    }
    std::size_t above = 0;
    for (std::size_t m = 0; m < il.ideals.size(); ++m) {
      above += il.maximal[m] && (il.ideals[p] & ~il.ideals[m]) == 0 ? 1 : 0;
    }
    if (above != 1) {
      rep.semantic = false;
      if (rep.witness.empty()) {
        rep.witness = "prime " + format_subset(il.ideals[p]) + " lies in " +
                      std::to_string(above) + " maximal ideals";
      }
    }
  }
  auto rid = family_of(radical_ideals(r, il));
  auto normal = order::is_normal_frame(rid.lat);
  rep.frame_normal = normal.normal;
  if (!normal.normal && rep.witness.empty()) {
    rep.witness = "RId not normal at (" + format_subset(rid.ideals[normal.witness->first]) + ", " +
                  format_subset(rid.ideals[normal.witness->second]) + ")";
  }
  return rep;
}

inline gelfand_report is_gelfand(ring const& r) { return is_gelfand(r, ideal_lattice(r)); }

inline ideal_family jacobson_radical_ideals(ring const& r, ideal_lattice_result const& il) {
  std::vector<subset> out;
  for (auto i : il.ideals) {
    if (is_jacobson_radical_ideal(r, i)) {
      out.push_back(i);
    }
  }
  return family_of(std::move(out));
}

inline ideal_family jacobson_radical_ideals(ring const& r) {
  return jacobson_radical_ideals(r, ideal_lattice(r));
}

// Sub-meet-semilattice of Id(R) (∩ and R) whose joins are the sums.
inline check_report sublattice_report(ring const& r, ideal_family const& f) {
  check_report rep;
  auto has = [&](subset s) { return std::binary_search(f.ideals.begin(), f.ideals.end(), s); };
  std::string wm, wj;
  bool meets = has(full_subset(r.size()));
  bool joins = true;
  for (elem i = 0; i < f.ideals.size(); ++i) {
    for (elem j = 0; j < f.ideals.size(); ++j) {
      subset const inter = f.ideals[i] & f.ideals[j];
      if (!has(inter) && meets) {
        meets = false;
        wm = format_subset(f.ideals[i]) + " & " + format_subset(f.ideals[j]);
      }
      subset const sum = ideal_sum(r, f.ideals[i], f.ideals[j]);
      if (f.ideals[f.lat.join(i, j)] != sum && joins) {
        joins = false;
        wj = format_subset(f.ideals[i]) + " + " + format_subset(f.ideals[j]);
      }
    }
  }
  rep.add("closed_under_finite_meets", meets, wm);
  rep.add("binary_joins_are_sums", joins, wj);
  return rep;
}

// Does the inclusion of a family of ideals into Id(R) preserve finite
// infima and arbitrary suprema? Failures are reported, not thrown.
inline check_report inclusion_preservation(ring const& r, ideal_family const& f) {
  auto rep = sublattice_report(r, f);
  subset const bot = f.ideals[f.lat.bot()];
  bool const empty_sup = bot == bit(r.zero());
  rep.add("empty_supremum", empty_sup,
          empty_sup ? "" : "PreservationFailure: least element " + format_subset(bot) +
                               " is not the zero ideal");
  return rep;
}

// O_J = {a : Ann(a) + J = R}. For a maximal m this is
// {a : ab = 0 for some b ∉ m}.
inline subset vanishing_ideal(ring const& r, subset j) {
  subset o = 0;
  for (elem a = 0; a < r.size(); ++a) {
    subset ann = 0;
    for (elem b = 0; b < r.size(); ++b) {
      if (r.mul(a, b) == r.zero()) {
        ann |= bit(b);
      }
    }
    if (contains(ideal_sum(r, ann, j), r.one())) {
      o |= bit(a);
    }
  }
  return o;
}

inline subset local_vanishing_ideal(ring const& r, subset m) {
  subset o = 0;
  for (elem a = 0; a < r.size(); ++a) {
    for (elem b = 0; b < r.size(); ++b) {
      if (!contains(m, b) && r.mul(a, b) == r.zero()) {
        o |= bit(a);
        break;
      }
    }
  }
  return o;
}

struct stalk_info {
  subset maximal = 0;
  subset o_m = 0;
  std::size_t stalk_size = 0;
  bool matches_quotient = false;  // F(k_m) = R/O_m as computed directly
  bool local = false;
};

struct gelfand_representation_result {
  ring r;
  ideal_family jrid;
  order::lawson_dual_result dual;
  std::vector<subset> theta_ideals;  // per element of the K-side base
  sheaf::representation rep;         // K-sheaf over σFilt(JRId)^op
  sheaf::sheaf_report axioms;
  sheaf::kan_result omega;           // the Ω-sheaf on JRId itself
  sheaf::sheaf_report omega_axioms;
  std::vector<stalk_info> stalks;
  check_report inclusion;            // JRId ↪ Id preservation (reported)
  check_report checks;

  bool pass() const { return checks.all_pass(); }
};

// The K-sheaf at a Scott-open filter k of JRId is R/O_{x(k)}, where
// x(k) = sup{y : y ∧ z = ⊥ for some z ∈ k} is the ideal whose zero set is
// the compact set named by k. Reading the bare inclusion J ↦ J instead
// represents R/Jac(R), so the two agree only for reduced rings; that
// difference is what `inclusion` records.
inline gelfand_representation_result gelfand_representation(ring const& r,
                                                             sheaf::axiom_caps const& caps = {}) {
  gelfand_representation_result out;
  out.r = r;
  auto il = ideal_lattice(r);
  out.jrid = jacobson_radical_ideals(r, il);
  auto const& l = out.jrid.lat;
  out.inclusion = inclusion_preservation(r, out.jrid);

  out.dual = order::lawson_dual(l);
  lattice p = sheaf::k_side_base(out.dual);
  sheaf::rep_map h{p, r.ref(), {}};
  for (auto const& k : out.dual.filters) {
    subset const o = vanishing_ideal(r, out.jrid.ideals[order::disjoint_sup(l, k.members)]);
    out.theta_ideals.push_back(o);
    h.theta.push_back(ideal_congruence(r, o));
  }
  out.rep = sheaf::gamma_star(h);
  out.axioms = sheaf::axiom_report(out.rep.sheaf, caps);
  out.axioms.global_iso = out.rep.phi.bijective();
  auto cond = sheaf::rep_condition(h, &out.axioms, caps);

  out.omega = sheaf::kan_restrict(l, out.rep.sheaf);
  out.omega_axioms = sheaf::axiom_report(out.omega.sheaf, caps);
  bool const omega_soft = sheaf::omega_soft(out.omega.sheaf).iso;

  bool stalks_ok = true;
  std::string ws;
  std::size_t maximal_count = 0;
  for (std::size_t i = 0; i < il.ideals.size(); ++i) {
    if (!il.maximal[i]) {
      continue;
    }
    ++maximal_count;
    subset const m = il.ideals[i];
    // Point filter of m: the Jacobson radical ideals not inside m.
    subset k = 0;
    for (elem j = 0; j < out.jrid.ideals.size(); ++j) {
      if ((out.jrid.ideals[j] & ~m) != 0) {
        k |= bit(j);
      }
    }
    auto idx = order::index_of_filter(out.dual.filters, k);
    stalk_info s;
    s.maximal = m;
    s.o_m = local_vanishing_ideal(r, m);
    if (idx == out.dual.filters.size()) {
      stalks_ok = false;
      ws = "point filter of " + format_subset(m) + " is not Scott-open";
      out.stalks.push_back(s);
      continue;
    }
    auto const& value = out.rep.sheaf.at(static_cast<elem>(idx));
    s.stalk_size = value->size();
    s.matches_quotient = out.theta_ideals[idx] == s.o_m;
    s.local = is_local(ring(value));
    if ((!s.matches_quotient || !s.local) && stalks_ok) {
      stalks_ok = false;
      ws = "stalk at " + format_subset(m);
    }
    out.stalks.push_back(s);
  }

  out.checks.add("jrid_is_compact_regular", order::compact_regular_check(l).regular);
  out.checks.add("jrid_lawson_selfdual", order::lawson_selfdual_check(l).holds);
  out.checks.add("k_sheaf", out.axioms.k_sheaf() && out.axioms.k4);
  out.checks.add("soft", out.axioms.soft);
  out.checks.add("global_sections_iso", *out.axioms.global_iso);
  out.checks.add("representation_condition", cond.representation_condition());
  out.checks.add("kan_limits", out.omega.checks.all_pass());
  out.checks.add("omega_sheaf", out.omega_axioms.omega_sheaf() && out.omega_axioms.k4);
  out.checks.add("omega_soft", omega_soft);
  out.checks.add("points_are_maximals", out.jrid.ideals.size() == (std::size_t{1} << maximal_count),
                 std::to_string(out.jrid.ideals.size()) + " opens for " +
                     std::to_string(maximal_count) + " maximal ideals");
  out.checks.add("local_stalks", stalks_ok, ws);
  return out;
}

struct pierce_result {
  ring r;
  std::vector<elem> idempotents;
  ideal_lattice_result e_ideals;      // ideals of E(R), as subsets of E's indices
  std::vector<subset> generated;      // J ↦ ⟨J⟩ in R, per element of e_ideals
  std::vector<elem> atoms;            // minimal nonzero idempotents
  std::vector<std::size_t> factor_sizes;
  sheaf::representation rep;          // over Id(E(R))^op
  sheaf::sheaf_report axioms;
  check_report checks;

  bool pass() const { return checks.all_pass(); }
};

// E(R) with e ⊕ f = e + f - 2ef and e·f.
inline ring idempotent_ring(ring const& r, std::vector<elem>& idem) {
  idem.clear();
  for (elem x = 0; x < r.size(); ++x) {
    if (r.is_idempotent(x)) {
      idem.push_back(x);
    }
  }
  std::size_t const k = idem.size();
  auto index = [&](elem x) {
    return static_cast<elem>(std::find(idem.begin(), idem.end(), x) - idem.begin());
  };
  std::vector<elem> add(k * k);
  std::vector<elem> mul(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      elem const ef = r.mul(idem[i], idem[j]);
      add[i * k + j] = index(r.sub(r.add(idem[i], idem[j]), r.add(ef, ef)));
      mul[i * k + j] = index(ef);
    }
  }
  return make_ring(k, std::move(add), std::move(mul), index(r.zero()), index(r.one()),
                   "E(" + r.name() + ")");
}

// e·R as a ring with unit e, elements listed in ascending order.
inline ring corner_ring(ring const& r, elem e) {
  std::vector<elem> els;
  for (elem x = 0; x < r.size(); ++x) {
    if (r.mul(e, x) == x) {
      els.push_back(x);
    }
  }
  std::size_t const k = els.size();
  auto index = [&](elem x) {
    return static_cast<elem>(std::find(els.begin(), els.end(), x) - els.begin());
  };
  std::vector<elem> add(k * k);
  std::vector<elem> mul(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      add[i * k + j] = index(r.add(els[i], els[j]));
      mul[i * k + j] = index(r.mul(els[i], els[j]));
    }
  }
  return make_ring(k, std::move(add), std::move(mul), index(r.zero()), index(e),
                   r.name() + "e" + std::to_string(e));
}

inline pierce_result pierce_decomposition(ring const& r, sheaf::axiom_caps const& caps = {}) {
  pierce_result out;
  out.r = r;
  ring e = idempotent_ring(r, out.idempotents);
  out.e_ideals = ideal_lattice(e);
  auto const& l = out.e_ideals.lat;

  // J ↦ ⟨J⟩ and its preservation of finite infima and arbitrary suprema.
  for (auto j : out.e_ideals.ideals) {
    subset gens = 0;
    for (auto i : members(j)) {
      gens |= bit(out.idempotents[i]);
    }
    out.generated.push_back(ideal_generated(r, gens));
  }
  bool meets = true;
  bool joins = true;
  for (elem a = 0; a < l.size(); ++a) {
    for (elem b = 0; b < l.size(); ++b) {
      meets = meets && out.generated[l.meet(a, b)] == (out.generated[a] & out.generated[b]);
      joins = joins &&
              out.generated[l.join(a, b)] == ideal_sum(r, out.generated[a], out.generated[b]);
    }
  }
  meets = meets && out.generated[l.top()] == full_subset(r.size());
  joins = joins && out.generated[l.bot()] == bit(r.zero());
  out.checks.add("preserves_finite_infima", meets);
  out.checks.add("preserves_arbitrary_suprema", joins);

  bool boolean = l.is_distributive();
  for (elem x = 0; x < l.size() && boolean; ++x) {
    bool has_complement = false;
    for (elem y = 0; y < l.size(); ++y) {
      has_complement = has_complement || (l.meet(x, y) == l.bot() && l.join(x, y) == l.top());
    }
    boolean = has_complement;
  }
  out.checks.add("base_is_boolean", boolean);

  sheaf::rep_map h{l.opposite(), r.ref(), {}};
  for (auto g : out.generated) {
    h.theta.push_back(ideal_congruence(r, g));
  }
  out.rep = sheaf::gamma_star(h);
  out.axioms = sheaf::axiom_report(out.rep.sheaf, caps);
  out.axioms.global_iso = out.rep.phi.bijective();
  out.checks.add("k_sheaf", out.axioms.k_sheaf() && out.axioms.k4);
  out.checks.add("soft", out.axioms.soft);
  out.checks.add("global_sections_iso", *out.axioms.global_iso);

  // Atoms of E(R) and R ≅ ∏ e_i R via x ↦ (e_i x).
  for (auto e1 : out.idempotents) {
    if (e1 == r.zero()) {
      continue;
    }
    bool minimal = true;
    for (auto e2 : out.idempotents) {
      if (e2 != r.zero() && e2 != e1 && r.mul(e1, e2) == e2) {
        minimal = false;
      }
    }
    if (minimal) {
      out.atoms.push_back(e1);
    }
  }
  std::size_t prod = 1;
  elem sum = r.zero();
  for (auto a : out.atoms) {
    auto c = corner_ring(r, a);
    out.factor_sizes.push_back(c.size());
    prod *= c.size();
    sum = r.add(sum, a);
  }
  bool orthogonal = true;
  for (auto a : out.atoms) {
    for (auto b : out.atoms) {
      orthogonal = orthogonal && (a == b || r.mul(a, b) == r.zero());
    }
  }
  bool injective = true;
  for (elem x = 0; x < r.size() && injective; ++x) {
    for (elem y = x + 1; y < r.size() && injective; ++y) {
      bool same = true;
      for (auto a : out.atoms) {
        same = same && r.mul(a, x) == r.mul(a, y);
      }
      injective = !same;
    }
  }
  out.checks.add("product_decomposition",
                 r.size() == 1 ? out.atoms.empty()
                               : orthogonal && sum == r.one() && injective && prod == r.size());
  out.checks.add("atoms_match_base", (std::size_t{1} << out.atoms.size()) == l.size());
  return out;
}

inline std::vector<ring> pierce_factors(ring const& r, pierce_result const& p) {
  std::vector<ring> out;
  for (auto a : p.atoms) {
    out.push_back(corner_ring(r, a));
  }
  return out;
}

}  // namespace finsheaf::gelfand
