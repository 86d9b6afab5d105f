#pragma once

// Exhaustive verification over every congruence-valued monotone map on a
// base lattice: the sheaf condition for γ∗H, the representation condition,
// the round trip and order isomorphism on soft representations, the two
// softness forms, and the passage to the Ω side.

#include <string>
#include <vector>

#include "finsheaf/alg/congruence.hpp"
#include "finsheaf/core.hpp"
#include "finsheaf/order/maps.hpp"
#include "finsheaf/sheaf/axioms.hpp"
#include "finsheaf/sheaf/kan.hpp"
#include "finsheaf/sheaf/presheaf.hpp"
#include "finsheaf/sheaf/rep.hpp"

namespace finsheaf::sheaf {

struct theorem_caps {
  std::size_t maps = 200'000;
  alg::congruence_caps congruences;
  axiom_caps axioms;
};

struct theorem_report {
  std::size_t maps = 0;       // monotone θ: P^op → Con(A)
  std::size_t k_sheaves = 0;  // γ∗H passing K1–K3
  std::size_t reps = 0;       // |𝒩|
  std::size_t order_pairs = 0;
  std::size_t limit_form_gaps = 0;  // O2+O3 without the meet-closed limit form
  check_report clauses;

  bool pass() const { return clauses.all_pass(); }
};

inline theorem_report verify_main_theorems(algebra_ref const& a, lattice const& p,
                                           theorem_caps const& caps = {}) {
  theorem_report out;
  auto con = alg::congruence_lattice(*a, caps.congruences);
  auto maps = order::enumerate_monotone_maps(p, con.lat, {}, true, caps.maps);
  out.maps = maps.size();

  std::string w1, w2, w4, w5, wg;
  bool c1 = true, c2 = true, c4 = true, c5 = true, gamma_ok = true;
  std::vector<rep_map> n_set;
  for (auto const& m : maps) {
    rep_map h{p, a, {}};
    for (auto x : m.val) {
      h.theta.push_back(con.cons[x]);
    }
    auto rep = gamma_star(h);
    auto rep_r = axiom_report(rep.sheaf, caps.axioms);
    rep_r.global_iso = rep.phi.bijective();
    auto cond = rep_condition(h, &rep_r, caps.axioms);
    std::string const id = format_list(m.val);
    out.limit_form_gaps += rep_r.limit_form_gap ? 1 : 0;

    if (!rep_r.soft || !rep_r.k3 || !rep_r.o3) {
      if (gamma_ok) {
        wg = id;
      }
      gamma_ok = false;
    }
    if (rep_r.k_sheaf() != cond.sheaf_condition() || !rep_r.consistent()) {
      if (c1) {
        w1 = id;
      }
      c1 = false;
    }
    bool const is_rep = rep_r.k_sheaf() && *rep_r.global_iso;
    if (is_rep != cond.representation_condition()) {
      if (c2) {
        w2 = id;
      }
      c2 = false;
    }
    if (!rep_r.details.passed("soft_forms_agree")) {
      if (c4) {
        w4 = id;
      }
      c4 = false;
    }
    if (rep_r.k_sheaf()) {
      ++out.k_sheaves;
      auto up = kan_transfer(rep.sheaf);
      auto down = kan_restrict(p, up.sheaf);
      auto o = axiom_report(down.sheaf, caps.axioms);
      bool ok = up.checks.all_pass() && down.checks.all_pass() &&
                same_presheaf(down.sheaf, rep.sheaf) && o.omega_sheaf() &&
                omega_soft(down.sheaf).iso;
      if (!ok && c5) {
        w5 = id;
      }
      c5 = c5 && ok;
    }
    if (cond.representation_condition()) {
      n_set.push_back(std::move(h));
    }
  }
  out.clauses.add("gamma_star_soft_and_directed", gamma_ok, wg);
  out.clauses.add("sheaf_condition", c1, w1);
  out.clauses.add("representation_condition", c2, w2);

  // Clause 3 on 𝒩.
  auto enumerated = enumerate_soft_reps(a, p, caps.congruences);
  out.reps = enumerated.reps.size();
  bool same_set = enumerated.reps == n_set;
  out.clauses.add("soft_reps_enumeration", same_set,
                  same_set ? "" : "filtered " + std::to_string(n_set.size()) + " vs enumerated " +
                                      std::to_string(enumerated.reps.size()));
  bool round = true;
  std::string wr;
  std::vector<representation> reps;
  for (auto const& h : enumerated.reps) {
    reps.push_back(gamma_star(h));
    auto back = extract_H(reps.back().sheaf, reps.back().phi);
    if (!(back.h == h) && round) {
      round = false;
      wr = std::to_string(reps.size() - 1);
    }
  }
  out.clauses.add("round_trip", round, wr);
  bool ord = true;
  std::string wo;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      bool const morph = find_rep_morphism(reps[i], reps[j]).has_value();
      out.order_pairs += enumerated.order[i][j] ? 1 : 0;
      if (morph != enumerated.order[i][j] && ord) {
        ord = false;
        wo = std::to_string(i) + "," + std::to_string(j);
      }
    }
  }
  out.clauses.add("order_isomorphism", ord, wo);
  out.clauses.add("soft_forms_agree", c4, w4);
  out.clauses.add("omega_side", c5, w5);
  return out;
}

}  // namespace finsheaf::sheaf
