#pragma once

// Way-below, continuity, filters, Scott-openness and the Lawson dual of a
// finite lattice. The definitions are evaluated literally (quantifying over
// subsets); the finite-lattice collapses (≪ equals ≤, every filter is
// principal and Scott-open) are checked against those literal evaluations.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finsheaf/core.hpp"
#include "finsheaf/order/lattice.hpp"

namespace finsheaf::order {

// Subset enumeration is exponential; above these sizes the literal routes
// throw (way-below) or fall back to the max/min reduction (Scott-openness).
struct domain_caps {
  std::size_t literal_subsets = 12;
  std::size_t up_sets = 2'000'000;
};

inline bool is_directed(lattice const& l, subset d) {
  if (d == 0) {
    return false;
  }
  auto xs = members(d);
  for (auto x : xs) {
    for (auto y : xs) {
      bool bounded = false;
      for (auto z : xs) {
        if (l.leq(x, z) && l.leq(y, z)) {
          bounded = true;
          break;
        }
      }
      if (!bounded) {
        return false;
      }
    }
  }
  return true;
}

inline bool is_codirected(lattice const& l, subset d) {
  if (d == 0) {
    return false;
  }
  auto xs = members(d);
  for (auto x : xs) {
    for (auto y : xs) {
      bool bounded = false;
      for (auto z : xs) {
        if (l.leq(z, x) && l.leq(z, y)) {
          bounded = true;
          break;
        }
      }
      if (!bounded) {
        return false;
      }
    }
  }
  return true;
}

inline std::vector<subset> directed_subsets(lattice const& l, domain_caps const& caps = {}) {
  if (l.size() > caps.literal_subsets) {
    throw cap_exceeded("lattice for directed-subset enumeration", l.size(), caps.literal_subsets);
  }
  std::vector<subset> out;
  for (subset d = 1; d <= full_subset(l.size()); ++d) {
    if (is_directed(l, d)) {
      out.push_back(d);
    }
  }
  return out;
}

// x ≪ y by the definition: every directed D with y ≤ sup D has d ∈ D, x ≤ d.
inline bool way_below_directed(lattice const& l, elem x, elem y, domain_caps const& caps = {}) {
  for (auto d : directed_subsets(l, caps)) {
    if (!l.leq(y, l.join_of(d))) {
      continue;
    }
    bool hit = false;
    for (auto z : members(d)) {
      if (l.leq(x, z)) {
        hit = true;
        break;
      }
    }
    if (!hit) {
      return false;
    }
  }
  return true;
}

// x ≪ y by the complete-lattice reformulation: whenever y ≤ sup Y there is a
// finite X ⊆ Y with x ≤ sup X.
inline bool way_below(lattice const& l, elem x, elem y, domain_caps const& caps = {}) {
  if (x >= l.size() || y >= l.size()) {
    throw error("BadIndex", "way_below index out of range");
  }
  if (l.size() > caps.literal_subsets) {
    throw cap_exceeded("lattice for way-below enumeration", l.size(), caps.literal_subsets);
  }
  for (subset ys = 0; ys <= full_subset(l.size()); ++ys) {
    if (!l.leq(y, l.join_of(ys))) {
      continue;
    }
    bool found = false;
    // All submasks of ys, largest first; every subset here is finite.
    for (subset xs = ys;; xs = (xs - 1) & ys) {
      if (l.leq(x, l.join_of(xs))) {
        found = true;
        break;
      }
      if (xs == 0) {
        break;
      }
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

// The way-below relation of l, computed by brute force through both literal
// routes. `collapses` records whether ≪ coincides with ≤; once it does the
// fast path may answer with leq.
struct way_below_certificate {
  std::vector<std::vector<bool>> relation;
  bool routes_agree = true;
  bool collapses = true;
  std::string witness;

  bool fast(lattice const& l, elem x, elem y) const {
    if (!collapses) {
      return relation[x][y];
    }
    return l.leq(x, y);
  }
};

inline way_below_certificate certify_way_below(lattice const& l, domain_caps const& caps = {}) {
  way_below_certificate c;
  std::size_t const n = l.size();
  c.relation.assign(n, std::vector<bool>(n));
  auto const dirs = directed_subsets(l, caps);
  for (elem x = 0; x < n; ++x) {
    for (elem y = 0; y < n; ++y) {
      bool const a = way_below(l, x, y, caps);
      bool b = true;
      for (auto d : dirs) {
        if (!l.leq(y, l.join_of(d))) {
          continue;
        }
        bool hit = false;
        for (auto z : members(d)) {
          if (l.leq(x, z)) {
            hit = true;
            break;
          }
        }
        if (!hit) {
          b = false;
          break;
        }
      }
      c.relation[x][y] = a;
      if (a != b && c.routes_agree) {
        c.routes_agree = false;
        c.witness = "routes disagree at (" + std::to_string(x) + "," + std::to_string(y) + ")";
      }
      if (a != l.leq(x, y) && c.collapses) {
        c.collapses = false;
        if (c.witness.empty()) {
          c.witness = "way-below differs from leq at (" + std::to_string(x) + "," +
                      std::to_string(y) + ")";
        }
      }
    }
  }
  return c;
}

// ⇊x as a subset.
inline subset way_below_set(lattice const& l, way_below_certificate const& c, elem x) {
  subset s = 0;
  for (elem y = 0; y < l.size(); ++y) {
    if (c.relation[y][x]) {
      s |= bit(y);
    }
  }
  return s;
}

inline check_report continuity_report(lattice const& l, way_below_certificate const& c) {
  check_report r;
  std::string w;
  bool cont = true;
  for (elem x = 0; x < l.size() && cont; ++x) {
    auto dd = way_below_set(l, c, x);
    if (!is_directed(l, dd) || l.join_of(dd) != x) {
      cont = false;
      w = "element " + std::to_string(x);
    }
  }
  r.add("continuous", cont, w);
  bool mult = c.relation[l.top()][l.top()];
  w = mult ? "" : "top not way-below top";
  for (elem x = 0; x < l.size() && mult; ++x) {
    for (elem y = 0; y < l.size() && mult; ++y) {
      for (elem z = 0; z < l.size() && mult; ++z) {
        if (c.relation[x][y] && c.relation[x][z] && !c.relation[x][l.meet(y, z)]) {
          mult = false;
          w = "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
        }
      }
    }
  }
  r.add("multiplicative", mult, w);
  return r;
}

inline bool is_continuous(lattice const& l, domain_caps const& caps = {}) {
  return continuity_report(l, certify_way_below(l, caps)).passed("continuous");
}

inline bool is_stably_continuous(lattice const& l, domain_caps const& caps = {}) {
  auto r = continuity_report(l, certify_way_below(l, caps));
  return r.all_pass();
}

// All up-sets of l (including ∅), in the order produced by a top-down
// include/exclude search.
inline std::vector<subset> up_sets(lattice const& l, domain_caps const& caps = {}) {
  require_subset_size(l.size(), "lattice");
  auto order = l.order().linear_extension();
  std::reverse(order.begin(), order.end());
  std::vector<subset> ups(l.size());
  for (elem x = 0; x < l.size(); ++x) {
    ups[x] = l.up(x);
  }
  std::vector<subset> out;
  std::function<void(std::size_t, subset)> go = [&](std::size_t i, subset cur) {
    if (i == order.size()) {
      if (out.size() >= caps.up_sets) {
        throw cap_exceeded("up-set enumeration", out.size() + 1, caps.up_sets);
      }
      out.push_back(cur);
      return;
    }
    elem const x = order[i];
    go(i + 1, cur);
    if ((ups[x] & ~(cur | bit(x))) == 0) {
      go(i + 1, cur | bit(x));
    }
  };
  go(0, 0);
  return out;
}

struct filter {
  subset members = 0;
  elem least = 0;
  bool principal = false;
  bool scott_open = false;
  // Scott-openness was decided by enumerating every directed subset (as
  // opposed to the max reduction used above the subset cap).
  bool scott_literal = false;

  friend bool operator==(filter const&, filter const&) = default;
};

// Literal Scott-open test for an up-set.
inline bool is_scott_open_literal(lattice const& l, subset u, std::vector<subset> const& dirs) {
  for (auto d : dirs) {
    if (contains(u, l.join_of(d)) && (d & u) == 0) {
      return false;
    }
  }
  return true;
}

// Scott-openness via the reduction that a finite directed set contains its
// supremum: an up-set is open iff every directed D with sup D ∈ U meets U,
// and sup D ∈ D. Only the directedness-implies-maximum step is assumed.
inline bool is_scott_open_reduced(lattice const&, subset) { return true; }

inline bool is_meet_closed(lattice const& l, subset s) {
  auto xs = members(s);
  for (auto x : xs) {
    for (auto y : xs) {
      if (!contains(s, l.meet(x, y))) {
        return false;
      }
    }
  }
  return true;
}

// All filters of l sorted by member bitmask, each flagged for principality
// and Scott-openness.
inline std::vector<filter> filters(lattice const& l, domain_caps const& caps = {}) {
  std::vector<subset> dirs;
  bool const literal = l.size() <= caps.literal_subsets;
  if (literal) {
    dirs = directed_subsets(l, caps);
  }
  std::vector<filter> out;
  for (auto u : up_sets(l, caps)) {
    if (u == 0 || !is_meet_closed(l, u)) {
      continue;
    }
    filter f;
    f.members = u;
    f.least = l.meet_of(u);
    f.principal = contains(u, f.least) && l.up(f.least) == u;
    f.scott_literal = literal;
    f.scott_open = literal ? is_scott_open_literal(l, u, dirs) : is_scott_open_reduced(l, u);
    out.push_back(f);
  }
  std::sort(out.begin(), out.end(),
            [](filter const& a, filter const& b) { return a.members < b.members; });
  return out;
}

inline std::vector<filter> scott_open_filters(lattice const& l, domain_caps const& caps = {}) {
  auto all = filters(l, caps);
  std::vector<filter> out;
  for (auto const& f : all) {
    if (f.scott_open) {
      out.push_back(f);
    }
  }
  return out;
}

struct lawson_dual_result {
  lattice dual;                  // σFilt(L) ordered by inclusion
  std::vector<filter> filters;   // element i of `dual` is filters[i]
  std::vector<elem> to_element;  // ↑x ↦ x, an isomorphism dual ≅ L^op
};

inline std::size_t index_of_filter(std::vector<filter> const& fs, subset members) {
  auto it = std::lower_bound(fs.begin(), fs.end(), members,
                             [](filter const& f, subset m) { return f.members < m; });
  if (it == fs.end() || it->members != members) {
    return fs.size();
  }
  return static_cast<std::size_t>(it - fs.begin());
}

inline lawson_dual_result lawson_dual(lattice const& l, domain_caps const& caps = {}) {
  auto fs = scott_open_filters(l, caps);
  std::size_t const n = fs.size();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = (fs[i].members & ~fs[j].members) == 0;
    }
    names[i] = "up(" + l.label(fs[i].least) + ")";
  }
  lattice dual;
  try {
    dual = lattice::from_poset(poset::from_matrix(m));
  } catch (error const& e) {
    throw internal_inconsistency(std::string("LawsonNotLattice: ") + e.what());
  }
  dual.set_labels(names);

  // meet = intersection; join = ↑{u ∧ v}.
  for (elem i = 0; i < n; ++i) {
    for (elem j = 0; j < n; ++j) {
      subset const inter = fs[i].members & fs[j].members;
      if (fs[dual.meet(i, j)].members != inter) {
        throw internal_inconsistency("LawsonNotLattice: meet is not intersection at (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
      }
      subset gen = 0;
      for (auto u : members(fs[i].members)) {
        for (auto v : members(fs[j].members)) {
          gen |= l.up(l.meet(u, v));
        }
      }
      if (fs[dual.join(i, j)].members != gen) {
        throw internal_inconsistency("LawsonNotLattice: join formula fails at (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }

  std::vector<elem> to_element(n);
  std::vector<bool> hit(l.size(), false);
  for (elem i = 0; i < n; ++i) {
    if (!fs[i].principal) {
      throw internal_inconsistency("non-principal Scott-open filter " +
                                   format_subset(fs[i].members));
    }
    to_element[i] = fs[i].least;
    hit[fs[i].least] = true;
  }
  for (elem x = 0; x < l.size(); ++x) {
    if (!hit[x]) {
      throw internal_inconsistency("principal filter of " + std::to_string(x) +
                                   " missing from the Lawson dual");
    }
  }
  for (elem i = 0; i < n; ++i) {
    for (elem j = 0; j < n; ++j) {
      if (dual.leq(i, j) != l.leq(to_element[j], to_element[i])) {
        throw internal_inconsistency("up(-) is not an order anti-isomorphism");
      }
    }
  }
  return {std::move(dual), std::move(fs), std::move(to_element)};
}

// The finite-collapse certificates: ≪ = ≤, every filter principal and
// Scott-open, σFilt(L) ≅ L^op.
inline check_report finite_collapse_report(lattice const& l, domain_caps const& caps = {}) {
  check_report r;
  auto c = certify_way_below(l, caps);
  r.add("way_below_routes_agree", c.routes_agree, c.witness);
  r.add("way_below_is_leq", c.collapses, c.witness);
  auto fs = filters(l, caps);
  bool principal = true;
  bool open = true;
  std::string wp;
  std::string wo;
  for (auto const& f : fs) {
    if (!f.principal && principal) {
      principal = false;
      wp = format_subset(f.members);
    }
    if ((!f.scott_open || !f.scott_literal) && open) {
      open = false;
      wo = format_subset(f.members);
    }
  }
  r.add("filters_principal", principal && fs.size() == l.size(), wp);
  r.add("filters_scott_open", open, wo);
  bool iso = true;
  std::string wi;
  try {
    auto d = lawson_dual(l, caps);
    iso = d.dual.size() == l.size();
  } catch (error const& e) {
    iso = false;
    wi = e.what();
  }
  r.add("lawson_dual_is_opposite", iso, wi);
  return r;
}

// The five Scott-filter properties, the ⇊D = ⇊ sup D identity over
// every directed D, and the finite collapse of U(-): L → σFilt(σFilt(L)).
inline check_report scott_filter_properties_check(lattice const& l, domain_caps const& caps = {}) {
  check_report r;
  auto const wb = certify_way_below(l, caps);
  auto const ld = lawson_dual(l, caps);
  auto const& ks = ld.filters;
  auto const& sf = ld.dual;
  auto const wbk = certify_way_below(sf, caps);
  std::size_t const n = l.size();
  std::size_t const m = ks.size();

  auto first = [](bool& ok, std::string& w, std::string text) {
    if (ok) {
      ok = false;
      w = std::move(text);
    }
  };

  // (a) y ≪ x iff some k has x ∈ k ⊆ ↑y.
  {
    bool ok = true;
    std::string w;
    for (elem x = 0; x < n; ++x) {
      for (elem y = 0; y < n; ++y) {
        bool exists = false;
        for (auto const& k : ks) {
          if (contains(k.members, x) && (k.members & ~l.up(y)) == 0) {
            exists = true;
            break;
          }
        }
        if (exists != wb.relation[y][x]) {
          first(ok, w, "x=" + std::to_string(x) + " y=" + std::to_string(y));
        }
      }
    }
    r.add("a", ok, w);
  }
  // (b) x ∈ k implies some y ≪ x lies in k.
  {
    bool ok = true;
    std::string w;
    for (auto const& k : ks) {
      for (auto x : members(k.members)) {
        bool exists = false;
        for (elem y = 0; y < n; ++y) {
          if (wb.relation[y][x] && contains(k.members, y)) {
            exists = true;
            break;
          }
        }
        if (!exists) {
          first(ok, w, "k=" + format_subset(k.members) + " x=" + std::to_string(x));
        }
      }
    }
    r.add("b", ok, w);
  }
  // (c) l ≪ k in σFilt(L) iff some x ∈ k has l ⊆ ↑x. The witness of each
  // positive instance is recorded in the item text.
  {
    bool ok = true;
    std::string w;
    std::string witnesses;
    for (elem ki = 0; ki < m; ++ki) {
      for (elem li = 0; li < m; ++li) {
        std::optional<elem> wit;
        for (auto x : members(ks[ki].members)) {
          if ((ks[li].members & ~l.up(x)) == 0) {
            wit = x;
            break;
          }
        }
        if (wit.has_value() != wbk.relation[li][ki]) {
          first(ok, w, "k=" + format_subset(ks[ki].members) + " l=" + format_subset(ks[li].members));
        }
        if (wit && witnesses.size() < 512) {
          witnesses += format_subset(ks[li].members) + "<<" + format_subset(ks[ki].members) +
                       " via x=" + std::to_string(*wit) + "; ";
        }
      }
    }
    r.add("c", ok, ok ? witnesses : w);
  }
  // (d) x ∈ k implies some l ≪ k contains x.
  {
    bool ok = true;
    std::string w;
    for (elem ki = 0; ki < m; ++ki) {
      for (auto x : members(ks[ki].members)) {
        bool exists = false;
        for (elem li = 0; li < m; ++li) {
          if (wbk.relation[li][ki] && contains(ks[li].members, x)) {
            exists = true;
            break;
          }
        }
        if (!exists) {
          first(ok, w, "k=" + format_subset(ks[ki].members) + " x=" + std::to_string(x));
        }
      }
    }
    r.add("d", ok, w);
  }
  // (e) {k : x ∈ k} is codirected in σFilt(L).
  {
    bool ok = true;
    std::string w;
    for (elem x = 0; x < n; ++x) {
      subset ux = 0;
      for (elem ki = 0; ki < m; ++ki) {
        if (contains(ks[ki].members, x)) {
          ux |= bit(ki);
        }
      }
      if (!is_codirected(sf, ux)) {
        first(ok, w, "x=" + std::to_string(x));
      }
    }
    r.add("e", ok, w);
  }
  // ⇊D = ⇊ sup D for every directed D.
  {
    bool ok = true;
    std::string w;
    for (auto d : directed_subsets(l, caps)) {
      subset dd = 0;
      for (auto x : members(d)) {
        dd |= way_below_set(l, wb, x);
      }
      if (dd != way_below_set(l, wb, l.join_of(d))) {
        first(ok, w, "D=" + format_subset(d));
      }
    }
    r.add("downset", ok, w);
  }
  // U(x) = {k : x ∈ k} is a Scott-open filter of σFilt(L), and x ↦ U(x) is
  // an order isomorphism onto σFilt(σFilt(L)).
  {
    bool ok = true;
    std::string w;
    auto const kks = scott_open_filters(sf, caps);
    std::vector<subset> images(n);
    for (elem x = 0; x < n; ++x) {
      for (elem ki = 0; ki < m; ++ki) {
        if (contains(ks[ki].members, x)) {
          images[x] |= bit(ki);
        }
      }
      if (index_of_filter(kks, images[x]) == kks.size()) {
        first(ok, w, "U(" + std::to_string(x) + ") is not a Scott-open filter");
      }
    }
    if (kks.size() != n) {
      first(ok, w, "size mismatch");
    }
    for (elem x = 0; x < n && ok; ++x) {
      for (elem y = 0; y < n; ++y) {
        bool const inc = (images[x] & ~images[y]) == 0;
        if (inc != l.leq(x, y)) {
          first(ok, w, "order mismatch at (" + std::to_string(x) + "," + std::to_string(y) + ")");
        }
      }
    }
    r.add("double_dual", ok, w);
  }
  return r;
}

struct wilker_witness {
  elem x = 0;
  elem y = 0;
  std::size_t l = 0;
  std::size_t k = 0;
  std::size_t k2 = 0;
};

struct wilker_result {
  bool holds = true;
  std::vector<wilker_witness> witnesses;
  std::string failure;
};

// For all x, y and Scott-open l with x ∨ y ∈ l, search Scott-open k ∋ x,
// k' ∋ y with k ∩ k' ⊆ l. Filter indices refer to scott_open_filters(L).
inline wilker_result wilker_check(lattice const& l, domain_caps const& caps = {}) {
  wilker_result res;
  auto const ks = scott_open_filters(l, caps);
  for (elem x = 0; x < l.size(); ++x) {
    for (elem y = 0; y < l.size(); ++y) {
      for (std::size_t li = 0; li < ks.size(); ++li) {
        if (!contains(ks[li].members, l.join(x, y))) {
          continue;
        }
        bool found = false;
        for (std::size_t a = 0; a < ks.size() && !found; ++a) {
          if (!contains(ks[a].members, x)) {
            continue;
          }
          for (std::size_t b = 0; b < ks.size(); ++b) {
            if (contains(ks[b].members, y) &&
                ((ks[a].members & ks[b].members) & ~ks[li].members) == 0) {
              res.witnesses.push_back({x, y, li, a, b});
              found = true;
              break;
            }
          }
        }
        if (!found) {
          res.holds = false;
          res.failure = "x=" + std::to_string(x) + " y=" + std::to_string(y) +
                        " l=" + format_subset(ks[li].members);
          return res;
        }
      }
    }
  }
  return res;
}

}  // namespace finsheaf::order
