#pragma once

// Enumeration of monotone maps between finite lattices, optionally
// restricted to maps preserving finite infima and/or suprema.

#include <algorithm>
#include <functional>
#include <vector>

#include "finsheaf/core.hpp"
#include "finsheaf/order/lattice.hpp"

namespace finsheaf::order {

struct preservation {
  bool finite_infima = false;      // binary meets and the top (empty infimum)
  bool arbitrary_suprema = false;  // binary joins and the bottom (empty supremum)
  bool nonempty_suprema = false;   // binary joins only
};

struct monotone_map {
  std::vector<elem> val;
  bool contravariant = false;

  friend bool operator==(monotone_map const&, monotone_map const&) = default;
};

namespace detail {

struct map_constraint {
  enum kind_t { le, meet, join, fixed } kind;
  elem a = 0;
  elem b = 0;
  elem c = 0;  // meet/join target, or fixed value
};

}  // namespace detail

// Calls `visit` for every monotone map dom → cod (dom read as P^op when
// contravariant) satisfying the flags, in lexicographic order of value
// arrays. Preservation is stated for the effective domain. Returns the
// number of maps visited; `visit` may return false to stop early.
inline std::size_t for_each_monotone_map(lattice const& p, lattice const& q, preservation flags,
                                         bool contravariant,
                                         std::function<bool(std::vector<elem> const&)> const& visit) {
  lattice const d = contravariant ? p.opposite() : p;
  std::size_t const n = d.size();
  std::vector<std::vector<detail::map_constraint>> at(n);
  auto add = [&](detail::map_constraint c, elem last) { at[last].push_back(c); };
  for (elem a = 0; a < n; ++a) {
    for (elem b = 0; b < n; ++b) {
      if (a != b && d.leq(a, b)) {
        add({detail::map_constraint::le, a, b, 0}, std::max(a, b));
      }
    }
  }
  bool const joins = flags.arbitrary_suprema || flags.nonempty_suprema;
  for (elem a = 0; a < n; ++a) {
    for (elem b = a + 1; b < n; ++b) {
      if (flags.finite_infima) {
        elem const m = d.meet(a, b);
        add({detail::map_constraint::meet, a, b, m}, std::max({a, b, m}));
      }
      if (joins) {
        elem const j = d.join(a, b);
        add({detail::map_constraint::join, a, b, j}, std::max({a, b, j}));
      }
    }
  }
  if (flags.finite_infima && n > 0) {
    add({detail::map_constraint::fixed, d.top(), 0, q.top()}, d.top());
  }
  if (flags.arbitrary_suprema && n > 0) {
    add({detail::map_constraint::fixed, d.bot(), 0, q.bot()}, d.bot());
  }

  std::vector<elem> val(n, 0);
  std::size_t count = 0;
  bool stop = false;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (stop) {
      return;
    }
    if (i == n) {
      ++count;
      if (!visit(val)) {
        stop = true;
      }
      return;
    }
    for (elem v = 0; v < q.size() && !stop; ++v) {
      val[i] = v;
      bool ok = true;
      for (auto const& c : at[i]) {
        switch (c.kind) {
          case detail::map_constraint::le: ok = q.leq(val[c.a], val[c.b]); break;
          case detail::map_constraint::meet: ok = val[c.c] == q.meet(val[c.a], val[c.b]); break;
          case detail::map_constraint::join: ok = val[c.c] == q.join(val[c.a], val[c.b]); break;
          case detail::map_constraint::fixed: ok = val[c.a] == c.c; break;
        }
        if (!ok) {
          break;
        }
      }
      if (ok) {
        go(i + 1);
      }
    }
  };
  go(0);
  return count;
}

inline std::vector<monotone_map> enumerate_monotone_maps(lattice const& p, lattice const& q,
                                                         preservation flags = {},
                                                         bool contravariant = false,
                                                         std::size_t cap = 5'000'000) {
  std::vector<monotone_map> out;
  for_each_monotone_map(p, q, flags, contravariant, [&](std::vector<elem> const& v) {
    if (out.size() >= cap) {
      throw cap_exceeded("monotone map enumeration", out.size() + 1, cap);
    }
    out.push_back({v, contravariant});
    return true;
  });
  return out;
}

}  // namespace finsheaf::order
