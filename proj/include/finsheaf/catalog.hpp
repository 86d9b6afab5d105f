#pragma once

// Named lattices, algebras and rings shared by the CLI, the acceptance run
// and the tests, plus the deterministic corpus listing.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "finsheaf/alg/algebra.hpp"
#include "finsheaf/core.hpp"
#include "finsheaf/order/enumerate.hpp"
#include "finsheaf/order/lattice.hpp"

namespace finsheaf::catalog {

using named_lattice = std::pair<std::string, order::lattice>;
using named_algebra = std::pair<std::string, alg::algebra_ref>;

// Chains with 1..5 elements (length ≤ 4), the 2×2 Boolean lattice, N5, M3.
inline std::vector<named_lattice> base_lattices() {
  namespace L = order::lattices;
  return {{"chain1", L::chain(1)}, {"chain2", L::chain(2)}, {"chain3", L::chain(3)},
          {"chain4", L::chain(4)}, {"chain5", L::chain(5)}, {"bool4", L::bool4()},
          {"n5", L::n5()},         {"m3", L::m3()}};
}

inline std::vector<named_algebra> base_algebras() {
  namespace A = alg::algebras;
  return {{"set3", alg::share(A::set(3))},
          {"Z4", alg::share(A::cyclic_group(4))},
          {"Z2xZ2", alg::share(A::z2xz2())},
          {"semilattice2", alg::share(A::semilattice2())}};
}

inline order::lattice lattice_by_name(std::string const& name) {
  for (auto& [n, l] : base_lattices()) {
    if (n == name) {
      return l;
    }
  }
  if (name.rfind("boolean", 0) == 0) {
    return order::lattices::boolean(std::stoul(name.substr(7)));
  }
  throw error("UnknownLattice", "no built-in lattice named '" + name + "'");
}

inline alg::algebra_ref algebra_by_name(std::string const& name) {
  for (auto& [n, a] : base_algebras()) {
    if (n == name) {
      return a;
    }
  }
  for (auto& g : alg::algebras::groups_up_to_8()) {
    if (g.name() == name) {
      return alg::share(g);
    }
  }
  if (name.rfind("set", 0) == 0) {
    return alg::share(alg::algebras::set(std::stoul(name.substr(3))));
  }
  throw error("UnknownAlgebra", "no built-in algebra named '" + name + "'");
}

struct corpus_caps {
  std::size_t lattice_size = 6;
  std::size_t points = 5;
  std::size_t ring_size = 60;
};

struct corpus {
  std::uint64_t seed = 0;
  std::vector<std::vector<order::lattice>> lattices;  // index = size
  std::vector<std::size_t> t0_spaces;                 // count per point number
  std::vector<std::string> algebras;
  std::vector<std::string> rings;
  // Seed-driven sample of (algebra, lattice) pairs for spot checks.
  std::vector<std::pair<std::string, std::string>> sample;
};

inline corpus generate_corpus(std::uint64_t seed, corpus_caps const& caps = {}) {
  corpus c;
  c.seed = seed;
  c.lattices.resize(caps.lattice_size + 1);
  for (std::size_t n = 1; n <= caps.lattice_size; ++n) {
    c.lattices[n] = order::lattices_up_to_iso(n);
  }
  for (std::size_t n = 0; n <= caps.points; ++n) {
    c.t0_spaces.push_back(order::labeled_posets(n).size());
  }
  for (auto& [n, a] : base_algebras()) {
    c.algebras.push_back(n);
  }
  for (auto& g : alg::algebras::groups_up_to_8()) {
    if (std::find(c.algebras.begin(), c.algebras.end(), g.name()) == c.algebras.end()) {
      c.algebras.push_back(g.name());
    }
  }
  for (std::size_t n = 1; n <= caps.ring_size; ++n) {
    c.rings.push_back("zn:" + std::to_string(n));
  }
  auto const ls = base_lattices();
  auto const as = base_algebras();
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 8; ++i) {
    auto const a = rng() % as.size();
    auto const l = rng() % ls.size();
    c.sample.emplace_back(as[a].first, ls[l].first);
  }
  return c;
}

}  // namespace finsheaf::catalog
