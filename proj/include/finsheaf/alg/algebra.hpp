#pragma once

// Finite algebras over a finitary signature, given by operation tables, and
// the homomorphisms between them.

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <istream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "finsheaf/core.hpp"

namespace finsheaf::alg {

struct operation {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(operation const&, operation const&) = default;
};

class signature {
 public:
  signature() = default;

  explicit signature(std::vector<operation> ops) : ops_(std::move(ops)) {
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      for (std::size_t j = i + 1; j < ops_.size(); ++j) {
        if (ops_[i].name == ops_[j].name) {
          throw error("DuplicateOperation", "operation '" + ops_[i].name + "' declared twice");
        }
      }
    }
  }

  std::vector<operation> const& ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }
  operation const& operator[](std::size_t i) const { return ops_[i]; }

  bool has_constants() const {
    return std::any_of(ops_.begin(), ops_.end(), [](operation const& o) { return o.arity == 0; });
  }

  std::size_t index_of(std::string const& name) const {
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      if (ops_[i].name == name) {
        return i;
      }
    }
    throw error("UnknownOperation", "no operation named '" + name + "'");
  }

  friend bool operator==(signature const&, signature const&) = default;

 private:
  std::vector<operation> ops_;
};

inline signature group_signature() { return signature({{"mul", 2}, {"inv", 1}, {"e", 0}}); }
inline signature semilattice_signature() { return signature({{"meet", 2}}); }
inline signature ring_signature() {
  return signature({{"add", 2}, {"mul", 2}, {"neg", 1}, {"zero", 0}, {"one", 0}});
}

inline std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    r *= b;
  }
  return r;
}

// Tables are row-major: for an operation of arity k the entry for
// (a_0, ..., a_{k-1}) sits at index a_0 n^{k-1} + ... + a_{k-1}.
class algebra {
 public:
  algebra() = default;

  algebra(signature sig, std::size_t n, std::vector<std::vector<elem>> tables,
          std::string name = {})
      : sig_(std::move(sig)), n_(n), tables_(std::move(tables)), name_(std::move(name)) {
    if (tables_.size() != sig_.size()) {
      throw error("BadTable", "expected " + std::to_string(sig_.size()) + " tables, got " +
                                  std::to_string(tables_.size()));
    }
    if (n_ == 0 && sig_.has_constants()) {
      throw error("EmptyWithConstants", "the empty carrier is only allowed without constants");
    }
    for (std::size_t i = 0; i < sig_.size(); ++i) {
      if (tables_[i].size() != ipow(n_, sig_[i].arity)) {
        throw error("BadTable", "table of '" + sig_[i].name + "' has wrong size");
      }
      for (auto v : tables_[i]) {
        if (v >= n_) {
          throw error("BadTable", "table of '" + sig_[i].name + "' has an entry out of range");
        }
      }
    }
  }

  signature const& sig() const noexcept { return sig_; }
  std::size_t size() const noexcept { return n_; }
  std::vector<elem> const& table(std::size_t op) const { return tables_[op]; }
  std::vector<std::vector<elem>> const& tables() const noexcept { return tables_; }
  std::string const& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  elem apply(std::size_t op, elem const* args) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < sig_[op].arity; ++i) {
      idx = idx * n_ + args[i];
    }
    return tables_[op][idx];
  }

  elem apply(std::size_t op, std::vector<elem> const& args) const { return apply(op, args.data()); }

  elem constant(std::size_t op) const { return tables_[op][0]; }

  // Same structure; names are ignored.
  friend bool operator==(algebra const& a, algebra const& b) {
    return a.sig_ == b.sig_ && a.n_ == b.n_ && a.tables_ == b.tables_;
  }

 private:
  signature sig_;
  std::size_t n_ = 0;
  std::vector<std::vector<elem>> tables_;
  std::string name_;
};

using algebra_ref = std::shared_ptr<algebra const>;

inline algebra_ref share(algebra a) { return std::make_shared<algebra const>(std::move(a)); }

// Calls f(args) for every argument tuple of the given arity.
template <typename F>
void for_each_tuple(std::size_t n, std::size_t arity, F&& f) {
  std::vector<elem> args(arity, 0);
  std::size_t const total = ipow(n, arity);
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t r = t;
    for (std::size_t i = arity; i-- > 0;) {
      args[i] = static_cast<elem>(r % n);
      r /= n;
    }
    f(args);
  }
}

// A map dom → cod commuting with every operation; constructed only through
// make_homomorphism, which validates it.
struct homomorphism {
  algebra_ref dom;
  algebra_ref cod;
  std::vector<elem> map;

  elem operator()(elem x) const { return map[x]; }

  bool surjective() const {
    std::vector<bool> hit(cod->size(), false);
    for (auto y : map) {
      hit[y] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  bool injective() const {
    std::vector<bool> hit(cod->size(), false);
    for (auto y : map) {
      if (hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    return true;
  }

  bool bijective() const { return injective() && surjective(); }
};

// First operation (by index) and argument tuple where the map fails to
// commute, if any.
inline std::optional<std::string> homomorphism_failure(algebra const& dom, algebra const& cod,
                                                       std::vector<elem> const& map) {
  if (!(dom.sig() == cod.sig())) {
    return "signatures differ";
  }
  if (map.size() != dom.size()) {
    return "map has wrong length";
  }
  for (auto y : map) {
    if (y >= cod.size()) {
      return "map value out of range";
    }
  }
  for (std::size_t op = 0; op < dom.sig().size(); ++op) {
    std::size_t const k = dom.sig()[op].arity;
    std::optional<std::string> bad;
    std::vector<elem> image(k);
    for_each_tuple(dom.size(), k, [&](std::vector<elem> const& args) {
      if (bad) {
        return;
      }
      for (std::size_t i = 0; i < k; ++i) {
        image[i] = map[args[i]];
      }
      if (map[dom.apply(op, args)] != cod.apply(op, image)) {
        bad = "operation '" + dom.sig()[op].name + "' at " + format_list(args);
      }
    });
    if (bad) {
      return bad;
    }
  }
  return std::nullopt;
}

inline homomorphism make_homomorphism(algebra_ref dom, algebra_ref cod, std::vector<elem> map) {
  if (auto bad = homomorphism_failure(*dom, *cod, map)) {
    throw error("NotHomomorphism", *bad);
  }
  return {std::move(dom), std::move(cod), std::move(map)};
}

inline homomorphism identity_hom(algebra_ref a) {
  std::vector<elem> m(a->size());
  for (elem i = 0; i < a->size(); ++i) {
    m[i] = i;
  }
  return {a, a, std::move(m)};
}

// g ∘ f
inline homomorphism compose(homomorphism const& g, homomorphism const& f) {
  if (!(*f.cod == *g.dom)) {
    throw error("AlgebraMismatch", "composition of non-composable homomorphisms");
  }
  std::vector<elem> m(f.map.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    m[i] = g.map[f.map[i]];
  }
  return {f.dom, g.cod, std::move(m)};
}

// Built-in algebras.
namespace algebras {

inline algebra set(std::size_t n) { return algebra(signature{}, n, {}, "set" + std::to_string(n)); }

inline algebra trivial(signature const& sig) {
  std::vector<std::vector<elem>> tables;
  for (auto const& op : sig.ops()) {
    tables.emplace_back(1, 0);
    (void)op;
  }
  return algebra(sig, 1, std::move(tables), "trivial");
}

// Group with the given Cayley table (identity must be element 0).
inline algebra group_from_table(std::vector<std::vector<elem>> const& mul, std::string name) {
  std::size_t const n = mul.size();
  std::vector<elem> m(n * n);
  std::vector<elem> inv(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      m[a * n + b] = mul[a][b];
      if (mul[a][b] == 0) {
        inv[a] = static_cast<elem>(b);
      }
    }
  }
  return algebra(group_signature(), n, {m, inv, {0}}, std::move(name));
}

inline algebra cyclic_group(std::size_t n) {
  std::vector<std::vector<elem>> mul(n, std::vector<elem>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      mul[a][b] = static_cast<elem>((a + b) % n);
    }
  }
  return group_from_table(mul, "Z" + std::to_string(n));
}

// Direct product with pairs (a, b) indexed a * |B| + b.
inline algebra product(algebra const& a, algebra const& b) {
  if (!(a.sig() == b.sig())) {
    throw error("AlgebraMismatch", "product of algebras with different signatures");
  }
  std::size_t const n = a.size() * b.size();
  std::vector<std::vector<elem>> tables;
  for (std::size_t op = 0; op < a.sig().size(); ++op) {
    std::size_t const k = a.sig()[op].arity;
    std::vector<elem> t(ipow(n, k));
    std::vector<elem> xa(k);
    std::vector<elem> xb(k);
    std::size_t idx = 0;
    for_each_tuple(n, k, [&](std::vector<elem> const& args) {
      for (std::size_t i = 0; i < k; ++i) {
        xa[i] = static_cast<elem>(args[i] / b.size());
        xb[i] = static_cast<elem>(args[i] % b.size());
      }
      t[idx++] = static_cast<elem>(a.apply(op, xa) * b.size() + b.apply(op, xb));
    });
    tables.push_back(std::move(t));
  }
  return algebra(a.sig(), n, std::move(tables), a.name() + "x" + b.name());
}

// Group of permutations given as images; element 0 must be the identity.
inline algebra permutation_group(std::vector<std::vector<elem>> const& perms, std::string name) {
  std::size_t const n = perms.size();
  std::vector<std::vector<elem>> mul(n, std::vector<elem>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<elem> c(perms[a].size());
      for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = perms[a][perms[b][i]];
      }
      auto it = std::find(perms.begin(), perms.end(), c);
      if (it == perms.end()) {
        throw error("BadTable", "permutation set not closed");
      }
      mul[a][b] = static_cast<elem>(it - perms.begin());
    }
  }
  return group_from_table(mul, std::move(name));
}

inline algebra symmetric_group3() {
  return permutation_group(
      {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}}, "S3");
}

// Symmetries of the square acting on its corners 0..3.
inline algebra dihedral_group4() {
  return permutation_group({{0, 1, 2, 3},
                            {1, 2, 3, 0},
                            {2, 3, 0, 1},
                            {3, 0, 1, 2},
                            {1, 0, 3, 2},
                            {3, 2, 1, 0},
                            {0, 3, 2, 1},
                            {2, 1, 0, 3}},
                           "D4");
}

// Quaternion group: elements ±1, ±i, ±j, ±k as 0..7 = 1,-1,i,-i,j,-j,k,-k.
inline algebra quaternion_group() {
  // Unit products of the basis 1,i,j,k as (sign, unit).
  int const sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  int const unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::vector<elem>> mul(8, std::vector<elem>(8));
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      int const ua = a / 2;
      int const ub = b / 2;
      int s = sign[ua][ub] * ((a % 2) ? -1 : 1) * ((b % 2) ? -1 : 1);
      int const u = unit[ua][ub];
      mul[a][b] = static_cast<elem>(2 * u + (s < 0 ? 1 : 0));
    }
  }
  return group_from_table(mul, "Q8");
}

// Meet-semilattice on the chain 0 < 1 < ... < n-1.
inline algebra chain_semilattice(std::size_t n) {
  std::vector<elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t[a * n + b] = static_cast<elem>(std::min(a, b));
    }
  }
  return algebra(semilattice_signature(), n, {t}, "semilattice" + std::to_string(n));
}

inline algebra semilattice2() { return chain_semilattice(2); }

inline algebra z2xz2() {
  auto a = product(cyclic_group(2), cyclic_group(2));
  a.set_name("Z2xZ2");
  return a;
}

// Every group of order at most 8 up to isomorphism.
inline std::vector<algebra> groups_up_to_8() {
  std::vector<algebra> out;
  for (std::size_t n = 1; n <= 8; ++n) {
    out.push_back(cyclic_group(n));
  }
  out.push_back(z2xz2());
  out.push_back(symmetric_group3());
  auto z2z4 = product(cyclic_group(2), cyclic_group(4));
  z2z4.set_name("Z2xZ4");
  out.push_back(z2z4);
  auto z2cubed = product(z2xz2(), cyclic_group(2));
  z2cubed.set_name("Z2xZ2xZ2");
  out.push_back(z2cubed);
  out.push_back(dihedral_group4());
  out.push_back(quaternion_group());
  return out;
}

}  // namespace algebras

// Text format:
//   algebra <n>
//   sig <name>/<arity> ...      (may be omitted for the empty signature)
//   one table per operation, row-major, whitespace separated
inline algebra read_algebra(std::istream& in, std::string name = {}) {
  std::vector<std::string> tokens;
  std::vector<std::size_t> lines;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto const hash = line.find('#');
    if (hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      tokens.push_back(tok);
      lines.push_back(no);
    }
  }
  auto fail = [&](std::size_t i, std::string const& msg) -> error {
    return error("ParseError", "line " + std::to_string(i < lines.size() ? lines[i] : no) + ": " + msg);
  };
  std::size_t pos = 0;
  if (tokens.size() < 2 || tokens[0] != "algebra") {
    throw fail(0, "expected 'algebra <n>'");
  }
  std::size_t n = 0;
  try {
    n = std::stoul(tokens[1]);
  } catch (std::logic_error const&) {
    throw fail(1, "bad carrier size");
  }
  pos = 2;
  std::vector<operation> ops;
  if (pos < tokens.size() && tokens[pos] == "sig") {
    std::size_t const sig_line = lines[pos];
    ++pos;
    while (pos < tokens.size() && lines[pos] == sig_line) {
      auto const slash = tokens[pos].find('/');
      if (slash == std::string::npos) {
        throw fail(pos, "expected <name>/<arity>");
      }
      try {
        ops.push_back({tokens[pos].substr(0, slash), std::stoul(tokens[pos].substr(slash + 1))});
      } catch (std::logic_error const&) {
        throw fail(pos, "bad arity");
      }
      ++pos;
    }
  }
  signature sig(ops);
  std::vector<std::vector<elem>> tables;
  for (auto const& op : sig.ops()) {
    std::size_t const len = ipow(n, op.arity);
    std::vector<elem> t;
    for (std::size_t i = 0; i < len; ++i, ++pos) {
      if (pos >= tokens.size()) {
        throw fail(pos, "table of '" + op.name + "' is truncated");
      }
      try {
        t.push_back(static_cast<elem>(std::stoul(tokens[pos])));
      } catch (std::logic_error const&) {
        throw fail(pos, "bad table entry '" + tokens[pos] + "'");
      }
    }
    tables.push_back(std::move(t));
  }
  if (pos != tokens.size()) {
    throw fail(pos, "trailing tokens after the last table");
  }
  try {
    return algebra(sig, n, std::move(tables), std::move(name));
  } catch (error const& e) {
    throw error("ParseError", std::string("invalid algebra: ") + e.what());
  }
}

inline algebra read_algebra_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw error("IOError", "cannot open " + path);
  }
  return read_algebra(in, path);
}

inline std::string write_algebra(algebra const& a) {
  std::ostringstream os;
  os << "algebra " << a.size() << '\n';
  if (a.sig().size() > 0) {
    os << "sig";
    for (auto const& op : a.sig().ops()) {
      os << ' ' << op.name << '/' << op.arity;
    }
    os << '\n';
  }
  for (std::size_t op = 0; op < a.sig().size(); ++op) {
    auto const& t = a.table(op);
    std::size_t const row = a.sig()[op].arity == 0 ? 1 : a.size();
    for (std::size_t i = 0; i < t.size(); ++i) {
      os << t[i] << ((i + 1) % row == 0 ? '\n' : ' ');
    }
  }
  return os.str();
}

}  // namespace finsheaf::alg
