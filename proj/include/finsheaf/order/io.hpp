#pragma once

// Text formats for posets and lattices, and DOT output of Hasse diagrams.
//
//   lattice <n>          followed by cover pairs "i<j", one per line; the
//                        reflexive-transitive closure is taken.
//   order <n>            followed by n rows of n digits 0/1, the raw order
//                        matrix (validated as-is, no closure).
//
// Blank lines and lines starting with '#' are ignored.

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "finsheaf/core.hpp"
#include "finsheaf/order/lattice.hpp"
#include "finsheaf/order/poset.hpp"

namespace finsheaf::order {

class parse_error : public error {
 public:
  parse_error(std::size_t line, std::string const& msg)
      : error("ParseError", "line " + std::to_string(line) + ": " + msg), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::vector<std::pair<std::size_t, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto const b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') {
      continue;
    }
    auto const e = line.find_last_not_of(" \t\r");
    out.emplace_back(no, line.substr(b, e - b + 1));
  }
  return out;
}

inline std::size_t parse_count(std::string const& s, std::size_t line) {
  try {
    std::size_t pos = 0;
    auto v = std::stoul(s, &pos);
    if (pos != s.size()) {
      throw parse_error(line, "expected a number, got '" + s + "'");
    }
    return v;
  } catch (std::logic_error const&) {
    throw parse_error(line, "expected a number, got '" + s + "'");
  }
}

}  // namespace detail

// Reads either format and returns the validated poset. Order-axiom failures
// are re-raised as parse errors carrying the offending kind in the message.
inline poset read_poset(std::istream& in) {
  auto lines = detail::content_lines(in);
  if (lines.empty()) {
    throw parse_error(0, "empty input");
  }
  std::istringstream head(lines[0].second);
  std::string tag;
  std::string count;
  head >> tag >> count;
  std::size_t const hl = lines[0].first;
  if (tag != "lattice" && tag != "order" && tag != "poset") {
    throw parse_error(hl, "expected 'lattice <n>', 'poset <n>' or 'order <n>'");
  }
  std::size_t const n = detail::parse_count(count, hl);
  try {
    if (tag == "order") {
      if (lines.size() != n + 1) {
        throw parse_error(hl, "expected " + std::to_string(n) + " matrix rows");
      }
      std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
      for (std::size_t i = 0; i < n; ++i) {
        auto const& [no, row] = lines[i + 1];
        std::string digits;
        for (char c : row) {
          if (c == '0' || c == '1') {
            digits.push_back(c);
          } else if (c != ' ') {
            throw parse_error(no, "unexpected character in matrix row");
          }
        }
        if (digits.size() != n) {
          throw parse_error(no, "row has " + std::to_string(digits.size()) + " entries");
        }
        for (std::size_t j = 0; j < n; ++j) {
          m[i][j] = digits[j] == '1';
        }
      }
      return poset::from_matrix(m);
    }
    std::vector<std::pair<elem, elem>> lt;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      auto const& [no, text] = lines[i];
      auto const pos = text.find('<');
      if (pos == std::string::npos) {
        throw parse_error(no, "expected 'i<j'");
      }
      auto a = detail::parse_count(text.substr(0, pos), no);
      auto b = detail::parse_count(text.substr(pos + 1), no);
      if (a >= n || b >= n) {
        throw parse_error(no, "element out of range");
      }
      lt.emplace_back(static_cast<elem>(a), static_cast<elem>(b));
    }
    return poset::from_relations(n, lt);
  } catch (poset_error const& e) {
    throw parse_error(hl, e.what());
  }
}

inline lattice read_lattice(std::istream& in) {
  return lattice::from_poset(read_poset(in));
}

inline lattice read_lattice_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw error("IOError", "cannot open " + path);
  }
  return read_lattice(in);
}

inline poset read_poset_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw error("IOError", "cannot open " + path);
  }
  return read_poset(in);
}

inline std::string write_lattice(poset const& p) {
  std::ostringstream os;
  os << "lattice " << p.size() << '\n';
  for (auto [a, b] : p.cover_pairs()) {
    os << a << '<' << b << '\n';
  }
  return os.str();
}

// Hasse diagram: covers only, nodes grouped into ranks by height.
inline std::string to_dot(poset const& p, std::vector<std::string> const& labels = {},
                          std::string const& name = "hasse") {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n";
  auto h = p.heights();
  std::size_t maxh = 0;
  for (auto x : h) {
    maxh = std::max(maxh, x);
  }
  for (std::size_t r = 0; r <= maxh && p.size() > 0; ++r) {
    os << "  { rank=same;";
    for (elem x = 0; x < p.size(); ++x) {
      if (h[x] == r) {
        os << ' ' << x << ';';
      }
    }
    os << " }\n";
  }
  for (elem x = 0; x < p.size(); ++x) {
    os << "  " << x << " [label=\"" << (x < labels.size() ? labels[x] : std::to_string(x))
       << "\"];\n";
  }
  for (auto [a, b] : p.cover_pairs()) {
    os << "  " << a << " -> " << b << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace finsheaf::order
