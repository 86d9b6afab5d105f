#pragma once

// Shared vocabulary: element indices, bitmask subsets, the exception
// hierarchy and the small pass/fail report used by every checker.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace finsheaf {

using elem = std::uint32_t;

// Subsets of a structure with at most 64 elements.
using subset = std::uint64_t;

inline constexpr std::size_t max_subset_size = 64;

inline constexpr subset bit(std::size_t i) { return subset{1} << i; }

inline constexpr bool contains(subset s, std::size_t i) { return (s >> i) & 1U; }

inline constexpr subset full_subset(std::size_t n) {
  return n >= 64 ? ~subset{0} : (bit(n) - 1);
}

inline int popcount(subset s) { return std::popcount(s); }

inline std::vector<elem> members(subset s) {
  std::vector<elem> out;
  while (s != 0) {
    out.push_back(static_cast<elem>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

inline std::string format_subset(subset s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto x : members(s)) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << '}';
  return os.str();
}

template <typename Range>
std::string format_list(Range const& r) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (auto const& x : r) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << ']';
  return os.str();
}

// Base of all library errors. `kind()` is a stable identifier used by the CLI
// and by tests; `what()` carries the human readable message with witnesses.
class error : public std::runtime_error {
 public:
  error(std::string kind, std::string const& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  std::string const& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Raised when an input exceeds a configured enumeration cap.
class cap_exceeded : public error {
 public:
  cap_exceeded(std::string const& what_, std::size_t value, std::size_t cap)
      : error("CapExceeded", what_ + " has size " + std::to_string(value) +
                                 " above cap " + std::to_string(cap)) {}
};

// A library-level consistency assertion failed: two routes that must agree
// did not. Never expected; surfaced with the disagreement payload.
class internal_inconsistency : public error {
 public:
  explicit internal_inconsistency(std::string const& msg)
      : error("InternalInconsistency", msg) {}
};

inline void require_subset_size(std::size_t n, char const* what) {
  if (n > max_subset_size) {
    throw cap_exceeded(what, n, max_subset_size);
  }
}

// One named check with its outcome and, on failure, the first witness.
struct check_item {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct check_report {
  std::vector<check_item> items;

  void add(std::string name, bool pass, std::string witness = {}) {
    items.push_back({std::move(name), pass, std::move(witness)});
  }

  bool all_pass() const {
    for (auto const& it : items) {
      if (!it.pass) {
        return false;
      }
    }
    return true;
  }

  check_item const* find(std::string const& name) const {
    for (auto const& it : items) {
      if (it.name == name) {
        return &it;
      }
    }
    return nullptr;
  }

  bool passed(std::string const& name) const {
    auto const* it = find(name);
    return it != nullptr && it->pass;
  }
};

}  // namespace finsheaf
