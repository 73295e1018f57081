#pragma once

#include <stdexcept>
#include <string>

namespace bilat {

enum class Sort : int { S1 = 1, S2 = 2 };

inline int sort_index(Sort s) { return s == Sort::S1 ? 1 : 2; }
inline Sort other_sort(Sort s) { return s == Sort::S1 ? Sort::S2 : Sort::S1; }

struct SyntaxError : std::runtime_error {
  std::size_t position;
  SyntaxError(std::size_t pos, const std::string& what)
      : std::runtime_error("syntax error at " + std::to_string(pos) + ": " + what),
        position(pos) {}
};

// Same-tier distinct operators chained without parentheses.
struct MixedTierError : SyntaxError {
  MixedTierError(std::size_t pos, const std::string& what) : SyntaxError(pos, what) {}
};

struct SortError : std::runtime_error {
  explicit SortError(const std::string& what) : std::runtime_error("sort error: " + what) {}
};

struct UnboundAtom : std::runtime_error {
  explicit UnboundAtom(const std::string& name)
      : std::runtime_error("unbound atom: " + name) {}
};

}  // namespace bilat
