#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace nilrs {

/// The fixed symbol universe. Declaration order is the canonical rendering
/// order used by the graded-lexicographic term ordering.
enum class Symbol : std::uint8_t {
  x, y, z, w,
  lambda, mu, a, b, c, a1, a2, a3,
  C1, C2, C3, C4, C5, C6, C7, C8, C9, C10,
  alpha,
  f1, f2, f3, f4,
};

inline constexpr std::size_t kSymbolCount = 27;
inline constexpr std::size_t kCoordinateCount = 4;

inline constexpr std::array<std::string_view, kSymbolCount> kSymbolNames = {
    "x",  "y",  "z",  "w",  "lambda", "mu", "a",  "b",  "c",
    "a1", "a2", "a3", "C1", "C2",     "C3", "C4", "C5", "C6",
    "C7", "C8", "C9", "C10", "alpha", "f1", "f2", "f3", "f4"};

inline constexpr std::array<Symbol, 4> kCoordinates = {Symbol::x, Symbol::y, Symbol::z, Symbol::w};

constexpr std::size_t index_of(Symbol s) { return static_cast<std::size_t>(s); }

constexpr bool is_coordinate(Symbol s) { return index_of(s) < kCoordinateCount; }

constexpr Symbol coordinate(std::size_t i) { return static_cast<Symbol>(i); }

constexpr Symbol free_constant(int k) {
  return static_cast<Symbol>(index_of(Symbol::C1) + static_cast<std::size_t>(k - 1));
}

constexpr bool is_free_constant(Symbol s) {
  return index_of(s) >= index_of(Symbol::C1) && index_of(s) <= index_of(Symbol::C10);
}

inline std::string_view name(Symbol s) { return kSymbolNames[index_of(s)]; }

/// Accepts the ASCII names plus the Greek spellings λ, μ, α.
inline std::optional<Symbol> symbol_from_name(std::string_view text) {
  if (text == "λ") return Symbol::lambda;
  if (text == "μ") return Symbol::mu;
  if (text == "α") return Symbol::alpha;
  for (std::size_t i = 0; i < kSymbolCount; ++i) {
    if (kSymbolNames[i] == text) return static_cast<Symbol>(i);
  }
  return std::nullopt;
}

}  // namespace nilrs
