#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string_view>

namespace cpvi {

/// The fixed symbol set. The declaration order is the canonical variable
/// order used for lexicographic monomial comparison.
enum class Gen : std::uint8_t { x, y, z, w, t, a0, a1, a2, a3, a4 };

inline constexpr std::size_t kNumGens = 10;

inline constexpr std::array<Gen, kNumGens> kAllGens = {
    Gen::x, Gen::y, Gen::z, Gen::w, Gen::t, Gen::a0, Gen::a1, Gen::a2, Gen::a3, Gen::a4};

inline constexpr std::array<Gen, 4> kPhaseGens = {Gen::x, Gen::y, Gen::z, Gen::w};

inline constexpr std::array<Gen, 5> kParamGens = {Gen::a0, Gen::a1, Gen::a2, Gen::a3, Gen::a4};

constexpr std::size_t index(Gen g) { return static_cast<std::size_t>(g); }

constexpr Gen param_gen(std::size_t i) { return static_cast<Gen>(index(Gen::a0) + i); }

std::string_view name(Gen g);
std::optional<Gen> gen_from_name(std::string_view s);

/// Small bit set over generators.
class GenSet {
 public:
  constexpr GenSet() = default;
  constexpr GenSet(std::initializer_list<Gen> gens) {
    for (Gen g : gens) bits_ |= bit(g);
  }
  template <std::size_t N>
  constexpr explicit GenSet(const std::array<Gen, N>& gens) {
    for (Gen g : gens) bits_ |= bit(g);
  }
  constexpr bool contains(Gen g) const { return (bits_ & bit(g)) != 0; }
  constexpr GenSet& insert(Gen g) {
    bits_ |= bit(g);
    return *this;
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool operator==(const GenSet&) const = default;

 private:
  static constexpr std::uint16_t bit(Gen g) { return static_cast<std::uint16_t>(1u << index(g)); }
  std::uint16_t bits_ = 0;
};

}  // namespace cpvi
