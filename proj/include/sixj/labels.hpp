#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace sixj {

/// Edge slot of a labelled tetrahedron.  Faces are (a,b,c), (c,d,e),
/// (e,f,a), (f,d,b); opposite pairs are (a,d), (b,e), (c,f).
enum Edge : int { kA = 0, kB, kC, kD, kE, kF };

inline constexpr std::array<std::array<int, 3>, 4> kFaces{{
    {kA, kB, kC},
    {kC, kD, kE},
    {kE, kF, kA},
    {kF, kD, kB},
}};

/// Index of the edge opposite to `edge`.
constexpr int opposite(int edge) noexcept { return (edge + 3) % 6; }

struct LabelSextuple {
  std::array<std::int64_t, 6> v{};

  constexpr std::int64_t& operator[](int i) noexcept { return v[static_cast<std::size_t>(i)]; }
  constexpr std::int64_t operator[](int i) const noexcept { return v[static_cast<std::size_t>(i)]; }

  std::int64_t sum() const noexcept {
    std::int64_t s = 0;
    for (auto x : v) s += x;
    return s;
  }

  friend constexpr auto operator<=>(const LabelSextuple&, const LabelSextuple&) = default;
};

bool is_admissible_triple(std::int64_t a, std::int64_t b, std::int64_t c) noexcept;
bool is_admissible_sextuple(const LabelSextuple& labels) noexcept;

LabelSextuple scale_labels(const LabelSextuple& labels, std::int64_t k);

/// "a,b,c,d,e,f"
std::string to_string(const LabelSextuple& labels);

}  // namespace sixj
