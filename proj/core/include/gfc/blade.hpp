#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gfc {

// A basis blade e_{i1} ∧ ... ∧ e_{ik}, i1 < ... < ik, stored as the set of its
// generator indices. Bit (i - 1) is set iff e_i is a factor. The blade itself
// never carries a sign: reordering signs live in the coefficient.
class Blade {
 public:
  constexpr Blade() = default;
  constexpr explicit Blade(std::uint32_t mask) : mask_(static_cast<std::uint16_t>(mask)) {}

  // e_index, index is 1-based. Throws DomainError outside 1..16.
  static Blade generator(int index);
  // Canonical blade for a set of distinct 1-based indices given in any order.
  // Throws DomainError on repeated or out-of-range indices.
  static Blade from_indices(std::span<const int> indices);
  // e_1 ∧ ... ∧ e_dim.
  static constexpr Blade full(int dim) { return Blade((1u << dim) - 1u); }

  constexpr std::uint32_t mask() const noexcept { return mask_; }
  constexpr int grade() const noexcept { return std::popcount(static_cast<unsigned>(mask_)); }
  constexpr bool is_scalar() const noexcept { return mask_ == 0; }
  constexpr bool contains(int index) const noexcept { return (mask_ >> (index - 1)) & 1u; }
  constexpr bool disjoint(Blade o) const noexcept { return (mask_ & o.mask_) == 0; }
  // True iff every generator index lies in 1..dim.
  constexpr bool fits(int dim) const noexcept { return (std::uint32_t{mask_} >> dim) == 0; }

  // Ascending 1-based generator indices.
  std::vector<int> indices() const;

  friend constexpr Blade operator|(Blade a, Blade b) { return Blade(a.mask_ | b.mask_); }
  friend constexpr Blade operator&(Blade a, Blade b) { return Blade(a.mask_ & b.mask_); }
  friend constexpr Blade operator^(Blade a, Blade b) { return Blade(a.mask_ ^ b.mask_); }

  friend constexpr auto operator<=>(Blade, Blade) = default;

 private:
  std::uint16_t mask_ = 0;
};

// Number of transpositions needed to sort the concatenated word (a, b) into
// ascending order, i.e. the count of pairs i ∈ a, j ∈ b with i > j.
constexpr int merge_inversions(Blade a, Blade b) noexcept {
  int count = 0;
  std::uint32_t high = a.mask() >> 1;
  const std::uint32_t low = b.mask();
  while (high != 0) {
    count += std::popcount(high & low);
    high >>= 1;
  }
  return count;
}

// e_a ∧ e_b = merge_sign(a, b) · e_{a ∪ b} for disjoint a, b.
constexpr int merge_sign(Blade a, Blade b) noexcept { return (merge_inversions(a, b) & 1) ? -1 : 1; }

// (-1)^{ra · rb}, the Koszul sign of the graded switch.
constexpr int koszul_sign(int grade_a, int grade_b) noexcept {
  return ((grade_a & grade_b) & 1) ? -1 : 1;
}

// Calls fn(sub) for every sub-blade of b, including the empty blade and b.
template <class Fn>
void for_each_subblade(Blade b, Fn&& fn) {
  const std::uint32_t m = b.mask();
  std::uint32_t s = m;
  while (true) {
    fn(Blade(s));
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

// "Id" for the empty blade; "e12" (digits concatenated) when dim <= 9;
// "e7" or "e{1,12}" when dim >= 10 so that multi-digit indices stay unambiguous.
std::string to_string(Blade b, int dim);

}  // namespace gfc
