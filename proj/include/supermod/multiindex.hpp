#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace supermod {

/// Z/2 grading.
enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b) noexcept {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^
                             static_cast<std::uint8_t>(b));
}

constexpr int parity_bit(Parity p) noexcept { return static_cast<int>(p); }

/// (-1)^(|a||b|)
constexpr int koszul_sign(Parity a, Parity b) noexcept {
  return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}

constexpr Parity parity_of(std::size_t n) noexcept {
  return (n % 2 == 0) ? Parity::Even : Parity::Odd;
}

inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

inline constexpr unsigned kMaxGenerators = 64;

/// Strictly increasing tuple of generator indices 1..64, stored as a bitmask
/// (index i lives in bit i-1). The empty index labels the unit monomial.
class MultiIndex {
 public:
  constexpr MultiIndex() = default;

  static constexpr MultiIndex from_mask(std::uint64_t mask) noexcept {
    MultiIndex m;
    m.mask_ = mask;
    return m;
  }

  /// Accepts indices in any order; rejects repeats, zero and indices > 64.
  static MultiIndex from_indices(const std::vector<unsigned>& indices) {
    std::uint64_t mask = 0;
    for (unsigned i : indices) {
      if (i == 0 || i > kMaxGenerators)
        throw CapacityError("multi-index entry " + std::to_string(i) +
                            " outside 1.." + std::to_string(kMaxGenerators));
      const std::uint64_t bit = std::uint64_t{1} << (i - 1);
      if (mask & bit)
        throw PreconditionError("multi-index entry " + std::to_string(i) +
                                " repeated");
      mask |= bit;
    }
    return from_mask(mask);
  }

  static MultiIndex from_indices(std::initializer_list<unsigned> indices) {
    return from_indices(std::vector<unsigned>(indices));
  }

  /// 1..k
  static MultiIndex prefix(unsigned k) {
    if (k > kMaxGenerators) throw CapacityError("prefix longer than 64");
    return from_mask(k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1);
  }

  constexpr std::uint64_t mask() const noexcept { return mask_; }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr unsigned length() const noexcept { return std::popcount(mask_); }
  constexpr Parity parity() const noexcept { return parity_of(length()); }
  constexpr bool contains(unsigned i) const noexcept {
    return i >= 1 && i <= kMaxGenerators && ((mask_ >> (i - 1)) & 1u);
  }
  /// Largest index present, 0 for the empty index.
  constexpr unsigned max_index() const noexcept {
    return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_);
  }

  std::vector<unsigned> indices() const {
    std::vector<unsigned> out;
    out.reserve(length());
    for (std::uint64_t m = mask_; m != 0; m &= m - 1)
      out.push_back(static_cast<unsigned>(std::countr_zero(m)) + 1);
    return out;
  }

  constexpr bool disjoint(MultiIndex other) const noexcept {
    return (mask_ & other.mask_) == 0;
  }
  constexpr bool is_subset_of(MultiIndex other) const noexcept {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr MultiIndex without(MultiIndex other) const noexcept {
    return from_mask(mask_ & ~other.mask_);
  }

  constexpr bool operator==(const MultiIndex&) const = default;

  /// Graded order: shorter first, then lexicographic on the index tuples.
  std::strong_ordering operator<=>(const MultiIndex& other) const noexcept {
    if (auto c = length() <=> other.length(); c != 0) return c;
    if (mask_ == other.mask_) return std::strong_ordering::equal;
    // The first index where the tuples differ is the lowest bit of the
    // symmetric difference; whoever owns it is lexicographically smaller.
    const std::uint64_t lowest = (mask_ ^ other.mask_) & (~(mask_ ^ other.mask_) + 1);
    return (mask_ & lowest) ? std::strong_ordering::less
                            : std::strong_ordering::greater;
  }

  /// Text form "b[1]b[3]"; the empty index prints as "1".
  std::string to_string(const std::string& symbol = "b") const {
    if (empty()) return "1";
    std::string s;
    for (unsigned i : indices()) s += symbol + "[" + std::to_string(i) + "]";
    return s;
  }

 private:
  std::uint64_t mask_ = 0;
};

/// Result of multiplying the monomials of two multi-indices.
struct SignedIndex {
  MultiIndex index;
  int sign;  // +1 or -1

  bool operator==(const SignedIndex&) const = default;
};

/// Parity of the number of pairs (i in mu, j in nu) with i > j.
constexpr bool inversion_parity(MultiIndex mu, MultiIndex nu) noexcept {
  unsigned count = 0;
  for (std::uint64_t m = nu.mask(); m != 0; m &= m - 1) {
    const int bit = std::countr_zero(m);
    const std::uint64_t above = bit == 63 ? 0 : (~std::uint64_t{0} << (bit + 1));
    count += std::popcount(mu.mask() & above);
  }
  return count % 2 == 1;
}

/// beta_mu * beta_nu = sign * beta_(mu u nu), or nothing when they share an index.
constexpr std::optional<SignedIndex> merge_sign(MultiIndex mu, MultiIndex nu) noexcept {
  if (!mu.disjoint(nu)) return std::nullopt;
  return SignedIndex{MultiIndex::from_mask(mu.mask() | nu.mask()),
                     inversion_parity(mu, nu) ? -1 : 1};
}

/// All 2^L multi-indices with entries <= L, in graded lexicographic order.
inline std::vector<MultiIndex> enumerate(unsigned generator_count) {
  if (generator_count > kMaxGenerators)
    throw CapacityError("enumerate: L = " + std::to_string(generator_count) +
                        " exceeds " + std::to_string(kMaxGenerators));
  if (generator_count > 30)
    throw CapacityError("enumerate: 2^" + std::to_string(generator_count) +
                        " indices cannot be materialized");
  std::vector<MultiIndex> out;
  out.reserve(std::size_t{1} << generator_count);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << generator_count); ++m)
    out.push_back(MultiIndex::from_mask(m));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace supermod
