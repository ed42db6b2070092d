#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bsts {

using PointIndex = int;

/// Fixed-width subset of the points of a configuration.
///
/// Bit i is point i. The width is the point count of the owning
/// configuration; binary operations require equal widths and throw
/// `Error{WidthMismatch}` otherwise.
///
/// Ordering is lexicographic on the bit string b0 b1 b2 ... with 0 < 1, so
/// the first differing point decides and the set lacking it sorts first.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t width);

  static PointSet full(std::size_t width);
  static PointSet of(std::size_t width, std::span<const PointIndex> members);
  static PointSet of(std::size_t width, std::initializer_list<PointIndex> members);

  std::size_t width() const noexcept { return width_; }
  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept;

  bool contains(PointIndex p) const noexcept {
    return (words_[static_cast<std::size_t>(p) >> 6] >> (p & 63)) & 1u;
  }
  void insert(PointIndex p) noexcept { words_[static_cast<std::size_t>(p) >> 6] |= bit(p); }
  void erase(PointIndex p) noexcept { words_[static_cast<std::size_t>(p) >> 6] &= ~bit(p); }
  void set(PointIndex p, bool value) noexcept { value ? insert(p) : erase(p); }

  std::vector<PointIndex> members() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  PointSet complement() const;
  bool is_subset_of(const PointSet& other) const;

  PointSet& operator&=(const PointSet& rhs);
  PointSet& operator|=(const PointSet& rhs);
  PointSet& operator^=(const PointSet& rhs);

  friend PointSet operator&(PointSet lhs, const PointSet& rhs) { return lhs &= rhs; }
  friend PointSet operator|(PointSet lhs, const PointSet& rhs) { return lhs |= rhs; }
  friend PointSet operator^(PointSet lhs, const PointSet& rhs) { return lhs ^= rhs; }

  friend bool operator==(const PointSet&, const PointSet&) = default;
  friend std::strong_ordering operator<=>(const PointSet& lhs, const PointSet& rhs);

  // "0110..." with character i = membership of point i.
  std::string to_bit_string() const;

 private:
  static std::uint64_t bit(PointIndex p) noexcept { return std::uint64_t{1} << (p & 63); }
  void trim() noexcept;
  void require_same_width(const PointSet& other) const;

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const noexcept;
};

}  // namespace bsts
