#include "bsts/point_set.hpp"

#include <algorithm>
#include <functional>

#include "bsts/error.hpp"

namespace bsts {

PointSet::PointSet(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

PointSet PointSet::full(std::size_t width) {
  PointSet s(width);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.trim();
  return s;
}

PointSet PointSet::of(std::size_t width, std::span<const PointIndex> members) {
  PointSet s(width);
  for (PointIndex p : members) {
    if (p < 0 || static_cast<std::size_t>(p) >= width) {
      throw Error(ErrorKind::IndexOutOfRange, "point index outside set width", {p});
    }
    s.insert(p);
  }
  return s;
}

PointSet PointSet::of(std::size_t width, std::initializer_list<PointIndex> members) {
  return of(width, std::span<const PointIndex>(members.begin(), members.size()));
}

std::size_t PointSet::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool PointSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool PointSet::is_full() const noexcept { return count() == width_; }

std::vector<PointIndex> PointSet::members() const {
  std::vector<PointIndex> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto word = words_[w];
    while (word) {
      out.push_back(static_cast<PointIndex>(w * 64 + std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

PointSet PointSet::complement() const {
  PointSet s = *this;
  for (auto& w : s.words_) w = ~w;
  s.trim();
  return s;
}

bool PointSet::is_subset_of(const PointSet& other) const {
  require_same_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

PointSet& PointSet::operator&=(const PointSet& rhs) {
  require_same_width(rhs);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= rhs.words_[i];
  return *this;
}

PointSet& PointSet::operator|=(const PointSet& rhs) {
  require_same_width(rhs);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= rhs.words_[i];
  return *this;
}

PointSet& PointSet::operator^=(const PointSet& rhs) {
  require_same_width(rhs);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= rhs.words_[i];
  return *this;
}

std::strong_ordering operator<=>(const PointSet& lhs, const PointSet& rhs) {
  if (auto c = lhs.width_ <=> rhs.width_; c != 0) return c;
  for (std::size_t i = 0; i < lhs.words_.size(); ++i) {
    const auto diff = lhs.words_[i] ^ rhs.words_[i];
    if (diff == 0) continue;
    const auto low = diff & (~diff + 1);
    return (lhs.words_[i] & low) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::string PointSet::to_bit_string() const {
  std::string out(width_, '0');
  for (std::size_t i = 0; i < width_; ++i) {
    if (contains(static_cast<PointIndex>(i))) out[i] = '1';
  }
  return out;
}

void PointSet::trim() noexcept {
  if (width_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (width_ % 64)) - 1;
  }
}

void PointSet::require_same_width(const PointSet& other) const {
  if (width_ != other.width_) {
    throw Error(ErrorKind::WidthMismatch, "point sets of different widths",
                {static_cast<int>(width_), static_cast<int>(other.width_)});
  }
}

std::size_t PointSetHash::operator()(const PointSet& s) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(s.width());
  for (auto w : s.words()) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace bsts
