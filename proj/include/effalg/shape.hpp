#ifndef EFFALG_SHAPE_HPP
#define EFFALG_SHAPE_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace effalg {

/// Index of an element in a finite carrier.
using Index = std::int32_t;

/// Marks an undefined orthogonal sum.
inline constexpr Index kUndefined = -1;

/// Largest carrier any algebra or enumeration will accept.
inline constexpr std::int64_t kMaxCarrier = 1'000'000;

/// The top element u = (u_1, ..., u_r) of a simplicial interval [0, u].
///
/// Elements are numbered in mixed radix with coordinate 1 varying fastest:
/// index(x) = sum_i x_i * prod_{j<i} (u_j + 1).
class Shape {
 public:
  /// Throws InputError when `top` is empty or has an entry < 1.
  explicit Shape(std::vector<int> top);

  std::size_t rank() const noexcept { return top_.size(); }
  std::span<const int> top() const noexcept { return top_; }
  int operator[](std::size_t i) const { return top_[i]; }

  /// prod (u_i + 1), saturated at kMaxCarrier + 1.
  std::int64_t carrier_size() const noexcept { return size_; }
  bool fits_carrier_limit() const noexcept { return size_ <= kMaxCarrier; }

  /// Throws CarrierTooLarge above kMaxCarrier.
  void require_carrier_limit() const;

  Index index_of(std::span<const int> coords) const;
  std::vector<int> coords_of(Index index) const;
  bool contains(std::span<const int> coords) const;

  bool homogeneous() const noexcept;
  bool boolean() const noexcept;

  /// "(2,1)"
  std::string to_string() const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  std::vector<int> top_;
  std::int64_t size_ = 1;
};

/// Parse "2,1" into a Shape.
Shape parse_shape(const std::string& text);

/// A coordinate vector 0 <= x <= u of a simplicial algebra.
struct Elem {
  std::vector<int> coords;

  friend auto operator<=>(const Elem&, const Elem&) = default;
};

}  // namespace effalg

#endif  // EFFALG_SHAPE_HPP
