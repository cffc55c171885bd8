#pragma once

#include <array>
#include <concepts>
#include <cstddef>
#include <span>
#include <vector>

namespace vwave {

/// K grid functions of equal length stored back to back. Scheme states
/// derive from this so the time steppers can treat every state as one flat
/// vector while the schemes keep named accessors.
template <std::size_t K>
class FieldStack {
 public:
  static constexpr std::size_t kFields = K;

  FieldStack() = default;
  explicit FieldStack(std::size_t points) : points_(points), data_(K * points) {}

  [[nodiscard]] std::size_t points() const { return points_; }

  [[nodiscard]] std::span<double> field(std::size_t k) {
    return {data_.data() + k * points_, points_};
  }
  [[nodiscard]] std::span<const double> field(std::size_t k) const {
    return {data_.data() + k * points_, points_};
  }

  [[nodiscard]] std::span<double> flat() { return data_; }
  [[nodiscard]] std::span<const double> flat() const { return data_; }

  friend bool operator==(const FieldStack&, const FieldStack&) = default;

 private:
  std::size_t points_ = 0;
  std::vector<double> data_;
};

/// Anything the explicit steppers can advance: a copyable value exposing its
/// unknowns as one contiguous span.
template <class S>
concept FlatState = std::copyable<S> && requires(S s, const S cs) {
  { s.flat() } -> std::convertible_to<std::span<double>>;
  { cs.flat() } -> std::convertible_to<std::span<const double>>;
};

}  // namespace vwave
