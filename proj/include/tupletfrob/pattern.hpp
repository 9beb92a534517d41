#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "tupletfrob/arith.hpp"

namespace tupletfrob {

/// Offsets {b_1 = 0 < b_2 < ... < b_k} of a prime constellation, k >= 2.
class OffsetPattern {
 public:
  /// Throws InvalidPattern unless offsets start at 0, strictly increase and
  /// number at least two.
  static OffsetPattern from(std::span<const i64> offsets);
  static OffsetPattern from(std::initializer_list<i64> offsets) {
    return from(std::span<const i64>(offsets.begin(), offsets.size()));
  }

  std::span<const i64> offsets() const noexcept { return offsets_; }
  std::size_t size() const noexcept { return offsets_.size(); }
  i64 diameter() const noexcept { return offsets_.back(); }

  /// Comma-separated offsets, e.g. "0,2,6".
  std::string str() const;

  friend bool operator==(const OffsetPattern&, const OffsetPattern&) = default;
  friend auto operator<=>(const OffsetPattern&, const OffsetPattern&) = default;

 private:
  explicit OffsetPattern(std::vector<i64> offsets) : offsets_(std::move(offsets)) {}
  std::vector<i64> offsets_;
};

}  // namespace tupletfrob
