#include "tupletfrob/pattern.hpp"

namespace tupletfrob {

OffsetPattern OffsetPattern::from(std::span<const i64> offsets) {
  if (offsets.size() < 2) throw Error(Errc::InvalidPattern, "a pattern needs at least two offsets");
  if (offsets.front() != 0) throw Error(Errc::InvalidPattern, "first offset must be 0");
  for (std::size_t i = 1; i < offsets.size(); ++i)
    if (offsets[i] <= offsets[i - 1]) throw Error(Errc::InvalidPattern, "offsets must strictly increase");
  return OffsetPattern(std::vector<i64>(offsets.begin(), offsets.end()));
}

std::string OffsetPattern::str() const {
  std::string out;
  for (std::size_t i = 0; i < offsets_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(offsets_[i]);
  }
  return out;
}

}  // namespace tupletfrob
