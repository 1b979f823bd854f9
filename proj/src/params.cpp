#include "ringfill/params.hpp"

#include <limits>
#include <sstream>

namespace ringfill {

namespace {

constexpr std::uint64_t kMaxLabel =
    static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());

}  // namespace

void validate_first_set(const PlacementParams& p) {
  if (p.first_set_size == 0) {
    throw InvalidParams("first set must have at least one bucket (B >= 1)");
  }
  if (p.fill_width == 0) {
    throw InvalidParams("fill width must be positive (C >= 1)");
  }
  if (p.fill_width > p.first_set_size) {
    throw InvalidParams("fill width exceeds first set size (C <= B violated: C=" +
                        std::to_string(p.fill_width) +
                        ", B=" + std::to_string(p.first_set_size) + ")");
  }
  if (p.first_bucket >= p.first_set_size) {
    throw InvalidParams("first bucket outside the first set (f < B violated: f=" +
                        std::to_string(p.first_bucket) +
                        ", B=" + std::to_string(p.first_set_size) + ")");
  }
  // Largest label is below f + T + C; all three are bounded by kMaxLabel here.
  if (p.token_count > kMaxLabel || p.first_set_size > kMaxLabel ||
      p.token_count + p.first_set_size > kMaxLabel - p.first_set_size) {
    throw InvalidParams("parameters overflow the 63-bit label range");
  }
}

void validate(const PlacementParams& p) {
  validate_first_set(p);
  if (p.second_set_size <= p.first_set_size) {
    throw InvalidParams("second set must be larger than the first (B < B' violated: B=" +
                        std::to_string(p.first_set_size) +
                        ", B'=" + std::to_string(p.second_set_size) + ")");
  }
}

std::string to_string(const PlacementParams& p) {
  std::ostringstream os;
  os << "T=" << p.token_count << " B=" << p.first_set_size << " C=" << p.fill_width
     << " f=" << p.first_bucket << " B'=" << p.second_set_size;
  return os.str();
}

}  // namespace ringfill
