#pragma once

#include <cstddef>
#include <string_view>

namespace chev {

/// Computation caps. Every operation that could blow up takes its cap from
/// here unless an explicit cap is passed.
struct Caps {
  int partition_n = 60;
  int series_integer = 200;
  int series_poly = 64;
  std::size_t group_elements = 1'000'000;
  std::size_t burnside_order = 5000;
  std::size_t class_types = 1'000'000;
};

/// Process-wide caps: defaults, overridden once at first use by the
/// CHEVCOUNT_CAP environment variable. Immutable afterwards.
///
/// CHEVCOUNT_CAP is either a bare integer (sets the group element cap) or a
/// comma list of key=value pairs with keys partition, series, poly,
/// elements, burnside, classtypes.
const Caps& caps();

/// Parses a CHEVCOUNT_CAP string on top of the defaults. Throws
/// InvalidArgument on malformed input.
Caps parse_caps(std::string_view spec);

}  // namespace chev
