#include "chev/config.hpp"

#include <cstdlib>
#include <string>

#include "chev/error.hpp"

namespace chev {
namespace {

long parse_positive(std::string_view text, std::string_view key) {
  std::string s(text);
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || v <= 0) {
    throw InvalidArgument("CHEVCOUNT_CAP: bad value '" + s + "' for " + std::string(key));
  }
  return v;
}

}  // namespace

Caps parse_caps(std::string_view spec) {
  Caps c;
  if (spec.empty()) return c;
  if (spec.find('=') == std::string_view::npos) {
    c.group_elements = static_cast<std::size_t>(parse_positive(spec, "elements"));
    return c;
  }
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const auto item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidArgument("CHEVCOUNT_CAP: expected key=value, got '" + std::string(item) + "'");
    }
    const auto key = item.substr(0, eq);
    const long v = parse_positive(item.substr(eq + 1), key);
    if (key == "partition") c.partition_n = static_cast<int>(v);
    else if (key == "series") c.series_integer = static_cast<int>(v);
    else if (key == "poly") c.series_poly = static_cast<int>(v);
    else if (key == "elements") c.group_elements = static_cast<std::size_t>(v);
    else if (key == "burnside") c.burnside_order = static_cast<std::size_t>(v);
    else if (key == "classtypes") c.class_types = static_cast<std::size_t>(v);
    else throw InvalidArgument("CHEVCOUNT_CAP: unknown key '" + std::string(key) + "'");
  }
  return c;
}

const Caps& caps() {
  static const Caps instance = [] {
    const char* env = std::getenv("CHEVCOUNT_CAP");
    return env ? parse_caps(env) : Caps{};
  }();
  return instance;
}

}  // namespace chev
