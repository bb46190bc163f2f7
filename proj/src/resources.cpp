#include "opk/resources.hpp"

#include <cstdlib>
#include <string>

#include "opk/errors.hpp"

namespace opk {

std::size_t resource_cap() {
  static const std::size_t cap = [] {
    const char* raw = std::getenv("OPK_MAX_BASIS");
    if (!raw || !*raw) return std::size_t{500000};
    try {
      long long v = std::stoll(raw);
      if (v <= 0) return std::size_t{500000};
      return static_cast<std::size_t>(v);
    } catch (...) {
      return std::size_t{500000};
    }
  }();
  return cap;
}

void charge_basis(std::size_t count, const char* what) {
  if (count > resource_cap())
    throw resource_error(std::string(what) +
                         " exceeds OPK_MAX_BASIS basis budget (" +
                         std::to_string(count) + " > " +
                         std::to_string(resource_cap()) + ")");
}

}  // namespace opk
