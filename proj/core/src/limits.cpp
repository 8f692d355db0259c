#include "gitsolve/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace gitsolve {
namespace {

void override_from(const char* name, std::uint64_t& value) {
  const char* raw = std::getenv(name);
  if (raw == nullptr) return;
  std::uint64_t parsed = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, parsed);
  if (ec == std::errc() && ptr == end && parsed > 0) value = parsed;
}

}  // namespace

Limits Limits::from_environment() {
  Limits l;
  override_from("GITSOLVE_MAX_SUPPORT", l.max_support);
  override_from("GITSOLVE_MAX_CELLS", l.max_cells);
  override_from("GITSOLVE_MAX_WEYL", l.weyl_enumeration);
  return l;
}

}  // namespace gitsolve
