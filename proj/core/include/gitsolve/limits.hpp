#pragma once

#include <cstdint>

namespace gitsolve {

// Size caps guarding the combinatorial stages. Exceeding one raises
// ResourceGuardError.
struct Limits {
  std::uint64_t max_support = 1'000'000;        // |weights| of a representation
  std::uint64_t max_cells = 1'000'000;          // arrangement cells
  std::uint64_t weyl_enumeration = 1'000'000;   // Weyl group / orbit enumeration

  // Defaults overridden by GITSOLVE_MAX_SUPPORT, GITSOLVE_MAX_CELLS and
  // GITSOLVE_MAX_WEYL when set. Unparseable values are ignored.
  static Limits from_environment();
};

}  // namespace gitsolve
