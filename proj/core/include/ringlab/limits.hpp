#pragma once

#include <cstddef>

namespace ringlab {

/// Size limits for table construction and exhaustive enumeration.
struct Limits {
  /// Largest ring order for which operation tables are built.
  std::size_t max_ring_order = 4096;
  /// Largest ambient order for intermediate-ring enumeration (and the
  /// checks built on it: INC pairs, normal pairs).
  std::size_t max_intermediate_order = 64;
  /// Group closure aborts above this many elements.
  std::size_t max_group_order = 100000;
  /// Ideal-lattice enumeration aborts above this many ideals.
  std::size_t max_ideal_count = 20000;
};

}  // namespace ringlab
