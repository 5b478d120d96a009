#pragma once

#include "pelljeru/pell.hpp"

namespace pelljeru {

/// Memory guards for dense construction. The classifiers have no limit below
/// kMaxPellIndex.
struct BuildLimits {
  PellIndex max_build_2d = 12;  // p_12 = 13860, ~24 MB of bits
  PellIndex max_build_3d = 8;   // p_8 = 408, ~8.5 MB of bits
};

}  // namespace pelljeru
