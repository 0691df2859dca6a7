#pragma once

#include "weightforge/kernels.hpp"

// Wiring between the per-ISA translation units and the dispatcher.
// WEIGHTFORGE_HAVE_AVX2 / WEIGHTFORGE_HAVE_NEON are set by the build when
// the corresponding TU is compiled in; availability is still checked at
// runtime where the ISA is optional (AVX2).

namespace weightforge::kern {

#ifdef WEIGHTFORGE_HAVE_AVX2
const Ops& avx2_ops();
bool avx2_supported();
#endif

#ifdef WEIGHTFORGE_HAVE_NEON
const Ops& neon_ops();
#endif

}  // namespace weightforge::kern
