#pragma once

#include <cstdint>
#include <vector>

#include "weightforge/spectrum.hpp"

// Internal fast path shared between spectrum.cpp and construct.cpp:
// translate search evaluates hundreds of candidate cosets, so it reuses
// one scratch block and skips collision-pair tracking.

namespace weightforge::detail {

struct CosetScratch {
    std::vector<uint8_t> seen;      // indexed by distance
    std::vector<uint32_t> touched;  // distances to clear after each run
};

/// Number of distinct coset distances of C - x. The caller guarantees
/// x lies outside the code and that the cap was checked.
uint64_t coset_distinct_count(const LinearCode& code, const FqVector& x,
                              CosetScratch& scratch);

}  // namespace weightforge::detail
