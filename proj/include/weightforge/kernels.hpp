#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace weightforge::kern {

/// One implementation set of the data-parallel inner-loop kernels used by
/// the codeword enumerators. `scalar_ops()` is the portable reference;
/// SIMD variants must be bit-identical to it on every input and are
/// equivalence-tested against it.
///
/// All dst-producing kernels allow dst to alias a (the enumerators update
/// the running codeword in place).
struct Ops {
    const char* name;

    /// Number of nonzero bytes of v[0..n): the Hamming weight of a
    /// byte-encoded vector.
    size_t (*count_nonzero)(const uint8_t* v, size_t n);

    /// Number of positions where a and b differ: Hamming distance.
    size_t (*count_diff)(const uint8_t* a, const uint8_t* b, size_t n);

    /// dst = a ^ b bytewise; returns the nonzero count of dst. This is
    /// vector addition for characteristic-2 fields, whose base-2 digit
    /// encoding makes field addition exactly XOR.
    size_t (*xor_count)(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t n);

    /// dst = (a + b) mod p bytewise (all entries < p); returns the
    /// nonzero count of dst. Vector addition for prime fields.
    size_t (*addmod_count)(uint8_t* dst, const uint8_t* a, const uint8_t* b,
                           size_t n, uint8_t p);

    /// dst[i] = add_table[a[i]*q + b[i]]; returns the nonzero count.
    /// Table-driven fallback for extension fields of odd characteristic
    /// (q = 9, 25, 27, ...), where digit-wise mod-p addition has no cheap
    /// bit-parallel form.
    size_t (*table_add_count)(uint8_t* dst, const uint8_t* a, const uint8_t* b,
                              size_t n, const uint8_t* add_table, size_t q);

    /// Population count over w[0..nw): packed GF(2) Hamming weight.
    uint64_t (*popcount_words)(const uint64_t* w, size_t nw);

    /// dst = a ^ b wordwise; returns popcount(dst): packed GF(2) vector
    /// addition fused with the weight.
    uint64_t (*xor_words_count)(uint64_t* dst, const uint64_t* a, const uint64_t* b,
                                size_t nw);
};

/// Portable reference kernels.
const Ops& scalar_ops();

/// Every kernel set usable on this machine, scalar first.
const std::vector<const Ops*>& available_ops();

/// The set the library runs with. Chosen once at first use: the last
/// (most specialized) available set, unless the WEIGHTFORGE_KERNEL
/// environment variable names one of the available sets ("scalar",
/// "avx2", "neon") explicitly.
const Ops& active_ops();

}  // namespace weightforge::kern
