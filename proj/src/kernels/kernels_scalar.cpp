#include "weightforge/kernels.hpp"

#include <bit>

// Reference kernels. Plain loops, no tricks: these define the contract
// the SIMD variants are tested against.

namespace weightforge::kern {

namespace {

size_t s_count_nonzero(const uint8_t* v, size_t n) {
    size_t c = 0;
    for (size_t i = 0; i < n; ++i) c += v[i] != 0;
    return c;
}

size_t s_count_diff(const uint8_t* a, const uint8_t* b, size_t n) {
    size_t c = 0;
    for (size_t i = 0; i < n; ++i) c += a[i] != b[i];
    return c;
}

size_t s_xor_count(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t n) {
    size_t c = 0;
    for (size_t i = 0; i < n; ++i) {
        uint8_t x = a[i] ^ b[i];
        dst[i] = x;
        c += x != 0;
    }
    return c;
}

size_t s_addmod_count(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t n,
                      uint8_t p) {
    size_t c = 0;
    for (size_t i = 0; i < n; ++i) {
        unsigned s = unsigned(a[i]) + unsigned(b[i]);
        if (s >= p) s -= p;
        dst[i] = uint8_t(s);
        c += s != 0;
    }
    return c;
}

size_t s_table_add_count(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t n,
                         const uint8_t* add_table, size_t q) {
    size_t c = 0;
    for (size_t i = 0; i < n; ++i) {
        uint8_t x = add_table[size_t(a[i]) * q + b[i]];
        dst[i] = x;
        c += x != 0;
    }
    return c;
}

uint64_t s_popcount_words(const uint64_t* w, size_t nw) {
    uint64_t c = 0;
    for (size_t i = 0; i < nw; ++i) c += uint64_t(std::popcount(w[i]));
    return c;
}

uint64_t s_xor_words_count(uint64_t* dst, const uint64_t* a, const uint64_t* b,
                           size_t nw) {
    uint64_t c = 0;
    for (size_t i = 0; i < nw; ++i) {
        uint64_t x = a[i] ^ b[i];
        dst[i] = x;
        c += uint64_t(std::popcount(x));
    }
    return c;
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops = {
        "scalar",         s_count_nonzero,    s_count_diff,
        s_xor_count,      s_addmod_count,     s_table_add_count,
        s_popcount_words, s_xor_words_count,
    };
    return ops;
}

}  // namespace weightforge::kern
