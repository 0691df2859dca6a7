// NEON variants for aarch64, where Advanced SIMD is baseline (no runtime
// check needed). Chunks of 16 bytes with per-chunk horizontal adds keep
// the accumulators trivially overflow-free.

#include "kernels_internal.hpp"

#ifdef WEIGHTFORGE_HAVE_NEON

#include <arm_neon.h>

#include <bit>

namespace weightforge::kern {

namespace {

// 0x01 per nonzero byte.
inline uint8x16_t nonzero01(uint8x16_t x) {
    return vaddq_u8(vceqq_u8(x, vdupq_n_u8(0)), vdupq_n_u8(1));
}

size_t v_count_nonzero(const uint8_t* v, size_t n) {
    size_t c = 0, i = 0;
    for (; i + 16 <= n; i += 16) c += vaddvq_u8(nonzero01(vld1q_u8(v + i)));
    for (; i < n; ++i) c += v[i] != 0;
    return c;
}

size_t v_count_diff(const uint8_t* a, const uint8_t* b, size_t n) {
    size_t c = 0, i = 0;
    for (; i + 16 <= n; i += 16) {
        uint8x16_t eq = vceqq_u8(vld1q_u8(a + i), vld1q_u8(b + i));
        c += vaddvq_u8(vaddq_u8(eq, vdupq_n_u8(1)));
    }
    for (; i < n; ++i) c += a[i] != b[i];
    return c;
}

size_t v_xor_count(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t n) {
    size_t c = 0, i = 0;
    for (; i + 16 <= n; i += 16) {
        uint8x16_t r = veorq_u8(vld1q_u8(a + i), vld1q_u8(b + i));
        vst1q_u8(dst + i, r);
        c += vaddvq_u8(nonzero01(r));
    }
    for (; i < n; ++i) {
        uint8_t x = a[i] ^ b[i];
        dst[i] = x;
        c += x != 0;
    }
    return c;
}

size_t v_addmod_count(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t n,
                      uint8_t p) {
    const uint8x16_t pv = vdupq_n_u8(p);
    size_t c = 0, i = 0;
    for (; i + 16 <= n; i += 16) {
        uint8x16_t x = vld1q_u8(a + i);
        uint8x16_t s = vaddq_u8(x, vld1q_u8(b + i));  // wraps mod 256
        uint8x16_t over = vorrq_u8(vcltq_u8(s, x), vcgeq_u8(s, pv));
        uint8x16_t r = vsubq_u8(s, vandq_u8(pv, over));
        vst1q_u8(dst + i, r);
        c += vaddvq_u8(nonzero01(r));
    }
    for (; i < n; ++i) {
        unsigned s = unsigned(a[i]) + unsigned(b[i]);
        if (s >= p) s -= p;
        dst[i] = uint8_t(s);
        c += s != 0;
    }
    return c;
}

uint64_t v_popcount_words(const uint64_t* w, size_t nw) {
    uint64_t c = 0;
    size_t i = 0;
    for (; i + 2 <= nw; i += 2)
        c += vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(w + i))));
    for (; i < nw; ++i) c += uint64_t(std::popcount(w[i]));
    return c;
}

uint64_t v_xor_words_count(uint64_t* dst, const uint64_t* a, const uint64_t* b,
                           size_t nw) {
    uint64_t c = 0;
    size_t i = 0;
    for (; i + 2 <= nw; i += 2) {
        uint64x2_t r = veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
        vst1q_u64(dst + i, r);
        c += vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(r)));
    }
    for (; i < nw; ++i) {
        uint64_t x = a[i] ^ b[i];
        dst[i] = x;
        c += uint64_t(std::popcount(x));
    }
    return c;
}

}  // namespace

const Ops& neon_ops() {
    static const Ops ops = {
        "neon",           v_count_nonzero,
        v_count_diff,     v_xor_count,
        v_addmod_count,   scalar_ops().table_add_count,
        v_popcount_words, v_xor_words_count,
    };
    return ops;
}

}  // namespace weightforge::kern

#endif  // WEIGHTFORGE_HAVE_NEON
