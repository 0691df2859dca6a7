// AVX2 variants of the enumeration kernels. This TU is compiled with
// -mavx2 and must only be reached through the dispatcher after the
// runtime CPU check.

#include "kernels_internal.hpp"

#ifdef WEIGHTFORGE_HAVE_AVX2

#include <immintrin.h>

#include <bit>

namespace weightforge::kern {

namespace {

inline uint64_t hsum_epi64(__m256i v) {
    __m128i s = _mm_add_epi64(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
    return uint64_t(_mm_cvtsi128_si64(s)) + uint64_t(_mm_extract_epi64(s, 1));
}

// 0x01 per nonzero byte, 0x00 per zero byte.
inline __m256i nonzero01(__m256i x) {
    return _mm256_add_epi8(_mm256_cmpeq_epi8(x, _mm256_setzero_si256()),
                           _mm256_set1_epi8(1));
}

size_t v_count_nonzero(const uint8_t* v, size_t n) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(nonzero01(x), _mm256_setzero_si256()));
    }
    size_t c = size_t(hsum_epi64(acc));
    for (; i < n; ++i) c += v[i] != 0;
    return c;
}

size_t v_count_diff(const uint8_t* a, const uint8_t* b, size_t n) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i diff01 = _mm256_add_epi8(_mm256_cmpeq_epi8(x, y), _mm256_set1_epi8(1));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(diff01, _mm256_setzero_si256()));
    }
    size_t c = size_t(hsum_epi64(acc));
    for (; i < n; ++i) c += a[i] != b[i];
    return c;
}

size_t v_xor_count(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t n) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i r = _mm256_xor_si256(x, y);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(nonzero01(r), _mm256_setzero_si256()));
    }
    size_t c = size_t(hsum_epi64(acc));
    for (; i < n; ++i) {
        uint8_t x = a[i] ^ b[i];
        dst[i] = x;
        c += x != 0;
    }
    return c;
}

size_t v_addmod_count(uint8_t* dst, const uint8_t* a, const uint8_t* b, size_t n,
                      uint8_t p) {
    const __m256i pv = _mm256_set1_epi8(char(p));
    const __m256i ones = _mm256_set1_epi8(char(0xff));
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i s = _mm256_add_epi8(x, y);  // wraps mod 256
        // subtract p where the 8-bit sum wrapped (s < x) or reached p
        __m256i carried = _mm256_xor_si256(_mm256_cmpeq_epi8(_mm256_max_epu8(s, x), s), ones);
        __m256i ge_p = _mm256_cmpeq_epi8(_mm256_max_epu8(s, pv), s);
        __m256i over = _mm256_or_si256(carried, ge_p);
        __m256i r = _mm256_sub_epi8(s, _mm256_and_si256(pv, over));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(nonzero01(r), _mm256_setzero_si256()));
    }
    size_t c = size_t(hsum_epi64(acc));
    for (; i < n; ++i) {
        unsigned s = unsigned(a[i]) + unsigned(b[i]);
        if (s >= p) s -= p;
        dst[i] = uint8_t(s);
        c += s != 0;
    }
    return c;
}

// Nibble-LUT popcount of each byte, accumulated into 4 x u64.
inline __m256i popcnt_sad(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

uint64_t v_popcount_words(const uint64_t* w, size_t nw) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
        acc = _mm256_add_epi64(acc, popcnt_sad(x));
    }
    uint64_t c = hsum_epi64(acc);
    for (; i < nw; ++i) c += uint64_t(std::popcount(w[i]));
    return c;
}

uint64_t v_xor_words_count(uint64_t* dst, const uint64_t* a, const uint64_t* b,
                           size_t nw) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i r = _mm256_xor_si256(x, y);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
        acc = _mm256_add_epi64(acc, popcnt_sad(r));
    }
    uint64_t c = hsum_epi64(acc);
    for (; i < nw; ++i) {
        uint64_t x = a[i] ^ b[i];
        dst[i] = x;
        c += uint64_t(std::popcount(x));
    }
    return c;
}

}  // namespace

const Ops& avx2_ops() {
    static const Ops ops = {
        "avx2",           v_count_nonzero,
        v_count_diff,     v_xor_count,
        v_addmod_count,   scalar_ops().table_add_count,  // gather not worthwhile
        v_popcount_words, v_xor_words_count,
    };
    return ops;
}

bool avx2_supported() { return __builtin_cpu_supports("avx2"); }

}  // namespace weightforge::kern

#endif  // WEIGHTFORGE_HAVE_AVX2
