#include "nhq/kernels.hpp"

#if defined(__x86_64__)
#include <immintrin.h>
#endif

namespace nhq::kern {

void axpy_mod_scalar(uint32_t* dst, const uint32_t* src, uint32_t c,
                     std::size_t n, uint32_t p) {
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = (uint32_t)(((uint64_t)c * src[i] + dst[i]) % p);
}

void scale_mod_scalar(uint32_t* dst, uint32_t c, std::size_t n, uint32_t p) {
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = (uint32_t)(((uint64_t)c * dst[i]) % p);
}

#if defined(__x86_64__)

// Barrett: with M = floor(2^32 / p), q = mulhi32(x, M) satisfies
// x/p - 2 < q <= x/p, so at most two corrective subtractions are needed.
// Valid for x < 2^31 (signed compares below), which holds since inputs are
// reduced mod p < 2^15 and x = c*s + d < p^2 + p.
namespace {

__attribute__((target("avx2"))) inline __m256i mulhi_epu32(__m256i a, __m256i b) {
    __m256i even = _mm256_mul_epu32(a, b);
    __m256i odd =
        _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
    even = _mm256_srli_epi64(even, 32);
    return _mm256_blend_epi32(even, odd, 0b10101010);
}

__attribute__((target("avx2"))) inline __m256i barrett(__m256i x, __m256i vp, __m256i vm) {
    __m256i q = mulhi_epu32(x, vm);
    __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vp));
    for (int k = 0; k < 2; ++k) {
        __m256i ge = _mm256_cmpgt_epi32(vp, r);  // r < p ?
        __m256i sub = _mm256_sub_epi32(r, vp);
        r = _mm256_blendv_epi8(sub, r, ge);
    }
    return r;
}

}  // namespace

__attribute__((target("avx2"))) void axpy_mod_avx2(
    uint32_t* dst, const uint32_t* src, uint32_t c, std::size_t n, uint32_t p) {
    const __m256i vp = _mm256_set1_epi32((int)p);
    const __m256i vm = _mm256_set1_epi32((int)(uint32_t)(0xFFFFFFFFull / p));
    const __m256i vc = _mm256_set1_epi32((int)c);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i s = _mm256_loadu_si256((const __m256i*)(src + i));
        __m256i d = _mm256_loadu_si256((const __m256i*)(dst + i));
        __m256i x = _mm256_add_epi32(_mm256_mullo_epi32(vc, s), d);
        _mm256_storeu_si256((__m256i*)(dst + i), barrett(x, vp, vm));
    }
    if (i < n) axpy_mod_scalar(dst + i, src + i, c, n - i, p);
}

__attribute__((target("avx2"))) void scale_mod_avx2(uint32_t* dst, uint32_t c,
                                                     std::size_t n,
                                                     uint32_t p) {
    const __m256i vp = _mm256_set1_epi32((int)p);
    const __m256i vm = _mm256_set1_epi32((int)(uint32_t)(0xFFFFFFFFull / p));
    const __m256i vc = _mm256_set1_epi32((int)c);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i d = _mm256_loadu_si256((const __m256i*)(dst + i));
        __m256i x = _mm256_mullo_epi32(vc, d);
        _mm256_storeu_si256((__m256i*)(dst + i), barrett(x, vp, vm));
    }
    if (i < n) scale_mod_scalar(dst + i, c, n - i, p);
}

bool have_avx2() {
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
}

#else

bool have_avx2() { return false; }

#endif

void axpy_mod(uint32_t* dst, const uint32_t* src, uint32_t c, std::size_t n,
              uint32_t p) {
#if defined(__x86_64__)
    if (have_avx2() && p < (1u << 15)) {
        axpy_mod_avx2(dst, src, c, n, p);
        return;
    }
#endif
    axpy_mod_scalar(dst, src, c, n, p);
}

void scale_mod(uint32_t* dst, uint32_t c, std::size_t n, uint32_t p) {
#if defined(__x86_64__)
    if (have_avx2() && p < (1u << 15)) {
        scale_mod_avx2(dst, c, n, p);
        return;
    }
#endif
    scale_mod_scalar(dst, c, n, p);
}

}  // namespace nhq::kern
