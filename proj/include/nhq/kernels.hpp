#pragma once

#include <cstddef>
#include <cstdint>

namespace nhq::kern {

// dst[i] = (dst[i] + c * src[i]) mod p, all entries already in [0, p)
void axpy_mod(uint32_t* dst, const uint32_t* src, uint32_t c, std::size_t n,
              uint32_t p);
// dst[i] = (c * dst[i]) mod p
void scale_mod(uint32_t* dst, uint32_t c, std::size_t n, uint32_t p);

// reference implementations, kept for equivalence tests
void axpy_mod_scalar(uint32_t* dst, const uint32_t* src, uint32_t c,
                     std::size_t n, uint32_t p);
void scale_mod_scalar(uint32_t* dst, uint32_t c, std::size_t n, uint32_t p);

#if defined(__x86_64__)
void axpy_mod_avx2(uint32_t* dst, const uint32_t* src, uint32_t c,
                   std::size_t n, uint32_t p);
void scale_mod_avx2(uint32_t* dst, uint32_t c, std::size_t n, uint32_t p);
#endif

bool have_avx2();

}  // namespace nhq::kern
