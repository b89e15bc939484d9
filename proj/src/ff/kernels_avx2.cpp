#include "reflcat/ff/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define REFLCAT_X86 1
#include <immintrin.h>
#else
#define REFLCAT_X86 0
#endif

namespace reflcat::ff::kernels::avx2 {

#if REFLCAT_X86

namespace {

// Barrett reduction of eight lanes t < 2^31 with m = floor(2^32 / p):
// q = hi32(t * m) is floor(t / p) or one less, so one conditional subtract.
__attribute__((target("avx2"))) inline __m256i reduce(__m256i t, __m256i vp, __m256i vm) {
  const __m256i even = _mm256_mul_epu32(t, vm);
  const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(t, 32), vm);
  const __m256i hi_mask = _mm256_set1_epi64x(static_cast<long long>(0xffffffff00000000ULL));
  const __m256i q = _mm256_or_si256(_mm256_srli_epi64(even, 32), _mm256_and_si256(odd, hi_mask));
  const __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(q, vp));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, vp));
}

std::uint32_t barrett(std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t{1} << 32) / p);
}

__attribute__((target("avx2"))) void axpy_impl(Residue* dst, const Residue* src, std::size_t n,
                                                Residue c, std::uint32_t p) {
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(barrett(p)));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i t = _mm256_add_epi32(d, _mm256_mullo_epi32(x, vc));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce(t, vp, vm));
  }
  for (; i < n; ++i) dst[i] = static_cast<Residue>((dst[i] + static_cast<std::uint64_t>(c) * src[i]) % p);
}

__attribute__((target("avx2"))) void scale_impl(Residue* v, std::size_t n, Residue c, std::uint32_t p) {
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(barrett(p)));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(v + i), reduce(_mm256_mullo_epi32(x, vc), vp, vm));
  }
  for (; i < n; ++i) v[i] = static_cast<Residue>(static_cast<std::uint64_t>(v[i]) * c % p);
}

}  // namespace

bool available() { return __builtin_cpu_supports("avx2"); }

void axpy_mod(std::span<Residue> dst, std::span<const Residue> src, Residue c, std::uint32_t p) {
  if (c == 0) return;
  axpy_impl(dst.data(), src.data(), dst.size(), c, p);
}

void scale_mod(std::span<Residue> v, Residue c, std::uint32_t p) { scale_impl(v.data(), v.size(), c, p); }

#else

bool available() { return false; }
void axpy_mod(std::span<Residue> dst, std::span<const Residue> src, Residue c, std::uint32_t p) {
  scalar::axpy_mod(dst, src, c, p);
}
void scale_mod(std::span<Residue> v, Residue c, std::uint32_t p) { scalar::scale_mod(v, c, p); }

#endif

}  // namespace reflcat::ff::kernels::avx2
