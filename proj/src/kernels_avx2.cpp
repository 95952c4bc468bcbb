// Compiled with -mavx2 -mpopcnt; only reached after a CPUID check.

#include "blowup/kernels.hpp"

#include <immintrin.h>

namespace blowup::kernels::avx2 {

namespace {

// Nibble lookup popcount (Mula): per-byte counts, then horizontal byte sums
// into the four 64-bit lanes via SAD against zero.
inline __m256i popcount_lanes(__m256i v) noexcept
{
    const __m256i lut = _mm256_setr_epi8(
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo),
                                          _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum(__m256i acc) noexcept
{
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

inline __m256i load(const Word* p) noexcept
{
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

} // namespace

std::size_t popcount(const Word* a, std::size_t n) noexcept
{
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_epi64(acc, popcount_lanes(load(a + i)));
    std::size_t total = horizontal_sum(acc);
    for (; i < n; ++i)
        total += static_cast<std::size_t>(_mm_popcnt_u64(a[i]));
    return total;
}

std::size_t and_popcount(const Word* a, const Word* b, std::size_t n) noexcept
{
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(load(a + i), load(b + i))));
    std::size_t total = horizontal_sum(acc);
    for (; i < n; ++i)
        total += static_cast<std::size_t>(_mm_popcnt_u64(a[i] & b[i]));
    return total;
}

bool intersects(const Word* a, const Word* b, std::size_t n) noexcept
{
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        if (!_mm256_testz_si256(load(a + i), load(b + i)))
            return true;
    for (; i < n; ++i)
        if (a[i] & b[i])
            return true;
    return false;
}

void and_into(Word* out, const Word* a, const Word* b, std::size_t n) noexcept
{
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i),
                            _mm256_and_si256(load(a + i), load(b + i)));
    for (; i < n; ++i)
        out[i] = a[i] & b[i];
}

void or_into(Word* out, const Word* a, std::size_t n) noexcept
{
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i),
                            _mm256_or_si256(load(out + i), load(a + i)));
    for (; i < n; ++i)
        out[i] |= a[i];
}

} // namespace blowup::kernels::avx2
