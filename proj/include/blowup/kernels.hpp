#pragma once

// Word-parallel bit-row kernels used by the graph, coloring and search code.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2
// variant. The active backend is chosen once at startup from CPUID and can be
// overridden with BLOWUP_KERNELS=scalar|avx2 or select_backend().

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace blowup::kernels {

using Word = std::uint64_t;
inline constexpr std::size_t word_bits = 64;

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend b) noexcept;
bool backend_available(Backend b) noexcept;
Backend active_backend() noexcept;

/// Throws InvalidParameter when `b` is not available on this CPU.
void select_backend(Backend b);

std::size_t popcount(std::span<const Word> a) noexcept;
std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) noexcept;
bool intersects(std::span<const Word> a, std::span<const Word> b) noexcept;
void and_into(std::span<Word> out, std::span<const Word> a, std::span<const Word> b) noexcept;
void or_into(std::span<Word> out, std::span<const Word> a) noexcept;

// Backend entry points, exposed for equivalence tests and benchmarks. All
// spans passed to a two-operand kernel must have equal length.
namespace scalar {
std::size_t popcount(const Word* a, std::size_t n) noexcept;
std::size_t and_popcount(const Word* a, const Word* b, std::size_t n) noexcept;
bool intersects(const Word* a, const Word* b, std::size_t n) noexcept;
void and_into(Word* out, const Word* a, const Word* b, std::size_t n) noexcept;
void or_into(Word* out, const Word* a, std::size_t n) noexcept;
} // namespace scalar

#if defined(BLOWUP_HAVE_AVX2)
namespace avx2 {
std::size_t popcount(const Word* a, std::size_t n) noexcept;
std::size_t and_popcount(const Word* a, const Word* b, std::size_t n) noexcept;
bool intersects(const Word* a, const Word* b, std::size_t n) noexcept;
void and_into(Word* out, const Word* a, const Word* b, std::size_t n) noexcept;
void or_into(Word* out, const Word* a, std::size_t n) noexcept;
} // namespace avx2
#endif

} // namespace blowup::kernels
