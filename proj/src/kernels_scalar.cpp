#include "blowup/kernels.hpp"

#include <bit>

namespace blowup::kernels::scalar {

std::size_t popcount(const Word* a, std::size_t n) noexcept
{
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i)
        total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

std::size_t and_popcount(const Word* a, const Word* b, std::size_t n) noexcept
{
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i)
        total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

bool intersects(const Word* a, const Word* b, std::size_t n) noexcept
{
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] & b[i])
            return true;
    return false;
}

void and_into(Word* out, const Word* a, const Word* b, std::size_t n) noexcept
{
    for (std::size_t i = 0; i < n; ++i)
        out[i] = a[i] & b[i];
}

void or_into(Word* out, const Word* a, std::size_t n) noexcept
{
    for (std::size_t i = 0; i < n; ++i)
        out[i] |= a[i];
}

} // namespace blowup::kernels::scalar
