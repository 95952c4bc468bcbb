#include "blowup/kernels.hpp"

#include "blowup/error.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace blowup::kernels {

namespace {

struct Table {
    Backend backend;
    std::size_t (*popcount)(const Word*, std::size_t) noexcept;
    std::size_t (*and_popcount)(const Word*, const Word*, std::size_t) noexcept;
    bool (*intersects)(const Word*, const Word*, std::size_t) noexcept;
    void (*and_into)(Word*, const Word*, const Word*, std::size_t) noexcept;
    void (*or_into)(Word*, const Word*, std::size_t) noexcept;
};

constexpr Table scalar_table{Backend::scalar,       scalar::popcount, scalar::and_popcount,
                             scalar::intersects,    scalar::and_into, scalar::or_into};

#if defined(BLOWUP_HAVE_AVX2)
constexpr Table avx2_table{Backend::avx2,      avx2::popcount, avx2::and_popcount,
                           avx2::intersects,   avx2::and_into, avx2::or_into};
#endif

bool cpu_has_avx2() noexcept
{
#if defined(BLOWUP_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
    return false;
#endif
}

const Table* table_for(Backend b) noexcept
{
#if defined(BLOWUP_HAVE_AVX2)
    if (b == Backend::avx2)
        return cpu_has_avx2() ? &avx2_table : nullptr;
#endif
    if (b == Backend::scalar)
        return &scalar_table;
    return nullptr;
}

const Table* initial_table() noexcept
{
    if (const char* env = std::getenv("BLOWUP_KERNELS")) {
        const std::string want = env;
        if (want == "scalar")
            return &scalar_table;
        if (want == "avx2")
            if (const Table* t = table_for(Backend::avx2))
                return t;
    }
    if (const Table* t = table_for(Backend::avx2))
        return t;
    return &scalar_table;
}

std::atomic<const Table*>& active()
{
    static std::atomic<const Table*> table{initial_table()};
    return table;
}

inline const Table& current() noexcept
{
    return *active().load(std::memory_order_relaxed);
}

} // namespace

std::string_view backend_name(Backend b) noexcept
{
    return b == Backend::avx2 ? "avx2" : "scalar";
}

bool backend_available(Backend b) noexcept { return table_for(b) != nullptr; }

Backend active_backend() noexcept { return current().backend; }

void select_backend(Backend b)
{
    const Table* t = table_for(b);
    if (!t)
        throw InvalidParameter("kernel backend '" + std::string(backend_name(b)) +
                               "' is not available on this CPU");
    active().store(t, std::memory_order_relaxed);
}

std::size_t popcount(std::span<const Word> a) noexcept
{
    return current().popcount(a.data(), a.size());
}

std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) noexcept
{
    return current().and_popcount(a.data(), b.data(), a.size());
}

bool intersects(std::span<const Word> a, std::span<const Word> b) noexcept
{
    return current().intersects(a.data(), b.data(), a.size());
}

void and_into(std::span<Word> out, std::span<const Word> a, std::span<const Word> b) noexcept
{
    current().and_into(out.data(), a.data(), b.data(), out.size());
}

void or_into(std::span<Word> out, std::span<const Word> a) noexcept
{
    current().or_into(out.data(), a.data(), out.size());
}

} // namespace blowup::kernels
