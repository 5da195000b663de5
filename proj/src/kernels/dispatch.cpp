#include "opnorm/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace opnorm::kernels {
namespace {

#if defined(OPNORM_HAVE_AVX2)
bool cpu_has_avx2()
{
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

const KernelTable& select()
{
    if (const char* env = std::getenv("OPNORM_KERNELS"); env && std::string_view(env) == "scalar")
        return scalar::table;
#if defined(OPNORM_HAVE_AVX2)
    if (cpu_has_avx2())
        return avx2::table;
#endif
#if defined(OPNORM_HAVE_NEON)
    return neon::table;
#endif
    return scalar::table;
}

} // namespace

const KernelTable& active()
{
    static const KernelTable& chosen = select();
    return chosen;
}

std::size_t available(const KernelTable** out, std::size_t capacity)
{
    std::size_t count = 0;
    auto push = [&](const KernelTable& t) {
        if (count < capacity)
            out[count] = &t;
        ++count;
    };
    push(scalar::table);
#if defined(OPNORM_HAVE_AVX2)
    if (cpu_has_avx2())
        push(avx2::table);
#endif
#if defined(OPNORM_HAVE_NEON)
    push(neon::table);
#endif
    return count < capacity ? count : capacity;
}

} // namespace opnorm::kernels
