#include "gal/kernels.hpp"

#include "gal/error.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace gal::kernels {

#if GAL_HAVE_AVX2_KERNELS
const KernelTable& avx2_kernels();
#endif

const KernelTable* avx2_table()
{
#if GAL_HAVE_AVX2_KERNELS
    return &avx2_kernels();
#else
    return nullptr;
#endif
}

bool cpu_supports(Isa isa)
{
    switch (isa) {
    case Isa::Scalar:
        return true;
    case Isa::Avx2:
#if GAL_HAVE_AVX2_KERNELS && (defined(__GNUC__) || defined(__clang__))
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    }
    return false;
}

namespace {

const KernelTable* select_default()
{
    const char* env = std::getenv("GAL_KERNELS");
    if (env && std::string(env) == "scalar")
        return &scalar_table();
    if (cpu_supports(Isa::Avx2) && avx2_table())
        return avx2_table();
    return &scalar_table();
}

std::atomic<const KernelTable*>& slot()
{
    static std::atomic<const KernelTable*> current{select_default()};
    return current;
}

} // namespace

const KernelTable& active()
{
    return *slot().load(std::memory_order_acquire);
}

void force(Isa isa)
{
    if (!cpu_supports(isa))
        throw InvalidArgument("CPU does not support the " + std::string(name(isa)) + " kernels");
    slot().store(isa == Isa::Avx2 ? avx2_table() : &scalar_table(), std::memory_order_release);
}

std::string_view name(Isa isa)
{
    return isa == Isa::Avx2 ? "avx2" : "scalar";
}

} // namespace gal::kernels
