#include <cstdlib>
#include <cstring>

#include "kernels_impl.hpp"
#include "madelung/simd/kernels.hpp"

namespace madelung::simd {

namespace {

constexpr KernelTable kScalar{
    "scalar",
    detail::sum_scalar,
    detail::dot_scalar,
    detail::central_first_scalar,
    detail::central_second_scalar,
    detail::central_first4_scalar,
    detail::central_second4_scalar,
    detail::cn_explicit_scalar,
};

#if defined(MADELUNG_HAVE_AVX2)
constexpr KernelTable kAvx2{
    "avx2",
    detail::sum_avx2,
    detail::dot_avx2,
    detail::central_first_avx2,
    detail::central_second_avx2,
    detail::central_first4_avx2,
    detail::central_second4_avx2,
    detail::cn_explicit_avx2,
};
#endif

const KernelTable& select() noexcept {
    const KernelTable* avx2 = avx2_kernels();
    if (const char* forced = std::getenv("MADELUNG_SIMD")) {
        if (std::strcmp(forced, "scalar") == 0) return kScalar;
        if (std::strcmp(forced, "avx2") == 0 && avx2 != nullptr) return *avx2;
    }
    return avx2 != nullptr ? *avx2 : kScalar;
}

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalar; }

const KernelTable* avx2_kernels() noexcept {
#if defined(MADELUNG_HAVE_AVX2)
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &kAvx2 : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& active() noexcept {
    static const KernelTable& table = select();
    return table;
}

}  // namespace madelung::simd
