#include <cstdlib>
#include <cstring>

#include "zne/kernels.hpp"

namespace zne::kernels {

const Ops* avx2_ops_table();  // defined in kernels_avx2.cpp

const Ops* avx2_ops() {
#if defined(__x86_64__) || defined(__i386__)
    static const Ops* table = []() -> const Ops* {
        if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return avx2_ops_table();
        return nullptr;
    }();
    return table;
#else
    return nullptr;
#endif
}

const Ops& active_ops() {
    static const Ops* chosen = []() -> const Ops* {
        const char* env = std::getenv("ZNE_KERNELS");
        if (env && std::strcmp(env, "scalar") == 0) return &scalar_ops();
        const Ops* simd = avx2_ops();
        if (env && std::strcmp(env, "avx2") == 0 && !simd) return &scalar_ops();
        return simd ? simd : &scalar_ops();
    }();
    return *chosen;
}

}  // namespace zne::kernels
