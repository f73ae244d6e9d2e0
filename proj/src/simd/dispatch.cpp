#include "scottlab/simd/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace scottlab::kern {

#if defined(__x86_64__) || defined(_M_X64)
const KernelTable& avx2_table();
#endif

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend select() {
    const char* env = std::getenv("SCOTTLAB_SIMD");
    if (env != nullptr) {
        if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
        if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Backend::avx2;
        if (std::strcmp(env, "avx2") == 0) return Backend::scalar;
    }
    return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

}  // namespace

Backend backend() {
    static const Backend b = select();
    return b;
}

std::string_view backend_name() {
    return backend() == Backend::avx2 ? "avx2" : "scalar";
}

const KernelTable& active() {
#if defined(__x86_64__) || defined(_M_X64)
    if (backend() == Backend::avx2) return avx2_table();
#endif
    return scalar_table();
}

}  // namespace scottlab::kern
