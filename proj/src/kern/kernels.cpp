#include "myo/kern/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace myo::kern {

const Backend* avx2_backend_impl(); // kernels_avx2.cpp

const Backend* avx2_backend() {
#if defined(__x86_64__) || defined(__i386__)
    if (!__builtin_cpu_supports("avx2")) return nullptr;
    return avx2_backend_impl();
#else
    return nullptr;
#endif
}

namespace {

const Backend& select() {
    if (const char* env = std::getenv("MYODEC_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0) return scalar_backend();
        if (std::strcmp(env, "avx2") == 0) {
            if (const Backend* b = avx2_backend()) return *b;
            return scalar_backend();
        }
    }
    if (const Backend* b = avx2_backend()) return *b;
    return scalar_backend();
}

} // namespace

const Backend& active() {
    static const Backend& chosen = select();
    return chosen;
}

} // namespace myo::kern
