#include "grouporder/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define GROUPORDER_HAVE_AVX2_BUILD 1
#include <immintrin.h>
#else
#define GROUPORDER_HAVE_AVX2_BUILD 0
#endif

namespace grouporder::kernels {

namespace {

// Unsigned arithmetic keeps overflow defined (wraps), matching the vector
// lanes exactly.
void axpy_scalar(std::int64_t* dst, const std::int64_t* src, std::size_t n, std::int64_t scale) {
    const std::uint64_t s = static_cast<std::uint64_t>(scale);
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(dst[i]) +
                                           s * static_cast<std::uint64_t>(src[i]));
    }
}

std::size_t first_nonzero_scalar(const std::int64_t* p, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (p[i] != 0) return i;
    }
    return n;
}

constexpr Ops kScalarOps{"scalar", axpy_scalar, first_nonzero_scalar};

#if GROUPORDER_HAVE_AVX2_BUILD

// 64x64->64 low product per lane; AVX2 has no mullo_epi64, so assemble it
// from 32-bit partial products.
__attribute__((target("avx2"))) inline __m256i mullo_epi64_avx2(__m256i a, __m256i b) {
    __m256i b_swap = _mm256_shuffle_epi32(b, 0xB1);       // b_hi, b_lo per lane
    __m256i cross = _mm256_mullo_epi32(a, b_swap);        // a_lo*b_hi, a_hi*b_lo
    __m256i cross_sum = _mm256_add_epi32(cross, _mm256_shuffle_epi32(cross, 0xB1));
    __m256i cross_hi = _mm256_and_si256(_mm256_slli_epi64(cross_sum, 32),
                                        _mm256_set1_epi64x(static_cast<long long>(0xFFFFFFFF00000000ull)));
    __m256i lo = _mm256_mul_epu32(a, b);                  // a_lo*b_lo, full 64 bits
    return _mm256_add_epi64(lo, cross_hi);
}

__attribute__((target("avx2"))) void axpy_avx2(std::int64_t* dst, const std::int64_t* src,
                                               std::size_t n, std::int64_t scale) {
    const __m256i s = _mm256_set1_epi64x(scale);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
        d = _mm256_add_epi64(d, mullo_epi64_avx2(x, s));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), d);
    }
    axpy_scalar(dst + i, src + i, n - i, scale);
}

__attribute__((target("avx2"))) std::size_t first_nonzero_avx2(const std::int64_t* p,
                                                               std::size_t n) {
    const __m256i zero = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
        int mask = _mm256_movemask_epi8(_mm256_cmpeq_epi64(x, zero));
        if (mask != -1) {
            unsigned zeros = static_cast<unsigned>(__builtin_ctz(~static_cast<unsigned>(mask)));
            return i + zeros / 8;
        }
    }
    return i + first_nonzero_scalar(p + i, n - i);
}

constexpr Ops kAvx2Ops{"avx2", axpy_avx2, first_nonzero_avx2};

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2") != 0; }

#endif // GROUPORDER_HAVE_AVX2_BUILD

const Ops* detect_active() {
#if GROUPORDER_HAVE_AVX2_BUILD
    const char* env = std::getenv("GROUPORDER_KERNEL");
    if (env != nullptr && std::strcmp(env, "scalar") == 0) return &kScalarOps;
    if (cpu_has_avx2()) return &kAvx2Ops;
#endif
    return &kScalarOps;
}

std::atomic<const Ops*> g_active{nullptr};

} // namespace

const Ops& scalar_ops() { return kScalarOps; }

const Ops* avx2_ops() {
#if GROUPORDER_HAVE_AVX2_BUILD
    return cpu_has_avx2() ? &kAvx2Ops : nullptr;
#else
    return nullptr;
#endif
}

const Ops& active_ops() {
    const Ops* ops = g_active.load(std::memory_order_acquire);
    if (ops == nullptr) {
        ops = detect_active();
        g_active.store(ops, std::memory_order_release);
    }
    return *ops;
}

bool force_ops(const char* name) {
    if (std::strcmp(name, "scalar") == 0) {
        g_active.store(&kScalarOps, std::memory_order_release);
        return true;
    }
    if (std::strcmp(name, "avx2") == 0) {
        const Ops* ops = avx2_ops();
        if (ops == nullptr) return false;
        g_active.store(ops, std::memory_order_release);
        return true;
    }
    return false;
}

} // namespace grouporder::kernels
