#ifndef GROUPORDER_KERNELS_HPP
#define GROUPORDER_KERNELS_HPP

#include <cstddef>
#include <cstdint>

namespace grouporder::kernels {

// Flat int64 coefficient-block primitives behind the truncated-series
// arithmetic. Variants must agree bit-for-bit (two's-complement wrap on
// overflow); the equivalence suite holds them to that.
struct Ops {
    const char* name;
    // dst[i] += scale * src[i]
    void (*axpy)(std::int64_t* dst, const std::int64_t* src, std::size_t n, std::int64_t scale);
    // index of the first nonzero entry, or n when all are zero
    std::size_t (*first_nonzero)(const std::int64_t* p, std::size_t n);
};

const Ops& scalar_ops();

// nullptr when the build target or the running CPU lacks AVX2.
const Ops* avx2_ops();

// Runtime-selected variant: AVX2 when available unless GROUPORDER_KERNEL=scalar.
const Ops& active_ops();

// Test hook; returns false if the named variant is unavailable.
bool force_ops(const char* name);

} // namespace grouporder::kernels

#endif // GROUPORDER_KERNELS_HPP
