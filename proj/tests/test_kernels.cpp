#include <doctest.h>

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "grouporder/kernels.hpp"
#include "grouporder/magnus.hpp"
#include "grouporder/series.hpp"

using namespace grouporder;

namespace {

std::vector<std::int64_t> random_buffer(std::mt19937_64& rng, std::size_t n, bool extreme) {
    std::vector<std::int64_t> v(n);
    for (auto& x : v) {
        if (extreme) {
            x = static_cast<std::int64_t>(rng());
        } else {
            x = static_cast<std::int64_t>(rng() % 2001) - 1000;
        }
    }
    return v;
}

} // namespace

TEST_CASE("axpy: avx2 variant matches the scalar reference bit for bit") {
    const kernels::Ops* avx2 = kernels::avx2_ops();
    if (avx2 == nullptr) {
        MESSAGE("AVX2 unavailable; scalar-only environment");
        return;
    }
    std::mt19937_64 rng(7);
    for (bool extreme : {false, true}) {
        for (std::size_t n = 0; n <= 67; ++n) {
            auto src = random_buffer(rng, n, extreme);
            auto dst0 = random_buffer(rng, n, extreme);
            auto dst1 = dst0;
            std::int64_t scale =
                extreme ? static_cast<std::int64_t>(rng()) : static_cast<std::int64_t>(rng() % 7) - 3;
            kernels::scalar_ops().axpy(dst0.data(), src.data(), n, scale);
            avx2->axpy(dst1.data(), src.data(), n, scale);
            if (dst0 != dst1) {
                FAIL("axpy mismatch at n = " << n);
            }
        }
    }
}

TEST_CASE("axpy: zero scale is a no-op, repeated application scales linearly") {
    const auto& ops = kernels::active_ops();
    std::mt19937_64 rng(11);
    auto src = random_buffer(rng, 33, false);
    auto dst = random_buffer(rng, 33, false);
    auto before = dst;
    ops.axpy(dst.data(), src.data(), dst.size(), 0);
    CHECK(dst == before);

    auto twice = before;
    ops.axpy(twice.data(), src.data(), twice.size(), 2);
    ops.axpy(dst.data(), src.data(), dst.size(), 1);
    ops.axpy(dst.data(), src.data(), dst.size(), 1);
    CHECK(dst == twice);
}

TEST_CASE("first_nonzero: variants agree on all prefixes") {
    const kernels::Ops* avx2 = kernels::avx2_ops();
    std::vector<std::int64_t> buf(70, 0);
    for (std::size_t hit = 0; hit <= buf.size(); ++hit) {
        std::fill(buf.begin(), buf.end(), 0);
        if (hit < buf.size()) buf[hit] = -5;
        for (std::size_t n = 0; n <= buf.size(); ++n) {
            std::size_t expect = hit < n ? hit : n;
            CHECK(kernels::scalar_ops().first_nonzero(buf.data(), n) == expect);
            if (avx2 != nullptr) {
                CHECK(avx2->first_nonzero(buf.data(), n) == expect);
            }
        }
    }
    buf.assign(70, std::numeric_limits<std::int64_t>::min());
    CHECK(kernels::scalar_ops().first_nonzero(buf.data(), buf.size()) == 0);
    if (avx2 != nullptr) CHECK(avx2->first_nonzero(buf.data(), buf.size()) == 0);
}

TEST_CASE("series arithmetic is backend independent") {
    if (kernels::avx2_ops() == nullptr) return;
    Word comm(2, {1, 2, -1, -2});
    Word longer(2, {-1, 2, 2, -1, 1, 2, -2, -1}); // reduces to length 6

    REQUIRE(kernels::force_ops("scalar"));
    TruncatedSeries s1 = magnus_embed(comm, 6);
    TruncatedSeries l1 = magnus_embed(longer, 8);
    REQUIRE(kernels::force_ops("avx2"));
    TruncatedSeries s2 = magnus_embed(comm, 6);
    TruncatedSeries l2 = magnus_embed(longer, 8);
    CHECK(s1 == s2);
    CHECK(l1 == l2);
}
