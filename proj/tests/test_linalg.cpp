#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "nhq/kernels.hpp"
#include "nhq/matfp.hpp"

using namespace nhq;

TEST_CASE("simd kernels match scalar reference") {
    std::mt19937 rng(12345);
    for (uint32_t p : {2u, 3u, 5u, 7u, 65521u}) {
        std::uniform_int_distribution<uint32_t> d(0, p - 1);
        for (int len : {1, 7, 8, 9, 31, 64, 200}) {
            std::vector<uint32_t> src(len), a(len), b(len);
            for (int i = 0; i < len; ++i) {
                src[i] = d(rng);
                a[i] = b[i] = d(rng);
            }
            uint32_t c = d(rng);
            kern::axpy_mod_scalar(a.data(), src.data(), c, len, p);
            kern::axpy_mod(b.data(), src.data(), c, len, p);
            CHECK(a == b);
            kern::scale_mod_scalar(a.data(), c, len, p);
            kern::scale_mod(b.data(), c, len, p);
            CHECK(a == b);
#if defined(__x86_64__)
            if (kern::have_avx2() && p < (1u << 15)) {
                auto a2 = a, b2 = b;
                kern::axpy_mod_scalar(a2.data(), src.data(), c, len, p);
                kern::axpy_mod_avx2(b2.data(), src.data(), c, len, p);
                CHECK(a2 == b2);
            }
#endif
        }
    }
}

TEST_CASE("field inverse") {
    for (uint32_t p : {2u, 3u, 5u, 7u, 13u})
        for (uint32_t a = 1; a < p; ++a)
            CHECK((uint64_t)a * fp_inv(a, p) % p == 1);
}

TEST_CASE("rref, rank, nullspace, solve") {
    std::mt19937 rng(987);
    for (uint32_t p : {2u, 3u, 5u}) {
        std::uniform_int_distribution<uint32_t> d(0, p - 1);
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t m = 1 + rng() % 8, n = 1 + rng() % 8;
            MatFp A(m, n, p);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j) A.at(i, j) = d(rng);
            std::size_t r = A.rank();
            MatFp K = A.null_space();
            CHECK(K.rows() == n - r);
            // every kernel row is killed by A
            for (std::size_t k = 0; k < K.rows(); ++k) {
                auto v = K.row_vec(k);
                for (std::size_t i = 0; i < m; ++i) {
                    uint64_t s = 0;
                    for (std::size_t j = 0; j < n; ++j)
                        s += (uint64_t)A.at(i, j) * v[j];
                    CHECK(s % p == 0);
                }
            }
            // consistent system: b = A x0
            std::vector<uint32_t> x0(n);
            for (auto& v : x0) v = d(rng);
            std::vector<uint32_t> b(m, 0);
            for (std::size_t i = 0; i < m; ++i) {
                uint64_t s = 0;
                for (std::size_t j = 0; j < n; ++j)
                    s += (uint64_t)A.at(i, j) * x0[j];
                b[i] = (uint32_t)(s % p);
            }
            std::vector<uint32_t> x;
            REQUIRE(A.solve(b, x));
            for (std::size_t i = 0; i < m; ++i) {
                uint64_t s = 0;
                for (std::size_t j = 0; j < n; ++j)
                    s += (uint64_t)A.at(i, j) * x[j];
                CHECK(s % p == b[i]);
            }
        }
    }
}

TEST_CASE("row space incremental basis") {
    uint32_t p = 5;
    RowSpace S(4, p);
    CHECK(S.add({1, 2, 3, 4}));
    CHECK(S.add({0, 1, 1, 0}));
    CHECK_FALSE(S.add({1, 3, 4, 4}));  // sum of the two
    CHECK(S.rank() == 2);
    CHECK(S.contains({2, 4, 1, 3}));
    CHECK_FALSE(S.contains({1, 0, 0, 0}));
    std::vector<uint32_t> c;
    REQUIRE(S.coords({1, 3, 4, 4}, c));
    // rebuild from the stored basis rows
    std::vector<uint32_t> acc(4, 0);
    for (std::size_t i = 0; i < S.basis().size(); ++i)
        for (int j = 0; j < 4; ++j)
            acc[j] = (acc[j] + c[i] * S.basis()[i][j]) % p;
    CHECK(acc == std::vector<uint32_t>({1, 3, 4, 4}));
}
