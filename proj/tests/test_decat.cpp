#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "nhq/decat.hpp"

using namespace nhq;

namespace {

Laurent qfact(int t) {
    Laurent f(1);
    for (int i = 1; i <= t; ++i) f = f * quantum_int(i);
    return f;
}

std::vector<std::pair<int, int>> rs_list() {
    return {{2, 1}, {1, 2}, {2, 2}, {3, 1}, {1, 3}, {3, 2}};
}

}  // namespace

TEST_CASE("divided powers against iterated action") {
    for (auto [r, s] : rs_list()) {
        TensorRep T(r, s);
        for (int i = 0; i <= r; ++i)
            for (int j = 0; j <= s; ++j)
                for (int t = 0; t <= 3; ++t) {
                    auto v = T.unit(i, j);
                    auto et = T.apply_E(t, v), ft = T.apply_F(t, v);
                    auto e1 = v, f1 = v;
                    for (int k = 0; k < t; ++k) {
                        e1 = T.apply_E(1, e1);
                        f1 = T.apply_F(1, f1);
                    }
                    Laurent ct = qfact(t);
                    for (int k = 0; k < T.dim(); ++k) {
                        CHECK(e1[k] == ct * et[k]);
                        CHECK(f1[k] == ct * ft[k]);
                    }
                }
    }
}

TEST_CASE("products of divided powers") {
    for (auto [r, s] : rs_list()) {
        TensorRep T(r, s);
        for (int i = 0; i <= r; ++i)
            for (int j = 0; j <= s; ++j)
                for (int t1 = 0; t1 <= 2; ++t1)
                    for (int t2 = 0; t2 <= 2; ++t2) {
                        auto v = T.unit(i, j);
                        auto lhs = T.apply_E(t1, T.apply_E(t2, v));
                        auto rhs = T.apply_E(t1 + t2, v);
                        Laurent bin = quantum_binom(t1 + t2, t1);
                        for (int k = 0; k < T.dim(); ++k)
                            CHECK(lhs[k] == bin * rhs[k]);
                        lhs = T.apply_F(t1, T.apply_F(t2, v));
                        rhs = T.apply_F(t1 + t2, v);
                        for (int k = 0; k < T.dim(); ++k)
                            CHECK(lhs[k] == bin * rhs[k]);
                    }
    }
}

TEST_CASE("commutator of E and F is the weight") {
    for (auto [r, s] : rs_list()) CHECK(ef_commutator_check(r, s));
}

TEST_CASE("closed formula agrees with the divided power construction") {
    for (auto [r, s] : rs_list()) {
        TensorRep T(r, s);
        for (int b = 0; b <= r; ++b)
            for (int d = 0; d <= s; ++d) {
                auto x = T.canonical(b, d);
                auto y = T.canonical_divided(b, d);
                for (int k = 0; k < T.dim(); ++k) CHECK(x[k] == y[k]);
            }
    }
}

TEST_CASE("canonical expansion is an exact change of basis") {
    for (auto [r, s] : rs_list()) {
        TensorRep T(r, s);
        for (int b = 0; b <= r; ++b)
            for (int d = 0; d <= s; ++d) {
                auto e = T.in_canonical(T.canonical(b, d));
                for (int k = 0; k < T.dim(); ++k)
                    CHECK(e[k] == (k == T.idx(b, d) ? Laurent(1) : Laurent()));
            }
    }
}

TEST_CASE("small tensor square oracle") {
    TensorRep T(1, 1);
    // frozen canonical basis of V_1 (x) V_1
    auto c01 = T.canonical(0, 1);
    CHECK(c01[T.idx(0, 1)] == Laurent(1));
    CHECK(c01[T.idx(1, 0)] == Laurent::monomial(1));
    CHECK(c01[T.idx(0, 0)].is_zero());
    CHECK(c01[T.idx(1, 1)].is_zero());
    CHECK(T.canonical(0, 0) == T.unit(0, 0));
    CHECK(T.canonical(1, 0) == T.unit(1, 0));
    CHECK(T.canonical(1, 1) == T.unit(1, 1));
    // E(v_0 diamond v_1) = [2] v_0 diamond v_0
    auto img = T.in_canonical(T.apply_E(1, c01));
    CHECK(img[T.idx(0, 0)] == quantum_int(2));
    for (int k = 0; k < T.dim(); ++k)
        if (k != T.idx(0, 0)) CHECK(img[k].is_zero());
}

TEST_CASE("canonical structure constants lie in N[q, 1/q]") {
    for (auto [r, s] : rs_list())
        for (int n = 0; n <= r + s; ++n) {
            if (n >= 1)
                for (auto& row : canonical_ef_matrix(r, s, n, true))
                    for (auto& c : row) CHECK(c.coeffs_nonneg());
            if (n < r + s)
                for (auto& row : canonical_ef_matrix(r, s, n, false))
                    for (auto& c : row) CHECK(c.coeffs_nonneg());
        }
}
