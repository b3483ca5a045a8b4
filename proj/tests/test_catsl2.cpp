#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "nhq/catsl2.hpp"

using namespace nhq;

namespace {

bool shifted_equal(const Laurent& a, const Laurent& b, int* s = nullptr) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    int d = a.min_exp() - b.min_exp();
    if (a == b.shifted(d)) {
        if (s) *s = d;
        return true;
    }
    return false;
}

Int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

Int fact(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::vector<std::pair<int, int>> rs_list() {
    return {{2, 1}, {1, 2}, {2, 2}, {3, 1}};
}

}  // namespace

TEST_CASE("dimension of the truncated modules e_lam G(lam)") {
    for (int l : {2, 3, 4})
        for (int r = 0; r <= l; ++r) {
            int s = l - r;
            Tower T(l, 5);
            for (int n = 0; n <= l; ++n)
                for (auto& lam : two_block_shapes(n, r, s)) {
                    int a, b, c, d;
                    REQUIRE(parse_two_block(lam, r, s, a, b, c, d));
                    auto G = truncated_G(T.at(n), r, s, lam);
                    Int expected =
                        binom(a + b, a) * binom(a + c + d, d) * fact(b + d);
                    CHECK(Int(G.dim()) == expected);
                }
        }
}

TEST_CASE("binomial identity behind the truncated dimension count") {
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (int c = 0; c <= 4; ++c)
                for (int d = 0; d <= 4; ++d) {
                    Int lhs = binom(a + b, a) * binom(a + c + d, d);
                    Int rhs = 0;
                    for (int j = 0; j <= std::min(a, d); ++j)
                        rhs += binom(c + d, c + j) * binom(b + j, j) *
                               binom(a + b, j + b);
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("Y(lambda): differential stability and indecomposability") {
    for (int p : {3, 5})
        for (auto [r, s] : rs_list()) {
            Tower T(r + s, (uint32_t)p);
            for (int n = 0; n <= r + s; ++n)
                for (auto& lam : two_block_shapes(n, r, s)) {
                    CyclicMod Y = Y_module(T, r, s, lam);
                    CHECK(Y.d_stable());
                    CHECK(indecomposable(Y));
                    int a, b, c, d;
                    parse_two_block(lam, r, s, a, b, c, d);
                    if (b == c) {
                        // both functor routes produce the same character
                        // up to a single power of q
                        CyclicMod Y2 = Y_module_route(T, r, s, lam, false);
                        CHECK(Y2.d_stable());
                        int sh = 0;
                        CHECK(shifted_equal(Y.graded_char(),
                                            Y2.graded_char(), &sh));
                    }
                }
        }
}

TEST_CASE("restriction of the top-block module is a truncated module") {
    for (int p : {3, 5})
        for (int l : {2, 3, 4}) {
            Tower T(l, (uint32_t)p);
            for (int a = 0; a <= l; ++a)
                for (int b = 0; a + b <= l; ++b)
                    CHECK(restriction_iso_check(T, a, b, l - a - b, true));
        }
}

TEST_CASE("induction of a truncated module stays truncated") {
    for (int p : {3, 5})
        for (int l : {2, 3, 4}) {
            Tower T(l, (uint32_t)p);
            for (int a = 0; a <= l; ++a)
                for (int b = 0; a + b <= l; ++b)
                    for (int c = 0; a + b + c <= l; ++c)
                        CHECK(induction_eq_check(T, a, b, c,
                                                 l - a - b - c));
        }
}

TEST_CASE("E and F of Y(lambda) decompose over the Y basis") {
    for (int p : {5})
        for (auto [r, s] : rs_list()) {
            int l = r + s;
            Tower T(l, (uint32_t)p);
            for (int n = 0; n <= l; ++n)
                for (auto& lam : two_block_shapes(n, r, s)) {
                    int a, b, c, d;
                    parse_two_block(lam, r, s, a, b, c, d);
                    if (n >= 1) {
                        EFDecomp dec = decompose_E(T, r, s, lam);
                        for (auto& m : dec.mult) CHECK(m.coeffs_nonneg());
                        for (std::size_t i = 0; i < dec.shapes.size(); ++i) {
                            int a2, b2, c2, d2;
                            parse_two_block(dec.shapes[i], r, s, a2, b2, c2,
                                            d2);
                            if (b2 == b - 1 && d2 == d) {
                                // the forced [a+1] coefficient
                                int sh = 0;
                                CHECK(shifted_equal(dec.mult[i],
                                                    quantum_int(a + 1),
                                                    &sh));
                            } else if (b > c) {
                                // strictly dominant top block: E has a
                                // single term
                                CHECK(dec.mult[i].is_zero());
                            }
                        }
                    }
                    if (n < l) {
                        EFDecomp dec = decompose_F(T, r, s, lam);
                        for (auto& m : dec.mult) CHECK(m.coeffs_nonneg());
                        for (std::size_t i = 0; i < dec.shapes.size(); ++i) {
                            int a2, b2, c2, d2;
                            parse_two_block(dec.shapes[i], r, s, a2, b2, c2,
                                            d2);
                            if (d2 == d + 1 && b2 == b) {
                                int sh = 0;
                                CHECK(shifted_equal(dec.mult[i],
                                                    quantum_int(d + 1),
                                                    &sh));
                            } else if (b < c) {
                                CHECK(dec.mult[i].is_zero());
                            }
                        }
                    }
                }
        }
}

TEST_CASE("multiplicity of Y layers inside the truncated modules") {
    for (int p : {5})
        for (auto [r, s] : rs_list()) {
            int l = r + s;
            Tower T(l, (uint32_t)p);
            for (int n = 0; n <= l; ++n)
                for (auto& lam : two_block_shapes(n, r, s)) {
                    int a, b, c, d;
                    parse_two_block(lam, r, s, a, b, c, d);
                    if (b < c) continue;
                    std::vector<int> sig;
                    CHECK(multiplicity_check(T, r, s, lam, &sig));
                }
        }
}

TEST_CASE("categorical E and F match the canonical basis action") {
    for (int p : {3, 5})
        for (auto [r, s] : std::vector<std::pair<int, int>>{
                 {2, 1}, {1, 2}, {2, 2}}) {
            Tower T(r + s, (uint32_t)p);
            CHECK(decat_compare(T, r, s));
        }
}
