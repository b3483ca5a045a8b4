#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "nhq/combin.hpp"

using namespace nhq;

TEST_CASE("permutation basics") {
    for (int n : {1, 2, 3, 4}) {
        auto sn = symmetric_group(n);
        CHECK((int)sn.size() == [&] {
            int f = 1;
            for (int i = 2; i <= n; ++i) f *= i;
            return f;
        }());
        for (auto& w : sn) {
            auto word = reduced_word(w);
            CHECK((int)word.size() == perm_length(w));
            Perm acc = perm_identity(n);
            for (int s : word) {
                Perm t = perm_identity(n);
                std::swap(t[s], t[s + 1]);
                acc = perm_mul(acc, t);
            }
            CHECK(acc == w);
            CHECK(perm_mul(w, perm_inverse(w)) == perm_identity(n));
        }
        CHECK(perm_length(longest_perm(n)) == n * (n - 1) / 2);
    }
}

TEST_CASE("schur polynomials") {
    // single row = complete homogeneous, single column = elementary
    for (int k = 1; k <= 3; ++k)
        CHECK(schur_poly({k}, 3, 0, 3) == complete_homogeneous(k, 3));
    Poly e2 = schur_poly({1, 1}, 3, 0, 3);
    CHECK(e2.size() == 3);
    for (auto& [m, c] : e2) CHECK(c == 1);
    // s_{(2,1)} in 3 variables: six distinct monomials plus 2 y1 y2 y3
    Poly s21 = schur_poly({2, 1}, 3, 0, 3);
    CHECK(s21.at({1, 1, 1}) == 2);
    CHECK(s21.at({2, 1, 0}) == 1);
    CHECK(s21.size() == 7);
    // Jacobi-Trudi for two rows: s_{(a,b)} = h_a h_b - h_{a+1} h_{b-1}
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= a; ++b) {
            Poly lhs = schur_poly({a, b}, 3, 0, 3);
            Poly rhs = poly_add(
                poly_mul(complete_homogeneous(a, 3),
                         complete_homogeneous(b, 3)),
                poly_scale(poly_mul(complete_homogeneous(a + 1, 3),
                                    complete_homogeneous(b - 1, 3)),
                           -1));
            CHECK(lhs == rhs);
        }
    // variable offset embeds into a larger ring
    Poly f = schur_poly({1}, 2, 1, 3);
    CHECK(f.size() == 2);
    CHECK(f.count({0, 1, 0}) == 1);
    CHECK(f.count({0, 0, 1}) == 1);
}

TEST_CASE("partitions in a box") {
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
            auto ps = partitions_in_box(a, b);
            long binom = 1;
            for (int i = 1; i <= a; ++i) binom = binom * (b + i) / i;
            CHECK((long)ps.size() == binom);
            for (auto& mu : ps) {
                auto c = box_complement(mu, a, b);
                CHECK(box_complement(c, a, b) == mu);
                CHECK(partition_size(mu) + partition_size(c) == a * b);
                auto conj = conjugate_partition(mu, b);
                CHECK(partition_size(conj) == partition_size(mu));
                CHECK(conjugate_partition(conj, a) ==
                      std::vector<int>(mu.begin(), mu.end()));
            }
        }
}

TEST_CASE("multipartitions and dominance") {
    auto ps = all_multipartitions(2, 3);
    CHECK(ps.size() == 3);
    MultiPart lam = {1, 1, 0}, mu = {1, 0, 1}, ze = {0, 1, 1};
    CHECK(dominates(lam, mu));
    CHECK(dominates(mu, ze));
    CHECK(dominates(lam, ze));
    CHECK_FALSE(dominates(ze, mu));
    CHECK(minimal_multipartition(2, 3) == ze);
    // the incomparable pair over the common lower bound
    MultiPart a = {0, 1, 1, 0}, b = {1, 0, 0, 1}, low = {0, 1, 0, 1};
    CHECK_FALSE(dominates(a, b));
    CHECK_FALSE(dominates(b, a));
    CHECK(dominates(a, low));
    CHECK(dominates(b, low));
    for (auto& q : all_multipartitions(2, 4))
        CHECK(dominates(q, minimal_multipartition(2, 4)));
}

TEST_CASE("tableaux, orders and degrees") {
    MultiPart lam = {1, 1, 0}, mu = {1, 0, 1}, ze = {0, 1, 1};
    CHECK(all_tableaux(lam).size() == 2);
    auto t = standard_tableau(lam);
    CHECK(t.pos == std::vector<int>({1, 2}));
    CHECK(t.perm() == perm_identity(2));
    CHECK(t.degree() == 2 * 3 - 3 - 0);
    // standard fillings compare exactly like shapes
    for (auto& s1 : {lam, mu, ze})
        for (auto& s2 : {lam, mu, ze})
            CHECK(tableau_geq(standard_tableau(s1), standard_tableau(s2)) ==
                  dominates(s1, s2));
    // t^mu dominates every mu-tableau
    for (auto& sh : {lam, mu, ze})
        for (auto& h : all_tableaux(sh))
            CHECK(tableau_geq(standard_tableau(sh), h));
    // module dimension bookkeeping: sum over shapes of
    // |Tab^lam(shape)| * |Tab(shape)| gives 2, 4, 8
    auto gdim = [&](const MultiPart& l0) {
        int s = 0;
        for (auto& sh : all_multipartitions(2, 3))
            s += (int)(tableaux_above(sh, l0).size() *
                       all_tableaux(sh).size());
        return s;
    };
    CHECK(gdim(lam) == 2);
    CHECK(gdim(mu) == 4);
    CHECK(gdim(ze) == 8);
}
