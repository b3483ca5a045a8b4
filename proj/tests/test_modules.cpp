#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "nhq/modules.hpp"

using namespace nhq;

namespace {

// a == q^s b for some integer s; reports the shift
bool shifted_equal(const Laurent& a, const Laurent& b, int* s = nullptr) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    int d = a.min_exp() - b.min_exp();
    if (a == b.shifted(d)) {
        if (s) *s = d;
        return true;
    }
    return false;
}

}  // namespace

TEST_CASE("cyclic modules of NH_2^3") {
    for (int p : {2, 3, 5}) {
        NHRep A(2, 3, (uint32_t)p);
        MultiPart lam = {1, 1, 0}, mu = {1, 0, 1}, ze = {0, 1, 1};
        Module Gl = G_module(A, lam), Gm = G_module(A, mu),
               Gz = G_module(A, ze);
        CHECK(Gl.dim() == 2);
        CHECK(Gm.dim() == 4);
        CHECK(Gz.dim() == 8);
        // generators as in the presentation y^lambda = y_1^{l-j_1} y_2^{l-j_2}
        Mono a{2, 1};
        CHECK(y_mu(A, lam) == A.mono_y(a));
        CHECK(y_mu(A, mu) == A.mono_y({2, 0}));
        CHECK(y_mu(A, ze) == A.mono_y({1, 0}));
        // listed spanning sets are inside the modules
        MatFp y1 = A.y(1), y2 = A.y(2), s1 = A.psi(1);
        CHECK(Gz.contains(y1 * y1 * y2));
        CHECK(Gz.contains(y1 * y1 * y2 * s1));
        CHECK(Gz.contains(s1 * y1 * y1 * y2));
        CHECK(Gz.contains(s1 * y1 * y1 * y2 * s1));
        CHECK(Gz.contains(y1 * y1));
        CHECK(Gz.contains(y1 * y1 * s1));
        CHECK(Gz.contains(y1));
        CHECK(Gz.contains(y1 * s1));
        CHECK_FALSE(Gz.contains(A.one()));
        CHECK_FALSE(Gm.contains(y1));
        // G modules are differential stable
        CHECK(Gl.d_stable());
        CHECK(Gm.d_stable());
        CHECK(Gz.d_stable());
        // e_2-truncation of G(zeta) and its complement
        MatFp e2 = A.e_thick(0, 2);
        Module Ez(A, std::vector<MatFp>{e2 * y_mu(A, ze)},
                  [&] {
                      std::vector<MatFp> act;
                      for (int i = 0; i < A.dim(); ++i)
                          act.push_back(A.basis_mat(i));
                      return act;
                  }(),
                  Gz.shift());
        Module Cz(A, std::vector<MatFp>{(A.one() - e2) * y_mu(A, ze)},
                  [&] {
                      std::vector<MatFp> act;
                      for (int i = 0; i < A.dim(); ++i)
                          act.push_back(A.basis_mat(i));
                      return act;
                  }(),
                  Gz.shift());
        CHECK(Ez.dim() == 6);
        CHECK(Cz.dim() == 2);
        CHECK(Ez.d_stable());
        // complement has the character of G(lambda) up to a power of q
        int s = 0;
        CHECK(shifted_equal(Cz.graded_char(), Gl.graded_char(), &s));
        // direct sum decomposition of characters
        CHECK(Ez.graded_char() + Cz.graded_char() == Gz.graded_char());
    }
}

TEST_CASE("cellular basis and differential-stable cell ideals") {
    for (int p : {2, 3, 5})
        for (auto [n, l] : std::vector<std::pair<int, int>>{
                 {1, 2}, {2, 2}, {2, 3}, {3, 3}, {2, 4}}) {
            NHRep A(n, l, (uint32_t)p);
            auto cb = cellular_basis(A);
            CHECK((int)cb.size() == A.dim());
            RowSpace full(A.dim(), A.p());
            for (auto& e : cb) {
                CHECK(A.degree_of(e.mat) == e.deg);
                CHECK(full.add(A.coords(e.mat)));
            }
            // the ideal spanned by shapes > mu (and >= mu) is d-stable
            for (auto& mu : all_multipartitions(n, l))
                for (bool strict : {true, false}) {
                    RowSpace I = cell_ideal(A, cb, mu, strict);
                    for (auto& e : cb) {
                        if (!dominates(e.mu, mu)) continue;
                        if (strict && e.mu == mu) continue;
                        CHECK(I.contains(
                            A.coords(A.differential(e.mat))));
                    }
                }
        }
}

TEST_CASE("Specht modules") {
    for (int p : {3, 5}) {
        NHRep A(2, 3, (uint32_t)p);
        auto cb = cellular_basis(A);
        for (auto& mu : all_multipartitions(2, 3)) {
            Laurent c = specht_char(A, cb, mu);
            CHECK(c.eval_one() == 2);  // dim = n!
            CHECK(c == tab_char(mu));
            CHECK(specht_d_stable(A, cb, mu, standard_tableau(mu)));
        }
    }
    // the filtration by a non-standard tableau need not be d-stable
    for (int p : {3, 5}) {
        NHRep A(2, 2, (uint32_t)p);
        auto cb = cellular_basis(A);
        MultiPart mu = {1, 1};
        auto tabs = all_tableaux(mu);
        Tableau nonstd;
        for (auto& t : tabs)
            if (!(t == standard_tableau(mu))) nonstd = t;
        CHECK(specht_d_stable(A, cb, mu, standard_tableau(mu)));
        CHECK_FALSE(specht_d_stable(A, cb, mu, nonstd));
    }
}

TEST_CASE("Specht filtration of G modules") {
    for (int p : {2, 3, 5})
        for (auto [n, l] : std::vector<std::pair<int, int>>{
                 {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}) {
            NHRep A(n, l, (uint32_t)p);
            for (auto& lam : all_multipartitions(n, l))
                CHECK(specht_filtration_check(A, lam));
        }
}
