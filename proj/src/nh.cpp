#include "nhq/nh.hpp"

#include <cassert>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace nhq {

NHRep::NHRep(int n, int l, uint32_t p) : n_(n), l_(l), p_(p), P_(n, l, p) {
    // word basis y^a psi_w
    auto perms = symmetric_group(n);
    Mono a(n, 0);
    std::vector<Mono> exps;
    std::function<void(int)> gen = [&](int i) {
        if (i == n) {
            exps.push_back(a);
            return;
        }
        for (int e = 0; e <= l - 1 - i; ++e) {
            a[i] = e;
            gen(i + 1);
        }
        a[i] = 0;
    };
    gen(0);
    for (auto& e : exps) {
        MatFp ye = mono_y(e);
        int da = 2 * std::accumulate(e.begin(), e.end(), 0);
        for (auto& w : perms) {
            BasisElt b{e, w, da - 2 * perm_length(w)};
            basis_.push_back(b);
            basis_mat_.push_back(ye * psi_perm(w));
        }
    }

    // check independence and set up the coordinate solver
    std::size_t nn = (std::size_t)N() * N();
    MatFp bt(0, nn, p_);
    for (auto& m : basis_mat_) bt.append_row(flatten(m));
    MatFp r = bt;
    auto piv = r.rref();
    if (piv.size() != basis_.size())
        throw std::logic_error("word basis is not linearly independent");
    pivot_rows_ = piv;
    MatFp s((std::size_t)dim(), (std::size_t)dim(), p_);
    for (int j = 0; j < dim(); ++j)
        for (int i = 0; i < dim(); ++i)
            s.at(i, j) = bt.at(j, pivot_rows_[i]);
    // invert s by solving [s | I]
    MatFp aug((std::size_t)dim(), 2 * (std::size_t)dim(), p_);
    for (int i = 0; i < dim(); ++i) {
        for (int j = 0; j < dim(); ++j) aug.at(i, j) = s.at(i, j);
        aug.at(i, dim() + i) = 1;
    }
    auto piv2 = aug.rref();
    if ((int)piv2.size() != dim() || piv2.back() != (std::size_t)dim() - 1)
        throw std::logic_error("coordinate slice not invertible");
    sinv_ = MatFp((std::size_t)dim(), (std::size_t)dim(), p_);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) sinv_.at(i, j) = aug.at(i, dim() + j);

    // differential and star on coordinates
    dmat_ = MatFp((std::size_t)dim(), (std::size_t)dim(), p_);
    star_mat_ = MatFp((std::size_t)dim(), (std::size_t)dim(), p_);
    for (int j = 0; j < dim(); ++j) {
        auto dc = coords(word_differential(basis_word(j)));
        for (int i = 0; i < dim(); ++i) dmat_.at(i, j) = dc[i];
        // star(y^a psi_w) = psi_{w^{-1}} y^a
        MatFp st = psi_perm(perm_inverse(basis_[j].w)) * mono_y(basis_[j].a);
        auto sc = coords(st);
        for (int i = 0; i < dim(); ++i) star_mat_.at(i, j) = sc[i];
    }
}

std::vector<Letter> NHRep::basis_word(int i) const {
    std::vector<Letter> w;
    for (int v = 0; v < n_; ++v)
        for (int e = 0; e < basis_[i].a[v]; ++e)
            w.push_back({Letter::Y, v + 1});
    for (int s : reduced_word(basis_[i].w)) w.push_back({Letter::PSI, s + 1});
    return w;
}

MatFp NHRep::psi_perm(const Perm& w) const {
    MatFp r = one();
    for (int s : reduced_word(w)) r = r * psi(s + 1);
    return r;
}

MatFp NHRep::mono_y(const Mono& a) const {
    MatFp r = one();
    for (int i = 0; i < (int)a.size(); ++i)
        for (int e = 0; e < a[i]; ++e) r = r * y(i + 1);
    return r;
}

MatFp NHRep::word_elem(const std::vector<Letter>& word) const {
    MatFp r = one();
    for (auto& lt : word) r = r * (lt.kind == Letter::Y ? y(lt.idx) : psi(lt.idx));
    return r;
}

std::vector<uint32_t> NHRep::flatten(const MatFp& x) const {
    std::vector<uint32_t> v;
    v.reserve((std::size_t)N() * N());
    for (int i = 0; i < N(); ++i)
        for (int j = 0; j < N(); ++j) v.push_back(x.at(i, j));
    return v;
}

std::vector<uint32_t> NHRep::coords(const MatFp& x) const {
    auto fx = flatten(x);
    std::vector<uint32_t> rhs(dim());
    for (int i = 0; i < dim(); ++i) rhs[i] = fx[pivot_rows_[i]];
    std::vector<uint32_t> c(dim(), 0);
    for (int i = 0; i < dim(); ++i) {
        uint64_t s = 0;
        for (int j = 0; j < dim(); ++j)
            s += (uint64_t)sinv_.at(i, j) * rhs[j];
        c[i] = (uint32_t)(s % p_);
    }
    // confirm x is actually in the span
    MatFp back = from_coords(c);
    if (!(back == x)) throw std::logic_error("element outside algebra span");
    return c;
}

MatFp NHRep::from_coords(const std::vector<uint32_t>& c) const {
    MatFp r = zero();
    for (int j = 0; j < dim(); ++j)
        if (c[j] % p_) r = r + basis_mat_[j].scaled(c[j] % p_);
    return r;
}

std::map<int, MatFp> NHRep::graded_parts(const MatFp& x) const {
    auto c = coords(x);
    std::map<int, std::vector<uint32_t>> parts;
    for (int j = 0; j < dim(); ++j) {
        if (!c[j]) continue;
        auto& v = parts[basis_[j].deg];
        if (v.empty()) v.assign(dim(), 0);
        v[j] = c[j];
    }
    std::map<int, MatFp> r;
    for (auto& [d, v] : parts) r.emplace(d, from_coords(v));
    return r;
}

bool NHRep::is_homogeneous(const MatFp& x, int* deg) const {
    auto parts = graded_parts(x);
    if (parts.size() > 1) return false;
    if (deg) *deg = parts.empty() ? 0 : parts.begin()->first;
    return true;
}

int NHRep::degree_of(const MatFp& x) const {
    int d = 0;
    if (!is_homogeneous(x, &d))
        throw std::logic_error("degree of inhomogeneous element");
    return d;
}

MatFp NHRep::word_differential(const std::vector<Letter>& word) const {
    std::size_t m = word.size();
    std::vector<MatFp> mats(m);
    for (std::size_t i = 0; i < m; ++i)
        mats[i] = word[i].kind == Letter::Y ? y(word[i].idx) : psi(word[i].idx);
    std::vector<MatFp> pre(m + 1), suf(m + 1);
    pre[0] = one();
    for (std::size_t i = 0; i < m; ++i) pre[i + 1] = pre[i] * mats[i];
    suf[m] = one();
    for (std::size_t i = m; i > 0; --i) suf[i - 1] = mats[i - 1] * suf[i];
    MatFp r = zero();
    for (std::size_t i = 0; i < m; ++i) {
        MatFp dl = zero();
        if (word[i].kind == Letter::Y) {
            dl = y(word[i].idx) * y(word[i].idx);
        } else {
            int k = word[i].idx;
            dl = zero() - y(k) * psi(k) - psi(k) * y(k + 1);
        }
        r = r + pre[i] * dl * suf[i + 1];
    }
    return r;
}

MatFp NHRep::differential(const MatFp& x) const {
    auto c = coords(x);
    std::vector<uint32_t> dc(dim(), 0);
    for (int i = 0; i < dim(); ++i) {
        uint64_t s = 0;
        for (int j = 0; j < dim(); ++j)
            s += (uint64_t)dmat_.at(i, j) * c[j];
        dc[i] = (uint32_t)(s % p_);
    }
    return from_coords(dc);
}

MatFp NHRep::star(const MatFp& x) const {
    auto c = coords(x);
    std::vector<uint32_t> sc(dim(), 0);
    for (int i = 0; i < dim(); ++i) {
        uint64_t s = 0;
        for (int j = 0; j < dim(); ++j)
            s += (uint64_t)star_mat_.at(i, j) * c[j];
        sc[i] = (uint32_t)(s % p_);
    }
    return from_coords(sc);
}

std::vector<Letter> NHRep::e_thick_word(int off, int m) const {
    std::vector<Letter> w;
    for (int k = 1; k <= m; ++k)
        for (int e = 0; e < m - k; ++e) w.push_back({Letter::Y, off + k});
    for (int s : reduced_word(longest_perm(m)))
        w.push_back({Letter::PSI, off + s + 1});
    return w;
}

MatFp NHRep::e_thick(int off, int m) const {
    return word_elem(e_thick_word(off, m));
}

std::vector<Letter> NHRep::e_comp_word(const std::vector<int>& blocks) const {
    std::vector<Letter> w;
    int off = 0;
    for (int b : blocks) {
        auto bw = e_thick_word(off, b);
        w.insert(w.end(), bw.begin(), bw.end());
        off += b;
    }
    return w;
}

MatFp NHRep::e_comp(const std::vector<int>& blocks) const {
    return word_elem(e_comp_word(blocks));
}

std::vector<Letter> NHRep::e_prime_word(int off, int m) const {
    std::vector<Letter> w;
    for (int s : reduced_word(longest_perm(m)))
        w.push_back({Letter::PSI, off + s + 1});
    for (int k = 1; k <= m; ++k)
        for (int e = 0; e < k - 1; ++e) w.push_back({Letter::Y, off + k});
    return w;
}

MatFp NHRep::e_prime(int off, int m) const {
    return word_elem(e_prime_word(off, m));
}

MatFp NHRep::e_star(int off, int m) const {
    MatFp r = e_prime(off, m);
    if ((m * (m - 1) / 2) % 2) r = zero() - r;
    return r;
}

MatFp NHRep::psi_shuffle(int a, int b) const {
    // (psi_a ... psi_{a+b-1}) ... (psi_2 ... psi_{b+1})(psi_1 ... psi_b);
    // the unique choice making the box idempotents sum to e_{(a,b)}
    MatFp r = one();
    for (int j = a; j >= 1; --j)
        for (int s = j; s <= j + b - 1; ++s) r = r * psi(s);
    return r;
}

MatFp NHRep::e_mu(const std::vector<int>& mu, int a, int b) const {
    assert(a + b == n_);
    auto muc = box_complement(mu, a, b);
    auto muhat = conjugate_partition(muc, b);
    int sgn = partition_size(muhat) % 2;
    MatFp r = poly_elem(schur_poly(mu, a, 0, n_)) * e_comp({a, b}) *
              psi_shuffle(a, b) * e_thick(0, a + b) *
              poly_elem(schur_poly(muhat, b, a, n_));
    if (sgn) r = zero() - r;
    return r;
}

std::vector<uint32_t> NHRep::symmetric_trace() const {
    int d = dim();
    int top = 2 * n_ * (l_ - n_);
    // unknowns: tau on basis elements of degree `top`
    std::vector<int> idx;
    for (int i = 0; i < d; ++i)
        if (basis_[i].deg == top) idx.push_back(i);
    MatFp rows(0, idx.size(), p_);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            if (basis_[i].deg + basis_[j].deg != top) continue;
            auto c = coords(basis_mat_[i] * basis_mat_[j] -
                            basis_mat_[j] * basis_mat_[i]);
            std::vector<uint32_t> row(idx.size(), 0);
            bool nz = false;
            for (std::size_t k = 0; k < idx.size(); ++k) {
                row[k] = c[idx[k]];
                nz = nz || row[k];
            }
            if (nz) rows.append_row(row);
        }
    MatFp ker = rows.rows() ? rows.null_space()
                            : MatFp::identity(idx.size(), p_);
    if (ker.rows() == 0) throw std::logic_error("no symmetric trace");
    // pick a kernel vector whose Gram matrix is invertible
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        std::vector<uint32_t> tau(d, 0);
        for (std::size_t k = 0; k < idx.size(); ++k)
            tau[idx[k]] = ker.at(r, k);
        if (gram_matrix(tau).rank() == (std::size_t)d) return tau;
    }
    throw std::logic_error("no nondegenerate symmetric trace found");
}

MatFp NHRep::gram_matrix(const std::vector<uint32_t>& tau) const {
    int d = dim();
    int top = 2 * n_ * (l_ - n_);
    MatFp g(d, d, p_);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            if (basis_[i].deg + basis_[j].deg != top) continue;
            auto c = coords(basis_mat_[i] * basis_mat_[j]);
            uint64_t s = 0;
            for (int k = 0; k < d; ++k) s += (uint64_t)tau[k] * c[k];
            g.at(i, j) = (uint32_t)(s % p_);
            g.at(j, i) = g.at(i, j);
        }
    return g;
}

}  // namespace nhq
