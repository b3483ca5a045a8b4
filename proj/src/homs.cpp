#include "nhq/homs.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace nhq {

ActingCopy self_copy(const NHRep& A) {
    ActingCopy e{&A, &A, {}};
    e.images.reserve(A.dim());
    for (int i = 0; i < A.dim(); ++i) e.images.push_back(A.basis_mat(i));
    return e;
}

ActingCopy embedded_copy(const NHRep& small, const NHRep& big) {
    assert(small.n() <= big.n() && small.l() == big.l() &&
           small.p() == big.p());
    ActingCopy e{&small, &big, {}};
    e.images.reserve(small.dim());
    for (int i = 0; i < small.dim(); ++i) {
        const auto& b = small.basis()[i];
        Mono a(big.n(), 0);
        std::copy(b.a.begin(), b.a.end(), a.begin());
        Perm w = perm_identity(big.n());
        std::copy(b.w.begin(), b.w.end(), w.begin());
        e.images.push_back(big.mono_y(a) * big.psi_perm(w));
    }
    return e;
}

MatFp embed_coords(const ActingCopy& e, const std::vector<uint32_t>& c) {
    assert((int)c.size() == e.alg->dim());
    MatFp r = MatFp(e.amb->N(), e.amb->N(), e.amb->p());
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i]) r = r + e.images[i].scaled(c[i]);
    return r;
}

MatFp embed_elem(const ActingCopy& e, const MatFp& x) {
    return embed_coords(e, e.alg->coords(x));
}

CyclicMod::CyclicMod(ActingCopy act, const MatFp& gen,
                     std::function<MatFp(const MatFp&)> diff, int shift)
    : act_(std::move(act)),
      gen_(gen),
      shift_(shift),
      gen_deg_(act_.amb->degree_of(gen) + shift),
      diff_(std::move(diff)),
      span_(*act_.amb, std::vector<MatFp>{gen}, act_.images, shift) {
    compute_ann();
}

CyclicMod::CyclicMod(ActingCopy act, const MatFp& gen, int shift)
    : CyclicMod(
          std::move(act), gen,
          [amb = act.amb](const MatFp& v) { return amb->differential(v); },
          shift) {}

void CyclicMod::compute_ann() {
    const NHRep& B = *act_.alg;
    const NHRep& A = *act_.amb;
    int d = B.dim();
    std::vector<std::vector<uint32_t>> cols(d);
    for (int i = 0; i < d; ++i) cols[i] = A.flatten(gen_ * act_.images[i]);
    solver_ = LinSolver(cols, A.p());

    std::size_t m = cols[0].size();
    MatFp mat((std::size_t)m, (std::size_t)d, A.p());
    for (std::size_t r = 0; r < m; ++r)
        for (int j = 0; j < d; ++j) mat.at(r, j) = cols[j][r];
    MatFp ker = mat.null_space();

    // split kernel vectors into homogeneous pieces, lowest degree first
    std::vector<std::pair<int, std::vector<uint32_t>>> pieces;
    for (std::size_t k = 0; k < ker.rows(); ++k) {
        std::map<int, std::vector<uint32_t>> parts;
        for (int j = 0; j < d; ++j)
            if (ker.at(k, j)) {
                auto& v = parts[B.basis()[j].deg];
                if (v.empty()) v.assign(d, 0);
                v[j] = ker.at(k, j);
            }
        for (auto& [deg, v] : parts) pieces.emplace_back(deg, std::move(v));
    }
    std::stable_sort(pieces.begin(), pieces.end(),
                     [](auto& a, auto& b) { return a.first < b.first; });

    // greedily pick right-ideal generators, closing the span as we go
    RowSpace span(d, A.p());
    std::vector<std::vector<uint32_t>> work;
    for (auto& [deg, v] : pieces) {
        if (span.contains(v)) continue;
        ann_.push_back(v);
        span.add(v);
        work.push_back(v);
        while (!work.empty()) {
            MatFp z = B.from_coords(work.back());
            work.pop_back();
            for (int i = 1; i <= B.n(); ++i) {
                auto c = B.coords(z * B.y(i));
                if (span.add(c)) work.push_back(c);
            }
            for (int i = 1; i < B.n(); ++i) {
                auto c = B.coords(z * B.psi(i));
                if (span.add(c)) work.push_back(c);
            }
        }
    }
    ann_basis_ = span.basis();
}

std::vector<uint32_t> CyclicMod::factor(const MatFp& v) const {
    std::vector<uint32_t> x;
    if (!solver_.solve(act_.amb->flatten(v), x))
        throw std::logic_error("element not in the cyclic module");
    return x;
}

bool CyclicMod::d_stable() const {
    return span_.stable_under(diff_);
}

std::vector<HomElt> hom_space(const CyclicMod& src, const CyclicMod& dst) {
    const NHRep* B = src.act().alg;
    assert(B->n() == dst.act().alg->n() && B->l() == dst.act().alg->l() &&
           B->p() == dst.act().alg->p());
    const NHRep& A = dst.ambient();
    uint32_t p = A.p();

    std::vector<MatFp> zs;
    for (auto& z : src.ann_gens()) zs.push_back(embed_coords(dst.act(), z));

    // group target basis vectors by degree
    std::map<int, std::vector<int>> groups;
    for (int j = 0; j < dst.dim(); ++j)
        groups[dst.span().degree(j)].push_back(j);

    std::vector<HomElt> out;
    for (auto& [deg, J] : groups) {
        MatFp sol;
        if (zs.empty()) {
            sol = MatFp::identity(J.size(), p);
        } else {
            RowSpace rs(J.size(), p);
            std::vector<uint32_t> row(J.size());
            for (auto& Z : zs) {
                std::vector<std::vector<uint32_t>> prods;
                for (int j : J)
                    prods.push_back(A.flatten(dst.span().basis()[j] * Z));
                for (std::size_t r = 0; r < prods[0].size(); ++r) {
                    bool nz = false;
                    for (std::size_t j = 0; j < J.size(); ++j) {
                        row[j] = prods[j][r];
                        nz |= row[j] != 0;
                    }
                    if (nz) rs.add(row);
                }
            }
            MatFp con(0, J.size(), p);
            for (auto& r : rs.basis()) con.append_row(r);
            if (con.rows() == 0)
                sol = MatFp::identity(J.size(), p);
            else
                sol = con.null_space();
        }
        for (std::size_t k = 0; k < sol.rows(); ++k) {
            MatFp img(A.N(), A.N(), p);
            for (std::size_t j = 0; j < J.size(); ++j)
                if (sol.at(k, j))
                    img = img + dst.span().basis()[J[j]].scaled(sol.at(k, j));
            out.push_back({std::move(img), deg - src.gen_deg()});
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](auto& a, auto& b) { return a.deg < b.deg; });
    return out;
}

MatFp hom_compose(const CyclicMod& /*A*/, const CyclicMod& B,
                  const CyclicMod& C, const MatFp& img_f, const MatFp& img_g) {
    auto u = B.factor(img_f);
    return img_g * embed_coords(C.act(), u);
}

MatFp hom_differential(const CyclicMod& src, const CyclicMod& dst,
                       const MatFp& img) {
    auto u0 = src.factor(src.diff(src.gen()));
    return dst.diff(img) - img * embed_coords(dst.act(), u0);
}

EndAlg::EndAlg(std::vector<const CyclicMod*> mods)
    : mods_(std::move(mods)), p_(mods_.at(0)->ambient().p()) {
    int k = nmods();
    for (int from = 0; from < k; ++from)
        for (int to = 0; to < k; ++to) {
            auto hs = hom_space(*mods_[from], *mods_[to]);
            std::vector<int>& idx = blocks_[{from, to}];
            std::vector<std::vector<uint32_t>> cols;
            for (auto& h : hs) {
                idx.push_back((int)basis_.size());
                cols.push_back(mods_[to]->ambient().flatten(h.img));
                basis_.push_back({from, to, h.deg, std::move(h.img)});
            }
            if (!cols.empty())
                bsolve_.emplace(std::make_pair(from, to),
                                LinSolver(std::move(cols), p_));
        }
    int d = dim();
    mtable_.assign(d, std::vector<std::vector<uint32_t>>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (basis_[j].to != basis_[i].from) {
                mtable_[i][j].assign(d, 0);
                continue;
            }
            MatFp img = hom_compose(*mods_[basis_[j].from],
                                    *mods_[basis_[i].from],
                                    *mods_[basis_[i].to], basis_[j].img,
                                    basis_[i].img);
            mtable_[i][j] =
                map_coords(basis_[j].from, basis_[i].to, img);
        }
    dtable_.resize(d);
    for (int i = 0; i < d; ++i) {
        MatFp img = hom_differential(*mods_[basis_[i].from],
                                     *mods_[basis_[i].to], basis_[i].img);
        dtable_[i] = map_coords(basis_[i].from, basis_[i].to, img);
    }
}

const std::vector<int>& EndAlg::block(int from, int to) const {
    static const std::vector<int> empty;
    auto it = blocks_.find({from, to});
    return it == blocks_.end() ? empty : it->second;
}

Laurent EndAlg::block_char(int from, int to) const {
    Laurent c;
    for (int i : block(from, to)) c.add_term(basis_[i].deg, 1);
    return c;
}

Laurent EndAlg::total_char() const {
    Laurent c;
    for (auto& e : basis_) c.add_term(e.deg, 1);
    return c;
}

std::vector<uint32_t> EndAlg::map_coords(int from, int to,
                                         const MatFp& img) const {
    std::vector<uint32_t> out(dim(), 0);
    if (img.is_zero()) return out;
    auto it = bsolve_.find({from, to});
    std::vector<uint32_t> x;
    if (it == bsolve_.end() ||
        !it->second.solve(mods_[to]->ambient().flatten(img), x))
        throw std::logic_error("map not in the hom block");
    const auto& idx = block(from, to);
    for (std::size_t j = 0; j < x.size(); ++j) out[idx[j]] = x[j];
    return out;
}

std::vector<uint32_t> EndAlg::unit(int i) const {
    std::vector<uint32_t> v(dim(), 0);
    v[i] = 1;
    return v;
}

std::vector<uint32_t> EndAlg::xi(int k) const {
    return map_coords(k, k, mods_[k]->gen());
}

std::vector<uint32_t> EndAlg::mul(const std::vector<uint32_t>& a,
                                  const std::vector<uint32_t>& b) const {
    std::vector<uint32_t> out(dim(), 0);
    for (int i = 0; i < dim(); ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < dim(); ++j) {
            if (!b[j]) continue;
            uint64_t c = (uint64_t)a[i] * b[j] % p_;
            if (c)
                kern::axpy_mod(out.data(), mtable_[i][j].data(), (uint32_t)c,
                               out.size(), p_);
        }
    }
    return out;
}

std::vector<uint32_t> EndAlg::dapply(const std::vector<uint32_t>& a) const {
    std::vector<uint32_t> out(dim(), 0);
    for (int i = 0; i < dim(); ++i)
        if (a[i])
            kern::axpy_mod(out.data(), dtable_[i].data(), a[i], out.size(),
                           p_);
    return out;
}

bool EndAlg::is_zero(const std::vector<uint32_t>& a) const {
    for (uint32_t v : a)
        if (v) return false;
    return true;
}

bool EndAlg::LeftSub::contains(const std::vector<uint32_t>& v,
                               int deg) const {
    auto it = by_deg.find(deg);
    if (it == by_deg.end()) {
        for (uint32_t x : v)
            if (x) return false;
        return true;
    }
    return it->second.contains(v);
}

EndAlg::LeftSub EndAlg::left_submodule(
    const std::vector<std::pair<std::vector<uint32_t>, int>>& gens) const {
    LeftSub s;
    std::vector<std::pair<std::vector<uint32_t>, int>> work;
    auto push = [&](const std::vector<uint32_t>& v, int deg) {
        if (is_zero(v)) return;
        auto it = s.by_deg.find(deg);
        if (it == s.by_deg.end())
            it = s.by_deg.emplace(deg, RowSpace(dim(), p_)).first;
        if (it->second.add(v)) work.emplace_back(v, deg);
    };
    for (auto& [v, deg] : gens) push(v, deg);
    while (!work.empty()) {
        auto [v, deg] = std::move(work.back());
        work.pop_back();
        for (int i = 0; i < dim(); ++i) {
            std::vector<uint32_t> w(dim(), 0);
            for (int j = 0; j < dim(); ++j)
                if (v[j])
                    kern::axpy_mod(w.data(), mtable_[i][j].data(), v[j],
                                   w.size(), p_);
            push(w, deg + basis_[i].deg);
        }
    }
    for (auto& [deg, rs] : s.by_deg) {
        s.dim += (int)rs.rank();
        s.ch.add_term(deg, (long)rs.rank());
    }
    return s;
}

bool EndAlg::d_stable(const LeftSub& s) const {
    for (auto& [deg, rs] : s.by_deg)
        for (auto& v : rs.basis())
            if (!s.contains(dapply(v), deg + 2)) return false;
    return true;
}

std::vector<std::pair<std::vector<uint32_t>, int>> EndAlg::column_gens(
    int k) const {
    std::vector<std::pair<std::vector<uint32_t>, int>> out;
    for (int i = 0; i < dim(); ++i)
        if (basis_[i].from == k) out.emplace_back(unit(i), basis_[i].deg);
    return out;
}

Laurent EndAlg::column_char(int k) const {
    Laurent c;
    for (auto& e : basis_)
        if (e.from == k) c.add_term(e.deg, 1);
    return c;
}

std::vector<std::pair<std::vector<uint32_t>, int>> EndAlg::factoring_gens(
    int from, const std::vector<int>& through) const {
    std::vector<std::pair<std::vector<uint32_t>, int>> out;
    for (int k : through)
        for (int i : block(from, k))
            for (int j = 0; j < dim(); ++j) {
                if (basis_[j].from != k) continue;
                auto v = mtable_[j][i];
                if (!is_zero(v))
                    out.emplace_back(std::move(v),
                                     basis_[i].deg + basis_[j].deg);
            }
    return out;
}

std::vector<CyclicMod> schur_summands(const NHRep& A) {
    std::vector<CyclicMod> out;
    for (auto& lam : all_multipartitions(A.n(), A.l()))
        out.emplace_back(self_copy(A), y_mu(A, lam), G_shift(lam));
    return out;
}

std::vector<MultiPart> two_block_shapes(int n, int r, int s) {
    std::vector<MultiPart> out;
    for (int b = std::min(n, r); b >= std::max(0, n - s); --b) {
        int d = n - b, a = r - b, c = s - d;
        MultiPart lam(r + s, 0);
        for (int i = 0; i < b; ++i) lam[a + i] = 1;
        for (int i = 0; i < d; ++i) lam[a + b + c + i] = 1;
        out.push_back(std::move(lam));
    }
    return out;
}

bool parse_two_block(const MultiPart& lam, int r, int s, int& a, int& b,
                     int& c, int& d) {
    if ((int)lam.size() != r + s) return false;
    int i = 0;
    a = b = c = d = 0;
    while (i < r && lam[i] == 0) ++i, ++a;
    while (i < r && lam[i] == 1) ++i, ++b;
    if (i < r) return false;
    while (i < r + s && lam[i] == 0) ++i, ++c;
    while (i < r + s && lam[i] == 1) ++i, ++d;
    return i == r + s;
}

CyclicMod truncated_G(const NHRep& A, int r, int s, const MultiPart& lambda) {
    int a, b, c, d;
    if (!parse_two_block(lambda, r, s, a, b, c, d))
        throw std::invalid_argument("not a two-block shape");
    std::vector<int> blocks;
    if (b) blocks.push_back(b);
    if (d) blocks.push_back(d);
    MatFp e = blocks.empty() ? A.one() : A.e_comp(blocks);
    return CyclicMod(self_copy(A), e * y_mu(A, lambda), G_shift(lambda));
}

std::vector<CyclicMod> two_tensor_summands(const NHRep& A, int r, int s) {
    std::vector<CyclicMod> out;
    for (auto& lam : two_block_shapes(A.n(), r, s))
        out.push_back(truncated_G(A, r, s, lam));
    return out;
}

bool indecomposable(const CyclicMod& M) {
    auto hs = hom_space(M, M);
    int zero = 0;
    for (auto& h : hs) {
        if (h.deg < 0) return false;
        if (h.deg == 0) ++zero;
    }
    return zero == 1;
}

std::pair<int, int> double_centralizer(
    const std::vector<const CyclicMod*>& mods) {
    uint32_t p = mods.at(0)->ambient().p();
    const NHRep& B = *mods[0]->act().alg;
    std::vector<int> off;
    int dm = 0;
    std::vector<LinSolver> csolve;
    for (auto* m : mods) {
        off.push_back(dm);
        dm += m->dim();
        std::vector<std::vector<uint32_t>> cols;
        for (auto& v : m->span().basis())
            cols.push_back(m->ambient().flatten(v));
        csolve.emplace_back(std::move(cols), p);
    }
    auto mod_coords = [&](int k, const MatFp& v) {
        std::vector<uint32_t> x;
        if (!csolve[k].solve(mods[k]->ambient().flatten(v), x))
            throw std::logic_error("vector outside the summand");
        return x;
    };

    EndAlg S(mods);
    std::vector<MatFp> rho;
    for (auto& e : S.basis()) {
        MatFp op(dm, dm, p);
        for (int t = 0; t < mods[e.from]->dim(); ++t) {
            auto u = mods[e.from]->factor(mods[e.from]->span().basis()[t]);
            MatFp w = e.img * embed_coords(mods[e.to]->act(), u);
            auto x = mod_coords(e.to, w);
            for (std::size_t r = 0; r < x.size(); ++r)
                op.at(off[e.to] + r, off[e.from] + t) = x[r];
        }
        rho.push_back(std::move(op));
    }

    // commutant of the rho's inside End_k(M)
    MatFp con(0, (std::size_t)dm * dm, p);
    std::vector<uint32_t> row((std::size_t)dm * dm);
    for (auto& s : rho)
        for (int i = 0; i < dm; ++i)
            for (int j = 0; j < dm; ++j) {
                // entry (i,j) of Phi*s - s*Phi as a function of Phi
                bool nz = false;
                std::fill(row.begin(), row.end(), 0);
                for (int t = 0; t < dm; ++t) {
                    uint32_t a = s.at(t, j);  // coefficient of Phi_{i,t}
                    uint32_t b = s.at(i, t);  // coefficient of Phi_{t,j}
                    if (a) {
                        row[(std::size_t)i * dm + t] =
                            (row[(std::size_t)i * dm + t] + a) % p;
                        nz = true;
                    }
                    if (b) {
                        row[(std::size_t)t * dm + j] =
                            (row[(std::size_t)t * dm + j] + p - b) % p;
                        nz = true;
                    }
                }
                if (nz) con.append_row(row);
            }
    int comm_dim = con.rows() ? (int)con.null_space().rows() : dm * dm;

    // rank of the right action of the acting algebra on M
    MatFp act(0, (std::size_t)dm * dm, p);
    for (int i = 0; i < B.dim(); ++i) {
        MatFp op(dm, dm, p);
        for (std::size_t k = 0; k < mods.size(); ++k) {
            const MatFp& bx = mods[k]->act().images[i];
            for (int t = 0; t < mods[k]->dim(); ++t) {
                auto x = mod_coords((int)k,
                                    mods[k]->span().basis()[t] * bx);
                for (std::size_t r = 0; r < x.size(); ++r)
                    op.at(off[k] + r, off[k] + t) = x[r];
            }
        }
        // the action must commute with the hom algebra
        for (auto& s : rho)
            if (!(op * s == s * op))
                throw std::logic_error("action does not centralize homs");
        std::vector<uint32_t> v((std::size_t)dm * dm);
        for (int r = 0; r < dm; ++r)
            for (int c = 0; c < dm; ++c)
                v[(std::size_t)r * dm + c] = op.at(r, c);
        act.append_row(v);
    }
    return {comm_dim, (int)act.rank()};
}

}  // namespace nhq
