#include "nhq/polyquot.hpp"

#include <cassert>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace nhq {

namespace {

// all monomials in nv variables of total degree d
std::vector<Mono> monomials_of_degree(int nv, int d) {
    std::vector<Mono> out;
    Mono m(nv, 0);
    std::function<void(int, int)> rec = [&](int var, int rem) {
        if (var == nv - 1) {
            m[var] = rem;
            out.push_back(m);
            m[var] = 0;
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            m[var] = e;
            rec(var + 1, rem - e);
        }
        m[var] = 0;
    };
    if (nv == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    rec(0, d);
    return out;
}

}  // namespace

PolyQuotient::PolyQuotient(int n, int l, uint32_t p) : n_(n), l_(l), p_(p) {
    assert(0 < n && n <= l);
    // basis monomials: a_i <= l - (i+1) (0-based)
    max_deg_ = 0;
    for (int i = 0; i < n; ++i) max_deg_ += l - 1 - i;
    Mono a(n, 0);
    std::function<void(int)> gen = [&](int i) {
        if (i == n) {
            index_[a] = (int)basis_.size();
            basis_.push_back(a);
            deg_.push_back(std::accumulate(a.begin(), a.end(), 0));
            return;
        }
        for (int e = 0; e <= l - 1 - i; ++e) {
            a[i] = e;
            gen(i + 1);
        }
        a[i] = 0;
    };
    gen(0);

    // normal forms of out-of-range monomials, degree by degree, by row
    // reducing the span of { m * h_k : l-n+1 <= k <= l } against a column
    // order putting non-basis monomials first
    std::vector<Poly> hs;
    for (int k = l - n + 1; k <= l; ++k)
        hs.push_back(complete_homogeneous(k, n));
    for (int d = 0; d <= max_deg_; ++d) {
        auto monos = monomials_of_degree(n, d);
        std::vector<Mono> nonbasis, inbasis;
        for (auto& m : monos)
            (index_.count(m) ? inbasis : nonbasis).push_back(m);
        if (nonbasis.empty()) continue;
        std::map<Mono, int> col;
        for (auto& m : nonbasis) col[m] = (int)col.size();
        for (auto& m : inbasis) col[m] = (int)col.size();
        MatFp rows(0, monos.size(), p_);
        for (size_t ki = 0; ki < hs.size(); ++ki) {
            int k = l - n + 1 + (int)ki;
            if (d < k) continue;
            for (auto& m : monomials_of_degree(n, d - k)) {
                std::vector<uint32_t> row(monos.size(), 0);
                for (auto& [hm, hc] : hs[ki]) {
                    Mono prod(n);
                    for (int i = 0; i < n; ++i) prod[i] = m[i] + hm[i];
                    long long c = hc % (long long)p_;
                    if (c < 0) c += p_;
                    row[col[prod]] = (row[col[prod]] + (uint32_t)c) % p_;
                }
                rows.append_row(row);
            }
        }
        auto piv = rows.rref();
        if (piv.size() != nonbasis.size())
            throw std::logic_error("monomial basis does not match ideal");
        for (size_t r = 0; r < piv.size(); ++r) {
            if (piv[r] >= nonbasis.size())
                throw std::logic_error("pivot escaped non-basis columns");
            std::vector<uint32_t> nf(basis_.size(), 0);
            for (size_t j = 0; j < inbasis.size(); ++j) {
                uint32_t c = rows.at(r, nonbasis.size() + j);
                if (c) nf[index_[inbasis[j]]] = p_ - c;
            }
            overflow_[nonbasis[piv[r]]] = nf;
        }
    }

    // multiplication operators
    int N = dim();
    for (int i = 0; i < n; ++i) {
        MatFp Y(N, N, p_);
        for (int j = 0; j < N; ++j) {
            Mono m = basis_[j];
            ++m[i];
            auto v = reduce_mono(m, 1);
            for (int r = 0; r < N; ++r) Y.at(r, j) = v[r];
        }
        yop_.push_back(Y);
    }
    // Demazure operators; applied to a basis monomial the result is again
    // a combination of basis monomials (exponent bounds only shrink)
    for (int i = 0; i + 1 < n; ++i) {
        MatFp D(N, N, p_);
        for (int j = 0; j < N; ++j) {
            Mono m = basis_[j];
            int A = m[i], B = m[i + 1];
            if (A == B) continue;
            int sgn = A > B ? 1 : -1;
            int lo = std::min(A, B), hi = std::max(A, B);
            for (int c = lo; c <= hi - 1; ++c) {
                Mono t = m;
                t[i] = c;
                t[i + 1] = A + B - 1 - c;
                auto it = index_.find(t);
                assert(it != index_.end());
                D.at(it->second, j) =
                    (uint32_t)((sgn > 0) ? 1 : p_ - 1);
            }
        }
        psiop_.push_back(D);
    }
}

std::vector<uint32_t> PolyQuotient::reduce_mono(Mono m, long long c) const {
    std::vector<uint32_t> v(basis_.size(), 0);
    long long cc = c % (long long)p_;
    if (cc < 0) cc += p_;
    if (cc == 0) return v;
    int d = std::accumulate(m.begin(), m.end(), 0);
    if (d > max_deg_) return v;
    auto it = index_.find(m);
    if (it != index_.end()) {
        v[it->second] = (uint32_t)cc;
        return v;
    }
    auto nf = overflow_.find(m);
    assert(nf != overflow_.end());
    for (size_t i = 0; i < v.size(); ++i)
        v[i] = (uint32_t)((uint64_t)nf->second[i] * cc % p_);
    return v;
}

std::vector<uint32_t> PolyQuotient::reduce(const Poly& f) const {
    // multiply operators into the constant 1 so arbitrary degrees reduce
    // one variable at a time
    auto op = poly_op(f);
    Mono one(n_, 0);
    int idx = index_.at(one);
    std::vector<uint32_t> v(basis_.size());
    for (size_t r = 0; r < v.size(); ++r) v[r] = op.at(r, idx);
    return v;
}

MatFp PolyQuotient::poly_op(const Poly& f) const {
    int N = dim();
    MatFp acc(N, N, p_);
    for (auto& [m, c] : f) {
        MatFp t = MatFp::identity(N, p_);
        for (int i = 0; i < n_; ++i)
            for (int e = 0; e < m[i]; ++e) t = yop_[i] * t;
        long long cc = c % (long long)p_;
        if (cc < 0) cc += p_;
        acc = acc + t.scaled((uint32_t)cc);
    }
    return acc;
}

}  // namespace nhq
