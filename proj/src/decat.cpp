#include "nhq/decat.hpp"

#include <stdexcept>

namespace nhq {

namespace {

// E^{(t)} v_i = [l-i+t, t] v_{i-t} on V_l; zero coefficient when out of
// range
Laurent weyl_E(int l, int i, int t, int& out) {
    out = i - t;
    if (out < 0) return Laurent();
    return quantum_binom(l - i + t, t);
}

Laurent weyl_F(int l, int i, int t, int& out) {
    out = i + t;
    if (out > l) return Laurent();
    return quantum_binom(i + t, t);
}

}  // namespace

TensorRep::Vec TensorRep::unit(int i, int j) const {
    Vec v = zero();
    v[idx(i, j)] = Laurent(1);
    return v;
}

TensorRep::Vec TensorRep::apply_E(int t, const Vec& v) const {
    Vec out = zero();
    for (int i = 0; i <= r_; ++i)
        for (int j = 0; j <= s_; ++j) {
            const Laurent& c = v[idx(i, j)];
            if (c.is_zero()) continue;
            for (int u = 0; u <= t; ++u) {
                int i2, j2;
                Laurent cl = weyl_E(r_, i, t - u, i2);
                if (cl.is_zero()) continue;
                Laurent cr = weyl_E(s_, j, u, j2);
                if (cr.is_zero()) continue;
                // q^{-u(t-u)} E^{(t-u)} K^{-u} (x) E^{(u)}
                int kpow = -u * (r_ - 2 * i) - u * (t - u);
                out[idx(i2, j2)] += (c * cl * cr).shifted(kpow);
            }
        }
    return out;
}

TensorRep::Vec TensorRep::apply_F(int t, const Vec& v) const {
    Vec out = zero();
    for (int i = 0; i <= r_; ++i)
        for (int j = 0; j <= s_; ++j) {
            const Laurent& c = v[idx(i, j)];
            if (c.is_zero()) continue;
            for (int u = 0; u <= t; ++u) {
                int i2, j2;
                Laurent cl = weyl_F(r_, i, t - u, i2);
                if (cl.is_zero()) continue;
                Laurent cr = weyl_F(s_, j, u, j2);
                if (cr.is_zero()) continue;
                // q^{-u(t-u)} F^{(t-u)} (x) F^{(u)} K^{t-u}
                int kpow = (t - u) * (s_ - 2 * j) - u * (t - u);
                out[idx(i2, j2)] += (c * cl * cr).shifted(kpow);
            }
        }
    return out;
}

TensorRep::Vec TensorRep::canonical(int b, int d) const {
    int a = r_ - b, c = s_ - d;
    (void)a;
    Vec out = zero();
    for (int j = 0;; ++j) {
        if (b + j > r_ || d - j < 0) break;
        Laurent coef = b <= c ? quantum_binom(b + j, j).shifted(j * (j + c))
                              : quantum_binom(c + j, j).shifted(j * (j + b));
        if (coef.is_zero()) break;
        out[idx(b + j, d - j)] += coef;
    }
    return out;
}

TensorRep::Vec TensorRep::canonical_divided(int b, int d) const {
    int a = r_ - b, c = s_ - d;
    Vec v = unit(r_, 0);
    if (b <= c) return apply_F(d, apply_E(a, v));
    return apply_E(a, apply_F(d, v));
}

TensorRep::Vec TensorRep::in_canonical(const Vec& v) const {
    Vec rest = v, out = zero();
    // within each weight, canonical elements are unitriangular over the
    // standard basis with leading entry at (b, d) and tails at larger b;
    // peel from small b so tails are cleared before they are read
    for (int b = 0; b <= r_; ++b)
        for (int d = 0; d <= s_; ++d) {
            Laurent c = rest[idx(b, d)];
            if (c.is_zero()) continue;
            Vec cb = canonical(b, d);
            for (int k = 0; k < dim(); ++k) rest[k] -= c * cb[k];
            out[idx(b, d)] = c;
        }
    for (auto& c : rest)
        if (!c.is_zero())
            throw std::logic_error("canonical expansion did not terminate");
    return out;
}

bool ef_commutator_check(int r, int s) {
    TensorRep T(r, s);
    for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= s; ++j) {
            auto v = T.unit(i, j);
            auto lhs = T.apply_E(1, T.apply_F(1, v));
            auto rhs = T.apply_F(1, T.apply_E(1, v));
            int w = r + s - 2 * (i + j);
            for (int k = 0; k < T.dim(); ++k) {
                Laurent want = k == T.idx(i, j) ? quantum_int(w) : Laurent();
                if (lhs[k] - rhs[k] != want) return false;
            }
        }
    return true;
}

std::vector<std::pair<int, int>> weight_labels(int n, int r, int s) {
    std::vector<std::pair<int, int>> out;
    for (int b = std::min(n, r); b >= std::max(0, n - s); --b)
        out.emplace_back(b, n - b);
    return out;
}

std::vector<std::vector<Laurent>> canonical_ef_matrix(int r, int s, int n,
                                                      bool is_e) {
    TensorRep T(r, s);
    auto cols = weight_labels(n, r, s);
    auto rows = weight_labels(n + (is_e ? -1 : 1), r, s);
    std::vector<std::vector<Laurent>> M(rows.size(),
                                        std::vector<Laurent>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto [b, d] = cols[j];
        auto img = is_e ? T.apply_E(1, T.canonical(b, d))
                        : T.apply_F(1, T.canonical(b, d));
        auto exp = T.in_canonical(img);
        for (std::size_t i = 0; i < rows.size(); ++i)
            M[i][j] = exp[T.idx(rows[i].first, rows[i].second)];
    }
    return M;
}

}  // namespace nhq
