#include "nhq/combin.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>

namespace nhq {

Perm perm_identity(int n) {
    Perm w(n);
    std::iota(w.begin(), w.end(), 0);
    return w;
}

Perm perm_mul(const Perm& a, const Perm& b) {
    assert(a.size() == b.size());
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

Perm perm_inverse(const Perm& w) {
    Perm r(w.size());
    for (size_t i = 0; i < w.size(); ++i) r[w[i]] = (int)i;
    return r;
}

int perm_length(const Perm& w) {
    int inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

std::vector<int> reduced_word(const Perm& w) {
    // peel descents off the right: if v(i) > v(i+1) then l(v s_i) < l(v)
    Perm v = w;
    std::vector<int> rev;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < v.size(); ++i) {
            if (v[i] > v[i + 1]) {
                std::swap(v[i], v[i + 1]);
                rev.push_back((int)i);
                changed = true;
                break;
            }
        }
    }
    // w = s_{i_m} ... s_{i_1} for the collected sequence i_1,...,i_m
    std::reverse(rev.begin(), rev.end());
    return rev;
}

Perm longest_perm(int n) {
    Perm w(n);
    for (int i = 0; i < n; ++i) w[i] = n - 1 - i;
    return w;
}

std::vector<Perm> symmetric_group(int n) {
    Perm w = perm_identity(n);
    std::vector<Perm> all;
    do {
        all.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return all;
}

Poly poly_mul(const Poly& f, const Poly& g) {
    Poly r;
    for (auto& [mf, cf] : f)
        for (auto& [mg, cg] : g) {
            Mono m(mf.size());
            for (size_t i = 0; i < m.size(); ++i) m[i] = mf[i] + mg[i];
            long long& c = r[m];
            c += cf * cg;
            if (c == 0) r.erase(m);
        }
    return r;
}

Poly poly_scale(const Poly& f, long long c) {
    Poly r;
    if (c == 0) return r;
    for (auto& [m, cf] : f) r[m] = cf * c;
    return r;
}

Poly poly_add(const Poly& f, const Poly& g) {
    Poly r = f;
    for (auto& [m, c] : g) {
        long long& rc = r[m];
        rc += c;
        if (rc == 0) r.erase(m);
    }
    return r;
}

Poly complete_homogeneous(int k, int nv) {
    Poly r;
    Mono m(nv, 0);
    std::function<void(int, int)> rec = [&](int var, int rem) {
        if (var == nv - 1) {
            m[var] = rem;
            r[m] = 1;
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
        if (k == 0) r[{}] = 1;
        return r;
    }
    rec(0, k);
    return r;
}

Poly schur_poly(const std::vector<int>& mu, int nv, int off,
                int nvars_total) {
    std::vector<int> shape;
    for (int part : mu)
        if (part > 0) shape.push_back(part);
    Poly r;
    if (shape.empty()) {
        r[Mono(nvars_total, 0)] = 1;
        return r;
    }
    if ((int)shape.size() > nv) return r;  // zero
    // fill rows with entries 1..nv, rows weakly increasing, columns strict
    std::vector<std::vector<int>> t(shape.size());
    for (size_t i = 0; i < shape.size(); ++i) t[i].assign(shape[i], 0);
    std::function<void(size_t, int)> rec = [&](size_t row, int col) {
        if (row == shape.size()) {
            Mono m(nvars_total, 0);
            for (auto& rw : t)
                for (int v : rw) ++m[off + v - 1];
            ++r[m];
            return;
        }
        if (col == shape[row]) {
            rec(row + 1, 0);
            return;
        }
        int lo = 1;
        if (col > 0) lo = std::max(lo, t[row][col - 1]);
        if (row > 0 && col < shape[row - 1]) lo = std::max(lo, t[row - 1][col] + 1);
        for (int v = lo; v <= nv; ++v) {
            t[row][col] = v;
            rec(row, col + 1);
        }
    };
    rec(0, 0);
    return r;
}

std::vector<std::vector<int>> partitions_in_box(int rows, int cols) {
    std::vector<std::vector<int>> all;
    std::vector<int> mu(rows, 0);
    std::function<void(int, int)> rec = [&](int i, int maxv) {
        if (i == rows) {
            all.push_back(mu);
            return;
        }
        for (int v = maxv; v >= 0; --v) {
            mu[i] = v;
            rec(i + 1, v);
        }
    };
    if (rows == 0) {
        all.push_back({});
        return all;
    }
    rec(0, cols);
    return all;
}

std::vector<int> box_complement(const std::vector<int>& mu, int rows,
                                int cols) {
    assert((int)mu.size() == rows);
    std::vector<int> c(rows);
    for (int i = 0; i < rows; ++i) c[i] = cols - mu[rows - 1 - i];
    return c;
}

std::vector<int> conjugate_partition(const std::vector<int>& mu, int cols) {
    std::vector<int> c(cols, 0);
    for (int j = 1; j <= cols; ++j)
        for (int part : mu)
            if (part >= j) ++c[j - 1];
    return c;
}

int partition_size(const std::vector<int>& mu) {
    return std::accumulate(mu.begin(), mu.end(), 0);
}

std::vector<MultiPart> all_multipartitions(int n, int l) {
    std::vector<MultiPart> all;
    MultiPart mu(l, 0);
    std::fill(mu.begin(), mu.begin() + n, 1);
    std::sort(mu.begin(), mu.end());
    // iterate over all 0/1 arrangements; next_permutation over sorted start
    do {
        all.push_back(mu);
    } while (std::next_permutation(mu.begin(), mu.end()));
    return all;
}

bool dominates(const MultiPart& lam, const MultiPart& mu) {
    assert(lam.size() == mu.size());
    int sl = 0, sm = 0;
    for (size_t k = 0; k < lam.size(); ++k) {
        sl += lam[k];
        sm += mu[k];
        if (sl < sm) return false;
    }
    return true;
}

MultiPart minimal_multipartition(int n, int l) {
    MultiPart mu(l, 0);
    for (int i = l - n; i < l; ++i) mu[i] = 1;
    return mu;
}

std::vector<int> box_positions(const MultiPart& mu) {
    std::vector<int> js;
    for (size_t j = 0; j < mu.size(); ++j)
        if (mu[j]) js.push_back((int)j + 1);
    return js;
}

MultiPart Tableau::shape_down(int k) const {
    MultiPart s(shape.size(), 0);
    for (int i = 0; i < k; ++i) s[pos[i] - 1] = 1;
    return s;
}

Perm Tableau::perm() const {
    auto js = box_positions(shape);
    int n = (int)js.size();
    Perm w(n);
    for (int k = 0; k < n; ++k) {
        // label sitting at position js[k]
        for (int lab = 0; lab < n; ++lab)
            if (pos[lab] == js[k]) w[k] = lab;
    }
    return w;
}

int Tableau::degree() const {
    int n = (int)pos.size(), l = (int)shape.size();
    int js = 0;
    for (int j : pos) js += j;
    return n * l - js - 2 * perm_length(perm());
}

Tableau standard_tableau(const MultiPart& mu) {
    Tableau t;
    t.shape = mu;
    t.pos = box_positions(mu);
    return t;
}

std::vector<Tableau> all_tableaux(const MultiPart& mu) {
    auto js = box_positions(mu);
    std::vector<Tableau> all;
    std::sort(js.begin(), js.end());
    do {
        Tableau t;
        t.shape = mu;
        t.pos = js;
        all.push_back(t);
    } while (std::next_permutation(js.begin(), js.end()));
    return all;
}

bool tableau_geq(const Tableau& h, const Tableau& t) {
    assert(h.pos.size() == t.pos.size());
    int n = (int)h.pos.size();
    for (int k = 1; k <= n; ++k)
        if (!dominates(h.shape_down(k), t.shape_down(k))) return false;
    return true;
}

std::vector<Tableau> tableaux_above(const MultiPart& mu,
                                    const MultiPart& lambda) {
    Tableau tl = standard_tableau(lambda);
    std::vector<Tableau> r;
    for (auto& t : all_tableaux(mu))
        if (tableau_geq(t, tl)) r.push_back(t);
    return r;
}

}  // namespace nhq
