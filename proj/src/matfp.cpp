#include "nhq/matfp.hpp"

#include <cassert>
#include <stdexcept>

namespace nhq {

uint32_t fp_inv(uint32_t a, uint32_t p) {
    assert(a % p != 0);
    // p is prime, so a^{p-2} works
    uint64_t base = a % p, r = 1;
    uint32_t e = p - 2;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return (uint32_t)r;
}

MatFp MatFp::identity(std::size_t n, uint32_t p) {
    MatFp m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void MatFp::set(std::size_t i, std::size_t j, long long v) {
    long long r = v % (long long)p_;
    if (r < 0) r += p_;
    at(i, j) = (uint32_t)r;
}

MatFp MatFp::operator*(const MatFp& o) const {
    assert(cols_ == o.rows_ && p_ == o.p_);
    MatFp r(rows_, o.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            uint32_t c = at(i, k);
            if (c) kern::axpy_mod(r.row(i), o.row(k), c, o.cols_, p_);
        }
    return r;
}

MatFp MatFp::operator+(const MatFp& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_);
    MatFp r = *this;
    kern::axpy_mod(r.a_.data(), o.a_.data(), 1, a_.size(), p_);
    return r;
}

MatFp MatFp::operator-(const MatFp& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_);
    MatFp r = *this;
    kern::axpy_mod(r.a_.data(), o.a_.data(), p_ - 1, a_.size(), p_);
    return r;
}

MatFp MatFp::scaled(uint32_t c) const {
    MatFp r = *this;
    kern::scale_mod(r.a_.data(), c % p_, a_.size(), p_);
    return r;
}

MatFp MatFp::transpose() const {
    MatFp r(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool MatFp::operator==(const MatFp& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_;
}

bool MatFp::is_zero() const {
    for (uint32_t v : a_)
        if (v) return false;
    return true;
}

void MatFp::append_row(const std::vector<uint32_t>& r) {
    assert(r.size() == cols_ || (rows_ == 0 && cols_ == 0));
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
}

std::vector<uint32_t> MatFp::row_vec(std::size_t i) const {
    return std::vector<uint32_t>(row(i), row(i) + cols_);
}

std::vector<std::size_t> MatFp::rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t sel = rows_;
        for (std::size_t i = r; i < rows_; ++i)
            if (at(i, c)) {
                sel = i;
                break;
            }
        if (sel == rows_) continue;
        if (sel != r)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(at(sel, j), at(r, j));
        uint32_t inv = fp_inv(at(r, c), p_);
        kern::scale_mod(row(r), inv, cols_, p_);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            uint32_t f = at(i, c);
            if (f) kern::axpy_mod(row(i), row(r), p_ - f, cols_, p_);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t MatFp::rank() const {
    MatFp m = *this;
    return m.rref().size();
}

MatFp MatFp::null_space() const {
    MatFp m = *this;
    auto piv = m.rref();
    std::vector<bool> is_piv(cols_, false);
    for (auto c : piv) is_piv[c] = true;
    MatFp ker(0, cols_, p_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (is_piv[c]) continue;
        std::vector<uint32_t> v(cols_, 0);
        v[c] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            v[piv[i]] = (p_ - m.at(i, c)) % p_;
        ker.append_row(v);
    }
    return ker;
}

bool MatFp::solve(const std::vector<uint32_t>& b,
                  std::vector<uint32_t>& x) const {
    assert(b.size() == rows_);
    MatFp aug(rows_, cols_ + 1, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i] % p_;
    }
    auto piv = aug.rref();
    if (!piv.empty() && piv.back() == cols_) return false;  // inconsistent
    x.assign(cols_, 0);
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug.at(i, cols_);
    return true;
}

LinSolver::LinSolver(std::vector<std::vector<uint32_t>> cols, uint32_t p)
    : p_(p), cols_(std::move(cols)) {
    std::size_t nc = cols_.size();
    m_ = nc ? cols_[0].size() : 0;
    // pick a maximal independent set of rows of A
    RowSpace seen(nc, p_);
    std::vector<uint32_t> r(nc);
    for (std::size_t i = 0; i < m_ && seen.rank() < nc; ++i) {
        for (std::size_t j = 0; j < nc; ++j) r[j] = cols_[j][i];
        if (seen.add(r)) rows_.push_back(i);
    }
    // RREF of [A_rows | I]; the right half maps b_rows to the reduced rhs
    std::size_t k = rows_.size();
    MatFp aug(k, nc + k, p_);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < nc; ++j) aug.at(i, j) = cols_[j][rows_[i]];
        aug.at(i, nc + i) = 1;
    }
    auto piv = aug.rref();
    piv_.assign(piv.begin(), piv.end());
    trans_ = MatFp(k, k, p_);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) trans_.at(i, j) = aug.at(i, nc + j);
}

bool LinSolver::solve(const std::vector<uint32_t>& b,
                      std::vector<uint32_t>& x) const {
    assert(b.size() == m_);
    std::size_t k = rows_.size();
    x.assign(cols_.size(), 0);
    for (std::size_t i = 0; i < k; ++i) {
        uint64_t acc = 0;
        for (std::size_t j = 0; j < k; ++j)
            acc += (uint64_t)trans_.at(i, j) * (b[rows_[j]] % p_);
        if (i < piv_.size()) x[piv_[i]] = (uint32_t)(acc % p_);
        else if (acc % p_) return false;
    }
    // verify against the full system
    std::vector<uint32_t> chk(b);
    for (auto& v : chk) v %= p_;
    for (std::size_t j = 0; j < cols_.size(); ++j)
        if (x[j]) kern::axpy_mod(chk.data(), cols_[j].data(), p_ - x[j], m_, p_);
    for (uint32_t v : chk)
        if (v) return false;
    return true;
}

std::size_t RowSpace::reduce(std::vector<uint32_t>& v,
                             std::vector<uint32_t>* used) const {
    if (used) used->assign(basis_.size(), 0);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        uint32_t c = v[pivots_[i]];
        if (!c) continue;
        if (used) (*used)[i] = c;
        kern::axpy_mod(v.data(), basis_[i].data(), p_ - c, dim_, p_);
    }
    for (std::size_t j = 0; j < dim_; ++j)
        if (v[j]) return j;
    return dim_;
}

bool RowSpace::add(std::vector<uint32_t> v) {
    assert(v.size() == dim_);
    std::size_t pv = reduce(v, nullptr);
    if (pv == dim_) return false;
    uint32_t inv = fp_inv(v[pv], p_);
    kern::scale_mod(v.data(), inv, dim_, p_);
    // back-substitute into existing rows to keep the basis in rref
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        uint32_t c = basis_[i][pv];
        if (c) kern::axpy_mod(basis_[i].data(), v.data(), p_ - c, dim_, p_);
    }
    // insert keeping pivots sorted
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < pv) ++pos;
    basis_.insert(basis_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, pv);
    return true;
}

bool RowSpace::contains(std::vector<uint32_t> v) const {
    assert(v.size() == dim_);
    return reduce(v, nullptr) == dim_;
}

bool RowSpace::coords(std::vector<uint32_t> v,
                      std::vector<uint32_t>& out) const {
    assert(v.size() == dim_);
    return reduce(v, &out) == dim_;
}

}  // namespace nhq
