#pragma once

#include <cstdint>
#include <vector>

#include "nhq/kernels.hpp"

namespace nhq {

uint32_t fp_inv(uint32_t a, uint32_t p);

// Dense matrix over F_p, row major, entries stored reduced in [0, p).
class MatFp {
public:
    MatFp() : rows_(0), cols_(0), p_(2) {}
    MatFp(std::size_t rows, std::size_t cols, uint32_t p)
        : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}
    static MatFp identity(std::size_t n, uint32_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    uint32_t p() const { return p_; }

    uint32_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    uint32_t at(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }
    uint32_t* row(std::size_t i) { return a_.data() + i * cols_; }
    const uint32_t* row(std::size_t i) const { return a_.data() + i * cols_; }

    void set(std::size_t i, std::size_t j, long long v);  // reduces mod p

    MatFp operator*(const MatFp& o) const;
    MatFp operator+(const MatFp& o) const;
    MatFp operator-(const MatFp& o) const;
    MatFp scaled(uint32_t c) const;
    MatFp transpose() const;
    bool operator==(const MatFp& o) const;
    bool is_zero() const;

    void append_row(const std::vector<uint32_t>& r);
    std::vector<uint32_t> row_vec(std::size_t i) const;

    // in-place reduced row echelon form; returns pivot column indices
    std::vector<std::size_t> rref();
    std::size_t rank() const;

    // basis of the right kernel {x : A x = 0}, as columns collected in rows
    // of the returned matrix (each row is one kernel vector)
    MatFp null_space() const;

    // solve A x = b; returns true and writes x (one solution) if consistent
    bool solve(const std::vector<uint32_t>& b, std::vector<uint32_t>& x) const;

private:
    std::size_t rows_, cols_;
    uint32_t p_;
    std::vector<uint32_t> a_;
};

// Repeated solving of A x = b against a fixed A, given by its columns.
// A full-rank row subset is selected once and a transformation matrix is
// precomputed; every solution is verified against the original columns,
// so an inconsistent b is always detected.
class LinSolver {
public:
    LinSolver() = default;
    LinSolver(std::vector<std::vector<uint32_t>> cols, uint32_t p);

    std::size_t rank() const { return piv_.size(); }
    std::size_t ncols() const { return cols_.size(); }
    bool solve(const std::vector<uint32_t>& b, std::vector<uint32_t>& x) const;

private:
    uint32_t p_ = 2;
    std::size_t m_ = 0;                        // length of b
    std::vector<std::vector<uint32_t>> cols_;  // original columns
    std::vector<std::size_t> rows_;            // selected row indices
    MatFp trans_;                              // RREF transformation
    std::vector<std::size_t> piv_;             // pivot columns of the RREF
};

// Incremental row space: feed vectors, tracks an RREF basis.  Used for
// spanning right ideals degreewise and for membership tests.
class RowSpace {
public:
    RowSpace(std::size_t dim, uint32_t p) : dim_(dim), p_(p) {}
    // returns true if v was independent of the current span (and got added)
    bool add(std::vector<uint32_t> v);
    bool contains(std::vector<uint32_t> v) const;
    std::size_t rank() const { return basis_.size(); }
    std::size_t dim() const { return dim_; }
    const std::vector<std::vector<uint32_t>>& basis() const { return basis_; }
    // coordinates of v in the stored basis; returns false if not in span
    bool coords(std::vector<uint32_t> v, std::vector<uint32_t>& out) const;

private:
    // reduce v against the basis; returns pivot position or dim_ if zero,
    // optionally recording the coefficients used
    std::size_t reduce(std::vector<uint32_t>& v,
                       std::vector<uint32_t>* used) const;
    std::size_t dim_;
    uint32_t p_;
    std::vector<std::vector<uint32_t>> basis_;  // rref rows
    std::vector<std::size_t> pivots_;
};

}  // namespace nhq
