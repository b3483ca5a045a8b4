#pragma once

#include <map>
#include <memory>

#include "nhq/combin.hpp"
#include "nhq/matfp.hpp"
#include "nhq/polyquot.hpp"

namespace nhq {

// A word in the generators; used to push the differential through
// products by the Leibniz rule.
struct Letter {
    enum Kind { Y, PSI } kind;
    int idx;  // 1-based strand (Y) or crossing (PSI) index
};

// The cyclotomic nilHecke algebra NH_n^l over F_p, realized faithfully as
// operators on F_p[y_1..y_n]/(h_{l-n+1},...,h_l): y_i acts by
// multiplication and psi_i by the Demazure operator.  Elements are N x N
// matrices (N = l!/(l-n)!); the algebra has the word basis
// { y^a psi_w : 0 <= a_i <= l-i, w in S_n } of size n! * l!/(l-n)!.
class NHRep {
public:
    NHRep(int n, int l, uint32_t p);

    int n() const { return n_; }
    int l() const { return l_; }
    uint32_t p() const { return p_; }
    const PolyQuotient& poly() const { return P_; }
    int N() const { return P_.dim(); }
    int dim() const { return (int)basis_.size(); }

    MatFp one() const { return MatFp::identity(N(), p_); }
    MatFp zero() const { return MatFp(N(), N(), p_); }
    const MatFp& y(int i) const { return P_.y_op(i - 1); }
    const MatFp& psi(int i) const { return P_.psi_op(i - 1); }
    MatFp psi_perm(const Perm& w) const;
    MatFp mono_y(const Mono& a) const;  // y_1^{a_1} ... y_n^{a_n}
    MatFp poly_elem(const Poly& f) const { return P_.poly_op(f); }
    MatFp word_elem(const std::vector<Letter>& word) const;

    struct BasisElt {
        Mono a;
        Perm w;
        int deg;  // 2|a| - 2 len(w)
    };
    const std::vector<BasisElt>& basis() const { return basis_; }
    const MatFp& basis_mat(int i) const { return basis_mat_[i]; }

    std::vector<uint32_t> flatten(const MatFp& x) const;
    // coordinates in the word basis; throws if x is not in the span
    std::vector<uint32_t> coords(const MatFp& x) const;
    MatFp from_coords(const std::vector<uint32_t>& c) const;

    std::map<int, MatFp> graded_parts(const MatFp& x) const;
    bool is_homogeneous(const MatFp& x, int* deg = nullptr) const;
    int degree_of(const MatFp& x) const;  // requires homogeneous

    // the derivation with d(y_i) = y_i^2, d(psi_i) = -y_i psi_i - psi_i
    // y_{i+1}, extended to the word basis by the Leibniz rule
    MatFp differential(const MatFp& x) const;
    MatFp word_differential(const std::vector<Letter>& word) const;
    // matrix of the differential on word-basis coordinates
    const MatFp& differential_coords() const { return dmat_; }

    // anti-automorphism fixing the generators and reversing products
    MatFp star(const MatFp& x) const;

    // e_m on strands off+1, ..., off+m
    MatFp e_thick(int off, int m) const;
    std::vector<Letter> e_thick_word(int off, int m) const;
    MatFp e_comp(const std::vector<int>& blocks) const;
    std::vector<Letter> e_comp_word(const std::vector<int>& blocks) const;
    // rotated quasi-idempotent psi_{w_0} y^{(0,1,...,m-1)} on the block
    MatFp e_prime(int off, int m) const;
    std::vector<Letter> e_prime_word(int off, int m) const;
    // sign-corrected genuine idempotent (-1)^{m(m-1)/2} e_prime
    MatFp e_star(int off, int m) const;

    // block shuffle crossing the first a strands over the following b
    MatFp psi_shuffle(int a, int b) const;
    // minimal idempotent attached to a partition mu in the a x b box
    MatFp e_mu(const std::vector<int>& mu, int a, int b) const;

    // homogeneous symmetric trace of degree -2n(l-n) as a functional on
    // word-basis coordinates; the Gram matrix tau(b_i b_j) is invertible
    std::vector<uint32_t> symmetric_trace() const;
    MatFp gram_matrix(const std::vector<uint32_t>& tau) const;

private:
    friend struct CacheIO;
    NHRep() : n_(0), l_(0), p_(2) {}
    int n_, l_;
    uint32_t p_;
    PolyQuotient P_;
    std::vector<BasisElt> basis_;
    std::vector<MatFp> basis_mat_;
    std::vector<Letter> basis_word(int i) const;
    // coordinate solver: rows of the flattened basis span where it has
    // full rank, and the inverse of that square slice
    std::vector<std::size_t> pivot_rows_;
    MatFp sinv_;
    MatFp dmat_;       // differential on coordinates
    MatFp star_mat_;   // star on coordinates
};

}  // namespace nhq
