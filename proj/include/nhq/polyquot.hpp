#pragma once

#include <map>

#include "nhq/combin.hpp"
#include "nhq/matfp.hpp"

namespace nhq {

// The quotient F_p[y_1,...,y_n] / (h_{l-n+1}, ..., h_l) where h_k are the
// complete homogeneous symmetric polynomials.  It carries a faithful
// action of the cyclotomic nilHecke algebra: y_i acts by multiplication
// and psi_i by the Demazure operator (f - s_i f)/(y_i - y_{i+1}).
// Monomials y^a with 0 <= a_i <= l - i descend to a basis, of size
// l!/(l-n)!.
class PolyQuotient {
public:
    PolyQuotient(int n, int l, uint32_t p);

    int n() const { return n_; }
    int l() const { return l_; }
    uint32_t p() const { return p_; }
    int dim() const { return (int)basis_.size(); }
    const std::vector<Mono>& basis() const { return basis_; }
    int basis_degree(int i) const { return deg_[i]; }

    // operator matrices (column-vector convention: (AB)f = A(B f))
    const MatFp& y_op(int i) const { return yop_[i]; }      // 0-based, y_{i+1}
    const MatFp& psi_op(int i) const { return psiop_[i]; }  // psi_{i+1}

    // image of a polynomial with integer coefficients in the quotient
    std::vector<uint32_t> reduce(const Poly& f) const;
    // multiplication-by-f operator
    MatFp poly_op(const Poly& f) const;

private:
    friend struct CacheIO;
    friend class NHRep;
    PolyQuotient() : n_(0), l_(0), p_(2), max_deg_(0) {}
    std::vector<uint32_t> reduce_mono(Mono m, long long c) const;
    int n_, l_;
    uint32_t p_;
    std::vector<Mono> basis_;
    std::vector<int> deg_;
    std::map<Mono, int> index_;
    // normal form of each monomial with some coordinate out of range,
    // for total degree up to the maximal basis degree; anything of larger
    // degree is zero in the quotient
    std::map<Mono, std::vector<uint32_t>> overflow_;
    std::vector<MatFp> yop_, psiop_;
    int max_deg_;
};

}  // namespace nhq
