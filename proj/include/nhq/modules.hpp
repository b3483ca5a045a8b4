#pragma once

#include <functional>

#include "nhq/laurent.hpp"
#include "nhq/nh.hpp"

namespace nhq {

// A graded subspace of NH_m^l closed under right multiplication by a
// designated acting set (the word basis of NH_m^l itself, or of an
// embedded NH_n^l for restricted modules).  Elements live as operator
// matrices in the ambient algebra; the basis is kept homogeneous.
class Module {
public:
    // span of { g * b : g in gens, b in action basis }; generators must be
    // homogeneous.  `shift` is added to all ambient degrees.
    Module(const NHRep& ambient, const std::vector<MatFp>& gens,
           const std::vector<MatFp>& action, int shift = 0);
    // acting algebra = the ambient algebra itself
    Module(const NHRep& ambient, const MatFp& gen, int shift = 0);

    const NHRep& ambient() const { return *A_; }
    int dim() const { return (int)basis_.size(); }
    const std::vector<MatFp>& basis() const { return basis_; }
    int degree(int i) const { return degs_[i] + shift_; }
    int shift() const { return shift_; }
    void add_shift(int d) { shift_ += d; }
    Laurent graded_char() const;

    bool contains(const MatFp& v) const;
    bool same_space(const Module& o) const;
    bool contains_space(const Module& o) const;
    // is the space stable under the given linear map on ambient elements?
    bool stable_under(const std::function<MatFp(const MatFp&)>& op) const;
    bool d_stable() const;  // natural differential of the ambient algebra

private:
    const NHRep* A_;
    int shift_;
    std::vector<MatFp> basis_;
    std::vector<int> degs_;  // ambient degrees, unshifted
    RowSpace span_;
};

// y^mu = y_1^{l-j_1} ... y_n^{l-j_n}
MatFp y_mu(const NHRep& A, const MultiPart& mu);
// cell element psi_h^* y^mu psi_t; its degree is deg(h)+deg(t)
MatFp cell_elem(const NHRep& A, const Tableau& h, const Tableau& t);

// G(lambda) = q^{-nl + j_1+...+j_n} y^lambda NH_n^l
Module G_module(const NHRep& A, const MultiPart& lambda);
int G_shift(const MultiPart& lambda);

struct CellEntry {
    MultiPart mu;
    Tableau h, t;
    int deg;
    MatFp mat;
};

// the full cellular basis { psi^mu_{ht} }, grouped by shape
std::vector<CellEntry> cellular_basis(const NHRep& A);

// coordinate span of cell elements with shape > mu (or >= mu)
RowSpace cell_ideal(const NHRep& A, const std::vector<CellEntry>& cb,
                    const MultiPart& mu, bool strict);

// Specht module S^mu as the span of { psi^mu_{t^mu, h} } inside the cell
// quotient NH / NH^{> mu}.  Returns its graded character (in the cellular
// normalization char = sum_h q^{deg(h)}) and checks the expected rank.
Laurent specht_char(const NHRep& A, const std::vector<CellEntry>& cb,
                    const MultiPart& mu);
// is the Specht subspace generated from tableau t stable under the
// differential, inside the cell quotient?
bool specht_d_stable(const NHRep& A, const std::vector<CellEntry>& cb,
                     const MultiPart& mu, const Tableau& t);

// sum over h in Tab(mu) of q^{deg(h)}
Laurent tab_char(const MultiPart& mu);

// Chain of submodules of y^lambda NH built from the tableaux in
// cup_mu Tab^lambda(mu), ordered downward; verifies each layer is a
// submodule whose character is q^{deg(w_i)} char S^{nu_i}, and that the
// total matches G(lambda).  Returns false with no side effects otherwise.
bool specht_filtration_check(const NHRep& A, const MultiPart& lambda);

}  // namespace nhq
