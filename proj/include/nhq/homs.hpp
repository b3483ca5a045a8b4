#pragma once

#include <functional>
#include <map>

#include "nhq/modules.hpp"

namespace nhq {

// An acting copy of NH_n^l: the abstract algebra together with the images
// of its word basis inside an ambient algebra (equal when no embedding is
// involved; for restricted modules the standard inclusion on the first n
// strands of a larger NH_m^l).
struct ActingCopy {
    const NHRep* alg;
    const NHRep* amb;
    std::vector<MatFp> images;
};

ActingCopy self_copy(const NHRep& A);
// standard inclusion NH_small -> NH_big on the first strands
ActingCopy embedded_copy(const NHRep& small, const NHRep& big);
// image of an element given by coordinates in the small word basis
MatFp embed_coords(const ActingCopy& e, const std::vector<uint32_t>& c);
MatFp embed_elem(const ActingCopy& e, const MatFp& x);

// A cyclic right module over an acting copy of NH_n^l, with a chosen
// differential on its elements (the ambient one, or a twisted variant for
// restricted modules).  Caches the annihilator of the generator as a small
// set of homogeneous right-ideal generators, which is what hom spaces out
// of the module are computed against.
class CyclicMod {
public:
    CyclicMod(ActingCopy act, const MatFp& gen,
              std::function<MatFp(const MatFp&)> diff, int shift = 0);
    // natural ambient differential
    CyclicMod(ActingCopy act, const MatFp& gen, int shift = 0);

    const ActingCopy& act() const { return act_; }
    const NHRep& ambient() const { return *act_.amb; }
    const MatFp& gen() const { return gen_; }
    int gen_deg() const { return gen_deg_; }  // shifted degree of gen
    int shift() const { return shift_; }
    // uniform regrading, e.g. to a normalization fixed after construction
    void add_shift(int d) {
        shift_ += d;
        gen_deg_ += d;
        span_.add_shift(d);
    }
    const Module& span() const { return span_; }
    int dim() const { return span_.dim(); }
    Laurent graded_char() const { return span_.graded_char(); }
    MatFp diff(const MatFp& v) const { return diff_(v); }
    bool d_stable() const;

    // homogeneous right-ideal generators of Ann(gen), as coordinate
    // vectors in the acting word basis
    const std::vector<std::vector<uint32_t>>& ann_gens() const {
        return ann_;
    }
    // homogeneous basis of the full annihilator subspace
    const std::vector<std::vector<uint32_t>>& ann_basis() const {
        return ann_basis_;
    }
    // solve gen * act(u) = v; throws if v is not in the module
    std::vector<uint32_t> factor(const MatFp& v) const;

private:
    ActingCopy act_;
    MatFp gen_;
    int shift_, gen_deg_;
    std::function<MatFp(const MatFp&)> diff_;
    Module span_;
    std::vector<std::vector<uint32_t>> ann_, ann_basis_;
    LinSolver solver_;
    void compute_ann();
};

// A homogeneous module map src -> dst is recorded by the image of the
// source generator and its degree (shifts included).
struct HomElt {
    MatFp img;
    int deg;
};

// basis of the graded hom space of right-module maps, sorted by degree;
// requires the two modules to share the same abstract acting algebra
std::vector<HomElt> hom_space(const CyclicMod& src, const CyclicMod& dst);

// (g o f)(gen_A) where f: A -> B has image img_f and g: B -> C image img_g
MatFp hom_compose(const CyclicMod& A, const CyclicMod& B, const CyclicMod& C,
                  const MatFp& img_f, const MatFp& img_g);
// image of the differential of the map src -> dst with image img
MatFp hom_differential(const CyclicMod& src, const CyclicMod& dst,
                       const MatFp& img);

// End(M_0 + ... + M_{k-1}) as a finite dimensional graded algebra with a
// differential, with basis grouped into blocks Hom(M_from, M_to).
// Elements are coordinate vectors over the chosen basis.
class EndAlg {
public:
    explicit EndAlg(std::vector<const CyclicMod*> mods);

    struct Elt {
        int from, to, deg;
        MatFp img;
    };

    int dim() const { return (int)basis_.size(); }
    int nmods() const { return (int)mods_.size(); }
    uint32_t p() const { return p_; }
    const std::vector<Elt>& basis() const { return basis_; }
    const std::vector<int>& block(int from, int to) const;
    Laurent block_char(int from, int to) const;
    Laurent total_char() const;

    // coordinates of the map from -> to with the given generator image
    std::vector<uint32_t> map_coords(int from, int to, const MatFp& img) const;
    std::vector<uint32_t> unit(int i) const;  // basis vector i
    std::vector<uint32_t> xi(int k) const;    // identity of End(M_k)

    std::vector<uint32_t> mul(const std::vector<uint32_t>& a,
                              const std::vector<uint32_t>& b) const;
    std::vector<uint32_t> dapply(const std::vector<uint32_t>& a) const;
    bool is_zero(const std::vector<uint32_t>& a) const;

    // graded span closed under left multiplication by the whole algebra;
    // generators must be homogeneous (all supported on one degree)
    struct LeftSub {
        std::map<int, RowSpace> by_deg;
        int dim = 0;
        Laurent ch;
        bool contains(const std::vector<uint32_t>& v, int deg) const;
    };
    LeftSub left_submodule(
        const std::vector<std::pair<std::vector<uint32_t>, int>>& gens) const;
    bool d_stable(const LeftSub& s) const;

    // the projective P(k) = all maps out of M_k, as generators for LeftSub
    std::vector<std::pair<std::vector<uint32_t>, int>> column_gens(
        int k) const;
    Laurent column_char(int k) const;
    // maps out of `from` factoring through any of the listed summands
    std::vector<std::pair<std::vector<uint32_t>, int>> factoring_gens(
        int from, const std::vector<int>& through) const;

private:
    std::vector<const CyclicMod*> mods_;
    uint32_t p_;
    std::vector<Elt> basis_;
    std::map<std::pair<int, int>, std::vector<int>> blocks_;
    std::map<std::pair<int, int>, LinSolver> bsolve_;
    std::vector<std::vector<std::vector<uint32_t>>> mtable_;
    std::vector<std::vector<uint32_t>> dtable_;
};

// the Schur algebra S_n(l) = End(+_lambda G(lambda)) over NH_n^l, with the
// summands ordered as all_multipartitions(n, l)
std::vector<CyclicMod> schur_summands(const NHRep& A);

// shapes 0^a 1^b 0^c 1^d with a+b = r, c+d = s, b+d = n, listed with b
// decreasing (the stratification order, biggest first)
std::vector<MultiPart> two_block_shapes(int n, int r, int s);
// run lengths (a,b,c,d) of lambda relative to the split into the first r
// and last s rows; false if either half is not a bottom-justified column
bool parse_two_block(const MultiPart& lam, int r, int s, int& a, int& b,
                     int& c, int& d);
// e_{(b,d)} y^lambda NH_n^l for a two-block shape, natural differential
CyclicMod truncated_G(const NHRep& A, int r, int s, const MultiPart& lambda);
// the summands of S_n(r, s), in two_block_shapes order
std::vector<CyclicMod> two_tensor_summands(const NHRep& A, int r, int s);

// End module endomorphism algebras are nonnegatively graded with a one
// dimensional degree zero part exactly when the module is indecomposable
// in the graded sense; this check is immune to overall grading shifts
bool indecomposable(const CyclicMod& M);

// End_B(M) for B = End_A(M) acting on M = +mods: checks that the natural
// right action of the acting algebra on M gives an isomorphism onto the
// B-linear endomorphisms.  Returns (dim End_B(M), rank of the action map).
std::pair<int, int> double_centralizer(
    const std::vector<const CyclicMod*>& mods);

}  // namespace nhq
