#pragma once

#include <vector>

#include "nhq/laurent.hpp"

namespace nhq {

// The tensor product V_r (x) V_s of Weyl modules over Z[q, q^{-1}], with
// standard basis v_i (x) v_j.  Vectors are Laurent coefficient lists
// indexed by idx(i, j).  Divided power operators act through the
// comultiplication
//   E^{(t)} -> sum_j q^{-j(t-j)} E^{(t-j)} K^{-j} (x) E^{(j)},
//   F^{(t)} -> sum_j q^{-j(t-j)} F^{(t-j)} (x) F^{(j)} K^{t-j},
// with E^{(t)} v_i = [l-i+t, t] v_{i-t}, F^{(t)} v_i = [i+t, t] v_{i+t}
// and K v_i = q^{l-2i} v_i on a single factor V_l.
class TensorRep {
public:
    using Vec = std::vector<Laurent>;

    TensorRep(int r, int s) : r_(r), s_(s) {}
    int r() const { return r_; }
    int s() const { return s_; }
    int dim() const { return (r_ + 1) * (s_ + 1); }
    int idx(int i, int j) const { return i * (s_ + 1) + j; }
    // weight of the standard basis vector at linear index k
    int weight_at(int k) const {
        return r_ + s_ - 2 * (k / (s_ + 1)) - 2 * (k % (s_ + 1));
    }

    Vec zero() const { return Vec(dim()); }
    Vec unit(int i, int j) const;

    Vec apply_E(int t, const Vec& v) const;
    Vec apply_F(int t, const Vec& v) const;

    // v_b diamond v_d by the closed formula: for c = s - d and a = r - b,
    //   sum_j q^{j(j+c)} [b+j, j] v_{b+j} (x) v_{d-j}   when b <= c,
    //   sum_j q^{j(j+b)} [c+j, j] v_{b+j} (x) v_{d-j}   when b >= c.
    Vec canonical(int b, int d) const;
    // the same element built by divided powers from v_r (x) v_0:
    // F^{(d)} E^{(a)} for b <= c, E^{(a)} F^{(d)} for b >= c
    Vec canonical_divided(int b, int d) const;

    // expand a vector over the canonical basis; out[idx(b, d)] is the
    // coefficient of v_b diamond v_d (unitriangular back substitution)
    Vec in_canonical(const Vec& v) const;

private:
    int r_, s_;
};

// (EF - FE) v = [weight] v on every standard basis vector, exactly over
// Z[q, q^{-1}] and hence also after reduction into O_p
bool ef_commutator_check(int r, int s);

// labels (b, d) with b + d = n, b descending, matching the stratification
// order used for the module families
std::vector<std::pair<int, int>> weight_labels(int n, int r, int s);

// matrix of E (n boxes -> n - 1) or F (n -> n + 1) on the canonical
// basis: column j lists the coefficients over the canonical labels of the
// neighbouring weight
std::vector<std::vector<Laurent>> canonical_ef_matrix(int r, int s, int n,
                                                      bool is_e);

}  // namespace nhq
