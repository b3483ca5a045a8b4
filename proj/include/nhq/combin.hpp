#pragma once

#include <map>
#include <vector>

namespace nhq {

// --- permutations (0-based one-line notation: w[i] = w(i)) ---

using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_mul(const Perm& a, const Perm& b);  // (a*b)(i) = a(b(i))
Perm perm_inverse(const Perm& w);
int perm_length(const Perm& w);  // number of inversions
// word (i_1,...,i_k), 0-based, with w = s_{i_1} ... s_{i_k}; deterministic
std::vector<int> reduced_word(const Perm& w);
Perm longest_perm(int n);
std::vector<Perm> symmetric_group(int n);

// --- multivariate polynomials with integer coefficients ---

using Mono = std::vector<int>;                // exponent vector
using Poly = std::map<Mono, long long>;

Poly poly_mul(const Poly& f, const Poly& g);
Poly poly_scale(const Poly& f, long long c);
Poly poly_add(const Poly& f, const Poly& g);

// complete homogeneous symmetric polynomial h_k(y_1,...,y_nv)
Poly complete_homogeneous(int k, int nv);

// Schur polynomial s_mu(y_1,...,y_nv) computed as the generating function
// of semistandard tableaux; agrees with the bialternant form.  The
// exponent vectors have length nvars_total with the variables used being
// y_{off+1}, ..., y_{off+nv}.
Poly schur_poly(const std::vector<int>& mu, int nv, int off, int nvars_total);

// --- partitions in a box ---

// weakly decreasing tuples (mu_1 >= ... >= mu_rows), 0 <= mu_i <= cols
std::vector<std::vector<int>> partitions_in_box(int rows, int cols);
// complement in a rows x cols box: (cols - mu_rows, ..., cols - mu_1)
std::vector<int> box_complement(const std::vector<int>& mu, int rows,
                                int cols);
std::vector<int> conjugate_partition(const std::vector<int>& mu, int cols);
int partition_size(const std::vector<int>& mu);

// --- one-column multipartitions: 0/1 vectors of length l with n ones ---

using MultiPart = std::vector<int>;

std::vector<MultiPart> all_multipartitions(int n, int l);
// dominance: lam >= mu iff every prefix sum of lam dominates that of mu
bool dominates(const MultiPart& lam, const MultiPart& mu);
MultiPart minimal_multipartition(int n, int l);  // boxes on the right
// 1-based positions j_1 < ... < j_n of the boxes
std::vector<int> box_positions(const MultiPart& mu);

// A tableau of shape mu is a bijection from the box positions to {1..n};
// stored as pos[k] = 1-based position carrying label k+1.
struct Tableau {
    MultiPart shape;
    std::vector<int> pos;

    bool operator==(const Tableau& o) const {
        return shape == o.shape && pos == o.pos;
    }
    // shape of the subtableau containing labels 1..k
    MultiPart shape_down(int k) const;
    Perm perm() const;   // w_t, so that t(j_k) = w_t(k)
    int degree() const;  // nl - (j_1+...+j_n) - 2*len(w_t)
};

Tableau standard_tableau(const MultiPart& mu);
std::vector<Tableau> all_tableaux(const MultiPart& mu);
// h >= t iff shape(h_down k) dominates shape(t_down k) for all k
bool tableau_geq(const Tableau& h, const Tableau& t);
// Tab^lambda(mu) = { t in Tab(mu) : t >= t^lambda }
std::vector<Tableau> tableaux_above(const MultiPart& mu,
                                    const MultiPart& lambda);

}  // namespace nhq
