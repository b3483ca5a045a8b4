#include "nhq/modules.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace nhq {

Module::Module(const NHRep& ambient, const std::vector<MatFp>& gens,
               const std::vector<MatFp>& action, int shift)
    : A_(&ambient),
      shift_(shift),
      span_((std::size_t)ambient.N() * ambient.N(), ambient.p()) {
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        for (auto& b : action) {
            MatFp v = g * b;
            if (v.is_zero()) continue;
            if (span_.add(A_->flatten(v))) {
                degs_.push_back(A_->degree_of(v));
                basis_.push_back(std::move(v));
            }
        }
    }
}

Module::Module(const NHRep& ambient, const MatFp& gen, int shift)
    : Module(ambient, std::vector<MatFp>{gen},
             [&] {
                 std::vector<MatFp> act;
                 for (int i = 0; i < ambient.dim(); ++i)
                     act.push_back(ambient.basis_mat(i));
                 return act;
             }(),
             shift) {}

Laurent Module::graded_char() const {
    Laurent c;
    for (int d : degs_) c.add_term(d + shift_, 1);
    return c;
}

bool Module::contains(const MatFp& v) const {
    return span_.contains(A_->flatten(v));
}

bool Module::contains_space(const Module& o) const {
    for (auto& v : o.basis_)
        if (!contains(v)) return false;
    return true;
}

bool Module::same_space(const Module& o) const {
    return dim() == o.dim() && contains_space(o);
}

bool Module::stable_under(
    const std::function<MatFp(const MatFp&)>& op) const {
    for (auto& v : basis_)
        if (!contains(op(v))) return false;
    return true;
}

bool Module::d_stable() const {
    return stable_under([&](const MatFp& v) { return A_->differential(v); });
}

MatFp y_mu(const NHRep& A, const MultiPart& mu) {
    auto js = box_positions(mu);
    Mono a(A.n(), 0);
    for (int k = 0; k < A.n(); ++k) a[k] = A.l() - js[k];
    return A.mono_y(a);
}

MatFp cell_elem(const NHRep& A, const Tableau& h, const Tableau& t) {
    assert(h.shape == t.shape);
    return A.psi_perm(perm_inverse(h.perm())) * y_mu(A, h.shape) *
           A.psi_perm(t.perm());
}

int G_shift(const MultiPart& lambda) {
    int n = 0, js = 0;
    for (std::size_t j = 0; j < lambda.size(); ++j)
        if (lambda[j]) {
            ++n;
            js += (int)j + 1;
        }
    return -n * (int)lambda.size() + js;
}

Module G_module(const NHRep& A, const MultiPart& lambda) {
    return Module(A, y_mu(A, lambda), G_shift(lambda));
}

std::vector<CellEntry> cellular_basis(const NHRep& A) {
    std::vector<CellEntry> cb;
    for (auto& mu : all_multipartitions(A.n(), A.l())) {
        auto tabs = all_tableaux(mu);
        for (auto& h : tabs)
            for (auto& t : tabs)
                cb.push_back(
                    {mu, h, t, h.degree() + t.degree(), cell_elem(A, h, t)});
    }
    return cb;
}

RowSpace cell_ideal(const NHRep& A, const std::vector<CellEntry>& cb,
                    const MultiPart& mu, bool strict) {
    RowSpace s(A.dim(), A.p());
    for (auto& e : cb) {
        if (!dominates(e.mu, mu)) continue;
        if (strict && e.mu == mu) continue;
        s.add(A.coords(e.mat));
    }
    return s;
}

Laurent tab_char(const MultiPart& mu) {
    Laurent c;
    for (auto& h : all_tableaux(mu)) c.add_term(h.degree(), 1);
    return c;
}

Laurent specht_char(const NHRep& A, const std::vector<CellEntry>& cb,
                    const MultiPart& mu) {
    RowSpace s = cell_ideal(A, cb, mu, true);
    Tableau e = standard_tableau(mu);
    Laurent c;
    for (auto& h : all_tableaux(mu)) {
        if (!s.add(A.coords(cell_elem(A, e, h))))
            throw std::logic_error("Specht vector inside the cell ideal");
        c.add_term(h.degree(), 1);
    }
    return c;
}

bool specht_d_stable(const NHRep& A, const std::vector<CellEntry>& cb,
                     const MultiPart& mu, const Tableau& t) {
    RowSpace s = cell_ideal(A, cb, mu, true);
    std::vector<MatFp> vecs;
    for (auto& h : all_tableaux(mu)) {
        vecs.push_back(cell_elem(A, t, h));
        s.add(A.coords(vecs.back()));
    }
    for (auto& v : vecs)
        if (!s.contains(A.coords(A.differential(v)))) return false;
    return true;
}

bool specht_filtration_check(const NHRep& A, const MultiPart& lambda) {
    // The chain G >= G cap (NH)^{>= mu} is a filtration by submodules for
    // free, since the span of cell elements of shape >= mu is a two-sided
    // ideal.  The filtration content of the proposition is then exactly
    // that each subquotient has the character sum_{w in Tab^lambda(mu)}
    // q^{deg w} char S^mu; the cell representatives themselves need not
    // lie in G (they can fail to for the lowest layers).
    Module G(A, y_mu(A, lambda), 0);
    auto cb = cellular_basis(A);

    std::map<int, std::vector<std::vector<uint32_t>>> g_rows;
    for (int i = 0; i < G.dim(); ++i)
        g_rows[G.degree(i)].push_back(A.coords(G.basis()[i]));

    // graded character of G cap span{ cell elements of shape >= mu }
    auto inter_char = [&](const MultiPart& mu, bool strict) {
        std::map<int, std::vector<std::vector<uint32_t>>> i_rows;
        for (auto& e : cb) {
            if (!dominates(e.mu, mu)) continue;
            if (strict && e.mu == mu) continue;
            i_rows[e.deg].push_back(A.coords(e.mat));
        }
        Laurent ch;
        for (auto& [d, gr] : g_rows) {
            auto it = i_rows.find(d);
            if (it == i_rows.end()) continue;
            MatFp M(0, A.dim(), A.p());
            for (auto& r : gr) M.append_row(r);
            for (auto& r : it->second) M.append_row(r);
            std::size_t inter =
                gr.size() + it->second.size() - M.rank();
            if (inter) ch.add_term(d, (long long)inter);
        }
        return ch;
    };

    Laurent total;
    for (auto& mu : all_multipartitions(A.n(), A.l())) {
        Laurent sub = inter_char(mu, false) - inter_char(mu, true);
        Laurent expected;
        Laurent layer = tab_char(mu);
        for (auto& w : tableaux_above(mu, lambda))
            expected += layer.shifted(w.degree());
        if (sub != expected) return false;
        total += expected;
    }
    return total == G.graded_char();
}

}  // namespace nhq
