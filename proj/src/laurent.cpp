#include "nhq/laurent.hpp"

#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace nhq {

Laurent::Laurent(long c) {
    if (c != 0) terms_[0] = c;
}

Laurent Laurent::monomial(int exp, Int c) {
    Laurent f;
    if (c != 0) f.terms_[exp] = std::move(c);
    return f;
}

Int Laurent::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

int Laurent::min_exp() const {
    if (terms_.empty()) throw std::logic_error("min_exp of zero");
    return terms_.begin()->first;
}

int Laurent::max_exp() const {
    if (terms_.empty()) throw std::logic_error("max_exp of zero");
    return terms_.rbegin()->first;
}

void Laurent::add_term(int exp, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_[exp] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    r += o;
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
    Laurent r = *this;
    r -= o;
    return r;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

Laurent operator*(const Int& c, const Laurent& f) {
    Laurent r;
    if (c == 0) return r;
    for (auto& [e, fc] : f.terms()) r.add_term(e, c * fc);
    return r;
}

Laurent Laurent::shifted(int d) const {
    Laurent r;
    for (auto& [e, c] : terms_) r.terms_[e + d] = c;
    return r;
}

Laurent Laurent::bar() const {
    Laurent r;
    for (auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

Int Laurent::eval_one() const {
    Int s = 0;
    for (auto& [e, c] : terms_) s += c;
    return s;
}

bool Laurent::coeffs_nonneg() const {
    for (auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest power first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Int c = it->second;
        int e = it->first;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (c != 1 || e == 0) os << c;
        if (e != 0) {
            if (c != 1) os << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

Laurent quantum_int(int m) {
    if (m < 0) return -quantum_int(-m);
    Laurent r;
    for (int i = 0; i < m; ++i) r.add_term(1 - m + 2 * i, 1);
    return r;
}

Laurent quantum_binom(int m, int k) {
    assert(m >= 0);
    if (k < 0 || k > m) return Laurent();
    if (k == 0 || k == m) return Laurent(1);
    static std::map<std::pair<int, int>, Laurent> memo;
    auto it = memo.find({m, k});
    if (it != memo.end()) return it->second;
    // balanced q-Pascal: [m,k] = q^k [m-1,k] + q^{k-m} [m-1,k-1]
    Laurent r = quantum_binom(m - 1, k).shifted(k) +
                quantum_binom(m - 1, k - 1).shifted(k - m);
    memo[{m, k}] = r;
    return r;
}

bool laurent_divide(const Laurent& a, const Laurent& b, Laurent& q) {
    if (b.is_zero()) return false;
    q = Laurent();
    if (a.is_zero()) return true;
    Laurent rem = a;
    int top = a.max_exp() - b.max_exp();
    while (!rem.is_zero()) {
        int e = rem.min_exp() - b.min_exp();
        if (e > top) return false;
        Int c = rem.coeff(rem.min_exp());
        Int lead = b.coeff(b.min_exp());
        if (c % lead != 0) return false;
        Int f = c / lead;
        q.add_term(e, f);
        rem -= f * b.shifted(e);
    }
    return true;
}

Laurent op_reduce(const Laurent& f, int p) {
    assert(p >= 2);
    if (f.is_zero()) return f;
    // clear negative exponents with q^{2pk} (a unit, equal to 1 in O_p)
    Laurent g = f;
    if (g.min_exp() < 0) {
        int k = (-g.min_exp() + 2 * p - 1) / (2 * p);
        g = g.shifted(2 * p * k);
    }
    // divide by the monic Psi_p(q^2) = q^{2p-2} + ... + q^2 + 1
    int d = 2 * p - 2;
    while (!g.is_zero() && g.max_exp() >= d) {
        int e = g.max_exp();
        Int c = g.coeff(e);
        for (int i = 0; i < p; ++i) g.add_term(e - 2 * i, -c);
    }
    return g;
}

bool op_equal(const Laurent& a, const Laurent& b, int p) {
    return op_reduce(a - b, p).is_zero();
}

}  // namespace nhq
