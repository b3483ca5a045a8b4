#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

namespace nhq {

using Int = boost::multiprecision::cpp_int;

// Laurent polynomial in a single variable q with arbitrary-precision
// integer coefficients.  Stored as exponent -> coefficient with no zero
// entries, so equality is structural.
class Laurent {
public:
    Laurent() = default;
    Laurent(long c);
    static Laurent monomial(int exp, Int c = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Int>& terms() const { return terms_; }
    Int coeff(int exp) const;
    int min_exp() const;  // requires nonzero
    int max_exp() const;

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator-() const;
    Laurent operator*(const Laurent& o) const;
    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    Laurent shifted(int d) const;       // multiply by q^d
    Laurent bar() const;                // q -> q^{-1}
    Int eval_one() const;               // evaluate at q = 1
    bool coeffs_nonneg() const;

    // adds c * q^exp, dropping the entry if it cancels
    void add_term(int exp, const Int& c);

    std::string str() const;

private:
    std::map<int, Int> terms_;
};

Laurent operator*(const Int& c, const Laurent& f);

// exact division a = q * b over Z[q, q^{-1}]; false if not exact
bool laurent_divide(const Laurent& a, const Laurent& b, Laurent& q);

// [m] = (q^m - q^{-m}) / (q - q^{-1}); [-m] = -[m]
Laurent quantum_int(int m);
// balanced Gaussian binomial [m choose k], m >= 0; zero when k < 0 or k > m
Laurent quantum_binom(int m, int k);

// Reduction into O_p = Z[q] / (Psi_p(q^2)) where Psi_p(x) = 1 + x + ... +
// x^{p-1}.  Since q^{2p} = 1 in O_p, negative exponents are first cleared
// by a power of q^{2p}; the canonical representative is the polynomial
// remainder mod Psi_p(q^2), with exponents in [0, 2p-3].
Laurent op_reduce(const Laurent& f, int p);
bool op_equal(const Laurent& a, const Laurent& b, int p);

}  // namespace nhq
