#pragma once

#include <orbitft/perm.hpp>
#include <orbitft/rational.hpp>
#include <orbitft/rootdata.hpp>
#include <map>
#include <vector>

namespace orbitft {

using Exponents = std::vector<int>;

// Element of C[x_1..x_n] with Gaussian rational coefficients; zero
// coefficients are never stored.
struct Polynomial {
    int nvars = 0;
    std::map<Exponents, GaussianRational> terms;

    bool is_zero() const { return terms.empty(); }
    int total_degree() const;
    bool is_homogeneous() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars == b.nvars && a.terms == b.terms;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    friend bool operator<(const Polynomial& a, const Polynomial& b) {
        if (a.nvars != b.nvars) return a.nvars < b.nvars;
        return a.terms < b.terms;
    }
};

Polynomial poly_zero(int nvars);
Polynomial poly_constant(int nvars, const GaussianRational& c);
Polynomial poly_variable(int nvars, int var);
Polynomial poly_root(int nvars, const Root& r); // x_p - x_q

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);
Polynomial scalar_mul(const GaussianRational& c, const Polynomial& a);

// (w.p)(x) = p(x_{w(0)}, ..., x_{w(n-1)}): variable i becomes x_{w(i)}
Polynomial relabel(const Polynomial& a, const Perm& w);

Polynomial differentiate(const Polynomial& a, int var);
GaussianRational evaluate(const Polynomial& a, const std::vector<Rational>& point);

Polynomial product_of_roots(int nvars, const std::vector<Root>& roots);

// Constant-coefficient differential operator d(symbol): each monomial
// c * x^e acts as c * d^e.
struct DiffOp {
    Polynomial symbol;
};

Polynomial apply_diffop_poly(const DiffOp& d, const Polynomial& f);

// Finite sum of terms coeff * poly(x) * e^{i<w lambda, x>}; the label w is the
// permutation with <w lambda, x> = sum_p lambda_p x_{w(p)}. Terms with equal
// (w, poly) are merged and the list is kept sorted, so equal sums compare
// equal structurally.
struct ExpTerm {
    GaussianRational coeff;
    Polynomial poly;
    Perm w;
};

struct ExpSum {
    int nvars = 0;
    std::vector<ExpTerm> terms;

    friend bool operator==(const ExpSum& a, const ExpSum& b);
};

ExpSum exp_sum(int nvars, std::vector<ExpTerm> terms);
ExpSum operator+(const ExpSum& a, const ExpSum& b);
ExpSum scalar_mul(const GaussianRational& c, const ExpSum& s);

// Termwise action on pure exponentials: (c, 1, w) becomes
// (c * i^{deg D}, w.symbol, w). Requires a homogeneous symbol and constant-1
// polynomial parts; anything else is rejected.
ExpSum apply_diffop_exp(const DiffOp& d, const ExpSum& s);

// limit of the sum as the exponentials degenerate to 1
Polynomial limit_t0(const ExpSum& s);

// d(pi_L) applied to (pivee * f) at xi equals pivee(xi) * (d(pi_L) f)(xi)
// whenever xi is singular along pi_L's directions; exact evaluation check.
bool check_commutator(const Polynomial& pi_L, const Polynomial& pivee,
                      const Polynomial& f, const std::vector<Rational>& xi);

}
