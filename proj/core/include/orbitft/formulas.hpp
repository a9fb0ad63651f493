#pragma once

#include <orbitft/levi.hpp>
#include <orbitft/rootdata.hpp>
#include <orbitft/symalg.hpp>
#include <orbitft/weylgroups.hpp>
#include <string>
#include <vector>

namespace orbitft {

// coeff times the product of the listed roots; roots are positive in the
// formula's positive system
struct FactoredTerm {
    Rational coeff;
    std::vector<Root> roots;

    friend bool operator==(const FactoredTerm& a, const FactoredTerm& b) {
        return a.coeff == b.coeff && a.roots == b.roots;
    }
};

// Fourier transform of the nilpotent orbit attached to a Levi class,
// restricted to one component of a Cartan: numerator / product of the
// component's positive roots (times the pi^{-r} normalization carried by the
// presentation layer, not stored here).
struct ComponentFormula {
    LeviClass levi;
    PositiveSystem psys;
    Polynomial numerator;
    std::vector<FactoredTerm> factored;
    std::string engine;
    int i_power = 0; // derivative-limit route only: numerator degree mod 4

    bool is_zero() const { return numerator.is_zero(); }
};

// Fourier transform of a regular semisimple orbit through the h_k chamber,
// restricted to one component of h_l: exponential sum / same denominator.
struct SemisimpleFormula {
    int k = 0;
    PositiveSystem psys;
    ExpSum numerator;

    bool is_zero() const { return numerator.terms.empty(); }
};

// Combinatorial engine: one term per Levi of the class containing the Cartan,
// with the stabilizer-index coefficient.
ComponentFormula nilpotent_ft_direct(const LeviClass& cls, const Component& comp, int scheme = 0);

// Derivative-limit engine: differentiate the semisimple exponential sum at the
// most compact Cartan meeting the class, then degenerate the exponentials.
ComponentFormula nilpotent_ft_oracle(const LeviClass& cls, const Component& comp, int scheme = 0);

SemisimpleFormula semisimple_ft(int k, const Component& comp, int scheme = 0);

// Invariant-eigendistribution form of the regular semisimple transform on one
// Cartan: global sign times the sum over the full real Weyl group.
SemisimpleFormula rossmann_ft(const Component& comp, int scheme = 0);

// Two-term relations tying coefficients across one Cayley step. C1 lives on
// h_l, C2 on h_{l+1}; the components must be adjacent: C2's real order
// restricted to the old real slots equals C1's, and the two new slots sit next
// to each other. Checks every relation for the h_k-chamber transform.
struct MatchingReport {
    bool ok = true;
    int relations = 0;
    std::vector<std::string> failures;
};
MatchingReport check_matching(int k, const Component& c1, const Component& c2, int scheme = 0);

// product over roots off the centralizer of xi of alpha(lambda)/alpha(xi)
Rational c_lambda(const std::vector<Rational>& lambda, const std::vector<Rational>& xi,
                  const LeviClass& cls);

struct IntegralityReport {
    bool expanded_integral = true;
    bool imaginary_zero = true;
    bool factored_positive_integral = true;

    bool ok() const { return expanded_integral && imaginary_zero && factored_positive_integral; }
};
IntegralityReport check_integrality_and_positivity(const ComponentFormula& f);

// Cartan indices where the class's transform is not identically zero.
std::vector<int> support_set(int n, const LeviClass& cls);

// within-block positive roots of an embedding, in the given positive system
std::vector<Root> levi_positive_roots(const PositiveSystem& ps, const LeviEmbedding& e);

}
