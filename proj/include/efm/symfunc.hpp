#pragma once

#include "efm/shapes.hpp"

#include <map>
#include <vector>

namespace efm {

struct PolyInNVars {
    int N = 0;
    std::map<std::vector<int>, long long> terms;  // exponent vector -> nonzero coefficient

    long long coefficient(const std::vector<int>& exps) const;
    long long evaluate_at_ones() const;
    bool operator==(const PolyInNVars&) const = default;
};

PolyInNVars poly_add(const PolyInNVars& f, const PolyInNVars& g);
PolyInNVars poly_mul(const PolyInNVars& f, const PolyInNVars& g);
PolyInNVars elementary_e1(int N);

PolyInNVars schur_poly(const Partition& lambda, int N);
std::vector<Partition> pieri_e1(const Partition& lambda, int N);
// Schur expansion of s_lambda * s_mu by leading-term elimination.
std::map<Partition, long long> lr_product_brute(const Partition& lambda, const Partition& mu, int N);

// Number of standard fillings of a skew shape, by paths in Young's lattice.
long long count_syt(const SkewShape& shape);
long long dim_invariant_space(const EfmParameters& params);
long long dim_invariant_space(int n, int p, int q, const Rational& mu, const Partition& xi);

} // namespace efm
