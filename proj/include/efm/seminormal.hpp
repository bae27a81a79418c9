#pragma once

#include "efm/matrix.hpp"
#include "efm/tableaux.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace efm {

struct HeckeParams {
    int n = 0;
    Rational kappa1 = 1;
    int kappa2 = 0;
    bool operator==(const HeckeParams&) const = default;
};

// Generator matrices of an H_n(kappa1, kappa2)-module. s[i-1] is s_i, y[k-1] is y_k;
// gamma is empty when n = 0.
struct HeckeModule {
    HeckeParams params;
    std::vector<RationalMatrix> s;
    RationalMatrix gamma;
    std::vector<RationalMatrix> y;
    std::size_t dim = 0;
};

struct SeminormalModule {
    EfmParameters source;
    HeckeModule ops;
    std::vector<StandardTableau> basis;
    std::vector<Weight> weights;
};

SeminormalModule build_efm_module(const EfmParameters& params);
// gamma -> -gamma, kappa2 -> -kappa2: the effect of exchanging the two gl blocks.
HeckeModule twist_gamma(const HeckeModule& m);

struct RelationCheck {
    std::string name;      // relation family
    bool passed = true;
    std::size_t instances = 0;
    std::string instance;  // first failing instance, e.g. "i=2"
    std::optional<EntryMismatch> where;
};

struct RelationReport {
    std::vector<RelationCheck> checks;
    bool all_passed() const;
};

RelationReport verify_relations(const HeckeModule& m);
// phi_i^2 and phi_n^2 quadratic identities and phi_i = s_i(y_i - y_{i+1}) - 1.
RelationReport verify_intertwiner_identities(const HeckeModule& m);

RationalMatrix intertwiner(const HeckeModule& m, int i);
RationalMatrix intertwiner_word(const HeckeModule& m, const Word& word);

std::map<Weight, std::vector<std::size_t>> weight_decomposition(const HeckeModule& m);

struct GraphEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    int move = 0;  // 1..n-1 for m_i, n for m_n
};

struct WeightGraph {
    int n = 0;
    std::vector<StandardTableau> nodes;
    std::vector<Weight> weights;
    std::vector<GraphEdge> edges;
};

WeightGraph weight_graph(const EfmParameters& params);

struct IrreducibilityReport {
    bool connected = false;
    std::vector<GraphEdge> spanning_tree;
    std::optional<std::size_t> span_dimension;  // only for dim <= burnside_limit
    std::size_t dim = 0;
    bool irreducible() const;
};

inline constexpr std::size_t burnside_limit = 12;

IrreducibilityReport is_irreducible(const EfmParameters& params);
// Dimension of the span of all generator products of length <= max_len.
std::size_t algebra_span_dimension(const HeckeModule& m, std::size_t max_len);

bool modules_isomorphic(const SeminormalModule& m1, const SeminormalModule& m2);

// Comparison against the coefficients printed with cont_T in the denominators.
struct LiteralFormReport {
    bool defined = true;             // no zero denominator
    bool diagonal_matches = true;    // same diagonal entries as the built module
    bool gauge_equivalent = true;    // a diagonal rescaling maps one to the other
    bool relations_pass = false;     // literal matrices satisfy the relation suite
    std::string note;
};

LiteralFormReport compare_literal_form(const EfmParameters& params);

} // namespace efm
