#pragma once

#include "efm/seminormal.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace efm {

using SparseVec = std::map<std::size_t, Rational>;

struct OracleBudget {
    int max_N = 4;
    int max_n = 3;
    int max_xi = 6;
    std::size_t max_tensor_dim = 5000;
};

// Default budget, or the override in EFM_ORACLE_BUDGET ("N,n,xi,tensor").
// A non-empty warning is returned when the override is in effect.
OracleBudget oracle_budget_from_env(std::string* warning = nullptr);

// V^xi as the image of the Young symmetrizer inside V^{(x)|xi|}.
struct YoungModule {
    int N = 0;
    Partition xi;
    std::vector<SparseVec> basis;           // vectors in V^{(x)m}, monomials indexed base N
    std::vector<std::vector<int>> weights;  // weight of basis[j], length N
    // action[s][t][j]: coordinates of E_s^t basis[j] (E_s^t sends e_t to e_s).
    std::vector<std::vector<std::vector<SparseVec>>> action;

    std::size_t dim() const { return basis.size(); }
};

YoungModule young_module(const Partition& xi, int N);
// Matrix of E_s^t (1-based) on V^xi in the module's basis.
RationalMatrix matrix_unit_action(const YoungModule& m, int s, int t);
// sum_{s,t} E_s^t E_t^s on V^xi.
RationalMatrix casimir_matrix(const YoungModule& m);

struct OracleModule {
    EfmParameters params;
    std::size_t vxi_dim = 0;
    std::size_t tensor_dim = 0;
    std::size_t weight_space_dim = 0;
    std::size_t invariant_dim = 0;
    HeckeModule ops;                    // y from the direct double sum
    bool casimir_agrees = false;        // y_k via Casimir differences
    bool two_term_y1_agrees = false;    // y_1 via cross-block sum, gamma and transposition terms
    bool semisimple = false;            // y's diagonalize with half-integer eigenvalues
    std::vector<Weight> joint_spectrum; // sorted multiset
};

// Throws BudgetExceeded outside the budget and InconsistentParameters when |xi|+n != pa+qb.
OracleModule oracle_module(const EfmParameters& params, const OracleBudget& budget = {});
// Dimension of the (a^p|b^q) invariant space; 0 when a or b is not a nonnegative integer.
std::size_t oracle_invariant_dim(int n, int p, int q, const Rational& mu, const Partition& xi,
                                 const OracleBudget& budget = {});

struct OracleComparison {
    std::size_t oracle_dim = 0;
    std::size_t seminormal_dim = 0;
    bool dimension_match = false;
    std::vector<bool> y_spectrum_match;  // per k
    bool joint_match = false;
    bool oracle_relations = false;
    bool seminormal_relations = false;
    bool casimir_agrees = false;
    bool two_term_y1_agrees = false;
    bool semisimple = false;
    std::vector<Weight> oracle_joint;
    std::vector<Weight> seminormal_joint;

    bool all_match() const;
};

OracleComparison compare_with_seminormal(const EfmParameters& params, const OracleBudget& budget = {});

} // namespace efm
