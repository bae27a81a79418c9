#pragma once

#include "efm/seminormal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace efm {

bool is_fixed(const Weight& zeta, int i, int kappa2);
// Every positive coordinate is fixed.
bool is_minimal(const Weight& zeta, int kappa2);
// Indices i (1-based) with no later coordinate equal to zeta_i +- 1.
std::vector<int> corners_of(const Weight& zeta);

struct PropertyViolation {
    std::size_t weight_index = 0;
    std::string property;  // "parity", "property-1", "repeat-neighbours", "adjacent-equal", "zeta_n=0", "property-3"
    std::string detail;
};

struct PropertyReport {
    std::vector<PropertyViolation> violations;  // first violation per failing weight
    bool passed() const { return violations.empty(); }
};

PropertyReport check_properties(const std::vector<Weight>& weights, int kappa2);

struct Minimalization {
    Weight result;
    Word word;  // weyl_act(word, input) == result
};

Minimalization minimalize(const Weight& zeta, int kappa2);

struct RecoveredParams {
    int a = 0, p = 0, b = 0, q = 0;
    Partition xi;
    int N = 0;
    Rational mu;
};

struct RecoveryTrace {
    Reconstruction recon;
    std::string case_label;  // "1", "2", "3a", "3b", "4a", "4b", "5"
    int r1 = 0, r2 = 0;      // 0 when absent
    int i1 = 0, i2 = 0, j1 = 0, j2 = 0;
    // Rectangles exactly as the case formulas produce them: (width, height).
    std::pair<int, int> rect1, rect2;
    bool swapped = false;    // (a,p) taken from rect2 to match kappa2
};

struct Recovery {
    RecoveredParams params;
    RecoveryTrace trace;
};

Recovery recover(const Weight& zeta_min, int kappa2);

// Module for recovered data; p > q is handled by swapping blocks and twisting gamma.
HeckeModule build_recovered_module(const RecoveredParams& rp, int n, std::vector<Weight>* weights = nullptr);
// Weight basis of the same module without assembling matrices.
std::vector<Weight> recovered_weights(const RecoveredParams& rp, int n);
bool roundtrip_check(const Weight& zeta_min, int kappa2);

} // namespace efm
