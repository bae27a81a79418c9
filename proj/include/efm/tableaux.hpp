#pragma once

#include "efm/shapes.hpp"

#include <optional>
#include <vector>

namespace efm {

// cells[k-1] is the cell holding entry k.
struct StandardTableau {
    std::vector<Cell> cells;

    int n() const { return static_cast<int>(cells.size()); }
    Cell at(int k) const { return cells.at(static_cast<std::size_t>(k - 1)); }
    bool operator==(const StandardTableau&) const = default;
    auto operator<=>(const StandardTableau&) const = default;
};

std::string to_string(const StandardTableau& t);

// Entries increase along rows and columns wherever both neighbours are present.
bool is_standard(const StandardTableau& t);
// Image is a skew shape (some outer/inner pair with exactly these cells).
bool image_is_skew_shape(const std::vector<Cell>& cells);
// Outer/inner partitions of a cell set with no empty rows between its first and last row.
SkewShape shape_of_cells(const std::vector<Cell>& cells);

std::vector<StandardTableau> enumerate_syt(const SkewShape& shape);
std::vector<StandardTableau> tab_family(const EfmParameters& params);

std::optional<StandardTableau> move_si(const StandardTableau& t, int i);
std::optional<StandardTableau> move_gamma(const StandardTableau& t, const EfmParameters& params);

Weight weight_of(const StandardTableau& t, const EfmParameters& params);

// Generators: 1..n-1 are s_i, n is gamma_n. The word is a product read left to
// right; the rightmost letter acts first.
using Word = std::vector<int>;
Weight weyl_act(const Word& word, const Weight& zeta);
std::string word_to_string(const Word& word, int n);

struct Reconstruction {
    StandardTableau tableau;
    SkewShape shape;  // outer nu, inner beta, rows 1..l(nu), min column 1
    HalfInt s;
};

// Rebuilds T with zeta_k = -cont(T(k)) + s from a weight.
Reconstruction reconstruct_tableau(const Weight& zeta, int kappa2);

} // namespace efm
