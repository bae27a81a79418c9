#pragma once

#include "efm/core.hpp"

#include <compare>
#include <optional>
#include <set>
#include <vector>

namespace efm {

struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::vector<int> p) : parts(std::move(p)) {}
    Partition(std::initializer_list<int> p) : parts(p) {}

    // Part i (1-based); zero beyond the stored length.
    int operator[](std::size_t i) const { return i >= 1 && i <= parts.size() ? parts[i - 1] : 0; }
    std::size_t length() const;  // number of nonzero parts
    int size() const;            // sum of parts
    bool is_valid() const;
    Partition trimmed() const;
    Partition padded(std::size_t len) const;
    bool contains(const Partition& inner) const;

    bool operator==(const Partition& o) const { return trimmed().parts == o.trimmed().parts; }
    std::strong_ordering operator<=>(const Partition& o) const { return trimmed().parts <=> o.trimmed().parts; }
};

std::string to_string(const Partition& p);

struct Cell {
    int row = 1;
    int col = 1;
    auto operator<=>(const Cell&) const = default;
};

inline int content(Cell c) { return c.col - c.row; }

struct SkewShape {
    Partition outer;
    Partition inner;

    bool is_valid() const;
    std::vector<Cell> cells() const;  // sorted by (row, col)
    std::set<Cell> cell_set() const;
    std::size_t size() const;
    // Cells with no shape cell directly below or directly right.
    std::vector<Cell> corners() const;
    bool operator==(const SkewShape& o) const = default;
    auto operator<=>(const SkewShape& o) const
    {
        if (auto c = outer <=> o.outer; c != 0)
            return c;
        return inner <=> o.inner;
    }
};

std::string to_string(const SkewShape& s);

struct EfmParameters {
    int n = 0;
    int p = 1;
    int q = 1;
    int a = 0;
    int b = 0;
    Partition xi;

    int N() const { return p + q; }
    Rational mu() const { return ratio(a - b, N()); }
    int kappa2() const { return p - q - a + b; }
    HalfInt shift() const { return HalfInt::from_twice(a + b - N()); }

    // Throws InvalidParameters when an invariant fails.
    void validate() const;
    bool operator==(const EfmParameters&) const = default;
};

EfmParameters make_parameters(int n, int p, int q, int a, int b, Partition xi);

// a = mu q + (|xi|+n)/N, b = -mu p + (|xi|+n)/N; nullopt when either is not a
// nonnegative integer (the module is zero).
std::optional<EfmParameters> resolve_parameters(int n, int p, int q, const Rational& mu, Partition xi);

SkewShape minimal_shape(const EfmParameters& params);
SkewShape gamma_move(const SkewShape& shape, Cell corner, const EfmParameters& params);
// Corners of shape eligible for a gamma move, in (row, col) order.
std::vector<Cell> movable_corners(const SkewShape& shape, const EfmParameters& params);
// Closure of the minimal shape under gamma moves; each member has inner = xi.
std::vector<SkewShape> shape_family(const EfmParameters& params);

std::vector<Partition> okada_expand(int a, int p, int b, int q);
std::vector<Partition> admissible_outer_shapes(const EfmParameters& params);

} // namespace efm
