#include "efm/shapes.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace efm {

std::size_t Partition::length() const
{
    std::size_t n = parts.size();
    while (n > 0 && parts[n - 1] == 0)
        --n;
    return n;
}

int Partition::size() const
{
    int s = 0;
    for (int x : parts)
        s += x;
    return s;
}

bool Partition::is_valid() const
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            return false;
        if (i > 0 && parts[i] > parts[i - 1])
            return false;
    }
    return true;
}

Partition Partition::trimmed() const
{
    return Partition(std::vector<int>(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(length())));
}

Partition Partition::padded(std::size_t len) const
{
    Partition out = trimmed();
    if (out.parts.size() < len)
        out.parts.resize(len, 0);
    return out;
}

bool Partition::contains(const Partition& inner) const
{
    std::size_t len = std::max(parts.size(), inner.parts.size());
    for (std::size_t i = 1; i <= len; ++i)
        if (inner[i] > (*this)[i])
            return false;
    return true;
}

std::string to_string(const Partition& p)
{
    std::string out = "(";
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(p.parts[i]);
    }
    return out + ")";
}

bool SkewShape::is_valid() const { return outer.is_valid() && inner.is_valid() && outer.contains(inner); }

std::vector<Cell> SkewShape::cells() const
{
    std::vector<Cell> out;
    std::size_t rows = std::max(outer.parts.size(), inner.parts.size());
    for (std::size_t i = 1; i <= rows; ++i)
        for (int j = inner[i] + 1; j <= outer[i]; ++j)
            out.push_back({static_cast<int>(i), j});
    return out;
}

std::set<Cell> SkewShape::cell_set() const
{
    auto c = cells();
    return {c.begin(), c.end()};
}

std::size_t SkewShape::size() const
{
    return static_cast<std::size_t>(outer.size() - inner.size());
}

std::vector<Cell> SkewShape::corners() const
{
    auto all = cell_set();
    std::vector<Cell> out;
    for (Cell c : all)
        if (!all.count({c.row + 1, c.col}) && !all.count({c.row, c.col + 1}))
            out.push_back(c);
    return out;
}

std::string to_string(const SkewShape& s)
{
    return to_string(s.outer.trimmed()) + "/" + to_string(s.inner.trimmed());
}

void EfmParameters::validate() const
{
    auto fail = [](const std::string& msg) { throw Error(ErrorKind::InvalidParameters, msg); };
    if (n < 0)
        fail("n must be nonnegative");
    if (p < 1 || q < 1)
        fail("p and q must be positive");
    if (p > q)
        fail("p > q is not supported; swap the two blocks (exchange p<->q and a<->b)");
    if (a < 0 || b < 0)
        fail("a and b must be nonnegative");
    if (!xi.is_valid())
        fail("xi is not a partition");
    if (xi.length() >= static_cast<std::size_t>(N()))
        fail("xi must have at most N-1 nonzero parts (xi_N = 0)");
    if (xi.size() + n != p * a + q * b)
        fail("|xi| + n must equal p*a + q*b");
}

EfmParameters make_parameters(int n, int p, int q, int a, int b, Partition xi)
{
    EfmParameters params{n, p, q, a, b, std::move(xi)};
    params.validate();
    return params;
}

std::optional<EfmParameters> resolve_parameters(int n, int p, int q, const Rational& mu, Partition xi)
{
    if (p < 1 || q < 1)
        throw Error(ErrorKind::InvalidParameters, "p and q must be positive");
    int N = p + q;
    const Rational base = ratio(xi.size() + n, N);
    Rational a = mu * q + base;
    Rational b = -mu * p + base;
    if (!is_integer(a) || !is_integer(b) || sgn(a) < 0 || sgn(b) < 0)
        return std::nullopt;
    return make_parameters(n, p, q, static_cast<int>(a.get_num().get_si()), static_cast<int>(b.get_num().get_si()),
                           std::move(xi));
}

namespace {

// Shape whose cell set is exactly `cells`, with inner parts taken from `inner_hint`
// (rows beyond the hint default to `fallback`).
SkewShape rebuild(const std::set<Cell>& cells, const Partition& inner_hint, const Partition& fallback,
                  std::size_t min_rows)
{
    std::size_t rows = std::max(min_rows, inner_hint.parts.size());
    for (Cell c : cells)
        rows = std::max(rows, static_cast<std::size_t>(c.row));
    std::vector<int> inner(rows), outer(rows);
    for (std::size_t r = 1; r <= rows; ++r)
        inner[r - 1] = r <= inner_hint.parts.size() ? inner_hint[r] : fallback[r];
    outer = inner;
    for (Cell c : cells)
        outer[c.row - 1] = std::max(outer[c.row - 1], c.col);
    SkewShape out{Partition(outer), Partition(inner)};
    if (!out.is_valid() || out.cell_set() != cells)
        throw Error(ErrorKind::InvalidResult, "cell set is not the skew shape " + to_string(out));
    return out;
}

SkewShape with_full_inner(const SkewShape& s, const EfmParameters& params)
{
    auto N = static_cast<std::size_t>(params.N());
    return rebuild(s.cell_set(), params.xi.padded(N), params.xi, N);
}

} // namespace

SkewShape minimal_shape(const EfmParameters& params)
{
    params.validate();
    const int p = params.p, q = params.q, N = params.N(), ab = params.a + params.b;
    std::vector<int> nu(q), xi1(q);
    for (int i = 1; i <= p; ++i)
        nu[i - 1] = ab - params.xi[N - i + 1];
    for (int i = p + 1; i <= q; ++i)
        nu[i - 1] = params.b;
    for (int i = 1; i <= q; ++i)
        xi1[i - 1] = params.xi[i];
    SkewShape shape{Partition(nu), Partition(xi1)};
    if (!shape.outer.is_valid())
        throw Error(ErrorKind::InvalidParameters, "minimal outer shape " + to_string(shape.outer) + " is not a partition");
    if (!shape.outer.contains(shape.inner))
        throw Error(ErrorKind::InvalidParameters, "first q rows of xi do not fit inside " + to_string(shape.outer));
    if (nu[p - 1] < std::max(params.a, params.b))
        throw Error(ErrorKind::InvalidParameters, "nu_p < max(a,b): no admissible outer shape");
    if (static_cast<int>(shape.size()) != params.n)
        throw Error(ErrorKind::InvalidParameters, "minimal shape has " + std::to_string(shape.size()) + " cells, expected n");
    return shape;
}

std::vector<Cell> movable_corners(const SkewShape& shape, const EfmParameters& params)
{
    std::vector<Cell> out;
    int limit = std::max(params.a, params.b);
    for (Cell c : shape.corners())
        if (c.col > limit && c.row >= 1 && c.row <= params.p)
            out.push_back(c);
    return out;
}

SkewShape gamma_move(const SkewShape& shape, Cell corner, const EfmParameters& params)
{
    auto cells = shape.cell_set();
    if (!cells.count(corner) || cells.count({corner.row + 1, corner.col}) || cells.count({corner.row, corner.col + 1}))
        throw Error(ErrorKind::NotACorner, "cell (" + std::to_string(corner.row) + "," + std::to_string(corner.col) + ")");
    if (corner.col <= std::max(params.a, params.b) || corner.row < 1 || corner.row > params.p)
        throw Error(ErrorKind::MoveNotApplicable, "corner must satisfy col > max(a,b) and row <= p");
    Cell target{params.N() - corner.row + 1, params.a + params.b - corner.col + 1};
    if (target.col < 1 || cells.count(target))
        throw Error(ErrorKind::InvalidResult, "target cell is occupied or off the board");
    cells.erase(corner);
    cells.insert(target);
    return rebuild(cells, shape.inner, params.xi, 0);
}

std::vector<SkewShape> shape_family(const EfmParameters& params)
{
    SkewShape start = with_full_inner(minimal_shape(params), params);
    std::set<std::vector<Cell>> seen{start.cells()};
    std::vector<SkewShape> family{start};
    std::deque<SkewShape> frontier{start};
    while (!frontier.empty()) {
        SkewShape cur = frontier.front();
        frontier.pop_front();
        for (Cell c : movable_corners(cur, params)) {
            SkewShape next = with_full_inner(gamma_move(cur, c, params), params);
            if (seen.insert(next.cells()).second) {
                family.push_back(next);
                frontier.push_back(next);
            }
        }
    }
    std::sort(family.begin(), family.end());
    return family;
}

std::vector<Partition> okada_expand(int a, int p, int b, int q)
{
    if (p > q)
        throw Error(ErrorKind::InvalidRectangles, "p > q");
    if (a < 0 || b < 0 || p < 0)
        throw Error(ErrorKind::InvalidRectangles, "negative rectangle data");
    const int N = p + q, lo = std::max(a, b), hi = a + b;
    std::vector<Partition> out;
    std::vector<int> top(p);
    // Choose nu_1 >= ... >= nu_p in [max(a,b), a+b]; the rest is forced.
    auto emit = [&] {
        std::vector<int> nu(N);
        for (int i = 1; i <= p; ++i) {
            nu[i - 1] = top[i - 1];
            nu[N - i] = hi - top[i - 1];
        }
        for (int i = p + 1; i <= q; ++i)
            nu[i - 1] = b;
        out.emplace_back(nu);
    };
    auto rec = [&](auto&& self, int i, int cap) -> void {
        if (i == p) {
            emit();
            return;
        }
        for (int v = lo; v <= cap; ++v) {
            top[i] = v;
            self(self, i + 1, v);
        }
    };
    rec(rec, 0, hi);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> admissible_outer_shapes(const EfmParameters& params)
{
    params.validate();
    std::vector<Partition> out;
    for (auto& nu : okada_expand(params.a, params.p, params.b, params.q))
        if (nu.contains(params.xi))
            out.push_back(nu);
    return out;
}

} // namespace efm
