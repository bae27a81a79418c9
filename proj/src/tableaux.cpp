#include "efm/tableaux.hpp"

#include <algorithm>
#include <map>

namespace efm {

std::string to_string(const StandardTableau& t)
{
    std::string out = "{";
    for (int k = 1; k <= t.n(); ++k) {
        if (k > 1)
            out += ", ";
        Cell c = t.at(k);
        out += std::to_string(k) + "->(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
    }
    return out + "}";
}

bool is_standard(const StandardTableau& t)
{
    std::map<Cell, int> entry;
    for (int k = 1; k <= t.n(); ++k)
        if (!entry.emplace(t.at(k), k).second)
            return false;
    for (auto [c, k] : entry) {
        auto right = entry.find({c.row, c.col + 1});
        if (right != entry.end() && right->second < k)
            return false;
        auto below = entry.find({c.row + 1, c.col});
        if (below != entry.end() && below->second < k)
            return false;
    }
    return true;
}

namespace {

struct RowSpan {
    bool empty = true;
    int lo = 0;  // inner part
    int hi = 0;  // outer part
};

// Row spans from row 1 to the last occupied row; false if some row is not contiguous.
bool row_spans(const std::vector<Cell>& cells, std::vector<RowSpan>& spans)
{
    int max_row = 0;
    for (Cell c : cells) {
        if (c.row < 1 || c.col < 1)
            return false;
        max_row = std::max(max_row, c.row);
    }
    spans.assign(static_cast<std::size_t>(max_row), RowSpan{});
    std::map<int, std::vector<int>> cols;
    for (Cell c : cells)
        cols[c.row].push_back(c.col);
    for (auto& [r, cs] : cols) {
        std::sort(cs.begin(), cs.end());
        for (std::size_t i = 1; i < cs.size(); ++i)
            if (cs[i] != cs[i - 1] + 1)
                return false;
        spans[static_cast<std::size_t>(r - 1)] = {false, cs.front() - 1, cs.back()};
    }
    return true;
}

} // namespace

bool image_is_skew_shape(const std::vector<Cell>& cells)
{
    std::vector<RowSpan> spans;
    if (!row_spans(cells, spans))
        return false;
    // Empty rows take inner = outer = the largest value still allowed from above.
    int cap = 0;
    for (auto& s : spans)
        if (!s.empty)
            cap = std::max(cap, s.hi);
    std::vector<int> outer, inner;
    int prev_inner = cap;
    for (auto& s : spans) {
        if (s.empty) {
            outer.push_back(prev_inner);
            inner.push_back(prev_inner);
        } else {
            outer.push_back(s.hi);
            inner.push_back(s.lo);
            prev_inner = s.lo;
        }
    }
    SkewShape shape{Partition(outer), Partition(inner)};
    if (!shape.is_valid())
        return false;
    auto got = shape.cell_set();
    return got == std::set<Cell>(cells.begin(), cells.end());
}

SkewShape shape_of_cells(const std::vector<Cell>& cells)
{
    std::vector<RowSpan> spans;
    if (!row_spans(cells, spans))
        throw Error(ErrorKind::InvalidResult, "rows are not contiguous");
    std::vector<int> outer, inner;
    for (auto& s : spans) {
        if (s.empty)
            throw Error(ErrorKind::InvalidResult, "empty row inside cell set");
        outer.push_back(s.hi);
        inner.push_back(s.lo);
    }
    SkewShape shape{Partition(outer), Partition(inner)};
    if (!shape.is_valid() || shape.cell_set() != std::set<Cell>(cells.begin(), cells.end()))
        throw Error(ErrorKind::InvalidResult, "cells do not form a skew shape");
    return shape;
}

std::vector<StandardTableau> enumerate_syt(const SkewShape& shape)
{
    auto cells = shape.cells();
    const std::size_t n = cells.size();
    std::map<Cell, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i)
        index[cells[i]] = i;
    std::vector<long> up(n, -1), left(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        if (auto it = index.find({cells[i].row - 1, cells[i].col}); it != index.end())
            up[i] = static_cast<long>(it->second);
        if (auto it = index.find({cells[i].row, cells[i].col - 1}); it != index.end())
            left[i] = static_cast<long>(it->second);
    }
    std::vector<StandardTableau> out;
    std::vector<bool> filled(n, false);
    StandardTableau cur;
    auto rec = [&](auto&& self) -> void {
        if (cur.cells.size() == n) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (filled[i] || (up[i] >= 0 && !filled[up[i]]) || (left[i] >= 0 && !filled[left[i]]))
                continue;
            filled[i] = true;
            cur.cells.push_back(cells[i]);
            self(self);
            cur.cells.pop_back();
            filled[i] = false;
        }
    };
    rec(rec);
    return out;
}

std::vector<StandardTableau> tab_family(const EfmParameters& params)
{
    std::vector<StandardTableau> out;
    for (const auto& shape : shape_family(params)) {
        auto part = enumerate_syt(shape);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::optional<StandardTableau> move_si(const StandardTableau& t, int i)
{
    if (i < 1 || i >= t.n())
        throw Error(ErrorKind::InvalidInput, "s_i index out of range");
    StandardTableau out = t;
    std::swap(out.cells[static_cast<std::size_t>(i - 1)], out.cells[static_cast<std::size_t>(i)]);
    if (!is_standard(out))
        return std::nullopt;
    return out;
}

std::optional<StandardTableau> move_gamma(const StandardTableau& t, const EfmParameters& params)
{
    if (t.n() == 0)
        return std::nullopt;
    Cell c = t.at(t.n());
    if (c.row <= std::max(params.p, params.q) && c.col <= std::max(params.a, params.b))
        return std::nullopt;
    Cell target{params.N() - c.row + 1, params.a + params.b - c.col + 1};
    StandardTableau out = t;
    out.cells.back() = target;
    if (target.row < 1 || target.col < 1 || !is_standard(out))
        throw Error(ErrorKind::InvalidResult, "gamma move leaves a non-standard tableau: " + to_string(out));
    return out;
}

Weight weight_of(const StandardTableau& t, const EfmParameters& params)
{
    Weight w;
    w.reserve(t.cells.size());
    for (Cell c : t.cells)
        w.push_back(params.shift() - content(c));
    return w;
}

Weight weyl_act(const Word& word, const Weight& zeta)
{
    Weight out = zeta;
    const int n = static_cast<int>(zeta.size());
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int g = *it;
        if (g < 1 || g > n)
            throw Error(ErrorKind::InvalidInput, "generator index out of range");
        if (g == n)
            out[static_cast<std::size_t>(n - 1)] = -out[static_cast<std::size_t>(n - 1)];
        else
            std::swap(out[static_cast<std::size_t>(g - 1)], out[static_cast<std::size_t>(g)]);
    }
    return out;
}

std::string word_to_string(const Word& word, int n)
{
    std::string out;
    for (int g : word) {
        if (!out.empty())
            out += " ";
        out += (g == n ? "g" : "s") + std::to_string(g);
    }
    return out;
}

namespace {

// Incremental placement state: every component lives in its own coordinates and
// can be slid along the diagonal direction (t,t) without changing contents.
struct Placement {
    std::vector<Cell> pos;
    std::vector<int> comp;
    std::map<int, int> diag_last;  // relative content -> latest entry on it

    void translate(int c, int t)
    {
        for (std::size_t k = 0; k < pos.size(); ++k)
            if (comp[k] == c)
                pos[k] = {pos[k].row + t, pos[k].col + t};
    }
    bool occupied(int c, Cell cell) const
    {
        for (std::size_t k = 0; k < pos.size(); ++k)
            if (comp[k] == c && pos[k] == cell)
                return true;
        return false;
    }
    void relabel(int from, int to)
    {
        for (auto& c : comp)
            if (c == from)
                c = to;
    }
};

[[noreturn]] void not_reconstructible(const std::string& why)
{
    throw Error(ErrorKind::NotReconstructible, why);
}

} // namespace

Reconstruction reconstruct_tableau(const Weight& zeta, int kappa2)
{
    const std::size_t n = zeta.size();
    for (HalfInt z : zeta)
        if (((z.twice - kappa2) % 2 + 2) % 2 != 0)
            not_reconstructible("parity of 2*zeta does not match kappa2");
    Placement pl;
    int next_comp = 0;
    for (std::size_t k = 0; k < n; ++k) {
        // Content relative to entry 1.
        const int d = static_cast<int>((zeta[0].twice - zeta[k].twice) / 2);
        Cell cell;
        int c = -1;
        if (auto it = pl.diag_last.find(d); it != pl.diag_last.end()) {
            Cell last = pl.pos[static_cast<std::size_t>(it->second)];
            c = pl.comp[static_cast<std::size_t>(it->second)];
            cell = {last.row + 1, last.col + 1};
            if (!pl.occupied(c, {last.row, last.col + 1}) || !pl.occupied(c, {last.row + 1, last.col}))
                not_reconstructible("entry " + std::to_string(k + 1) + " has no filled neighbours on its diagonal");
        } else {
            auto up = pl.diag_last.find(d + 1);
            auto left = pl.diag_last.find(d - 1);
            std::optional<Cell> below_up, right_of_left;
            int cu = -1, cl = -1;
            if (up != pl.diag_last.end()) {
                Cell u = pl.pos[static_cast<std::size_t>(up->second)];
                below_up = Cell{u.row + 1, u.col};
                cu = pl.comp[static_cast<std::size_t>(up->second)];
            }
            if (left != pl.diag_last.end()) {
                Cell l = pl.pos[static_cast<std::size_t>(left->second)];
                right_of_left = Cell{l.row, l.col + 1};
                cl = pl.comp[static_cast<std::size_t>(left->second)];
            }
            if (below_up && right_of_left) {
                if (cu != cl) {
                    pl.translate(cl, below_up->row - right_of_left->row);
                    pl.relabel(cl, cu);
                } else if (*below_up != *right_of_left) {
                    not_reconstructible("entry " + std::to_string(k + 1) + " has conflicting forced positions");
                }
                c = cu;
                cell = *below_up;
            } else if (below_up) {
                c = cu;
                cell = *below_up;
            } else if (right_of_left) {
                c = cl;
                cell = *right_of_left;
            } else {
                c = next_comp++;
                cell = {0, d};
            }
        }
        if (pl.occupied(c, cell))
            not_reconstructible("entry " + std::to_string(k + 1) + " collides with an earlier entry");
        pl.pos.push_back(cell);
        pl.comp.push_back(c);
        pl.diag_last[d] = static_cast<int>(k);
    }

    // Stack the components from the highest contents (top) downwards with no gap rows.
    struct Extent {
        int comp, lo, hi, top, bottom;
    };
    std::map<int, Extent> ext;
    for (std::size_t k = 0; k < n; ++k) {
        int c = pl.comp[k];
        int cont = content(pl.pos[k]);
        auto [it, fresh] = ext.try_emplace(c, Extent{c, cont, cont, pl.pos[k].row, pl.pos[k].row});
        if (!fresh) {
            it->second.lo = std::min(it->second.lo, cont);
            it->second.hi = std::max(it->second.hi, cont);
            it->second.top = std::min(it->second.top, pl.pos[k].row);
            it->second.bottom = std::max(it->second.bottom, pl.pos[k].row);
        }
    }
    std::vector<Extent> order;
    for (auto& [c, e] : ext)
        order.push_back(e);
    std::sort(order.begin(), order.end(), [](const Extent& x, const Extent& y) { return x.hi > y.hi; });
    int next_top = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && order[i].hi >= order[i - 1].lo - 1)
            not_reconstructible("components overlap in content");
        int t = next_top - order[i].top;
        pl.translate(order[i].comp, t);
        next_top = order[i].bottom + t + 1;
    }
    int min_col = 0;
    for (std::size_t k = 0; k < n; ++k)
        min_col = k == 0 ? pl.pos[k].col : std::min(min_col, pl.pos[k].col);
    for (auto& p : pl.pos)
        p.col += 1 - min_col;

    Reconstruction out;
    out.tableau.cells = pl.pos;
    try {
        out.shape = shape_of_cells(pl.pos);
    } catch (const Error& e) {
        not_reconstructible(e.what());
    }
    if (!is_standard(out.tableau))
        not_reconstructible("placement is not standard");
    out.s = HalfInt::from_twice(0);
    for (std::size_t k = 0; k < n; ++k) {
        HalfInt s = zeta[k] + content(pl.pos[k]);
        if (k == 0)
            out.s = s;
        else if (s != out.s)
            throw Error(ErrorKind::Internal, "inconsistent shift in reconstruction");
    }
    return out;
}

} // namespace efm
