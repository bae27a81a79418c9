#include "efm/gl_oracle.hpp"

#include "efm/symfunc.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

namespace efm {

OracleBudget oracle_budget_from_env(std::string* warning)
{
    OracleBudget b;
    const char* env = std::getenv("EFM_ORACLE_BUDGET");
    if (!env || !*env)
        return b;
    std::vector<int> v;
    try {
        v = parse_int_list(env);
    } catch (const Error&) {
        throw Error(ErrorKind::InvalidInput, "EFM_ORACLE_BUDGET must be \"N,n,xi,tensor\"");
    }
    if (v.size() != 4 || std::any_of(v.begin(), v.end(), [](int x) { return x <= 0; }))
        throw Error(ErrorKind::InvalidInput, "EFM_ORACLE_BUDGET must be four positive integers \"N,n,xi,tensor\"");
    b = {v[0], v[1], v[2], static_cast<std::size_t>(v[3])};
    if (warning)
        *warning = "warning: oracle budget overridden by EFM_ORACLE_BUDGET=" + std::string(env) + "; runs may be slow";
    return b;
}

namespace {

void axpy(SparseVec& y, const Rational& a, const SparseVec& x)
{
    if (a == 0)
        return;
    for (const auto& [i, c] : x) {
        auto [it, fresh] = y.try_emplace(i, a * c);
        if (!fresh) {
            it->second += a * c;
            if (it->second == 0)
                y.erase(it);
        }
    }
}

void add_to(SparseVec& y, std::size_t i, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = y.try_emplace(i, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            y.erase(it);
    }
}

Rational entry(const SparseVec& v, std::size_t i)
{
    auto it = v.find(i);
    return it == v.end() ? Rational(0) : it->second;
}

// Fully reduced echelon rows; the pivot of a row is its smallest index.
struct SparseEchelon {
    std::vector<SparseVec> rows;
    std::vector<std::size_t> pivots;

    void reduce(SparseVec& v) const
    {
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (auto it = v.find(pivots[r]); it != v.end()) {
                Rational c = it->second;
                axpy(v, -c, rows[r]);
            }
    }

    bool insert(SparseVec v)
    {
        reduce(v);
        if (v.empty())
            return false;
        const std::size_t p = v.begin()->first;
        const Rational inv = 1 / v.begin()->second;
        for (auto& [i, c] : v)
            c *= inv;
        for (auto& row : rows)
            if (auto it = row.find(p); it != row.end()) {
                Rational c = it->second;
                axpy(row, -c, v);
            }
        rows.push_back(std::move(v));
        pivots.push_back(p);
        return true;
    }
};

std::size_t ipow(std::size_t b, int e)
{
    std::size_t r = 1;
    for (int i = 0; i < e; ++i)
        r *= b;
    return r;
}

std::vector<int> decode(std::size_t code, int N, int len)
{
    std::vector<int> u(static_cast<std::size_t>(len));
    for (int i = len - 1; i >= 0; --i) {
        u[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::size_t>(N));
        code /= static_cast<std::size_t>(N);
    }
    return u;
}

std::size_t encode(const std::vector<int>& u, int N)
{
    std::size_t code = 0;
    for (int x : u)
        code = code * static_cast<std::size_t>(N) + static_cast<std::size_t>(x);
    return code;
}

struct SignedPerm {
    std::vector<int> to;  // position i moves to to[i]
    int sign = 1;
};

// All products of permutations of each block of positions.
std::vector<SignedPerm> block_group(const std::vector<std::vector<int>>& blocks, int m)
{
    std::vector<SignedPerm> out{{std::vector<int>(static_cast<std::size_t>(m)), 1}};
    std::iota(out[0].to.begin(), out[0].to.end(), 0);
    for (const auto& blk : blocks) {
        std::vector<int> order(blk.size());
        std::iota(order.begin(), order.end(), 0);
        std::vector<std::pair<std::vector<int>, int>> perms;
        do {
            int inv = 0;
            for (std::size_t a = 0; a < order.size(); ++a)
                for (std::size_t b = a + 1; b < order.size(); ++b)
                    inv += order[a] > order[b];
            perms.push_back({order, inv % 2 ? -1 : 1});
        } while (std::next_permutation(order.begin(), order.end()));
        std::vector<SignedPerm> next;
        for (const auto& g : out)
            for (const auto& [pm, sg] : perms) {
                SignedPerm h = g;
                for (std::size_t a = 0; a < blk.size(); ++a)
                    h.to[static_cast<std::size_t>(blk[a])] = blk[static_cast<std::size_t>(pm[a])];
                h.sign *= sg;
                next.push_back(std::move(h));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<int> counts_of(const std::vector<int>& u, int N)
{
    std::vector<int> c(static_cast<std::size_t>(N), 0);
    for (int x : u)
        ++c[static_cast<std::size_t>(x)];
    return c;
}

} // namespace

YoungModule young_module(const Partition& xi_in, int N)
{
    if (N < 1)
        throw Error(ErrorKind::InvalidInput, "N must be positive");
    Partition xi = xi_in.trimmed();
    if (!xi.is_valid())
        throw Error(ErrorKind::InvalidInput, "xi is not a partition");
    YoungModule out;
    out.N = N;
    out.xi = xi;
    const int m = xi.size();
    if (xi.length() > static_cast<std::size_t>(N)) {
        out.action.assign(static_cast<std::size_t>(N), std::vector<std::vector<SparseVec>>(static_cast<std::size_t>(N)));
        return out;  // zero module
    }

    // Canonical tableau filled row by row.
    std::vector<std::vector<int>> rows, cols(static_cast<std::size_t>(xi[1]));
    int pos = 0;
    for (std::size_t r = 1; r <= xi.length(); ++r) {
        rows.emplace_back();
        for (int c = 0; c < xi[r]; ++c) {
            rows.back().push_back(pos);
            cols[static_cast<std::size_t>(c)].push_back(pos);
            ++pos;
        }
    }
    const auto R = block_group(rows, m);
    const auto C = block_group(cols, m);

    auto act = [&](const SignedPerm& g, const std::vector<int>& u) {
        std::vector<int> w(u.size());
        for (std::size_t i = 0; i < u.size(); ++i)
            w[static_cast<std::size_t>(g.to[i])] = u[i];
        return w;
    };

    std::map<std::vector<int>, SparseEchelon> classes;
    const std::size_t total = ipow(static_cast<std::size_t>(N), m);
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<int> u = decode(code, N, m);
        // One representative per row-group orbit.
        bool rep = true;
        for (const auto& row : rows)
            for (std::size_t k = 1; k < row.size() && rep; ++k)
                rep = u[static_cast<std::size_t>(row[k - 1])] <= u[static_cast<std::size_t>(row[k])];
        if (!rep)
            continue;
        std::map<std::size_t, long long> sym;
        for (const auto& g : R)
            ++sym[encode(act(g, u), N)];
        std::map<std::size_t, long long> img;
        for (const auto& [w, c] : sym) {
            auto wu = decode(w, N, m);
            for (const auto& g : C)
                img[encode(act(g, wu), N)] += g.sign * c;
        }
        SparseVec v;
        for (const auto& [w, c] : img)
            if (c != 0)
                v[w] = Rational(static_cast<long>(c));
        if (!v.empty())
            classes[counts_of(u, N)].insert(std::move(v));
    }

    std::vector<std::size_t> pivot_of;
    std::map<std::vector<int>, std::vector<std::size_t>> members;
    for (auto& [wt, ech] : classes) {
        std::vector<std::size_t> order(ech.rows.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return ech.pivots[x] < ech.pivots[y]; });
        for (std::size_t r : order) {
            members[wt].push_back(out.basis.size());
            out.basis.push_back(ech.rows[r]);
            out.weights.push_back(wt);
            pivot_of.push_back(ech.pivots[r]);
        }
    }

    const std::size_t d = out.basis.size();
    out.action.assign(static_cast<std::size_t>(N),
                      std::vector<std::vector<SparseVec>>(static_cast<std::size_t>(N), std::vector<SparseVec>(d)));
    for (std::size_t j = 0; j < d; ++j)
        for (int s = 0; s < N; ++s)
            for (int t = 0; t < N; ++t) {
                SparseVec w;
                for (const auto& [code, c] : out.basis[j]) {
                    auto u = decode(code, N, m);
                    for (auto& x : u)
                        if (x == t) {
                            x = s;
                            add_to(w, encode(u, N), c);
                            x = t;
                        }
                }
                if (w.empty())
                    continue;
                auto wt = out.weights[j];
                ++wt[static_cast<std::size_t>(s)];
                --wt[static_cast<std::size_t>(t)];
                auto it = members.find(wt);
                if (it == members.end())
                    throw Error(ErrorKind::RestrictionLeak, "E_s^t leaves the symmetrizer image");
                SparseVec coords, check;
                for (std::size_t k : it->second) {
                    Rational c = entry(w, pivot_of[k]);
                    if (c != 0) {
                        coords[k] = c;
                        axpy(check, c, out.basis[k]);
                    }
                }
                if (check != w)
                    throw Error(ErrorKind::RestrictionLeak, "E_s^t leaves the symmetrizer image");
                out.action[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)][j] = std::move(coords);
            }
    return out;
}

RationalMatrix matrix_unit_action(const YoungModule& m, int s, int t)
{
    if (s < 1 || t < 1 || s > m.N || t > m.N)
        throw Error(ErrorKind::InvalidInput, "matrix unit index out of range");
    RationalMatrix out(m.dim(), m.dim());
    for (std::size_t j = 0; j < m.dim(); ++j)
        for (const auto& [k, c] : m.action[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(t - 1)][j])
            out(k, j) = c;
    return out;
}

RationalMatrix casimir_matrix(const YoungModule& m)
{
    RationalMatrix out(m.dim(), m.dim());
    for (int s = 1; s <= m.N; ++s)
        for (int t = 1; t <= m.N; ++t)
            out = out + matrix_unit_action(m, s, t) * matrix_unit_action(m, t, s);
    return out;
}

namespace {

// V^xi (x) V^{(x)n}; index j*N^n + (i_1 ... i_n) read base N.
struct Tensor {
    const YoungModule* vxi;
    int N, n;
    std::size_t stride;

    std::size_t dim() const { return vxi->dim() * stride; }
    std::pair<std::size_t, std::vector<int>> split(std::size_t idx) const
    {
        return {idx / stride, decode(idx % stride, N, n)};
    }
    std::size_t join(std::size_t j, const std::vector<int>& i) const { return j * stride + encode(i, N); }

    // (E_s^t) on factor f (0 = V^xi, else vector factor f); s, t 0-based.
    SparseVec unit(int s, int t, int f, const SparseVec& v) const
    {
        SparseVec out;
        for (const auto& [idx, c] : v) {
            auto [j, i] = split(idx);
            if (f == 0) {
                for (const auto& [k, a] : vxi->action[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)][j])
                    add_to(out, join(k, i), c * a);
            } else if (i[static_cast<std::size_t>(f - 1)] == t) {
                i[static_cast<std::size_t>(f - 1)] = s;
                add_to(out, join(j, i), c);
            }
        }
        return out;
    }

    SparseVec delta(int s, int t, const std::vector<int>& factors, const SparseVec& v) const
    {
        SparseVec out;
        for (int f : factors)
            axpy(out, 1, unit(s, t, f, v));
        return out;
    }

    SparseVec swap(int l, int k, const SparseVec& v) const
    {
        SparseVec out;
        for (const auto& [idx, c] : v) {
            auto [j, i] = split(idx);
            std::swap(i[static_cast<std::size_t>(l - 1)], i[static_cast<std::size_t>(k - 1)]);
            add_to(out, join(j, i), c);
        }
        return out;
    }

    SparseVec twist(int k, int p, const SparseVec& v) const
    {
        SparseVec out;
        for (const auto& [idx, c] : v) {
            auto [j, i] = split(idx);
            out[idx] = i[static_cast<std::size_t>(k - 1)] < p ? c : Rational(-c);
        }
        return out;
    }

    // sum_{s,t} (E_s^t)_0 (E_t^s)_k
    SparseVec omega0(int k, const SparseVec& v) const
    {
        SparseVec out;
        for (const auto& [idx, c] : v) {
            auto [j, i] = split(idx);
            const int u = i[static_cast<std::size_t>(k - 1)];
            for (int t = 0; t < N; ++t) {
                i[static_cast<std::size_t>(k - 1)] = t;
                for (const auto& [jj, a] : vxi->action[static_cast<std::size_t>(u)][static_cast<std::size_t>(t)][j])
                    add_to(out, join(jj, i), c * a);
            }
        }
        return out;
    }

    SparseVec casimir(const std::vector<int>& factors, const SparseVec& v) const
    {
        SparseVec out;
        for (int s = 0; s < N; ++s)
            for (int t = 0; t < N; ++t)
                axpy(out, 1, delta(s, t, factors, delta(t, s, factors, v)));
        return out;
    }
};

struct Subspace {
    std::vector<SparseVec> basis;
    std::vector<std::size_t> free_index;  // basis[r] is 1 at free_index[r], 0 at the others
};

RationalMatrix restrict_op(const Subspace& sub, const std::function<SparseVec(const SparseVec&)>& op, const char* name)
{
    const std::size_t d = sub.basis.size();
    RationalMatrix out(d, d);
    for (std::size_t c = 0; c < d; ++c) {
        SparseVec w = op(sub.basis[c]);
        SparseVec check;
        for (std::size_t r = 0; r < d; ++r) {
            Rational x = entry(w, sub.free_index[r]);
            if (x != 0) {
                out(r, c) = x;
                axpy(check, x, sub.basis[r]);
            }
        }
        if (check != w)
            throw Error(ErrorKind::RestrictionLeak, std::string(name) + " leaves the invariant space");
    }
    return out;
}

// Exact joint eigen-decomposition of commuting matrices by successive kernel splitting.
bool joint_spectrum(const std::vector<RationalMatrix>& ys, std::vector<Weight>& out)
{
    if (ys.empty())
        return true;
    const std::size_t d = ys[0].rows();
    bool ok = true;
    // S: columns spanning the current joint eigenspace, identity on rows P.
    auto rec = [&](auto&& self, std::size_t level, const RationalMatrix& S, const std::vector<std::size_t>& P,
                   Weight& prefix) -> void {
        const std::size_t k = S.cols();
        if (level == ys.size()) {
            for (std::size_t i = 0; i < k; ++i)
                out.push_back(prefix);
            return;
        }
        RationalMatrix YS = ys[level] * S;
        RationalMatrix Z(k, k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c)
                Z(r, c) = YS(P[r], c);
        Rational bound = 0;
        for (std::size_t r = 0; r < k; ++r) {
            Rational row = 0;
            for (std::size_t c = 0; c < k; ++c)
                row += abs(Z(r, c));
            bound = std::max(bound, row);
        }
        const auto lim = static_cast<std::int64_t>(mpz_class(2 * bound + 1).get_si());
        std::size_t found = 0;
        for (std::int64_t tw = -lim; tw <= lim && found < k; ++tw) {
            RationalMatrix A = Z;
            const Rational lam = ratio(static_cast<long>(tw), 2);
            for (std::size_t i = 0; i < k; ++i)
                A(i, i) -= lam;
            auto ker = nullspace(A);
            if (ker.empty())
                continue;
            RationalMatrix X(k, ker.size());
            std::vector<std::size_t> P2;
            for (std::size_t c = 0; c < ker.size(); ++c) {
                for (std::size_t r = 0; r < k; ++r)
                    X(r, c) = ker[c][r];
                for (std::size_t r = 0; r < k; ++r)
                    if (ker[c][r] == 1) {
                        bool unit = true;
                        for (std::size_t c2 = 0; c2 < ker.size() && unit; ++c2)
                            unit = c2 == c || ker[c2][r] == 0;
                        if (unit) {
                            P2.push_back(P[r]);
                            break;
                        }
                    }
            }
            if (P2.size() != ker.size())
                throw Error(ErrorKind::Internal, "kernel basis lacks unit coordinates");
            found += ker.size();
            prefix.push_back(HalfInt::from_twice(tw));
            self(self, level + 1, S * X, P2, prefix);
            prefix.pop_back();
        }
        if (found != k)
            ok = false;
    };
    std::vector<std::size_t> P(d);
    std::iota(P.begin(), P.end(), 0);
    Weight prefix;
    rec(rec, 0, RationalMatrix::identity(d), P, prefix);
    std::sort(out.begin(), out.end());
    return ok;
}

void check_budget(const EfmParameters& params, const OracleBudget& b, std::size_t vxi_dim)
{
    std::ostringstream why;
    if (params.N() > b.max_N)
        why << "N=" << params.N() << " > " << b.max_N << "; ";
    if (params.n > b.max_n)
        why << "n=" << params.n << " > " << b.max_n << "; ";
    if (params.xi.size() > b.max_xi)
        why << "|xi|=" << params.xi.size() << " > " << b.max_xi << "; ";
    if (vxi_dim != 0) {
        std::size_t td = vxi_dim * ipow(static_cast<std::size_t>(params.N()), params.n);
        if (td > b.max_tensor_dim)
            why << "tensor dimension " << td << " > " << b.max_tensor_dim << "; ";
    }
    if (!why.str().empty())
        throw Error(ErrorKind::BudgetExceeded, "oracle budget: " + why.str() + "set EFM_ORACLE_BUDGET to override");
}

} // namespace

OracleModule oracle_module(const EfmParameters& params, const OracleBudget& budget)
{
    if (params.xi.size() + params.n != params.p * params.a + params.q * params.b)
        throw Error(ErrorKind::InconsistentParameters, "|xi| + n != pa + qb");
    params.validate();
    check_budget(params, budget, 0);
    const YoungModule vxi = young_module(params.xi, params.N());
    check_budget(params, budget, vxi.dim());

    OracleModule out;
    out.params = params;
    out.vxi_dim = vxi.dim();
    const int N = params.N(), n = params.n, p = params.p;
    const Tensor W{&vxi, N, n, ipow(static_cast<std::size_t>(N), n)};
    out.tensor_dim = W.dim();
    std::vector<int> target(static_cast<std::size_t>(N));
    for (int s = 0; s < N; ++s)
        target[static_cast<std::size_t>(s)] = s < p ? params.a : params.b;

    // Weight space of weight (a^p | b^q).
    std::vector<std::size_t> cols;
    for (std::size_t idx = 0; idx < W.dim(); ++idx) {
        auto [j, i] = W.split(idx);
        auto wt = vxi.weights[j];
        for (int x : i)
            ++wt[static_cast<std::size_t>(x)];
        if (wt == target)
            cols.push_back(idx);
    }
    out.weight_space_dim = cols.size();
    std::map<std::size_t, std::size_t> col_of;
    for (std::size_t c = 0; c < cols.size(); ++c)
        col_of[cols[c]] = c;

    std::vector<int> all(static_cast<std::size_t>(n + 1));
    std::iota(all.begin(), all.end(), 0);
    auto same_block = [p](int s, int t) { return (s < p) == (t < p); };

    // Raising operators inside each block must vanish.
    std::map<std::pair<int, std::size_t>, SparseVec> rows;
    for (int s = 0; s + 1 < N; ++s) {
        if (!same_block(s, s + 1))
            continue;
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& [idx, x] : W.delta(s, s + 1, all, SparseVec{{cols[c], 1}}))
                add_to(rows[{s, idx}], c, x);
    }
    SparseEchelon ech;
    for (auto& [key, row] : rows)
        ech.insert(row);
    std::vector<char> is_pivot(cols.size(), 0);
    for (std::size_t pv : ech.pivots)
        is_pivot[pv] = 1;
    Subspace inv;
    for (std::size_t f = 0; f < cols.size(); ++f) {
        if (is_pivot[f])
            continue;
        SparseVec v{{cols[f], 1}};
        for (std::size_t r = 0; r < ech.rows.size(); ++r)
            if (Rational x = entry(ech.rows[r], f); x != 0)
                v[cols[ech.pivots[r]]] = -x;
        inv.basis.push_back(std::move(v));
        inv.free_index.push_back(cols[f]);
    }
    for (const auto& v : inv.basis)
        for (int s = 0; s < N; ++s)
            for (int t = 0; t < N; ++t)
                if (s != t && same_block(s, t) && !W.delta(s, t, all, v).empty())
                    throw Error(ErrorKind::Internal, "block matrix unit acts nontrivially on an invariant vector");
    out.invariant_dim = inv.basis.size();

    const int kappa2 = params.kappa2();
    const Rational shift = params.shift().to_rational();
    HeckeModule& ops = out.ops;
    ops.params = {n, 1, kappa2};
    ops.dim = out.invariant_dim;
    for (int i = 1; i < n; ++i)
        ops.s.push_back(restrict_op(inv, [&](const SparseVec& v) { return W.swap(i, i + 1, v); }, "s_i"));
    if (n > 0)
        ops.gamma = restrict_op(inv, [&](const SparseVec& v) { return W.twist(n, p, v); }, "gamma");

    out.casimir_agrees = true;
    for (int k = 1; k <= n; ++k) {
        auto direct = [&](const SparseVec& v) {
            SparseVec w = W.omega0(k, v);
            for (int l = 1; l < k; ++l)
                axpy(w, 1, W.swap(l, k, v));
            SparseVec out_v;
            axpy(out_v, -1, w);
            axpy(out_v, shift, v);
            return out_v;
        };
        ops.y.push_back(restrict_op(inv, direct, "y_k"));

        std::vector<int> head(all.begin(), all.begin() + k), with_k(all.begin(), all.begin() + k + 1);
        auto via_casimir = [&](const SparseVec& v) {
            SparseVec w = W.casimir(with_k, v);
            axpy(w, -1, W.casimir(head, v));
            axpy(w, -1, W.casimir({k}, v));
            SparseVec out_v;
            axpy(out_v, ratio(-1, 2), w);
            axpy(out_v, shift, v);
            return out_v;
        };
        if (!(restrict_op(inv, via_casimir, "casimir y_k") == ops.y.back()))
            out.casimir_agrees = false;
    }

    out.two_term_y1_agrees = true;
    if (n > 0) {
        auto y1 = [&](const SparseVec& v) {
            SparseVec w;
            for (int s = 0; s < N; ++s)
                for (int t = 0; t < N; ++t)
                    if (!same_block(s, t))
                        axpy(w, -1, W.unit(s, t, 0, W.unit(t, s, 1, v)));
            axpy(w, ratio(kappa2, 2), W.twist(1, p, v));
            for (int l = 2; l <= n; ++l) {
                axpy(w, ratio(1, 2), W.swap(1, l, v));
                axpy(w, ratio(1, 2), W.swap(1, l, W.twist(1, p, W.twist(l, p, v))));
            }
            return w;
        };
        out.two_term_y1_agrees = restrict_op(inv, y1, "two-term y_1") == ops.y[0];
    }

    out.semisimple = joint_spectrum(ops.y, out.joint_spectrum);
    if (n == 0)
        out.joint_spectrum.assign(out.invariant_dim, Weight{});
    return out;
}

std::size_t oracle_invariant_dim(int n, int p, int q, const Rational& mu, const Partition& xi, const OracleBudget& budget)
{
    auto params = resolve_parameters(n, p, q, mu, xi);
    if (!params)
        return 0;
    return oracle_module(*params, budget).invariant_dim;
}

bool OracleComparison::all_match() const
{
    return dimension_match && joint_match && oracle_relations && seminormal_relations && casimir_agrees &&
           two_term_y1_agrees && semisimple &&
           std::all_of(y_spectrum_match.begin(), y_spectrum_match.end(), [](bool b) { return b; });
}

OracleComparison compare_with_seminormal(const EfmParameters& params, const OracleBudget& budget)
{
    OracleComparison out;
    OracleModule om = oracle_module(params, budget);
    out.oracle_dim = om.invariant_dim;
    out.casimir_agrees = om.casimir_agrees;
    out.two_term_y1_agrees = om.two_term_y1_agrees;
    out.semisimple = om.semisimple;
    out.oracle_joint = om.joint_spectrum;
    out.oracle_relations = om.invariant_dim == 0 || verify_relations(om.ops).all_passed();

    std::vector<Weight> sw;
    if (dim_invariant_space(params) > 0) {
        SeminormalModule sm = build_efm_module(params);
        out.seminormal_dim = sm.ops.dim;
        out.seminormal_relations = verify_relations(sm.ops).all_passed();
        sw = sm.weights;
    } else {
        out.seminormal_relations = true;
    }
    std::sort(sw.begin(), sw.end());
    out.seminormal_joint = sw;
    out.dimension_match = out.oracle_dim == out.seminormal_dim;
    out.joint_match = out.oracle_joint == out.seminormal_joint;
    for (int k = 0; k < params.n; ++k) {
        std::vector<HalfInt> a, b;
        for (const auto& w : out.oracle_joint)
            a.push_back(w[static_cast<std::size_t>(k)]);
        for (const auto& w : out.seminormal_joint)
            b.push_back(w[static_cast<std::size_t>(k)]);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        out.y_spectrum_match.push_back(a == b);
    }
    return out;
}

} // namespace efm
