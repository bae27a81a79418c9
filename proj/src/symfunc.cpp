#include "efm/symfunc.hpp"

#include <algorithm>
#include <functional>

namespace efm {

long long PolyInNVars::coefficient(const std::vector<int>& exps) const
{
    auto it = terms.find(exps);
    return it == terms.end() ? 0 : it->second;
}

long long PolyInNVars::evaluate_at_ones() const
{
    long long s = 0;
    for (const auto& [e, c] : terms)
        s += c;
    return s;
}

PolyInNVars poly_add(const PolyInNVars& f, const PolyInNVars& g)
{
    PolyInNVars out = f;
    for (const auto& [e, c] : g.terms) {
        long long& slot = out.terms[e];
        slot += c;
        if (slot == 0)
            out.terms.erase(e);
    }
    return out;
}

PolyInNVars poly_mul(const PolyInNVars& f, const PolyInNVars& g)
{
    if (f.N != g.N)
        throw Error(ErrorKind::InvalidInput, "variable count mismatch");
    PolyInNVars out{f.N, {}};
    std::vector<int> e(static_cast<std::size_t>(f.N));
    for (const auto& [ef, cf] : f.terms)
        for (const auto& [eg, cg] : g.terms) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ef[i] + eg[i];
            out.terms[e] += cf * cg;
        }
    std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0; });
    return out;
}

PolyInNVars elementary_e1(int N)
{
    PolyInNVars out{N, {}};
    for (int i = 0; i < N; ++i) {
        std::vector<int> e(static_cast<std::size_t>(N), 0);
        e[static_cast<std::size_t>(i)] = 1;
        out.terms[e] = 1;
    }
    return out;
}

PolyInNVars schur_poly(const Partition& lambda, int N)
{
    if (!lambda.is_valid())
        throw Error(ErrorKind::InvalidInput, "not a partition");
    if (lambda.length() > static_cast<std::size_t>(N))
        throw Error(ErrorKind::TooManyRows, "partition " + to_string(lambda) + " has more than N rows");
    Partition lam = lambda.trimmed();
    std::vector<Cell> cells = SkewShape{lam, {}}.cells();
    std::map<Cell, int> fill;
    std::vector<int> exps(static_cast<std::size_t>(N), 0);
    PolyInNVars out{N, {}};
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            out.terms[exps] += 1;
            return;
        }
        Cell c = cells[k];
        int lo = 1;
        if (auto it = fill.find({c.row, c.col - 1}); it != fill.end())
            lo = std::max(lo, it->second);
        if (auto it = fill.find({c.row - 1, c.col}); it != fill.end())
            lo = std::max(lo, it->second + 1);
        for (int v = lo; v <= N; ++v) {
            fill[c] = v;
            ++exps[static_cast<std::size_t>(v - 1)];
            self(self, k + 1);
            --exps[static_cast<std::size_t>(v - 1)];
        }
        fill.erase(c);
    };
    rec(rec, 0);
    return out;
}

std::vector<Partition> pieri_e1(const Partition& lambda, int N)
{
    if (lambda.length() > static_cast<std::size_t>(N))
        throw Error(ErrorKind::TooManyRows, "partition has more than N rows");
    Partition lam = lambda.trimmed();
    std::vector<Partition> out;
    for (std::size_t i = 1; i <= lam.length() + 1 && i <= static_cast<std::size_t>(N); ++i) {
        if (i > 1 && lam[i] + 1 > lam[i - 1])
            continue;
        Partition nu = lam.padded(i);
        nu.parts[i - 1] += 1;
        out.push_back(nu);
    }
    return out;
}

namespace {

// Partitions of total with at most N parts, each part at most cap.
std::vector<std::vector<int>> dominant_exponents(int total, int N, int cap)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int maxpart) -> void {
        if (static_cast<int>(cur.size()) == N) {
            if (left == 0)
                out.push_back(cur);
            return;
        }
        for (int v = std::min(left, maxpart); v >= 0; --v) {
            cur.push_back(v);
            self(self, left - v, v);
            cur.pop_back();
        }
    };
    rec(rec, total, cap);
    return out;
}

} // namespace

std::map<Partition, long long> lr_product_brute(const Partition& lambda, const Partition& mu, int N)
{
    if (lambda.length() + mu.length() > static_cast<std::size_t>(N))
        throw Error(ErrorKind::InsufficientVariables, "need at least l(lambda)+l(mu) variables");
    PolyInNVars f = schur_poly(lambda, N), g = schur_poly(mu, N);
    const int total = lambda.size() + mu.size();
    const int cap = lambda[1] + mu[1];
    // Coefficients of the product at dominant monomials only; that is all the
    // triangular elimination needs.
    std::map<std::vector<int>, long long, std::greater<>> rest;
    std::vector<int> diff(static_cast<std::size_t>(N));
    for (const auto& gamma : dominant_exponents(total, N, cap)) {
        long long c = 0;
        for (const auto& [alpha, ca] : f.terms) {
            bool ok = true;
            for (std::size_t i = 0; i < diff.size() && ok; ++i) {
                diff[i] = gamma[i] - alpha[i];
                ok = diff[i] >= 0;
            }
            if (ok)
                c += ca * g.coefficient(diff);
        }
        if (c != 0)
            rest[gamma] = c;
    }
    std::map<Partition, long long> out;
    while (!rest.empty()) {
        auto [lead, c] = *rest.begin();
        out[Partition(lead).trimmed()] = c;
        PolyInNVars s = schur_poly(Partition(lead), N);
        for (const auto& [e, k] : s.terms) {
            if (!std::is_sorted(e.begin(), e.end(), std::greater<>()))
                continue;
            long long& slot = rest[e];
            slot -= c * k;
            if (slot == 0)
                rest.erase(e);
        }
    }
    return out;
}

long long count_syt(const SkewShape& shape)
{
    if (!shape.is_valid())
        throw Error(ErrorKind::InvalidInput, "invalid skew shape");
    const std::size_t rows = std::max(shape.outer.parts.size(), shape.inner.parts.size());
    std::vector<int> outer(rows), start(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        outer[i] = shape.outer[i + 1];
        start[i] = shape.inner[i + 1];
    }
    std::map<std::vector<int>, long long> memo;
    auto rec = [&](auto&& self, std::vector<int>& cur) -> long long {
        if (cur == outer)
            return 1;
        if (auto it = memo.find(cur); it != memo.end())
            return it->second;
        long long total = 0;
        for (std::size_t i = 0; i < rows; ++i) {
            if (cur[i] >= outer[i] || (i > 0 && cur[i - 1] <= cur[i]))
                continue;
            ++cur[i];
            total += self(self, cur);
            --cur[i];
        }
        memo[cur] = total;
        return total;
    };
    return rec(rec, start);
}

long long dim_invariant_space(const EfmParameters& params)
{
    params.validate();
    long long total = 0;
    const auto N = static_cast<std::size_t>(params.N());
    for (const auto& nu : admissible_outer_shapes(params))
        total += count_syt(SkewShape{nu.padded(N), params.xi.padded(N)});
    return total;
}

long long dim_invariant_space(int n, int p, int q, const Rational& mu, const Partition& xi)
{
    auto params = resolve_parameters(n, p, q, mu, xi);
    return params ? dim_invariant_space(*params) : 0;
}

} // namespace efm
