#include "efm/seminormal.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace efm {

namespace {

std::map<StandardTableau, std::size_t> index_of(const std::vector<StandardTableau>& basis)
{
    std::map<StandardTableau, std::size_t> idx;
    for (std::size_t i = 0; i < basis.size(); ++i)
        idx[basis[i]] = i;
    return idx;
}

std::size_t lookup(const std::map<StandardTableau, std::size_t>& idx, const StandardTableau& t)
{
    auto it = idx.find(t);
    if (it == idx.end())
        throw Error(ErrorKind::Internal, "move leaves the tableau family: " + to_string(t));
    return it->second;
}

using CoefficientRule = std::function<std::pair<Rational, Rational>(const Weight&, const StandardTableau&, int)>;

// Assemble s_i and gamma from per-column (diagonal, off-diagonal) coefficients.
HeckeModule assemble(const EfmParameters& params, const std::vector<StandardTableau>& basis,
                     const std::vector<Weight>& weights, const CoefficientRule& rule)
{
    const int n = params.n;
    const std::size_t dim = basis.size();
    auto idx = index_of(basis);
    HeckeModule m;
    m.params = {n, 1, params.kappa2()};
    m.dim = dim;
    for (int k = 1; k <= n; ++k) {
        RationalMatrix y(dim, dim);
        for (std::size_t t = 0; t < dim; ++t)
            y(t, t) = weights[t][static_cast<std::size_t>(k - 1)].to_rational();
        m.y.push_back(std::move(y));
    }
    for (int i = 1; i <= n; ++i) {
        RationalMatrix g(dim, dim);
        for (std::size_t t = 0; t < dim; ++t) {
            auto [diag, off] = rule(weights[t], basis[t], i);
            g(t, t) = diag;
            auto moved = i < n ? move_si(basis[t], i) : move_gamma(basis[t], params);
            if (moved)
                g(lookup(idx, *moved), t) = off;
        }
        if (i < n)
            m.s.push_back(std::move(g));
        else
            m.gamma = std::move(g);
    }
    return m;
}

RelationCheck check_equal(const std::string& name, const std::vector<std::pair<std::string, std::pair<RationalMatrix, RationalMatrix>>>& cases)
{
    RelationCheck rc{name, true, cases.size(), {}, std::nullopt};
    for (const auto& [label, sides] : cases) {
        if (auto mm = first_mismatch(sides.first, sides.second)) {
            rc.passed = false;
            rc.instance = label;
            rc.where = mm;
            break;
        }
    }
    return rc;
}

} // namespace

SeminormalModule build_efm_module(const EfmParameters& params)
{
    params.validate();
    SeminormalModule out;
    out.source = params;
    out.basis = tab_family(params);
    for (const auto& t : out.basis)
        out.weights.push_back(weight_of(t, params));
    const int kappa2 = params.kappa2();
    for (const auto& w : out.weights)
        if (!w.empty() && w.back().twice == 0) {
            if (kappa2 == 0)
                throw Error(ErrorKind::DegenerateWeight, "kappa2 = 0 and a weight has zeta_n = 0");
            throw Error(ErrorKind::Internal, "weight with zeta_n = 0 for kappa2 != 0");
        }
    const int n = params.n;
    out.ops = assemble(params, out.basis, out.weights, [&](const Weight& z, const StandardTableau&, int i) {
        Rational diag;
        if (i < n) {
            HalfInt gap = z[static_cast<std::size_t>(i - 1)] - z[static_cast<std::size_t>(i)];
            if (gap.twice == 0)
                throw Error(ErrorKind::Internal, "equal adjacent weight coordinates");
            diag = 1 / gap.to_rational();
        } else {
            diag = ratio(kappa2, static_cast<long>(z.back().twice));
        }
        return std::pair<Rational, Rational>{diag, 1 - diag};
    });
    return out;
}

HeckeModule twist_gamma(const HeckeModule& m)
{
    HeckeModule out = m;
    out.params.kappa2 = -m.params.kappa2;
    if (m.params.n > 0)
        out.gamma = m.gamma * Rational(-1);
    return out;
}

bool RelationReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.passed; });
}

RelationReport verify_relations(const HeckeModule& m)
{
    using Case = std::pair<std::string, std::pair<RationalMatrix, RationalMatrix>>;
    const int n = m.params.n;
    const auto I = RationalMatrix::identity(m.dim);
    auto S = [&](int i) -> const RationalMatrix& { return m.s[static_cast<std::size_t>(i - 1)]; };
    auto Y = [&](int k) -> const RationalMatrix& { return m.y[static_cast<std::size_t>(k - 1)]; };
    // Generator g_i: s_i for i < n, gamma for i = n.
    auto G = [&](int i) -> const RationalMatrix& { return i < n ? S(i) : m.gamma; };
    auto lbl = [](std::initializer_list<std::pair<const char*, int>> kv) {
        std::string s;
        for (auto [k, v] : kv)
            s += (s.empty() ? "" : ",") + std::string(k) + "=" + std::to_string(v);
        return s;
    };

    std::vector<Case> sq, braid, cbraid, far, gsq, ycomm, cross, sy, gy, gyj;
    for (int i = 1; i < n; ++i)
        sq.push_back({lbl({{"i", i}}), {S(i) * S(i), I}});
    for (int i = 1; i + 1 < n; ++i)
        braid.push_back({lbl({{"i", i}}), {S(i) * S(i + 1) * S(i), S(i + 1) * S(i) * S(i + 1)}});
    if (n >= 2) {
        const auto& s = S(n - 1);
        cbraid.push_back({"", {s * m.gamma * s * m.gamma, m.gamma * s * m.gamma * s}});
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            far.push_back({lbl({{"i", i}, {"j", j}}), {G(i) * G(j), G(j) * G(i)}});
    if (n >= 1) {
        gsq.push_back({"", {m.gamma * m.gamma, I}});
        gy.push_back({"", {m.gamma * Y(n) + Y(n) * m.gamma, I * Rational(m.params.kappa2)}});
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            ycomm.push_back({lbl({{"i", i}, {"j", j}}), {Y(i) * Y(j), Y(j) * Y(i)}});
    for (int i = 1; i < n; ++i) {
        cross.push_back({lbl({{"i", i}}), {S(i) * Y(i) - Y(i + 1) * S(i), I * m.params.kappa1}});
        for (int j = 1; j <= n; ++j)
            if (j != i && j != i + 1)
                sy.push_back({lbl({{"i", i}, {"j", j}}), {S(i) * Y(j), Y(j) * S(i)}});
    }
    for (int j = 1; j < n; ++j)
        gyj.push_back({lbl({{"j", j}}), {m.gamma * Y(j), Y(j) * m.gamma}});

    RelationReport r;
    r.checks.push_back(check_equal("s_i^2 = 1", sq));
    r.checks.push_back(check_equal("s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}", braid));
    r.checks.push_back(check_equal("s_{n-1} g s_{n-1} g = g s_{n-1} g s_{n-1}", cbraid));
    r.checks.push_back(check_equal("far generators commute", far));
    r.checks.push_back(check_equal("g^2 = 1", gsq));
    r.checks.push_back(check_equal("y_i y_j = y_j y_i", ycomm));
    r.checks.push_back(check_equal("s_i y_i - y_{i+1} s_i = kappa1", cross));
    r.checks.push_back(check_equal("s_i y_j = y_j s_i (j != i,i+1)", sy));
    r.checks.push_back(check_equal("g y_n + y_n g = kappa2", gy));
    r.checks.push_back(check_equal("g y_j = y_j g (j != n)", gyj));
    return r;
}

RationalMatrix intertwiner(const HeckeModule& m, int i)
{
    const int n = m.params.n;
    if (i < 1 || i > n)
        throw Error(ErrorKind::InvalidInput, "intertwiner index out of range");
    const auto& y = m.y[static_cast<std::size_t>(i - 1)];
    const auto& g = i < n ? m.s[static_cast<std::size_t>(i - 1)] : m.gamma;
    return g * y - y * g;
}

RationalMatrix intertwiner_word(const HeckeModule& m, const Word& word)
{
    RationalMatrix out = RationalMatrix::identity(m.dim);
    for (int g : word)
        out = out * intertwiner(m, g);
    return out;
}

RelationReport verify_intertwiner_identities(const HeckeModule& m)
{
    using Case = std::pair<std::string, std::pair<RationalMatrix, RationalMatrix>>;
    const int n = m.params.n;
    const auto I = RationalMatrix::identity(m.dim);
    std::vector<Case> sq_i, sq_n, form;
    for (int i = 1; i < n; ++i) {
        const auto& yi = m.y[static_cast<std::size_t>(i - 1)];
        const auto& yj = m.y[static_cast<std::size_t>(i)];
        auto phi = intertwiner(m, i);
        std::string l = "i=" + std::to_string(i);
        sq_i.push_back({l, {phi * phi, (I - yi + yj) * (I + yi - yj)}});
        form.push_back({l, {phi, m.s[static_cast<std::size_t>(i - 1)] * (yi - yj) - I}});
    }
    if (n >= 1) {
        const auto& yn = m.y[static_cast<std::size_t>(n - 1)];
        auto phi = intertwiner(m, n);
        auto k = I * Rational(m.params.kappa2);
        sq_n.push_back({"", {phi * phi, (k - yn * Rational(2)) * (k + yn * Rational(2))}});
    }
    RelationReport r;
    r.checks.push_back(check_equal("phi_i^2 = (1 - y_i + y_{i+1})(1 + y_i - y_{i+1})", sq_i));
    r.checks.push_back(check_equal("phi_n^2 = (kappa2 - 2y_n)(kappa2 + 2y_n)", sq_n));
    r.checks.push_back(check_equal("phi_i = s_i(y_i - y_{i+1}) - 1", form));
    return r;
}

std::map<Weight, std::vector<std::size_t>> weight_decomposition(const HeckeModule& m)
{
    for (const auto& y : m.y)
        if (!y.is_diagonal())
            throw Error(ErrorKind::InvalidInput, "weight decomposition needs diagonal y matrices");
    std::map<Weight, std::vector<std::size_t>> out;
    for (std::size_t t = 0; t < m.dim; ++t) {
        Weight w;
        for (const auto& y : m.y) {
            Rational twice = 2 * y(t, t);
            if (!is_integer(twice))
                throw Error(ErrorKind::InvalidInput, "eigenvalue is not a half-integer");
            w.push_back(HalfInt::from_twice(twice.get_num().get_si()));
        }
        out[w].push_back(t);
    }
    return out;
}

WeightGraph weight_graph(const EfmParameters& params)
{
    WeightGraph g;
    g.n = params.n;
    g.nodes = tab_family(params);
    auto idx = index_of(g.nodes);
    for (const auto& t : g.nodes)
        g.weights.push_back(weight_of(t, params));
    for (std::size_t v = 0; v < g.nodes.size(); ++v)
        for (int i = 1; i <= params.n; ++i) {
            auto moved = i < params.n ? move_si(g.nodes[v], i) : move_gamma(g.nodes[v], params);
            if (moved)
                g.edges.push_back({v, lookup(idx, *moved), i});
        }
    return g;
}

bool IrreducibilityReport::irreducible() const
{
    if (!connected)
        return false;
    return !span_dimension || *span_dimension == dim * dim;
}

std::size_t algebra_span_dimension(const HeckeModule& m, std::size_t max_len)
{
    const std::size_t d = m.dim;
    if (d == 0)
        return 0;
    std::vector<const RationalMatrix*> gens;
    for (const auto& s : m.s)
        gens.push_back(&s);
    if (m.params.n > 0)
        gens.push_back(&m.gamma);
    for (const auto& y : m.y)
        gens.push_back(&y);
    auto flatten = [d](const RationalMatrix& x) {
        std::vector<Rational> v(d * d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                v[i * d + j] = x(i, j);
        return v;
    };
    EchelonSpan span(d * d);
    std::vector<RationalMatrix> level{RationalMatrix::identity(d)};
    span.insert(flatten(level.front()));
    for (std::size_t len = 1; len <= max_len && !level.empty() && span.size() < d * d; ++len) {
        std::vector<RationalMatrix> next;
        for (const auto& x : level)
            for (const auto* g : gens) {
                RationalMatrix p = *g * x;
                if (span.insert(flatten(p)))
                    next.push_back(std::move(p));
            }
        level = std::move(next);
    }
    return span.size();
}

IrreducibilityReport is_irreducible(const EfmParameters& params)
{
    IrreducibilityReport rep;
    WeightGraph g = weight_graph(params);
    rep.dim = g.nodes.size();
    std::vector<std::vector<GraphEdge>> adj(rep.dim);
    for (const auto& e : g.edges) {
        adj[e.from].push_back(e);
        adj[e.to].push_back({e.to, e.from, e.move});
    }
    std::vector<bool> seen(rep.dim, false);
    std::size_t reached = 0;
    if (rep.dim > 0) {
        std::deque<std::size_t> q{0};
        seen[0] = true;
        reached = 1;
        while (!q.empty()) {
            auto v = q.front();
            q.pop_front();
            for (const auto& e : adj[v])
                if (!seen[e.to]) {
                    seen[e.to] = true;
                    ++reached;
                    rep.spanning_tree.push_back(e);
                    q.push_back(e.to);
                }
        }
    }
    rep.connected = rep.dim > 0 && reached == rep.dim;
    if (rep.dim > 0 && rep.dim <= burnside_limit) {
        auto m = build_efm_module(params);
        rep.span_dimension = algebra_span_dimension(m.ops, 2 * rep.dim);
    }
    return rep;
}

bool modules_isomorphic(const SeminormalModule& m1, const SeminormalModule& m2)
{
    if (!(m1.ops.params == m2.ops.params))
        throw Error(ErrorKind::ParamMismatch, "modules are over different algebras");
    auto w1 = m1.weights, w2 = m2.weights;
    std::sort(w1.begin(), w1.end());
    std::sort(w2.begin(), w2.end());
    return w1 == w2;
}

namespace {

// Is there a diagonal D with D^-1 A D = B for every generator?
bool gauge_equivalent(const HeckeModule& A, const HeckeModule& B)
{
    const std::size_t d = A.dim;
    std::vector<const RationalMatrix*> ga, gb;
    for (std::size_t i = 0; i < A.s.size(); ++i) {
        ga.push_back(&A.s[i]);
        gb.push_back(&B.s[i]);
    }
    if (A.params.n > 0) {
        ga.push_back(&A.gamma);
        gb.push_back(&B.gamma);
    }
    for (std::size_t g = 0; g < ga.size(); ++g)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if ((sgn((*ga[g])(i, j)) == 0) != (sgn((*gb[g])(i, j)) == 0) || (i == j && (*ga[g])(i, j) != (*gb[g])(i, j)))
                    return false;
    // B(i,j) = A(i,j) d_j / d_i; propagate d along nonzero entries.
    std::vector<Rational> scale(d);
    std::vector<bool> set(d, false);
    for (std::size_t root = 0; root < d; ++root) {
        if (set[root])
            continue;
        scale[root] = 1;
        set[root] = true;
        std::deque<std::size_t> q{root};
        while (!q.empty()) {
            auto j = q.front();
            q.pop_front();
            for (std::size_t g = 0; g < ga.size(); ++g)
                for (std::size_t i = 0; i < d; ++i) {
                    if (i == j || sgn((*ga[g])(i, j)) == 0)
                        continue;
                    Rational want = (*ga[g])(i, j) * scale[j] / (*gb[g])(i, j);
                    if (!set[i]) {
                        scale[i] = want;
                        set[i] = true;
                        q.push_back(i);
                    } else if (scale[i] != want) {
                        return false;
                    }
                }
        }
    }
    return true;
}

} // namespace

LiteralFormReport compare_literal_form(const EfmParameters& params)
{
    LiteralFormReport rep;
    SeminormalModule built = build_efm_module(params);
    const int n = params.n;
    const int kappa2 = params.kappa2();
    if (n == 0) {
        rep.relations_pass = true;
        rep.note = "n = 0: no generators";
        return rep;
    }
    for (const auto& t : built.basis)
        if (content(t.at(n)) == 0)
            rep.defined = false;
    if (!rep.defined) {
        rep.diagonal_matches = rep.gauge_equivalent = false;
        rep.note = "printed gamma coefficient divides by 2 cont_T(n) = 0";
        return rep;
    }
    HeckeModule literal = assemble(params, built.basis, built.weights, [&](const Weight&, const StandardTableau& t, int i) {
        if (i < n) {
            int ci = content(t.at(i)), cj = content(t.at(i + 1));
            Rational den(ci - cj);
            return std::pair<Rational, Rational>{1 / den, Rational(1 - ci + cj) / den};
        }
        int cn = content(t.at(n));
        Rational den(2 * cn);
        return std::pair<Rational, Rational>{Rational(kappa2) / den, Rational(kappa2 - 2 * cn) / den};
    });
    for (std::size_t g = 0; g <= built.ops.s.size(); ++g) {
        const auto& x = g < built.ops.s.size() ? built.ops.s[g] : built.ops.gamma;
        const auto& z = g < literal.s.size() ? literal.s[g] : literal.gamma;
        for (std::size_t t = 0; t < built.ops.dim; ++t)
            if (x(t, t) != z(t, t))
                rep.diagonal_matches = false;
    }
    rep.gauge_equivalent = rep.diagonal_matches && gauge_equivalent(built.ops, literal);
    rep.relations_pass = verify_relations(literal).all_passed();
    if (!rep.diagonal_matches)
        rep.note = "printed diagonal coefficients use cont_T where the relations force zeta = -cont_T + s; they differ in sign";
    else if (!rep.gauge_equivalent)
        rep.note = "diagonals agree but off-diagonal products differ";
    else
        rep.note = "printed form is a diagonal rescaling of the built module";
    return rep;
}

} // namespace efm
