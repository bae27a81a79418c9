#include "efm/json_io.hpp"

#include <sstream>

namespace efm {

Json to_json(const Partition& p) { return Json(p.parts); }

Json to_json(const SkewShape& s) { return {{"outer", to_json(s.outer)}, {"inner", to_json(s.inner)}}; }

Json to_json(const EfmParameters& p)
{
    return {{"n", p.n},
            {"p", p.p},
            {"q", p.q},
            {"a", p.a},
            {"b", p.b},
            {"xi", to_json(p.xi)},
            {"N", p.N()},
            {"mu", to_string(p.mu())},
            {"kappa2", p.kappa2()},
            {"shift", to_string(p.shift())}};
}

Json to_json(const StandardTableau& t)
{
    Json cells = Json::array();
    for (Cell c : t.cells)
        cells.push_back({c.row, c.col});
    return cells;
}

Json to_json(const Weight& w)
{
    Json out = Json::array();
    for (HalfInt h : w)
        out.push_back(to_string(h));
    return out;
}

Json to_json(const RationalMatrix& m)
{
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0)
                entries.push_back({i, j, to_string(m(i, j))});
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json to_json(const RelationReport& r)
{
    Json out = Json::array();
    for (const auto& c : r.checks) {
        Json j{{"relation", c.name}, {"passed", c.passed}, {"instances", c.instances}};
        if (!c.passed) {
            j["instance"] = c.instance;
            if (c.where)
                j["where"] = {{"row", c.where->row},
                              {"col", c.where->col},
                              {"lhs", to_string(c.where->lhs)},
                              {"rhs", to_string(c.where->rhs)}};
        }
        out.push_back(j);
    }
    return out;
}

Json to_json(const IrreducibilityReport& r)
{
    Json tree = Json::array();
    for (const auto& e : r.spanning_tree)
        tree.push_back({e.from, e.to, "m" + std::to_string(e.move)});
    Json out{{"dim", r.dim}, {"connected", r.connected}, {"irreducible", r.irreducible()}, {"spanning_tree", tree}};
    out["span_dimension"] = r.span_dimension ? Json(*r.span_dimension) : Json(nullptr);
    return out;
}

Json to_json(const LiteralFormReport& r)
{
    return {{"defined", r.defined},
            {"diagonal_matches", r.diagonal_matches},
            {"gauge_equivalent", r.gauge_equivalent},
            {"relations_pass", r.relations_pass},
            {"note", r.note}};
}

Json to_json(const HeckeModule& m)
{
    Json s = Json::array(), y = Json::array();
    for (const auto& x : m.s)
        s.push_back(to_json(x));
    for (const auto& x : m.y)
        y.push_back(to_json(x));
    Json out{{"n", m.params.n}, {"kappa1", to_string(m.params.kappa1)}, {"kappa2", m.params.kappa2}, {"dim", m.dim}};
    out["s"] = s;
    out["gamma"] = m.params.n > 0 ? to_json(m.gamma) : Json(nullptr);
    out["y"] = y;
    return out;
}

Json to_json(const RecoveredParams& r)
{
    return {{"a", r.a}, {"p", r.p}, {"b", r.b}, {"q", r.q}, {"xi", to_json(r.xi)}, {"N", r.N}, {"mu", to_string(r.mu)}};
}

Json to_json(const RecoveryTrace& t)
{
    auto rect = [](std::pair<int, int> r) { return Json{{"width", r.first}, {"height", r.second}}; };
    return {{"case", t.case_label},
            {"tableau", to_json(t.recon.tableau)},
            {"shape", to_json(t.recon.shape)},
            {"s", to_string(t.recon.s)},
            {"r1", t.r1},
            {"r2", t.r2 ? Json(t.r2) : Json(nullptr)},
            {"i1", t.i1},
            {"i2", t.i2},
            {"j1", t.j1},
            {"j2", t.j2},
            {"rect1", rect(t.rect1)},
            {"rect2", rect(t.rect2)},
            {"swapped", t.swapped}};
}

Json to_json(const OracleComparison& c)
{
    Json spectra = Json::array();
    for (bool b : c.y_spectrum_match)
        spectra.push_back(b);
    Json joint = Json::array();
    for (const auto& w : c.oracle_joint)
        joint.push_back(to_json(w));
    return {{"oracle_dim", c.oracle_dim},
            {"seminormal_dim", c.seminormal_dim},
            {"dimension_match", c.dimension_match},
            {"y_spectrum_match", spectra},
            {"joint_match", c.joint_match},
            {"oracle_relations", c.oracle_relations},
            {"seminormal_relations", c.seminormal_relations},
            {"casimir_agrees", c.casimir_agrees},
            {"two_term_y1_agrees", c.two_term_y1_agrees},
            {"semisimple", c.semisimple},
            {"joint_spectrum", joint},
            {"match", c.all_match()}};
}

std::optional<EfmParameters> parameters_from_json(const Json& j)
{
    try {
        Partition xi;
        if (j.contains("xi"))
            xi = Partition(j.at("xi").get<std::vector<int>>());
        const int n = j.at("n").get<int>(), p = j.at("p").get<int>(), q = j.at("q").get<int>();
        if (j.contains("mu")) {
            if (j.contains("a") || j.contains("b"))
                throw Error(ErrorKind::InvalidInput, "give either mu or a,b");
            const auto& mu = j.at("mu");
            if (!mu.is_string() && !mu.is_number_integer())
                throw Error(ErrorKind::InvalidInput, "mu must be an integer or a \"num/den\" string");
            return resolve_parameters(n, p, q, mu.is_string() ? parse_rational(mu.get<std::string>()) : Rational(mu.get<int>()), xi);
        }
        return make_parameters(n, p, q, j.at("a").get<int>(), j.at("b").get<int>(), xi);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidInput, std::string("bad parameter object: ") + e.what());
    }
}

std::uint64_t fnv1a(const std::string& bytes)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string to_dot(const WeightGraph& g)
{
    std::ostringstream out;
    out << "digraph weights {\n";
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        std::ostringstream id;
        id << "t" << std::hex << fnv1a(to_json(g.nodes[i]).dump());
        ids.push_back(id.str());
        out << "  " << ids.back() << " [label=\"" << to_string(g.weights[i]) << "\"];\n";
    }
    for (const auto& e : g.edges)
        out << "  " << ids[e.from] << " -> " << ids[e.to] << " [label=\"m" << e.move << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace efm
