// Command-line front end: efm <subcommand> [options]. Output is JSON unless noted.
#include "efm/gl_oracle.hpp"
#include "efm/json_io.hpp"
#include "efm/recovery.hpp"
#include "efm/symfunc.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace efm;

namespace {

enum Exit { ok = 0, invalid = 2, unsupported = 3, violation = 4, internal = 5 };

int exit_code(ErrorKind k)
{
    switch (k) {
    case ErrorKind::InvalidParameters:
    case ErrorKind::InvalidInput:
    case ErrorKind::NotACorner:
    case ErrorKind::MoveNotApplicable:
    case ErrorKind::InvalidRectangles:
    case ErrorKind::InconsistentParameters:
    case ErrorKind::ParamMismatch:
        return invalid;
    case ErrorKind::DegenerateWeight:
    case ErrorKind::BudgetExceeded:
    case ErrorKind::TooManyRows:
    case ErrorKind::InsufficientVariables:
        return unsupported;
    case ErrorKind::PropertyViolation:
    case ErrorKind::NotMinimal:
    case ErrorKind::NotMinimalizable:
    case ErrorKind::NotReconstructible:
    case ErrorKind::CaseValidationFailed:
        return violation;
    default:
        return internal;
    }
}

struct ParamOpts {
    int n = 0, p = 1, q = 1;
    std::optional<int> a, b;
    std::string mu, xi;

    void attach(CLI::App* app)
    {
        app->add_option("--n", n, "number of vector factors")->required();
        app->add_option("--p", p, "size of the first block")->required();
        app->add_option("--q", q, "size of the second block")->required();
        app->add_option("--a", a, "exponent on the first block");
        app->add_option("--b", b, "exponent on the second block");
        app->add_option("--mu", mu, "mu as \"num/den\" (instead of --a/--b)");
        app->add_option("--xi", xi, "partition, e.g. 2,1,0");
    }

    Partition partition() const { return xi.empty() ? Partition{} : Partition(parse_int_list(xi)); }

    // nullopt: mu gives a zero module.
    std::optional<EfmParameters> resolve() const
    {
        if (!mu.empty()) {
            if (a || b)
                throw Error(ErrorKind::InvalidInput, "give either --mu or --a/--b");
            return resolve_parameters(n, p, q, parse_rational(mu), partition());
        }
        if (!a || !b)
            throw Error(ErrorKind::InvalidInput, "need --a and --b, or --mu");
        return make_parameters(n, p, q, *a, *b, partition());
    }

    EfmParameters require() const
    {
        auto r = resolve();
        if (!r)
            throw Error(ErrorKind::InvalidParameters, "a or b is not a nonnegative integer; the module is zero");
        return *r;
    }
};

Json decompose_report(const std::optional<EfmParameters>& params)
{
    if (!params)
        return {{"dimension", 0}, {"zero_module", true}};
    Json okada = Json::array(), adm = Json::array();
    for (const auto& nu : okada_expand(params->a, params->p, params->b, params->q))
        okada.push_back(to_json(nu));
    for (const auto& nu : admissible_outer_shapes(*params))
        adm.push_back(to_json(nu));
    return {{"params", to_json(*params)},
            {"okada", okada},
            {"admissible", adm},
            {"dimension", dim_invariant_space(*params)}};
}

void print(const Json& j, const std::string& path)
{
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw Error(ErrorKind::InvalidInput, "cannot write " + path);
    f << j.dump(2) << "\n";
}

// Test hook: "g:row:col" adds 1 to one entry of generator g (1..n-1 = s_i, n = gamma).
void mutate(HeckeModule& m, const std::string& spec)
{
    auto v = parse_int_list(spec.find(':') == std::string::npos ? spec : [&] {
        std::string s = spec;
        std::replace(s.begin(), s.end(), ':', ',');
        return s;
    }());
    if (v.size() != 3 || v[0] < 1 || v[0] > m.params.n || v[1] < 0 || v[2] < 0 ||
        static_cast<std::size_t>(v[1]) >= m.dim || static_cast<std::size_t>(v[2]) >= m.dim)
        throw Error(ErrorKind::InvalidInput, "--mutate expects g:row:col inside the module");
    auto& g = v[0] < m.params.n ? m.s[static_cast<std::size_t>(v[0] - 1)] : m.gamma;
    g(static_cast<std::size_t>(v[1]), static_cast<std::size_t>(v[2])) += 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact seminormal models of EFM images of gl_N modules"};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("-o,--output", out_path, "write output to a file");

    ParamOpts po;
    auto* decompose = app.add_subcommand("decompose", "Okada shapes, admissible outer shapes and dimension");
    auto* shapes = app.add_subcommand("shapes", "minimal shape and its gamma-move family");
    auto* tableaux = app.add_subcommand("tableaux", "basis tableaux with their weights");
    auto* build = app.add_subcommand("build", "generator matrices of the module");
    auto* verify = app.add_subcommand("verify", "relation suite, intertwiner identities, irreducibility");
    auto* graph = app.add_subcommand("graph", "weight graph");
    auto* dim = app.add_subcommand("dim", "dimension of the invariant space");
    auto* oracle = app.add_subcommand("oracle", "tensor-space oracle compared with the seminormal module");
    for (auto* sc : {decompose, shapes, tableaux, build, verify, graph, dim, oracle})
        po.attach(sc);

    std::string mutation;
    verify->add_option("--mutate", mutation, "test hook: perturb entry g:row:col before checking");
    std::string graph_format = "dot";
    graph->add_option("--format", graph_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    bool dim_oracle = false;
    dim->add_flag("--oracle", dim_oracle, "also compute the dimension with the tensor-space oracle");

    auto* recover_cmd = app.add_subcommand("recover", "parameters from a minimal weight");
    std::string weight_text;
    int kappa2 = 0;
    bool do_minimalize = false;
    recover_cmd->add_option("--weight", weight_text, "weight, e.g. [0,-1,-2,1,-5,-6,-4]")->required();
    recover_cmd->add_option("--kappa2", kappa2, "kappa2")->required();
    recover_cmd->add_flag("--minimalize", do_minimalize, "minimalize the weight first");

    auto* sweep = app.add_subcommand("sweep", "one decompose/verify report per JSONL parameter line");
    std::string sweep_in;
    bool sweep_verify = false;
    sweep->add_option("input", sweep_in, "JSONL file of parameter objects (- for stdin)")->required();
    sweep->add_flag("--verify", sweep_verify, "also build and run the relation suite");

    auto* symfunc = app.add_subcommand("symfunc", "Schur expansion of s_lambda * s_nu by brute force");
    std::string lam_text, nu_text;
    int nvars = 0;
    symfunc->add_option("--lambda", lam_text, "first partition")->required();
    symfunc->add_option("--nu", nu_text, "second partition")->required();
    symfunc->add_option("--N", nvars, "number of variables")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ok : invalid;
    }

    try {
        if (*decompose) {
            print(decompose_report(po.resolve()), out_path);
        } else if (*shapes) {
            auto params = po.require();
            Json fam = Json::array();
            for (const auto& s : shape_family(params))
                fam.push_back(to_json(s));
            print({{"params", to_json(params)}, {"minimal", to_json(minimal_shape(params))}, {"family", fam}}, out_path);
        } else if (*tableaux) {
            auto params = po.require();
            Json list = Json::array();
            for (const auto& t : tab_family(params))
                list.push_back({{"cells", to_json(t)}, {"weight", to_json(weight_of(t, params))}});
            print({{"params", to_json(params)}, {"tableaux", list}}, out_path);
        } else if (*build) {
            auto params = po.require();
            auto m = build_efm_module(params);
            print({{"params", to_json(params)}, {"module", to_json(m.ops)}}, out_path);
        } else if (*verify) {
            auto params = po.require();
            auto m = build_efm_module(params);
            if (!mutation.empty())
                mutate(m.ops, mutation);
            auto rel = verify_relations(m.ops);
            auto phi = verify_intertwiner_identities(m.ops);
            Json out{{"params", to_json(params)}, {"dim", m.ops.dim}, {"relations", to_json(rel)}, {"intertwiners", to_json(phi)}};
            const bool pass = rel.all_passed() && phi.all_passed();
            if (mutation.empty()) {
                out["irreducibility"] = to_json(is_irreducible(params));
                out["literal_form"] = to_json(compare_literal_form(params));
            }
            out["pass"] = pass;
            print(out, out_path);
            return pass ? ok : internal;
        } else if (*graph) {
            auto params = po.require();
            auto g = weight_graph(params);
            if (graph_format == "dot") {
                if (out_path.empty() || out_path == "-") {
                    std::cout << to_dot(g);
                } else {
                    std::ofstream(out_path) << to_dot(g);
                }
            } else {
                Json nodes = Json::array(), edges = Json::array();
                for (std::size_t i = 0; i < g.nodes.size(); ++i)
                    nodes.push_back({{"cells", to_json(g.nodes[i])}, {"weight", to_json(g.weights[i])}});
                for (const auto& e : g.edges)
                    edges.push_back({e.from, e.to, "m" + std::to_string(e.move)});
                print({{"nodes", nodes}, {"edges", edges}}, out_path);
            }
        } else if (*dim) {
            auto params = po.resolve();
            Json out{{"dimension", params ? dim_invariant_space(*params) : 0}};
            if (dim_oracle) {
                std::string warn;
                auto budget = oracle_budget_from_env(&warn);
                if (!warn.empty())
                    std::cerr << warn << "\n";
                out["oracle_dimension"] = params ? oracle_module(*params, budget).invariant_dim : 0;
            }
            print(out, out_path);
        } else if (*oracle) {
            std::string warn;
            auto budget = oracle_budget_from_env(&warn);
            if (!warn.empty())
                std::cerr << warn << "\n";
            auto params = po.require();
            auto cmp = compare_with_seminormal(params, budget);
            print({{"params", to_json(params)}, {"report", to_json(cmp)}}, out_path);
            return cmp.all_match() ? ok : internal;
        } else if (*recover_cmd) {
            Weight w = parse_weight(weight_text);
            Json out = Json::object();
            if (do_minimalize) {
                auto mz = minimalize(w, kappa2);
                out["minimalization"] = {{"input", to_json(w)},
                                         {"result", to_json(mz.result)},
                                         {"word", mz.word},
                                         {"word_text", word_to_string(mz.word, static_cast<int>(w.size()))}};
                w = mz.result;
            }
            auto r = recover(w, kappa2);
            out["weight"] = to_json(w);
            out["kappa2"] = kappa2;
            out["params"] = to_json(r.params);
            out["trace"] = to_json(r.trace);
            print(out, out_path);
        } else if (*sweep) {
            std::ifstream file;
            std::istream* in = &std::cin;
            if (sweep_in != "-") {
                file.open(sweep_in);
                if (!file)
                    throw Error(ErrorKind::InvalidInput, "cannot read " + sweep_in);
                in = &file;
            }
            std::ofstream out_file;
            std::ostream* out = &std::cout;
            if (!out_path.empty() && out_path != "-") {
                out_file.open(out_path);
                out = &out_file;
            }
            int worst = ok;
            std::string line;
            while (std::getline(*in, line)) {
                if (line.find_first_not_of(" \t\r") == std::string::npos)
                    continue;
                Json rep;
                try {
                    auto params = parameters_from_json(Json::parse(line));
                    rep = decompose_report(params);
                    if (sweep_verify && params) {
                        auto m = build_efm_module(*params);
                        bool pass = verify_relations(m.ops).all_passed() && verify_intertwiner_identities(m.ops).all_passed();
                        rep["relations_pass"] = pass;
                        if (!pass)
                            worst = std::max(worst, static_cast<int>(internal));
                    }
                } catch (const Error& e) {
                    rep = {{"error", e.what()}};
                    worst = std::max(worst, exit_code(e.kind()));
                } catch (const nlohmann::json::exception& e) {
                    rep = {{"error", e.what()}};
                    worst = std::max(worst, static_cast<int>(invalid));
                }
                *out << rep.dump() << "\n";
            }
            return worst;
        } else if (*symfunc) {
            Partition lam(parse_int_list(lam_text)), nu(parse_int_list(nu_text));
            Json terms = Json::array();
            for (const auto& [shape, c] : lr_product_brute(lam, nu, nvars))
                terms.push_back({{"shape", to_json(shape)}, {"coefficient", c}});
            print({{"lambda", to_json(lam)}, {"nu", to_json(nu)}, {"N", nvars}, {"terms", terms}}, out_path);
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return internal;
    }
    return ok;
}
