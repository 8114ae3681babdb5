// command-line frontend: every operation of the library behind one
// binary with deterministic JSON (default) or human-readable output
#include "deforma/gbasis.hpp"
#include "deforma/nodal.hpp"
#include "deforma/parser.hpp"
#include "deforma/polyring.hpp"
#include "deforma/projdef.hpp"
#include "deforma/singularity.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using deforma::Polynomial;
using deforma::Rational;
using deforma::RingPtr;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

RingPtr ring_from_spec(const std::string& vars) {
    std::vector<std::string> names;
    std::stringstream ss(vars);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw UsageError("empty variable name in --vars");
        names.push_back(tok);
    }
    if (names.empty()) throw UsageError("--vars needs at least one variable");
    return deforma::make_ring(std::move(names));
}

Polynomial parse_poly(const std::string& text, const RingPtr& ring) {
    try {
        return deforma::parse_polynomial(text, ring);
    } catch (const deforma::UnknownVariableError& e) {
        throw UsageError("unknown variable '" + e.name + "' in \"" + text + "\"");
    } catch (const deforma::ParseError& e) {
        throw UsageError("cannot parse \"" + text + "\": " + e.what());
    }
}

Rational parse_rat(const std::string& text) {
    try {
        return deforma::parse_rational(text);
    } catch (const std::exception&) {
        throw UsageError("not a rational number: '" + text + "'");
    }
}

deforma::PointSpec point_from_spec(const std::string& spec, std::size_t nvars) {
    if (spec.empty()) return deforma::PointSpec::origin(nvars);
    deforma::PointSpec p;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) p.coordinates.push_back(parse_rat(tok));
    if (p.coordinates.size() != nvars)
        throw UsageError("--point needs exactly " + std::to_string(nvars) +
                         " coordinates");
    return p;
}

deforma::TracelessMatrix matrix_from_spec(const std::string& spec, std::size_t n) {
    std::vector<std::vector<Rational>> rows;
    std::stringstream byrow(spec);
    std::string row;
    while (std::getline(byrow, row, ';')) {
        std::vector<Rational> entries;
        std::stringstream ss(row);
        std::string tok;
        while (std::getline(ss, tok, ',')) entries.push_back(parse_rat(tok));
        rows.push_back(std::move(entries));
    }
    if (rows.size() != n) throw UsageError("--matrix needs " + std::to_string(n) + " rows");
    deforma::QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw UsageError("--matrix row " + std::to_string(i) + " needs " +
                             std::to_string(n) + " entries");
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    }
    try {
        return deforma::TracelessMatrix(std::move(m));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

json rat_json(const Rational& r) { return deforma::to_string(r); }

json matrix_json(const deforma::QMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

void fill_t1(json& out, const deforma::T1Result& t1, const char* dim_key) {
    using V = deforma::T1Result::Verdict;
    switch (t1.verdict) {
        case V::Smooth:
            out["verdict"] = "smooth";
            out[dim_key] = 0;
            break;
        case V::IsolatedSingular:
            out["verdict"] = "isolated";
            out[dim_key] = t1.tau;
            break;
        case V::NonIsolated:
            out["verdict"] = "non-isolated";
            out["sing_dim"] = t1.sing_locus_dim;
            break;
    }
}

void emit(const json& j, bool human) {
    if (!human) {
        std::cout << j.dump() << "\n";
        return;
    }
    for (const auto& [key, value] : j.items())
        std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                  << "\n";
}

struct CommonFlags {
    std::string vars;
    std::string point;
    bool human = false;
    deforma::ResourceLimits limits;
};

void add_common(CLI::App* cmd, CommonFlags& c, bool with_point = true) {
    cmd->add_option("--vars", c.vars, "comma-separated variable names")->required();
    if (with_point)
        cmd->add_option("--point", c.point, "rational coordinates (default: origin)");
    cmd->add_flag("--human", c.human, "human-readable output instead of JSON");
    cmd->add_option("--max-pairs", c.limits.max_pairs, "cap on critical pairs");
    cmd->add_option("--max-degree", c.limits.max_degree, "cap on working degree");
}

int run(int argc, char** argv) {
    CLI::App app{"exact first-order deformation calculations"};
    app.require_subcommand(1);

    CommonFlags tj;
    std::string tj_f;
    auto* tjurina = app.add_subcommand("tjurina", "Tjurina number of a hypersurface germ");
    add_common(tjurina, tj);
    tjurina->add_option("--f", tj_f, "defining polynomial")->required();

    CommonFlags mi;
    std::string mi_f;
    auto* milnor = app.add_subcommand("milnor", "Milnor number of a hypersurface germ");
    add_common(milnor, mi);
    milnor->add_option("--f", mi_f, "defining polynomial")->required();

    CommonFlags cl;
    std::vector<std::string> cl_fs;
    auto* classify = app.add_subcommand("classify", "smooth / isolated / non-isolated at a point");
    add_common(classify, cl);
    classify->add_option("--f", cl_fs, "defining polynomials (repeatable)")->required();

    CommonFlags sl;
    std::vector<std::string> sl_fs;
    auto* singloc = app.add_subcommand("sing-locus", "generators of the singular locus ideal");
    add_common(singloc, sl, false);
    singloc->add_option("--f", sl_fs, "defining polynomials (repeatable)")->required();

    CommonFlags ci;
    std::vector<std::string> ci_fs;
    auto* t1ci = app.add_subcommand("t1-ci", "dim T^1 of a complete intersection germ");
    add_common(t1ci, ci);
    t1ci->add_option("--f", ci_fs, "defining polynomials (repeatable)")->required();

    CommonFlags tr;
    std::string tr_F, tr_G;
    auto* triv = app.add_subcommand("triviality",
                                    "is G a projectively trivial perturbation of F");
    add_common(triv, tr, false);
    triv->add_option("--F", tr_F, "homogeneous base polynomial")->required();
    triv->add_option("--G", tr_G, "perturbation of the same degree")->required();

    CommonFlags sa;
    std::string sa_F, sa_matrix;
    auto* slact = app.add_subcommand("sl-action", "apply a traceless matrix derivation");
    add_common(slact, sa, false);
    slact->add_option("--F", sa_F, "homogeneous polynomial")->required();
    slact->add_option("--matrix", sa_matrix,
                      "rows separated by ';', entries by ',' (trace must vanish)")
        ->required();

    std::size_t cone_h1 = 0;
    bool cone_human = false;
    auto* cone = app.add_subcommand("cone", "nonrigidity of an affine cone from h^1");
    cone->add_option("--h1", cone_h1, "dim h^1 of the tangent sheaf")->required();
    cone->add_flag("--human", cone_human, "human-readable output instead of JSON");

    std::size_t table_g = 0;
    bool table_human = false;
    auto* table = app.add_subcommand("curve-table", "dim T^1 of a smooth projective curve");
    table->add_option("--g", table_g, "genus")->required();
    table->add_flag("--human", table_human, "human-readable output instead of JSON");

    std::string nodal_graph, nodal_file;
    std::size_t nodal_nodes = 0, nodal_m = 0, nodal_g = 0;
    bool nodal_human = false;
    auto* nodal = app.add_subcommand("nodal", "deformation dimensions of a glued curve");
    nodal->add_option("--graph", nodal_graph,
                      "shorthand: two-p1 | three-chain | three-star | three-3n | self-nodal");
    nodal->add_option("--graph-file", nodal_file, "path to a dual-graph JSON file");
    nodal->add_option("--nodes", nodal_nodes, "node count for two-p1 / three-3n");
    nodal->add_option("--m", nodal_m, "branch count for three-star");
    nodal->add_option("--g", nodal_g, "node count for self-nodal");
    nodal->add_flag("--human", nodal_human, "human-readable output instead of JSON");

    std::size_t rn_g = 0;
    bool rn_human = false;
    auto* ratnodal = app.add_subcommand("rational-nodal",
                                        "closed-form dimensions for g nodes on one line");
    ratnodal->add_option("--g", rn_g, "number of nodes")->required();
    ratnodal->add_flag("--human", rn_human, "human-readable output instead of JSON");

    std::string vdm_points;
    bool vdm_human = false;
    auto* vdm = app.add_subcommand("vandermonde", "rank of the quadratic evaluation matrix");
    vdm->add_option("--points", vdm_points,
                    "comma-separated rationals, 'inf' for the point at infinity")
        ->required();
    vdm->add_flag("--human", vdm_human, "human-readable output instead of JSON");

    long p1_d = 0;
    bool p1_human = false;
    auto* p1 = app.add_subcommand("p1-cohomology", "(h0, h1) of O(d) on the projective line");
    p1->add_option("--d", p1_d, "degree of the line bundle")->required();
    p1->add_flag("--human", p1_human, "human-readable output instead of JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    json out;
    bool human = false;

    if (*tjurina) {
        human = tj.human;
        auto ring = ring_from_spec(tj.vars);
        auto t1 = deforma::tjurina_hypersurface(parse_poly(tj_f, ring),
                                                point_from_spec(tj.point, ring->nvars()),
                                                tj.limits);
        fill_t1(out, t1, "tau");
    } else if (*milnor) {
        human = mi.human;
        auto ring = ring_from_spec(mi.vars);
        auto mu = deforma::milnor_number(parse_poly(mi_f, ring),
                                         point_from_spec(mi.point, ring->nvars()),
                                         mi.limits);
        if (mu.finite()) {
            out["mu"] = mu.value;
        } else {
            out["mu"] = "infinite";
            out["sing_dim"] = mu.value;
        }
    } else if (*classify) {
        human = cl.human;
        auto ring = ring_from_spec(cl.vars);
        std::vector<Polynomial> fs;
        for (const auto& s : cl_fs) fs.push_back(parse_poly(s, ring));
        auto rep = deforma::classify_point(fs, point_from_spec(cl.point, ring->nvars()),
                                           cl.limits);
        out["on_variety"] = rep.on_variety;
        out["jacobian_rank"] = rep.jacobian_rank_at_p;
        if (rep.on_variety) fill_t1(out, rep.t1, "tau");
        json gens = json::array();
        for (const auto& g : rep.sing_locus_generators) gens.push_back(to_string(g));
        out["sing_locus_generators"] = std::move(gens);
    } else if (*singloc) {
        human = sl.human;
        auto ring = ring_from_spec(sl.vars);
        std::vector<Polynomial> fs;
        for (const auto& s : sl_fs) fs.push_back(parse_poly(s, ring));
        auto I = deforma::singular_locus_ideal(fs);
        json gens = json::array();
        for (const auto& g : I.generators) gens.push_back(to_string(g));
        out["generators"] = std::move(gens);
    } else if (*t1ci) {
        human = ci.human;
        auto ring = ring_from_spec(ci.vars);
        std::vector<Polynomial> fs;
        for (const auto& s : ci_fs) fs.push_back(parse_poly(s, ring));
        deforma::T1Result t1;
        try {
            t1 = deforma::t1_ci_dimension(fs, point_from_spec(ci.point, ring->nvars()),
                                          ci.limits);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        fill_t1(out, t1, "t1");
    } else if (*triv) {
        human = tr.human;
        auto ring = ring_from_spec(tr.vars);
        deforma::TrivialityVerdict v;
        try {
            v = deforma::triviality_test(parse_poly(tr_F, ring), parse_poly(tr_G, ring));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (v.trivial) {
            out["verdict"] = "trivial";
            out["matrix"] = matrix_json(v.witness_matrix->entries);
            out["c"] = rat_json(v.witness_scalar);
        } else {
            out["verdict"] = "nontrivial";
        }
    } else if (*slact) {
        human = sa.human;
        auto ring = ring_from_spec(sa.vars);
        Polynomial F = parse_poly(sa_F, ring);
        auto M = matrix_from_spec(sa_matrix, ring->nvars());
        try {
            out["result"] = to_string(deforma::sl_action(M, F));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    } else if (*cone) {
        human = cone_human;
        out["nonrigid"] = deforma::cone_nonrigid(cone_h1);
    } else if (*table) {
        human = table_human;
        auto row = deforma::smooth_curve_table(table_g);
        out["g"] = table_g;
        out["dim_t1"] = row.dim_T1;
        out["h0_omega_sq"] = row.h0_omega_sq;
        out["rigid"] = row.rigid;
    } else if (*nodal) {
        human = nodal_human;
        deforma::DualGraphCurve X;
        if (!nodal_file.empty()) {
            if (!nodal_graph.empty())
                throw UsageError("--graph and --graph-file are mutually exclusive");
            std::ifstream in(nodal_file);
            if (!in) throw UsageError("cannot open graph file '" + nodal_file + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            try {
                X = deforma::parse_dual_graph_json(buf.str());
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        } else if (nodal_graph == "two-p1") {
            if (nodal_nodes == 0) throw UsageError("two-p1 needs --nodes");
            X = deforma::two_p1_curve(nodal_nodes);
        } else if (nodal_graph == "three-chain") {
            X = deforma::three_chain_curve();
        } else if (nodal_graph == "three-star") {
            if (nodal_m < 3) throw UsageError("three-star needs --m >= 3");
            X = deforma::three_star_curve(nodal_m);
        } else if (nodal_graph == "three-3n") {
            if (nodal_nodes == 0) throw UsageError("three-3n needs --nodes");
            X = deforma::three_pairwise_curve(nodal_nodes);
        } else if (nodal_graph == "self-nodal") {
            X = deforma::self_nodal_curve(nodal_g);
        } else if (nodal_graph.empty()) {
            throw UsageError("nodal needs --graph or --graph-file");
        } else {
            throw UsageError("unknown graph shorthand '" + nodal_graph + "'");
        }
        auto r = deforma::deformation_report(X);
        out["genus"] = r.genus;
        out["h1"] = r.h1_tangent;
        out["local"] = r.local_t1_sum;
        out["ext1"] = r.ext1_dim;
        out["h0"] = r.h0_tangent;
        out["stable"] = r.stable;
        out["component_degrees"] = r.component_degrees;
        out["formula_extrapolated"] = r.formula_extrapolated;
    } else if (*ratnodal) {
        human = rn_human;
        auto d = deforma::nodal_rational_dims(rn_g);
        out["h1"] = d.h1_equisingular;
        out["local"] = d.local_sum;
        out["ext1"] = d.ext1;
    } else if (*vdm) {
        human = vdm_human;
        deforma::MarkedPointList pts;
        std::stringstream ss(vdm_points);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok == "inf")
                pts.points.push_back(deforma::PointAtInfinity{});
            else
                pts.points.push_back(parse_rat(tok));
        }
        deforma::EvalRankAnalysis a;
        try {
            a = deforma::eval_rank_analysis(pts);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        out["rank"] = a.rank;
        if (a.witness_columns) {
            out["witness_columns"] = *a.witness_columns;
            out["minor"] = rat_json(a.witness_minor);
        }
        using D = deforma::EvalRankAnalysis::Degeneracy;
        if (a.degeneracy == D::GenusZero) out["degeneracy"] = "genus-zero";
        if (a.degeneracy == D::GenusOne) out["degeneracy"] = "genus-one";
    } else if (*p1) {
        human = p1_human;
        auto [h0, h1] = deforma::p1_cohomology(p1_d);
        out["h0"] = h0;
        out["h1"] = h1;
    }

    emit(out, human);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const deforma::ResourceLimitError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const deforma::PointNotOnVarietyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
