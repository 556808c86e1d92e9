#include "commands.hpp"

#include "foliation/corpus.hpp"
#include "foliation/cycles.hpp"
#include "foliation/document.hpp"
#include "foliation/parse.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

namespace foliate {

using namespace foliation;
using nlohmann::json;

namespace {

struct Input {
    std::string form;
    std::string case_name;
    std::string lambda, k, mu, n;
    bool centered = true;

    DiffForm resolve(const std::string& fallback = "") const
    {
        if (!form.empty() && !case_name.empty())
            throw CLI::ValidationError("--form and --case are mutually exclusive");
        if (!form.empty())
            return parse_form(form);
        std::string name = case_name.empty() ? fallback : case_name;
        if (name.empty())
            throw CLI::ValidationError("one of --form or --case is required");
        std::map<std::string, std::string> params;
        if (!lambda.empty())
            params["lambda"] = lambda;
        if (!k.empty())
            params["k"] = k;
        if (!mu.empty())
            params["mu"] = mu;
        if (!n.empty())
            params["n"] = n;
        DiffForm w = corpus::by_name(name, params);
        if (centered)
            for (const corpus::Case& c : corpus::all_cases())
                if (c.name == name)
                    return c.centered();
        return w;
    }
};

void add_input(CLI::App* sub, Input& in)
{
    sub->add_option("--form", in.form, "differential form, e.g. \"(x - y) dx + x dy\"");
    sub->add_option("--case", in.case_name, "built-in corpus case")
        ->check(CLI::IsMember(corpus::names()));
    sub->add_option("--lambda", in.lambda, "corpus parameter lambda (p/q)");
    sub->add_option("--k", in.k, "corpus parameter k");
    sub->add_option("--mu", in.mu, "corpus parameter mu (p/q)");
    sub->add_option("--n", in.n, "corpus parameter n");
}

cplx parse_complex(const std::string& s)
{
    auto comma = s.find(',');
    try {
        if (comma == std::string::npos)
            return {std::stod(s), 0.0};
        return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected a complex number 're' or 're,im', got '" + s + "'");
    }
}

json cjson(cplx z) { return {z.real(), z.imag()}; }

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write " + path);
    f << content;
}

void emit(std::ostream& out, const json& j, const std::string& path)
{
    std::string text = j.dump(2) + "\n";
    if (path.empty())
        out << text;
    else
        write_file(path, text);
}

ReduceOptions reduce_options(bool force, int max_steps)
{
    ReduceOptions o;
    o.force_initial_blowup = force;
    o.max_steps = max_steps;
    return o;
}

json lift_json(const LiftResult& r)
{
    return {{"status", to_string(r.status)},
            {"final_y", cjson(r.final_y)},
            {"t_end", r.t_end},
            {"max_form_residual", r.max_form_residual},
            {"error_estimate", r.error_estimate},
            {"steps", r.steps}};
}

json corpus_case(const corpus::Case& c, int max_steps)
{
    json j = {{"case", c.name}, {"note", c.note}};
    ReductionTree tree = reduce(c.centered(), reduce_options(false, max_steps));
    TreeAnalysis a = analyze_tree(std::move(tree));
    j["blowups"] = a.tree.steps.size();
    j["components"] = a.tree.components.size();
    j["points"] = a.tree.points.size();
    j["cs_check"] = a.cs.pass;
    j["dead_branches"] = a.branches.branches.size();
    j["initial_components"] = a.branches.initial_components;
    j["strongly_presentable"] = a.presentability.strongly_presentable;
    if (a.audit.applicable)
        j["initial_component_audit"] = a.audit.pass;
    j["flags"] = std::vector<std::string>(a.tree.flags.begin(), a.tree.flags.end());
    j["pass"] = a.cs.pass && (!a.audit.applicable || a.audit.pass);
    return j;
}

} // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Reduction of plane foliation singularities and holonomy numerics", "foliate"};
    app.require_subcommand(1);

    std::function<void()> action;

    // classify
    Input cl_in;
    int sep_order = 0;
    auto* cl = app.add_subcommand("classify", "classify the singularity at the origin");
    add_input(cl, cl_in);
    cl->add_option("--separatrix-order", sep_order, "also print the weak separatrix jet of a saddle-node");
    cl->callback([&] {
        action = [&] {
            DiffForm w = cl_in.resolve();
            SingClass c = classify(w);
            json j = class_json(c);
            j["form"] = w.str();
            if (sep_order > 0 && c.kind == SingClass::Kind::SaddleNode) {
                KPoly g = saddle_node_separatrix(w, SeparatrixJet::Direction::Weak, sep_order).graph();
                j["weak_separatrix"] = g.str("x");
            }
            emit(out, j, "");
        };
    });

    // reduce
    Input re_in;
    std::string re_out, re_dot;
    bool re_force = false;
    int re_max = 64;
    auto* re = app.add_subcommand("reduce", "reduce by blow-ups and emit the tree document");
    add_input(re, re_in);
    re->add_option("--out", re_out, "write the JSON tree document here (default: stdout)");
    re->add_option("--dot", re_dot, "write the DOT dual graph here");
    re->add_flag("--force-blowup", re_force, "blow up the origin even when already reduced");
    re->add_option("--max-steps", re_max, "blow-up limit")->check(CLI::PositiveNumber);
    re->callback([&] {
        action = [&] {
            TreeAnalysis a = analyze_tree(reduce(re_in.resolve(), reduce_options(re_force, re_max)));
            json doc = tree_document(a);
            emit(out, doc, re_out);
            if (!re_dot.empty())
                write_file(re_dot, tree_dot(a));
            if (!re_out.empty())
                out << json{{"out", re_out}, {"blowups", a.tree.steps.size()}, {"cs_check", a.cs.pass}}.dump() << "\n";
        };
    });

    // cs-check, branches, presentability
    Input an_in;
    bool an_force = false;
    std::string which;
    for (const char* name : {"cs-check", "branches", "presentability"}) {
        auto* sub = app.add_subcommand(name, std::string("reduce and report ") + name);
        add_input(sub, an_in);
        sub->add_flag("--force-blowup", an_force, "blow up the origin even when already reduced");
        sub->callback([&, sub] {
            which = sub->get_name();
            action = [&] {
                TreeAnalysis a = analyze_tree(reduce(an_in.resolve(), reduce_options(an_force, 64)));
                json doc = tree_document(a);
                json j;
                if (which == "cs-check") {
                    j = doc["cs_check"];
                } else if (which == "branches") {
                    j = {{"branches", doc["branches"]},
                         {"initial_components", doc["initial_components"]},
                         {"notes", doc["branch_notes"]},
                         {"initial_component_audit", doc["initial_component_audit"]}};
                } else {
                    j = doc["presentability"];
                    j["strongly_presentable"] = doc["strongly_presentable"];
                }
                emit(out, j, "");
                if (which == "cs-check" && !a.cs.pass)
                    throw std::runtime_error("Camacho-Sad check failed");
            };
        });
    }

    // lift / holonomy
    Input li_in;
    double radius = 0.5, turns = 1;
    std::string y0s = "0.1", csv_path, grid_s;
    bool swap = false;
    auto* li = app.add_subcommand("lift", "lift the circle |x| = radius into the leaf through (radius, y0)");
    auto* ho = app.add_subcommand("holonomy", "holonomy of the circle |x| = radius on a grid of y0");
    for (auto* sub : {li, ho}) {
        add_input(sub, li_in);
        sub->add_option("--radius", radius, "circle radius")->check(CLI::PositiveNumber);
        sub->add_option("--turns", turns, "number of turns (negative: clockwise)");
        sub->add_flag("--swap", swap, "exchange x and y (lift over a circle in y)");
    }
    li->add_option("--y0", y0s, "initial fiber value 're' or 're,im'");
    li->add_option("--csv", csv_path, "write samples (t, Re x, Im x, Re y, Im y)");
    ho->add_option("--grid", grid_s, "fiber values separated by ';' (default: 10 points on [0.01, 0.1])");
    li->callback([&] {
        action = [&] {
            ComplexForm f = ComplexForm::from(li_in.resolve());
            if (swap)
                f = f.swapped();
            LiftResult r = lift_path(f, CPath::circle(radius, turns), parse_complex(y0s));
            if (!csv_path.empty())
                write_file(csv_path, samples_csv(r.samples));
            emit(out, lift_json(r), "");
        };
    });
    ho->callback([&] {
        action = [&] {
            ComplexForm f = ComplexForm::from(li_in.resolve());
            if (swap)
                f = f.swapped();
            std::vector<cplx> grid;
            if (grid_s.empty()) {
                for (int i = 0; i < 10; ++i)
                    grid.push_back(0.01 + 0.01 * i);
            } else {
                std::stringstream ss(grid_s);
                std::string item;
                while (std::getline(ss, item, ';'))
                    grid.push_back(parse_complex(item));
            }
            json pts = json::array();
            for (const HolonomyPoint& p : holonomy(f, CPath::circle(radius, turns), grid))
                pts.push_back({{"y0", cjson(p.y0)},
                               {"y1", cjson(p.y1)},
                               {"status", to_string(p.status)},
                               {"error_estimate", p.error_estimate}});
            emit(out, {{"radius", radius}, {"turns", turns}, {"points", pts}}, "");
        };
    });

    // beam-check
    std::string bc_case = "model_sn", bc_lambda = "-1", bc_rcoef = "0";
    int bc_k = 1, bc_rays = 100;
    double bc_delta = std::numbers::pi / 3, bc_zstar_x = 0.3, bc_y0 = 0.5, bc_tmax = 20;
    auto* bc = app.add_subcommand("beam-check", "verify |y| decreases along stability-beam rays");
    bc->add_option("--case", bc_case, "prepared form")->check(CLI::IsMember({"linear", "model_sn"}));
    bc->add_option("--lambda", bc_lambda, "eigenvalue ratio 're' or 're,im' (linear)");
    bc->add_option("--k", bc_k, "saddle-node order")->check(CLI::PositiveNumber);
    bc->add_option("--rcoef", bc_rcoef, "R = rcoef * x (linear); M is |rcoef| on the unit polydisk");
    bc->add_option("--delta", bc_delta, "half-aperture of the beam");
    bc->add_option("--rays", bc_rays, "number of rays")->check(CLI::PositiveNumber);
    bc->add_option("--x-star", bc_zstar_x, "base point x* (z* = log x*)")->check(CLI::PositiveNumber);
    bc->add_option("--y0", bc_y0, "initial |y|");
    bc->add_option("--t-max", bc_tmax, "ray length");
    bc->callback([&] {
        action = [&] {
            PreparedForm f;
            if (bc_case == "model_sn") {
                f.kind = PreparedForm::Kind::SaddleNode;
                f.k = bc_k;
            } else {
                f.lambda = parse_complex(bc_lambda);
                cplx a = parse_complex(bc_rcoef);
                if (a != 0.0) {
                    f.R = [a](cplx x, cplx) { return a * x; };
                    f.M = std::abs(a);
                }
            }
            BeamReport r = beam_verify(f, std::log(bc_zstar_x), bc_y0, bc_delta, bc_rays, bc_tmax);
            json viol = json::array();
            for (const BeamViolation& v : r.violations)
                viol.push_back({{"phi", v.phi}, {"t", v.t}, {"before", v.before}, {"after", v.after}});
            emit(out,
                 {{"delta", r.delta},
                  {"precondition", r.precondition},
                  {"rays", r.rays.size()},
                  {"violations", viol},
                  {"violation_count", r.violations.size()}},
                 "");
        };
    });

    // cycles
    double cy_c = 0.5;
    std::string cy_csv;
    auto* cy = app.add_subcommand("cycles", "verify the paths Gamma_c and the pulled-back loop gamma_c");
    cy->add_option("--c", cy_c, "parameter in (0, 1)");
    cy->add_option("--csv", cy_csv, "write the lifted loop samples");
    cy->callback([&] {
        action = [&] {
            GammaCReport g = gamma_c_verify(cy_c);
            PsiCycleReport p = psi_cycle_verify(cy_c);
            if (!cy_csv.empty())
                write_file(cy_csv, samples_csv(p.samples));
            json pj = {{"pass", p.pass},
                       {"closed", p.closed},
                       {"closure_gap", p.closure_gap},
                       {"max_lift_deviation", p.max_lift_deviation},
                       {"lift_status", to_string(p.lift_status)},
                       {"winding_x0", p.winding_x0},
                       {"winding_y_plus1", p.winding_y_plus},
                       {"winding_y_minus1", p.winding_y_minus},
                       {"notes", p.notes}};
            pj["winding_y0"] = p.winding_y0 ? json(*p.winding_y0) : json(nullptr);
            emit(out,
                 {{"c", cy_c},
                  {"gamma_c",
                   {{"pass", g.pass},
                    {"start", {cjson(g.start_x), cjson(g.start_y)}},
                    {"end", {cjson(g.end_x), cjson(g.end_y)}},
                    {"endpoint_error", g.endpoint_error},
                    {"max_residual", g.max_residual},
                    {"max_h0_error", g.max_h0_error},
                    {"samples", g.samples}}},
                  {"psi_cycle", pj}},
                 "");
        };
    });

    // sigma
    Input si_in;
    double si_rho = 0.5, si_r = 0.1;
    SigmaOptions si_opts;
    std::string si_csv;
    auto* si = app.add_subcommand("sigma", "estimate the holonomy domain of the circle |x| = rho");
    add_input(si, si_in);
    si->add_option("--rho", si_rho, "circle radius")->check(CLI::PositiveNumber);
    si->add_option("--r", si_r, "fiber radius")->check(CLI::PositiveNumber);
    si->add_option("--grid", si_opts.grid, "grid size per side")->check(CLI::PositiveNumber);
    si->add_option("--directions", si_opts.directions, "bisection directions")->check(CLI::Range(3, 100000));
    si->add_option("--csv", si_csv, "write the boundary polyline (index, 0, 0, Re y, Im y)");
    si->callback([&] {
        action = [&] {
            ComplexForm f = ComplexForm::from(si_in.resolve("model_sn"));
            SigmaResult s = sigma_domain(f, si_rho, si_r, si_opts);
            int members = 0;
            for (const auto& row : s.member)
                for (char m : row)
                    members += m;
            if (!si_csv.empty()) {
                std::vector<LiftSample> b;
                for (size_t i = 0; i < s.boundary.size(); ++i)
                    b.push_back({static_cast<double>(i), 0.0, s.boundary[i]});
                write_file(si_csv, samples_csv(b));
            }
            json rough = s.boundary_roughness.infinite ? json("infinite") : json(s.boundary_roughness.value);
            emit(out,
                 {{"rho", s.rho},
                  {"r", s.r},
                  {"grid", s.grid},
                  {"members", members},
                  {"contains_origin", s.contains_origin},
                  {"components", s.components},
                  {"boundary_roughness", rough},
                  {"roughness_slack", s.roughness_slack}},
                 "");
        };
    });

    // corpus
    Input co_in;
    int co_max = 64;
    auto* co = app.add_subcommand("corpus", "run the symbolic pipeline on built-in cases");
    add_input(co, co_in);
    co->add_option("--max-steps", co_max, "blow-up limit")->check(CLI::PositiveNumber);
    co->callback([&] {
        action = [&] {
            std::vector<corpus::Case> cases;
            if (co_in.case_name.empty() && co_in.form.empty()) {
                cases = corpus::all_cases();
            } else {
                std::string name = co_in.case_name.empty() ? "form" : co_in.case_name;
                if (!co_in.n.empty())
                    name += " n=" + co_in.n;
                corpus::Case c{name, co_in.resolve(), co_in.form.empty() ? "corpus case" : co_in.form};
                cases.push_back(c);
            }
            json results = json::array();
            bool all = true;
            for (const corpus::Case& c : cases) {
                json j;
                try {
                    j = corpus_case(c, co_max);
                } catch (const std::exception& e) {
                    j = {{"case", c.name}, {"pass", false}, {"error", e.what()}};
                }
                all = all && j["pass"].get<bool>();
                results.push_back(j);
            }
            emit(out, {{"cases", results}, {"pass", all}}, "");
            if (!all)
                throw std::runtime_error("corpus cases failed");
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }
    try {
        action();
    } catch (const CLI::ValidationError& e) {
        err << "foliate: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        out << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}

} // namespace foliate
