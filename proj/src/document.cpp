#include "foliation/document.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

namespace foliation {

TreeAnalysis analyze_tree(ReductionTree tree)
{
    TreeAnalysis a;
    a.cs = cs_check(tree);
    a.branches = analyze_branches(tree);
    a.presentability = strongly_presentable(tree);
    a.audit = initial_component_audit(tree);
    a.tree = std::move(tree);
    return a;
}

nlohmann::json rational_json(const Rational& q) { return q.get_str(); }

nlohmann::json field_json(const FieldPtr& f)
{
    nlohmann::json j;
    j["degree"] = f->degree();
    j["description"] = f->describe();
    nlohmann::json m = nlohmann::json::array();
    for (const Rational& c : f->modulus().coeffs())
        m.push_back(rational_json(c));
    j["modulus"] = m;
    return j;
}

nlohmann::json element_json(const FieldElem& e)
{
    nlohmann::json j;
    j["field"] = field_json(e.field());
    nlohmann::json c = nlohmann::json::array();
    for (int i = 0; i < e.field()->degree(); ++i)
        c.push_back(rational_json(e.rep().coeff(i)));
    j["coefficients"] = c;
    j["text"] = e.str();
    return j;
}

namespace {

nlohmann::json vec_json(const Vec2& v) { return {element_json(v[0]), element_json(v[1])}; }

} // namespace

nlohmann::json class_json(const SingClass& c)
{
    nlohmann::json j;
    j["kind"] = to_string(c.kind);
    nlohmann::json data = nlohmann::json::object();
    switch (c.kind) {
    case SingClass::Kind::ReducedNonDegenerate:
    case SingClass::Kind::NonReduced:
        if (c.ratio) {
            data["s"] = element_json(c.ratio->s);
            data["ratio_kind"] = to_string(c.ratio->kind);
            if (c.ratio->lambda)
                data["lambda"] = rational_json(*c.ratio->lambda);
            if (c.ratio->lambda_inv)
                data["lambda_inv"] = rational_json(*c.ratio->lambda_inv);
        }
        if (c.kind == SingClass::Kind::NonReduced)
            data["reason"] = to_string(c.reason);
        if (!c.caveat.empty())
            data["caveat"] = c.caveat;
        break;
    case SingClass::Kind::SaddleNode:
        data["k"] = c.k;
        if (c.mu)
            data["mu"] = element_json(*c.mu);
        if (c.strong)
            data["strong"] = vec_json(*c.strong);
        if (c.weak)
            data["weak"] = vec_json(*c.weak);
        data["jet_order"] = c.jet_order;
        break;
    case SingClass::Kind::Regular:
        break;
    }
    j["data"] = data;
    return j;
}

nlohmann::json tree_document(const TreeAnalysis& a)
{
    const ReductionTree& t = a.tree;
    nlohmann::json doc;
    doc["form"] = t.form.str();

    nlohmann::json comps = nlohmann::json::array();
    for (const DivisorComponent& c : t.components)
        comps.push_back({{"id", c.id},
                         {"chern", c.self_intersection},
                         {"dicritical", c.dicritical},
                         {"birth_step", c.birth_step},
                         {"field", field_json(c.field)}});
    doc["components"] = comps;

    auto corners = t.corners;
    for (auto& [p, q] : corners)
        if (p > q)
            std::swap(p, q);
    std::sort(corners.begin(), corners.end());
    nlohmann::json cj = nlohmann::json::array();
    for (auto [p, q] : corners)
        cj.push_back({p, q});
    doc["corners"] = cj;

    // CS values per point and component
    std::map<int, nlohmann::json> cs_of_point;
    for (const CsComponentReport& r : a.cs.components)
        for (const CsEntry& e : r.entries)
            cs_of_point[e.point][std::to_string(r.component)] = element_json(e.index);

    nlohmann::json pts = nlohmann::json::array();
    for (const SingularPoint& p : t.points) {
        nlohmann::json axes = nlohmann::json::array();
        for (Axis ax : p.host_axes)
            axes.push_back(to_string(ax));
        nlohmann::json cls = class_json(p.cls);
        auto it = cs_of_point.find(p.index);
        pts.push_back({{"index", p.index},
                       {"hosts", p.hosts},
                       {"host_axes", axes},
                       {"chart", p.chart},
                       {"location", element_json(p.location)},
                       {"local_form", p.local_form.str()},
                       {"class", cls["kind"]},
                       {"data", cls["data"]},
                       {"cs", it == cs_of_point.end() ? nlohmann::json::object() : it->second}});
    }
    doc["singularities"] = pts;

    nlohmann::json steps = nlohmann::json::array();
    for (const StepLog& s : t.steps)
        steps.push_back({{"step", s.step},
                         {"created", s.created},
                         {"center_hosts", s.center_hosts},
                         {"chart", s.chart},
                         {"location", element_json(s.location)},
                         {"nu", s.nu},
                         {"dicritical", s.dicritical},
                         {"tangency", s.tangency}});
    doc["steps"] = steps;

    nlohmann::json traces = nlohmann::json::array();
    for (const CurveTrace& c : t.traces) {
        nlohmann::json j = {{"curve", c.curve}, {"point", c.point}, {"component", c.component}};
        if (c.tangent)
            j["tangent"] = vec_json(*c.tangent);
        traces.push_back(j);
    }
    doc["traces"] = traces;
    doc["flags"] = std::vector<std::string>(t.flags.begin(), t.flags.end());

    nlohmann::json branches = nlohmann::json::array();
    for (const DeadBranch& b : a.branches.branches)
        branches.push_back({{"chain", b.chain},
                            {"extremity", b.extremity},
                            {"attaching", b.attaching},
                            {"attachment_point", b.attachment_point},
                            {"attached_to", b.attached_to}});
    doc["branches"] = branches;
    doc["initial_components"] = a.branches.initial_components;
    doc["branch_notes"] = a.branches.notes;

    nlohmann::json witnesses = nlohmann::json::array();
    for (const SeparatrixWitness& w : a.presentability.witnesses)
        witnesses.push_back({{"point", w.point}, {"component", w.component}, {"role", w.role}});
    doc["strongly_presentable"] = a.presentability.strongly_presentable;
    doc["presentability"] = {{"witnesses", witnesses},
                             {"corner_saddle_nodes", a.presentability.corner_saddle_nodes},
                             {"violations", a.presentability.violations}};

    nlohmann::json csj = nlohmann::json::array();
    for (const CsComponentReport& r : a.cs.components) {
        nlohmann::json j = {{"component", r.component},
                            {"skipped", r.skipped},
                            {"self_intersection", r.self_intersection},
                            {"pass", r.pass}};
        if (!r.skipped)
            j["sum"] = element_json(r.sum);
        csj.push_back(j);
    }
    doc["cs_check"] = {{"pass", a.cs.pass}, {"components", csj}};

    nlohmann::json checks = nlohmann::json::array();
    for (const AuditCheck& c : a.audit.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    doc["initial_component_audit"] = {
        {"applicable", a.audit.applicable}, {"pass", a.audit.pass}, {"checks", checks}, {"notes", a.audit.notes}};
    return doc;
}

namespace {

std::string class_label(const SingClass& c)
{
    switch (c.kind) {
    case SingClass::Kind::SaddleNode:
        return "saddle-node k=" + std::to_string(c.k) + " mu=" + (c.mu ? c.mu->str() : "?");
    case SingClass::Kind::ReducedNonDegenerate:
    case SingClass::Kind::NonReduced: {
        std::string s = c.kind == SingClass::Kind::NonReduced ? "non-reduced" : "nondegenerate";
        if (c.ratio)
            s += c.ratio->lambda ? " lambda=" + c.ratio->lambda->get_str() : " s=" + c.ratio->s.str();
        return s;
    }
    case SingClass::Kind::Regular:
        return "regular";
    }
    return "?";
}

std::string escape(const std::string& s)
{
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\')
            out += '\\';
        out += ch;
    }
    return out;
}

} // namespace

std::string tree_dot(const TreeAnalysis& a)
{
    const ReductionTree& t = a.tree;
    std::ostringstream os;
    os << "graph reduction {\n";
    for (const DivisorComponent& c : t.components) {
        std::string label = "E" + std::to_string(c.id) + "\\n" + std::to_string(c.self_intersection);
        if (c.field->degree() > 1)
            label += "\\n" + escape(c.field->describe());
        for (const SingularPoint& p : t.points)
            if (!p.is_corner() && !p.hosts.empty() && p.hosts[0] == c.id)
                label += "\\np" + std::to_string(p.index) + ": " + escape(class_label(p.cls));
        os << "  E" << c.id << " [label=\"" << label << "\", shape=" << (c.dicritical ? "box" : "ellipse") << "];\n";
    }
    for (const SingularPoint& p : t.points)
        if (p.is_corner())
            os << "  E" << p.hosts[0] << " -- E" << p.hosts[1] << " [label=\"p" << p.index << ": "
               << escape(class_label(p.cls)) << "\"];\n";
    // corners without a point record
    for (auto [p, q] : t.corners) {
        bool listed = false;
        for (const SingularPoint& s : t.points)
            if (s.is_corner() && ((s.hosts[0] == p && s.hosts[1] == q) || (s.hosts[0] == q && s.hosts[1] == p)))
                listed = true;
        if (!listed)
            os << "  E" << p << " -- E" << q << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string samples_csv(const std::vector<LiftSample>& samples)
{
    std::ostringstream os;
    os << std::setprecision(17);
    os << "t,re_x,im_x,re_y,im_y\n";
    for (const LiftSample& s : samples)
        os << s.t << ',' << s.x.real() << ',' << s.x.imag() << ',' << s.y.real() << ',' << s.y.imag() << '\n';
    return os.str();
}

} // namespace foliation
