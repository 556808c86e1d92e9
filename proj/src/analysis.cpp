#include "foliation/analysis.hpp"

#include "foliation/extension.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace foliation {

CsReport cs_check(const ReductionTree& tree)
{
    CsReport r;
    for (const auto& c : tree.components) {
        CsComponentReport cr;
        cr.component = c.id;
        cr.self_intersection = c.self_intersection;
        cr.sum = FieldElem(c.field, 0);
        if (c.dicritical) {
            cr.skipped = true;
            cr.pass = true;
            r.components.push_back(std::move(cr));
            continue;
        }
        for (const auto& p : tree.points) {
            for (size_t i = 0; i < p.hosts.size(); ++i) {
                if (p.hosts[i] != c.id)
                    continue;
                if (!p.cls.is_reduced())
                    throw std::logic_error("cs_check: point " + std::to_string(p.index) + " is not reduced");
                CsEntry e;
                e.point = p.index;
                e.index = cs_index(p.local_form, p.host_axes[i]);
                e.trace = relative_trace(e.index, c.field);
                cr.sum += e.trace;
                cr.entries.push_back(std::move(e));
            }
        }
        cr.pass = cr.sum == FieldElem(c.field, c.self_intersection);
        r.pass = r.pass && cr.pass;
        r.components.push_back(std::move(cr));
    }
    return r;
}

int singularity_count(const ReductionTree& tree, int c)
{
    int n = 0;
    for (const auto& p : tree.points)
        if (std::find(p.hosts.begin(), p.hosts.end(), c) != p.hosts.end())
            n += tree.multiplicity_on(p, c);
    return n;
}

namespace {

std::vector<const SingularPoint*> points_on(const ReductionTree& tree, int c)
{
    std::vector<const SingularPoint*> out;
    for (const auto& p : tree.points)
        if (std::find(p.hosts.begin(), p.hosts.end(), c) != p.hosts.end())
            out.push_back(&p);
    return out;
}

int other_host(const SingularPoint& p, int c)
{
    if (!p.is_corner())
        return -1;
    return p.hosts[0] == c ? p.hosts[1] : p.hosts[0];
}

} // namespace

BranchReport detect_dead_branches(const ReductionTree& tree)
{
    BranchReport r;
    std::set<int> used;
    for (const auto& c0 : tree.components) {
        if (c0.dicritical || singularity_count(tree, c0.id) != 1)
            continue;
        DeadBranch b;
        b.extremity = c0.id;
        b.chain = {c0.id};
        int came_from = -1;
        bool dicritical_link = false;
        while (true) {
            int cur = b.chain.back();
            const SingularPoint* other = nullptr;
            for (const SingularPoint* p : points_on(tree, cur))
                if (p->index != came_from)
                    other = p;
            if (!other)
                break;
            int nxt = other_host(*other, cur);
            bool extend = nxt > 0 && singularity_count(tree, nxt) == 2 && tree.multiplicity_on(*other, cur) == 1 &&
                          std::find(b.chain.begin(), b.chain.end(), nxt) == b.chain.end();
            if (extend && tree.component(nxt).dicritical) {
                dicritical_link = true;
                extend = false;
            }
            if (!extend) {
                b.attachment_point = other->index;
                b.attached_to = nxt;
                break;
            }
            b.chain.push_back(nxt);
            came_from = other->index;
        }
        b.attaching = b.chain.back();
        if (dicritical_link)
            r.notes.push_back("chain from E" + std::to_string(c0.id) + " stops before a dicritical link");
        bool overlap = std::any_of(b.chain.begin(), b.chain.end(), [&](int id) { return used.count(id) > 0; });
        if (overlap) {
            r.notes.push_back("chain from E" + std::to_string(c0.id) + " overlaps an earlier branch and is dropped");
            continue;
        }
        used.insert(b.chain.begin(), b.chain.end());
        r.branches.push_back(std::move(b));
    }
    return r;
}

void detect_initial_components(const ReductionTree& tree, BranchReport& report)
{
    report.initial_components.clear();
    for (const auto& c : tree.components) {
        if (c.dicritical)
            continue;
        int attached = 0, attach_points = 0;
        std::set<int> counted;
        for (const auto& b : report.branches) {
            if (b.attached_to != c.id || b.attachment_point < 0)
                continue;
            const SingularPoint& p = tree.points[b.attachment_point];
            int m = tree.multiplicity_on(p, c.id);
            attached += m;
            if (counted.insert(p.index).second)
                attach_points += m;
        }
        if (attached >= 2 && singularity_count(tree, c.id) - attach_points == 1)
            report.initial_components.push_back(c.id);
    }
}

BranchReport analyze_branches(const ReductionTree& tree)
{
    BranchReport r = detect_dead_branches(tree);
    detect_initial_components(tree, r);
    return r;
}

PresentabilityVerdict strongly_presentable(const ReductionTree& tree)
{
    PresentabilityVerdict v;
    for (const auto& p : tree.points) {
        if (p.cls.kind != SingClass::Kind::SaddleNode)
            continue;
        if (p.is_corner())
            v.corner_saddle_nodes.push_back(p.index);
        bool bad = false;
        for (size_t i = 0; i < p.hosts.size(); ++i) {
            bool strong = tangent_to_axis(*p.cls.strong, p.host_axes[i]);
            v.witnesses.push_back({p.index, p.hosts[i], strong ? "strong" : "weak"});
            bad = bad || strong;
        }
        if (bad) {
            v.strongly_presentable = false;
            v.violations.push_back(p.index);
        }
    }
    return v;
}

AuditReport initial_component_audit(const ReductionTree& tree)
{
    AuditReport a;
    a.notes.push_back("corner saddles are checked for a rational ratio only; linearizability is not decided");
    a.applicable = strongly_presentable(tree).strongly_presentable;
    if (!a.applicable) {
        a.notes.push_back("tree is not strongly presentable: audit not applicable");
        return a;
    }
    BranchReport br = analyze_branches(tree);
    auto add = [&](std::string name, bool ok, std::string detail) {
        a.checks.push_back({std::move(name), ok, std::move(detail)});
    };
    add("at most one initial component", br.initial_components.size() <= 1,
        std::to_string(br.initial_components.size()) + " found");
    if (br.initial_components.size() == 1) {
        int c = br.initial_components.front();
        std::vector<const DeadBranch*> attached;
        int count = 0;
        for (const auto& b : br.branches)
            if (b.attached_to == c) {
                attached.push_back(&b);
                count += tree.multiplicity_on(tree.points[b.attachment_point], c);
            }
        add("exactly two attached branches", count == 2, std::to_string(count) + " attached to E" + std::to_string(c));
        bool rational = true;
        std::string bad;
        bool first_born = false;
        for (const DeadBranch* b : attached) {
            std::set<int> links(b->chain.begin(), b->chain.end());
            for (const auto& p : tree.points) {
                bool inside = p.is_corner() && p.index != b->attachment_point &&
                              (links.count(p.hosts[0]) || links.count(p.hosts[1]));
                if (!inside)
                    continue;
                bool ok = p.cls.kind == SingClass::Kind::ReducedNonDegenerate && p.cls.ratio &&
                          p.cls.ratio->kind == RatioKind::RationalNegative;
                if (!ok) {
                    rational = false;
                    bad += " P" + std::to_string(p.index);
                }
            }
            first_born = first_born || tree.component(b->extremity).birth_step == 1;
        }
        add("branch corners are rational-ratio saddles", rational, rational ? "all corners rational" : "violations:" + bad);
        add("a branch extremity is born at step 1", first_born, "");
    }
    a.pass = std::all_of(a.checks.begin(), a.checks.end(), [](const AuditCheck& c) { return c.pass; });
    return a;
}

} // namespace foliation
