#include "foliation/blowup.hpp"

#include "foliation/extension.hpp"

#include <algorithm>

namespace foliation {

const DivisorComponent& ReductionTree::component(int id) const
{
    if (id < 1 || id > static_cast<int>(components.size()))
        throw std::out_of_range("no component " + std::to_string(id));
    return components[id - 1];
}

int ReductionTree::multiplicity_on(const SingularPoint& p, int c) const
{
    return p.field()->relative_degree(*component(c).field);
}

namespace {

struct HostRef {
    int id;
    Axis axis;
};

struct Task {
    FieldPtr field;
    DiffForm form;
    std::vector<HostRef> hosts;
    std::vector<Curve> curves;
    std::string chart = "origin";
    FieldElem location;
    bool introduces = false;
    bool force = false;
};

std::optional<Vec2> tangent_of(const Poly2& f)
{
    FieldElem a = f.coeff(1, 0), b = f.coeff(0, 1);
    if (a.is_zero() && b.is_zero())
        return std::nullopt;
    if (!b.is_zero())
        return Vec2{FieldElem(f.field(), 1), -a / b};
    return Vec2{FieldElem(f.field(), 0), FieldElem(f.field(), 1)};
}

Poly2 strict_transform(const Poly2& f, DivisorPoint::Chart chart)
{
    const FieldPtr& k = f.field();
    Poly2 x = Poly2::x(k), y = Poly2::y(k);
    int ord = f.order();
    if (chart == DivisorPoint::Chart::X)
        return f.subst(x, x * y).divide_monomial(ord, 0);
    return f.subst(x * y, y).divide_monomial(0, ord);
}

class Driver {
public:
    Driver(const ReduceOptions& o, ReductionTree& t) : opts_(o), tree_(t) {}

    void process(const Task& t)
    {
        ReductionTree snapshot = tree_;
        try {
            run(t);
        } catch (const SplitRequired& e) {
            if (!t.introduces || e.event().field.get() != t.field.get())
                throw;
            tree_ = std::move(snapshot);
            auto [f1, f2] = split_field(e.event());
            for (const FieldPtr& f : {f1, f2})
                process(remap(t, f));
            tree_.flags.insert("field-split");
        }
    }

private:
    static Task remap(const Task& t, const FieldPtr& f)
    {
        Task r = t;
        r.field = f;
        r.form = t.form.map_field(f);
        for (auto& c : r.curves)
            c.f = c.f.map_field(f);
        r.location = coerce(t.location, f);
        r.introduces = true;
        return r;
    }

    DivisorComponent& comp(int id) { return tree_.components[id - 1]; }

    bool on_dicritical(const Task& t) const
    {
        return std::any_of(t.hosts.begin(), t.hosts.end(),
                           [&](const HostRef& h) { return tree_.components[h.id - 1].dicritical; });
    }

    void run(const Task& t)
    {
        const DiffForm& w = t.form;
        if (t.force) {
            blow(t, false);
            return;
        }
        if (!w.singular_at_origin()) {
            bool tangent = false;
            int dic = -1;
            for (const HostRef& h : t.hosts) {
                if (!comp(h.id).dicritical)
                    continue;
                dic = h.id;
                tangent = tangent || (h.axis == Axis::YZero ? w.A.coeff(0, 0).is_zero() : w.B.coeff(0, 0).is_zero());
            }
            if (tangent) {
                blow(t, true);
                return;
            }
            for (const Curve& c : t.curves)
                tree_.traces.push_back({c.name, -1, dic, tangent_of(c.f)});
            return;
        }
        SingClass cls = classify(w, opts_.jet);
        bool dic = on_dicritical(t);
        if (cls.is_reduced() && !dic) {
            record(t, std::move(cls));
            return;
        }
        if (dic && t.hosts.size() == 2)
            tree_.flags.insert("dicritical-corner");
        blow(t, false);
    }

    void record(const Task& t, SingClass cls)
    {
        SingularPoint p;
        p.index = static_cast<int>(tree_.points.size());
        for (const HostRef& h : t.hosts) {
            p.hosts.push_back(h.id);
            p.host_axes.push_back(h.axis);
        }
        p.chart = t.chart;
        p.location = t.location;
        p.local_form = t.form;
        p.cls = std::move(cls);
        tree_.points.push_back(std::move(p));
        for (const Curve& c : t.curves)
            tree_.traces.push_back({c.name, static_cast<int>(tree_.points.size()) - 1, -1, tangent_of(c.f)});
    }

    void blow(const Task& t, bool tangency)
    {
        if (static_cast<int>(tree_.steps.size()) >= opts_.max_steps)
            throw ReductionLimit("reduction exceeded max_steps = " + std::to_string(opts_.max_steps), tree_);
        BlowupResult b = blowup_point(t.form, true);

        DivisorComponent e;
        e.id = static_cast<int>(tree_.components.size()) + 1;
        e.birth_step = static_cast<int>(tree_.steps.size()) + 1;
        e.self_intersection = -1;
        e.dicritical = b.dicritical;
        e.field = t.field;
        e.center = e.birth_step - 1;
        tree_.components.push_back(e);

        StepLog log;
        log.step = e.birth_step;
        log.created = e.id;
        log.chart = t.chart;
        log.location = t.location;
        log.nu = b.nu;
        log.dicritical = b.dicritical;
        log.tangency = tangency;
        for (const HostRef& h : t.hosts) {
            log.center_hosts.push_back(h.id);
            comp(h.id).self_intersection -= t.field->relative_degree(*comp(h.id).field);
        }
        tree_.steps.push_back(log);
        if (b.dicritical)
            tree_.flags.insert("dicritical");

        if (t.hosts.size() == 2) {
            auto key = std::minmax(t.hosts[0].id, t.hosts[1].id);
            auto& cs = tree_.corners;
            cs.erase(std::remove(cs.begin(), cs.end(), std::pair<int, int>(key.first, key.second)), cs.end());
        }
        for (const HostRef& h : t.hosts)
            tree_.corners.emplace_back(h.id, e.id);

        std::optional<int> host_y, host_x; // old hosts continuing through v = 0 and through the chart_y origin
        for (const HostRef& h : t.hosts)
            (h.axis == Axis::YZero ? host_y : host_x) = h.id;

        std::vector<DivisorPoint> pts = divisor_singularities(b);
        auto has = [&](DivisorPoint::Chart c, bool zero) {
            return std::any_of(pts.begin(), pts.end(), [&](const DivisorPoint& d) {
                return d.chart == c && (c == DivisorPoint::Chart::Y || (zero && d.location.is_zero()));
            });
        };
        // corners with a dicritical old host may be regular: examine them anyway
        if (host_y && !has(DivisorPoint::Chart::X, true)) {
            DivisorPoint d;
            d.chart = DivisorPoint::Chart::X;
            d.location = FieldElem(t.field, 0);
            d.local_form = b.chart_x;
            pts.push_back(std::move(d));
        }
        if (host_x && !has(DivisorPoint::Chart::Y, true)) {
            DivisorPoint d;
            d.chart = DivisorPoint::Chart::Y;
            d.location = FieldElem(t.field, 0);
            d.local_form = b.chart_y;
            pts.push_back(std::move(d));
        }

        std::vector<int> reached(t.curves.size(), 0);
        for (const DivisorPoint& d : pts) {
            Task c;
            c.field = d.local_form.field();
            c.form = d.local_form;
            c.location = d.location;
            c.introduces = c.field.get() != t.field.get();
            bool x_chart = d.chart == DivisorPoint::Chart::X;
            c.chart = "E" + std::to_string(e.id) + (x_chart ? ".x" : ".y");
            c.hosts.push_back({e.id, x_chart ? Axis::XZero : Axis::YZero});
            if (x_chart && host_y && d.location.is_zero())
                c.hosts.push_back({*host_y, Axis::YZero});
            if (!x_chart && host_x)
                c.hosts.push_back({*host_x, Axis::XZero});
            for (size_t i = 0; i < t.curves.size(); ++i) {
                Poly2 s = strict_transform(t.curves[i].f, d.chart).map_field(c.field);
                if (x_chart)
                    s = s.translate(FieldElem(c.field, 0), d.location);
                if (s.coeff(0, 0).is_zero()) {
                    c.curves.push_back({t.curves[i].name, s});
                    ++reached[i];
                }
            }
            process(c);
        }
        for (size_t i = 0; i < t.curves.size(); ++i)
            if (reached[i] == 0)
                tree_.traces.push_back({t.curves[i].name, -1, e.id, std::nullopt});
    }

    const ReduceOptions& opts_;
    ReductionTree& tree_;
};

} // namespace

ReductionTree reduce(const DiffForm& w, const ReduceOptions& opts)
{
    Normalized n = normalize_primitive(w);
    if (!n.form.singular_at_origin())
        throw std::domain_error("regular point");
    ReductionTree tree;
    tree.form = n.form;
    tree.cofactor = n.cofactor;

    Task root;
    root.field = n.form.field();
    root.form = n.form;
    root.location = FieldElem(root.field, 0);
    root.force = opts.force_initial_blowup;
    std::vector<Curve> curves = opts.curves;
    if (opts.track_axes) {
        const FieldPtr& f = root.field;
        if (is_invariant_curve(n.form, Poly2::x(f)))
            curves.push_back({"{x=0}", Poly2::x(f)});
        if (is_invariant_curve(n.form, Poly2::y(f)))
            curves.push_back({"{y=0}", Poly2::y(f)});
    }
    for (auto& c : curves) {
        if (c.f.coeff(0, 0).is_zero())
            root.curves.push_back({c.name, c.f.map_field(root.field)});
        else
            tree.traces.push_back({c.name, -1, -1, std::nullopt});
    }
    Driver(opts, tree).process(root);
    return tree;
}

} // namespace foliation
