#include "trop/plfunction.hpp"

namespace trop {

std::set<std::string> full_domain(const ConeComplex& cx) {
    std::set<std::string> d;
    for (auto& c : cx.cones()) d.insert(c.id);
    return d;
}

bool domain_up_closed(const ConeComplex& cx, const std::set<std::string>& domain) {
    for (auto& id : domain) {
        if (!cx.has_cone(id)) return false;
        for (auto& up : cx.star(id))
            if (!domain.count(up)) return false;
    }
    return true;
}

bool domain_contains_star(const ConeComplex& cx, const std::set<std::string>& domain,
                          const std::string& cone_id) {
    for (auto& s : cx.star(cone_id))
        if (!domain.count(s)) return false;
    return true;
}

namespace {
std::set<std::string> domain_meet(const std::set<std::string>& a, const std::set<std::string>& b) {
    std::set<std::string> out;
    for (auto& x : a)
        if (b.count(x)) out.insert(x);
    return out;
}
} // namespace

PLFunction pl_add(const PLFunction& a, const PLFunction& b) {
    PLFunction out = a;
    for (auto& [r, v] : b.ray_values) out.ray_values[r] += v;
    std::erase_if(out.ray_values, [](const auto& kv) { return kv.second == 0; });
    out.constant = a.constant + b.constant;
    out.domain = domain_meet(a.domain, b.domain);
    return out;
}

PLFunction pl_sub(const PLFunction& a, const PLFunction& b) {
    return pl_add(a, pl_scale(-1, b));
}

PLFunction pl_scale(const Rat& c, const PLFunction& a) {
    PLFunction out;
    out.domain = a.domain;
    out.constant = c * a.constant;
    if (c != 0)
        for (auto& [r, v] : a.ray_values) out.ray_values[r] = c * v;
    return out;
}

PLFunction ray_function(const ConeComplex& cx, const std::string& ray) {
    PLFunction out;
    out.ray_values[cx.ray(ray).id] = -1;
    out.domain = full_domain(cx);
    return out;
}

Rat evaluate(const ConeComplex& cx, const PLFunction& phi, const Point& p) {
    const Cone& c = cx.cone(p.cone);
    if (!phi.domain.count(c.id))
        fail(errc::outside_domain, "cone '" + c.id + "' is outside the function's domain");
    Rat v = phi.constant;
    for (auto& [r, x] : p.coords) {
        if (x < 0) fail(errc::precondition, "negative coordinate on ray '" + r + "'");
        if (!std::binary_search(c.rays.begin(), c.rays.end(), r))
            fail(errc::precondition, "coordinate on ray '" + r + "' outside cone '" + c.id + "'");
        v += phi.slope(r) * x;
    }
    return v;
}

} // namespace trop
