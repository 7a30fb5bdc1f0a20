#pragma once

#include <map>
#include <set>
#include <string>

#include "trop/complex.hpp"
#include "trop/rational.hpp"

namespace trop {

// Strict (integer slopes) or rational piecewise linear function, stored as the value on
// each primitive ray generator plus a constant. The domain is an up-closed set of cone
// ids (a union of open stars); linearity on each cone is automatic in the simplicial
// coordinate convention.
struct PLFunction {
    std::map<std::string, Rat> ray_values; // absent ray = slope 0
    Rat constant = 0;
    std::set<std::string> domain;

    Rat slope(const std::string& ray) const {
        auto it = ray_values.find(ray);
        return it == ray_values.end() ? Rat(0) : it->second;
    }
    bool strict() const {
        for (auto& [r, v] : ray_values)
            if (!is_integer(v)) return false;
        return true;
    }
    // slopes vanish on all rays of the cone
    bool constant_on(const Cone& c) const {
        for (auto& r : c.rays)
            if (slope(r) != 0) return false;
        return true;
    }
};

std::set<std::string> full_domain(const ConeComplex& cx);
bool domain_up_closed(const ConeComplex& cx, const std::set<std::string>& domain);
bool domain_contains_star(const ConeComplex& cx, const std::set<std::string>& domain,
                          const std::string& cone_id);

PLFunction pl_add(const PLFunction& a, const PLFunction& b);
PLFunction pl_sub(const PLFunction& a, const PLFunction& b);
PLFunction pl_scale(const Rat& c, const PLFunction& a);
// with slope -1 on the given ray and 0 elsewhere; divisor convention for +ray
PLFunction ray_function(const ConeComplex& cx, const std::string& ray);

struct Point {
    std::string cone;
    std::map<std::string, Rat> coords; // ray -> coordinate, rays of the cone
};

Rat evaluate(const ConeComplex& cx, const PLFunction& phi, const Point& p);

} // namespace trop
