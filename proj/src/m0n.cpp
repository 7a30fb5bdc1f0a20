#include "trop/m0n.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace trop {

namespace {

std::vector<int> complement(int n, const std::vector<int>& side) {
    std::vector<int> out;
    for (int m = 1; m <= n; ++m)
        if (!std::binary_search(side.begin(), side.end(), m)) out.push_back(m);
    return out;
}

std::string cone_id_for(const std::vector<std::string>& ray_ids) {
    if (ray_ids.empty()) return "o";
    std::string id;
    for (size_t i = 0; i < ray_ids.size(); ++i) {
        if (i) id += "+";
        id += ray_ids[i];
    }
    return id;
}

void check_marks(int n, const std::vector<int>& marks) {
    std::set<int> seen;
    for (int m : marks) {
        if (m < 1 || m > n) fail(errc::invalid_marks, "mark " + std::to_string(m) + " out of range");
        if (!seen.insert(m).second) fail(errc::invalid_marks, "repeated mark " + std::to_string(m));
    }
}

} // namespace

Split make_split(int n, std::vector<int> side) {
    std::sort(side.begin(), side.end());
    side.erase(std::unique(side.begin(), side.end()), side.end());
    check_marks(n, side);
    if (side.size() < 2 || side.size() > static_cast<size_t>(n) - 2)
        fail(errc::invalid_marks, "split side must have between 2 and n-2 marks");
    std::vector<int> other = complement(n, side);
    if (other < side) side = std::move(other);
    return Split{std::move(side)};
}

bool splits_compatible(int n, const Split& a, const Split& b) {
    // both stored sides contain mark 1, so the splits are compatible iff the sides
    // nest or cover everything together
    auto subset = [](const std::vector<int>& x, const std::vector<int>& y) {
        return std::includes(y.begin(), y.end(), x.begin(), x.end());
    };
    if (subset(a.part, b.part) || subset(b.part, a.part)) return true;
    std::vector<int> uni;
    std::set_union(a.part.begin(), a.part.end(), b.part.begin(), b.part.end(),
                   std::back_inserter(uni));
    return static_cast<int>(uni.size()) == n;
}

std::vector<Split> all_splits(int n) {
    // enumerate subsets of {2..n} joined with {1}, sizes 2..n-2, in lex order
    std::vector<Split> out;
    std::vector<int> rest;
    for (int m = 2; m <= n; ++m) rest.push_back(m);
    for (size_t mask = 0; mask < (size_t(1) << rest.size()); ++mask) {
        std::vector<int> side{1};
        for (size_t b = 0; b < rest.size(); ++b)
            if (mask & (size_t(1) << b)) side.push_back(rest[b]);
        if (side.size() < 2 || side.size() > static_cast<size_t>(n) - 2) continue;
        out.push_back(Split{side});
    }
    std::sort(out.begin(), out.end(), [](const Split& a, const Split& b) { return a.part < b.part; });
    return out;
}

std::string split_ray_id(const Split& s) {
    std::string id = "s";
    for (int m : s.part) id += std::to_string(m);
    return id;
}

ComplexPtr build_m0n(int n) {
    if (n < 4 || n > 8) fail(errc::out_of_range, "n must be between 4 and 8");
    std::vector<Split> splits = all_splits(n);
    std::vector<Ray> rays;
    for (auto& s : splits) {
        std::string label;
        for (int m : complement(n, s.part)) label += std::to_string(m);
        label += "|";
        for (int m : s.part) label += std::to_string(m);
        rays.push_back(Ray{split_ray_id(s), label});
    }
    // all pairwise compatible split sets, by incremental extension in lex order
    std::vector<Cone> cones;
    std::vector<size_t> current;
    auto emit = [&]() {
        Cone c;
        std::vector<std::string> ids;
        for (size_t i : current) ids.push_back(split_ray_id(splits[i]));
        std::sort(ids.begin(), ids.end());
        c.id = cone_id_for(ids);
        c.rays = ids;
        cones.push_back(std::move(c));
    };
    std::function<void(size_t)> extend = [&](size_t from) {
        emit();
        for (size_t i = from; i < splits.size(); ++i) {
            bool ok = true;
            for (size_t j : current)
                if (!splits_compatible(n, splits[j], splits[i])) { ok = false; break; }
            if (!ok) continue;
            current.push_back(i);
            extend(i + 1);
            current.pop_back();
        }
    };
    extend(0);
    return build_complex(std::move(rays), std::move(cones));
}

std::string m0n_ray_for(int n, const std::vector<int>& side) {
    return split_ray_id(make_split(n, side));
}

namespace {

// how the split separates the quadruple: the pair with marks[0], or empty when the
// separation is not 2|2
std::array<int, 2> separation(const Split& s, const std::array<int, 4>& marks, bool& is_22) {
    std::vector<int> inside;
    for (int m : marks)
        if (std::binary_search(s.part.begin(), s.part.end(), m)) inside.push_back(m);
    is_22 = inside.size() == 2;
    if (!is_22) return {0, 0};
    bool first_in = std::find(inside.begin(), inside.end(), marks[0]) != inside.end();
    std::array<int, 2> with_first{0, 0};
    size_t idx = 0;
    for (int m : marks) {
        bool in = std::binary_search(s.part.begin(), s.part.end(), m);
        if (in == first_in) with_first[idx++] = m;
    }
    return with_first;
}

} // namespace

Forgetful forgetful(const ComplexPtr& m0n_complex, int n, std::array<int, 4> marks) {
    check_marks(n, {marks.begin(), marks.end()});
    ComplexPtr m04 = build_m0n(4);
    ComplexMorphism f;
    f.source = m0n_complex;
    f.target = m04;
    // relabel: the side containing p1 maps to the side containing 1
    auto target_ray = [&](const std::array<int, 2>& with_first) {
        std::vector<int> side;
        for (size_t i = 0; i < 4; ++i)
            if (marks[i] == with_first[0] || marks[i] == with_first[1])
                side.push_back(static_cast<int>(i) + 1);
        return m0n_ray_for(4, side);
    };
    for (auto& ray : m0n_complex->rays()) {
        Split s; // recover the split from the ray id is fragile; recompute from label-free part
        // ray ids are "s" + digits of the stored side
        for (size_t i = 1; i < ray.id.size(); ++i) s.part.push_back(ray.id[i] - '0');
        bool is_22 = false;
        auto pair = separation(s, marks, is_22);
        if (!is_22) {
            f.ray_images[ray.id] = {};
        } else {
            f.ray_images[ray.id] = {{target_ray(pair), 1}};
        }
    }
    for (auto& c : m0n_complex->cones()) {
        std::set<std::string> support;
        for (auto& r : c.rays)
            for (auto& [t, v] : f.ray_images[r])
                if (v != 0) support.insert(t);
        std::vector<std::string> rays(support.begin(), support.end());
        const Cone* image = m04->cone_by_rays(rays);
        if (!image)
            fail(errc::structurally_invalid, "forgetful image of '" + c.id + "' spans no cone");
        f.cone_map[c.id] = image->id;
    }
    validate_morphism(f);
    f.certified_linear = true; // pullbacks of cross ratios are cross ratios
    return Forgetful{std::move(f), m04};
}

PLFunction cross_ratio(const ComplexPtr& m0n_complex, int n, std::array<int, 2> first,
                       std::array<int, 2> second) {
    check_marks(n, {first[0], first[1], second[0], second[1]});
    PLFunction xi;
    xi.domain = full_domain(*m0n_complex);
    for (auto& s : all_splits(n)) {
        auto in_part = [&](int m) { return std::binary_search(s.part.begin(), s.part.end(), m); };
        bool p1 = in_part(first[0]), p2 = in_part(first[1]);
        bool p3 = in_part(second[0]), p4 = in_part(second[1]);
        int slope = 0;
        if (p1 == p3 && p2 == p4 && p1 != p2) slope = 1;  // separates {p1,p3} | {p2,p4}
        if (p1 == p4 && p2 == p3 && p1 != p2) slope = -1; // separates {p1,p4} | {p2,p3}
        if (slope != 0) xi.ray_values[split_ray_id(s)] = slope;
    }
    return xi;
}

AffineStructure cross_ratio_structure(const ComplexPtr& m0n_complex, int n) {
    if (n < 4 || n > 8) fail(errc::out_of_range, "n must be between 4 and 8");
    std::vector<PLFunction> pool;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    pool.push_back(cross_ratio(m0n_complex, n, {a, b}, {c, d}));
                    pool.push_back(cross_ratio(m0n_complex, n, {a, c}, {b, d}));
                    pool.push_back(cross_ratio(m0n_complex, n, {a, d}, {b, c}));
                }
    return global_structure(m0n_complex, std::move(pool));
}

PLFunction psi_representative(const ComplexPtr& m0n_complex, int n, int i) {
    int j = 0, k = 0;
    for (int m = 1; m <= n && k == 0; ++m) {
        if (m == i) continue;
        if (j == 0) j = m;
        else k = m;
    }
    return psi_representative(m0n_complex, n, i, j, k);
}

PLFunction psi_representative(const ComplexPtr& m0n_complex, int n, int i, int j, int k) {
    check_marks(n, {i, j, k});
    PLFunction rep;
    rep.domain = full_domain(*m0n_complex);
    for (auto& s : all_splits(n)) {
        auto in_part = [&](int m) { return std::binary_search(s.part.begin(), s.part.end(), m); };
        bool side_i = in_part(i);
        if (in_part(j) != side_i && in_part(k) != side_i)
            rep.ray_values[split_ray_id(s)] = -1;
    }
    return rep;
}

Rat psi_degree(const ComplexPtr& m0n_complex, const AffineStructure& a, int n,
               const std::vector<int>& exponents) {
    if (static_cast<int>(exponents.size()) != n)
        fail(errc::bad_exponents, "need one exponent per mark");
    int total = 0;
    for (int e : exponents) {
        if (e < 0) fail(errc::bad_exponents, "negative exponent");
        total += e;
    }
    if (total != n - 3) fail(errc::bad_exponents, "exponents must sum to n-3");
    TropicalCycle c = fundamental_class(m0n_complex);
    for (int i = 1; i <= n; ++i) {
        if (exponents[i - 1] == 0) continue;
        PLFunction rep = psi_representative(m0n_complex, n, i);
        for (int e = 0; e < exponents[i - 1]; ++e) c = intersect(a, rep, c);
    }
    return c.weight(m0n_complex->vertex_id());
}

} // namespace trop
