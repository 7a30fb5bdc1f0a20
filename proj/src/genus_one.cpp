#include "trop/genus_one.hpp"

#include <algorithm>

namespace trop {

namespace {

const std::vector<std::vector<int>> k_pairs = {{2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};
const std::vector<int> k_marks = {2, 3, 4, 5};
const int k_remembered = 2; // branch mark of the remembered end for both maps

std::vector<int> pair_complement(const std::vector<int>& p) {
    std::vector<int> out;
    for (int m : k_marks)
        if (m != p[0] && m != p[1]) out.push_back(m);
    return out;
}

std::string pair_str(const std::vector<int>& p) {
    return std::to_string(p[0]) + std::to_string(p[1]);
}

std::string ab_ray(char kind, const std::vector<int>& p) { return std::string(1, kind) + pair_str(p); }
std::string cd_ray(char kind, int k) { return std::string(1, kind) + std::to_string(k); }

bool pair_contains(const std::vector<int>& p, int m) { return p[0] == m || p[1] == m; }

} // namespace

std::pair<ComplexPtr, CaseStudyTables> build_adm() {
    CaseStudyTables t;
    t.fundamentalish_weight = {{'1', 1}, {'2', 1}, {'3', Rat(1, 2)}, {'4', Rat(1, 3)}, {'5', 1}};
    t.br_dilation = {{'a', 3}, {'b', 1}, {'c', 2}, {'d', 2}};

    std::vector<Ray> rays;
    std::vector<Cone> cones;
    cones.push_back(Cone{"o", {}, 1});

    auto add_ray = [&](const std::string& id, const std::string& label, long aut, char kind) {
        rays.push_back(Ray{id, label});
        cones.push_back(Cone{id, {id}, aut});
        t.ray_kind[id] = kind;
    };
    for (auto& p : k_pairs) add_ray(ab_ray('a', p), "a|" + pair_str(p), 1, 'a');
    for (auto& p : k_pairs) add_ray(ab_ray('b', p), "b|" + pair_str(p), 2, 'b');
    for (int k : k_marks) add_ray(cd_ray('c', k), "c|1" + std::to_string(k), 1, 'c');
    for (int k : k_marks) add_ray(cd_ray('d', k), "d|1" + std::to_string(k), 1, 'd');

    auto add_face = [&](const std::string& id, std::vector<std::string> face_rays, long aut,
                        char kind) {
        cones.push_back(Cone{id, std::move(face_rays), aut});
        t.face_kind[id] = kind;
    };
    for (auto& p : k_pairs)
        for (int k : pair_complement(p)) {
            std::string suffix = "_" + pair_str(p) + "_" + std::to_string(k);
            add_face("f1" + suffix, {ab_ray('a', p), cd_ray('c', k)}, 1, '1');
            add_face("f2" + suffix, {ab_ray('b', p), cd_ray('c', k)}, 1, '2');
            add_face("f3" + suffix, {ab_ray('b', p), cd_ray('d', k)}, 2, '3');
        }
    for (auto& p : k_pairs) {
        std::vector<int> q = pair_complement(p);
        if (p < q) add_face("f4_" + pair_str(p), {ab_ray('a', p), ab_ray('a', q)}, 1, '4');
        add_face("f5_" + pair_str(p), {ab_ray('a', p), ab_ray('b', q)}, 2, '5');
    }
    return {build_complex(std::move(rays), std::move(cones)), std::move(t)};
}

ComplexPtr build_m12_target() {
    std::vector<Ray> rays = {Ray{"E", "exceptional"}, Ray{"irr", "irreducible"},
                             Ray{"sec", "section"}};
    std::vector<Cone> cones = {Cone{"o", {}, 1},        Cone{"E", {"E"}, 2},
                               Cone{"irr", {"irr"}, 2}, Cone{"sec", {"sec"}, 1},
                               Cone{"same", {"irr", "sec"}, 2}, Cone{"half", {"E", "irr"}, 1}};
    return build_complex(std::move(rays), std::move(cones));
}

namespace {

ComplexMorphism make_br(const ComplexPtr& adm, const ComplexPtr& m05,
                        const CaseStudyTables& t) {
    ComplexMorphism br;
    br.source = adm;
    br.target = m05;
    auto hat = [&](const std::vector<int>& side) { return m0n_ray_for(5, side); };
    for (auto& p : k_pairs) {
        br.ray_images[ab_ray('a', p)] = {{hat(p), t.br_dilation.at('a')}};
        br.ray_images[ab_ray('b', p)] = {{hat(p), t.br_dilation.at('b')}};
    }
    for (int k : k_marks) {
        br.ray_images[cd_ray('c', k)] = {{hat({1, k}), t.br_dilation.at('c')}};
        br.ray_images[cd_ray('d', k)] = {{hat({1, k}), t.br_dilation.at('d')}};
    }
    for (auto& c : adm->cones()) {
        std::set<std::string> support;
        for (auto& r : c.rays)
            for (auto& [tr, v] : br.ray_images.at(r)) {
                (void)v;
                support.insert(tr);
            }
        std::vector<std::string> s(support.begin(), support.end());
        const Cone* image = m05->cone_by_rays(s);
        if (!image) fail(errc::structurally_invalid, "br image of '" + c.id + "' spans no cone");
        br.cone_map[c.id] = image->id;
    }
    validate_morphism(br);
    return br;
}

} // namespace

GenusOneCaseStudy build_case_study() {
    GenusOneCaseStudy cs;
    auto [adm, tables] = build_adm();
    cs.adm = adm;
    cs.tables = std::move(tables);
    cs.m05 = build_m0n(5);
    cs.m05_structure = cross_ratio_structure(cs.m05, 5);
    cs.br = make_br(cs.adm, cs.m05, cs.tables);

    std::vector<PLFunction> pulled;
    for (auto& xi : cs.m05_structure.pool) pulled.push_back(pullback(cs.br, xi));
    cs.adm_structure = global_structure(cs.adm, std::move(pulled));
    if (!check_linearity(cs.br, cs.adm_structure, cs.m05_structure))
        fail(errc::structurally_invalid, "branch morphism failed its linearity certificate");
    cs.br.certified_linear = true;

    cs.m12 = build_m12_target();
    cs.trop_psi.complex = cs.m12;
    cs.trop_psi.k = 1;
    cs.trop_psi.weights = {{"irr", Rat(1, 2)}};
    cs.trop_w.complex = cs.m12;
    cs.trop_w.k = 1;
    cs.trop_w.weights = {{"irr", Rat(1, 2)}, {"E", Rat(1, 2)}};
    return cs;
}

TropicalCycle fundamentalish(const GenusOneCaseStudy& cs) {
    TropicalCycle c;
    c.complex = cs.adm;
    c.k = 2;
    for (auto& [face, kind] : cs.tables.face_kind)
        c.weights[face] = cs.tables.fundamentalish_weight.at(kind);
    return c;
}

PLFunction psi1_function(const GenusOneCaseStudy& cs) {
    return pl_scale(Rat(1, 3), pullback(cs.br, psi_representative(cs.m05, 5, 1)));
}

TropicalCycle psi1_cap_fundamentalish(const GenusOneCaseStudy& cs) {
    return intersect(cs.adm_structure, psi1_function(cs), fundamentalish(cs));
}

namespace {

// unfolded coordinates of the folded cone; the fold swaps the two entries, so the
// column lift of a ray image is only canonical up to that swap, per face
IntMat chart_cols(const std::array<Int, 2>& col_ray0, const std::array<Int, 2>& col_ray1) {
    IntMat m = make_mat(2, 2);
    m[0][0] = col_ray0[0];
    m[1][0] = col_ray0[1];
    m[0][1] = col_ray1[0];
    m[1][1] = col_ray1[1];
    return m;
}

} // namespace

ForgetfulMap forgetful_phi(const GenusOneCaseStudy& cs, int i) {
    if (i != 1 && i != 2) fail(errc::out_of_range, "forgetful map index must be 1 or 2");
    const int m = k_remembered;
    ForgetfulMap out;
    ComplexMorphism& f = out.morphism;
    f.source = cs.adm;
    f.target = cs.m12;

    for (auto& p : k_pairs) {
        f.ray_images[ab_ray('a', p)] = {};
        if (i == 1) {
            f.ray_images[ab_ray('b', p)] = {{"irr", 2}};
        } else {
            if (pair_contains(p, m))
                f.ray_images[ab_ray('b', p)] = {{"E", 1}};
            else
                f.ray_images[ab_ray('b', p)] = {{"irr", 2}};
        }
    }
    for (int k : k_marks) {
        if (k == m)
            f.ray_images[cd_ray('c', k)] = {{"irr", 2}};
        else
            f.ray_images[cd_ray('c', k)] = {{"E", 1}, {"irr", 1}};
        if (i == 1)
            f.ray_images[cd_ray('d', k)] = {{"sec", 1}};
        else
            f.ray_images[cd_ray('d', k)] = (k == m) ? std::map<std::string, Int>{{"sec", 1}}
                                                    : std::map<std::string, Int>{};
    }
    for (auto& c : cs.adm->cones()) {
        std::set<std::string> support;
        for (auto& r : c.rays)
            for (auto& [t, v] : f.ray_images.at(r))
                if (v != 0) support.insert(t);
        std::vector<std::string> s(support.begin(), support.end());
        const Cone* image = cs.m12->cone_by_rays(s);
        if (!image) fail(errc::structurally_invalid, "image of '" + c.id + "' spans no cone");
        f.cone_map[c.id] = image->id;
    }
    validate_morphism(f);
    // the target model carries no affine generators, so linearity is immediate
    if (!check_linearity(f, cs.adm_structure, constants_only(cs.m12)))
        fail(errc::structurally_invalid, "forgetful map failed its linearity certificate");
    f.certified_linear = true;

    // stacky degree charts; fold-cone columns are in unfolded coordinates
    DegreeProblem& dp = out.degree;
    dp.targets["same"] = StackyTarget{2, false, 2};
    dp.targets["fold"] = StackyTarget{1, true, 2};
    auto add_chart = [&](const std::string& face, const std::string& target, IntMat cols,
                         std::vector<std::string> ray_order) {
        dp.charts.push_back(DegreeChart{face, target, std::move(ray_order), std::move(cols)});
    };
    for (auto& p : k_pairs) {
        for (int k : pair_complement(p)) {
            std::string suffix = "_" + pair_str(p) + "_" + std::to_string(k);
            std::string b = ab_ray('b', p), c = cd_ray('c', k), d = cd_ray('d', k);
            // faces of kind 3 map to the same-vertex cone, coordinates (irr, sec)
            if (i == 1 || k == m)
                add_chart("f3" + suffix, "same", chart_cols({2, 0}, {0, 1}), {b, d});
            // faces of kind 2 map into the fold
            int rest = 0;
            for (int mm : k_marks)
                if (!pair_contains(p, mm) && mm != k) rest = mm;
            if (rest == m) { // remembered end over the middle vertex of the target tree
                if (i == 1)
                    add_chart("f2" + suffix, "fold", chart_cols({2, 0}, {1, 2}), {b, c});
                else
                    add_chart("f2" + suffix, "fold", chart_cols({0, 2}, {1, 2}), {b, c});
            } else if (pair_contains(p, m)) { // remembered end over an outer vertex
                if (i == 1)
                    add_chart("f2" + suffix, "fold", chart_cols({0, 2}, {1, 2}), {b, c});
                else
                    add_chart("f2" + suffix, "fold", chart_cols({1, 1}, {1, 2}), {b, c});
            }
        }
    }
    return out;
}

std::vector<Rat> m12_sample(M12Region region, int index) {
    Int i = index;
    switch (region) {
        case M12Region::same_vertex:
            return {Rat(2 * i + 5, 2), Rat(i + 2)};
        case M12Region::fold_outer:
            return {Rat(6 * i + 7), Rat(i + 2)};
        case M12Region::fold_inner:
            return {Rat(2 * i + 5), Rat(2 * i + 4)};
    }
    fail(errc::out_of_range, "unknown sample region");
}

const char* m12_region_target(M12Region region) {
    return region == M12Region::same_vertex ? "same" : "fold";
}

} // namespace trop
