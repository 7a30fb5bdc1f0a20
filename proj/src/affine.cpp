#include "trop/affine.hpp"

#include <algorithm>
#include <cassert>

namespace trop {

namespace {

const std::vector<size_t> k_empty;

IntVec integer_slopes(const PLFunction& phi, const std::vector<std::string>& rays,
                      bool* integral = nullptr) {
    IntVec b(rays.size(), 0);
    if (integral) *integral = true;
    for (size_t i = 0; i < rays.size(); ++i) {
        Rat v = phi.slope(rays[i]);
        if (!is_integer(v)) {
            if (!integral) fail(errc::precondition, "function is not strict on ray '" + rays[i] + "'");
            *integral = false;
            return {};
        }
        b[i] = rat_num(v);
    }
    return b;
}

std::set<std::string> star_domain(const ConeComplex& cx, const std::string& sigma) {
    std::set<std::string> d;
    for (auto& s : cx.star(sigma)) d.insert(s);
    return d;
}

void require_star_domain(const AffineStructure& a, const PLFunction& phi, const std::string& sigma) {
    if (!domain_contains_star(*a.complex, phi.domain, sigma))
        fail(errc::domain_mismatch, "function is not defined on the star of '" + sigma + "'");
}

} // namespace

const std::vector<size_t>& AffineStructure::at(const std::string& cone_id) const {
    if (!complex->has_cone(cone_id)) fail(errc::unknown_cone, "no cone '" + cone_id + "'");
    auto it = gens_at.find(cone_id);
    return it == gens_at.end() ? k_empty : it->second;
}

IntMat AffineStructure::slope_columns(const std::string& cone_id,
                                      const std::vector<std::string>& rays) const {
    const auto& gens = at(cone_id);
    IntMat m = make_mat(rays.size(), gens.size());
    for (size_t j = 0; j < gens.size(); ++j) {
        const PLFunction& g = pool[gens[j]];
        for (size_t i = 0; i < rays.size(); ++i) {
            Rat v = g.slope(rays[i]);
            if (!is_integer(v))
                fail(errc::precondition, "generator with non-integer slope on '" + rays[i] + "'");
            m[i][j] = rat_num(v);
        }
    }
    return m;
}

AffineStructure global_structure(const ComplexPtr& cx, std::vector<PLFunction> pool) {
    AffineStructure a;
    a.complex = cx;
    a.pool = std::move(pool);
    std::vector<size_t> all(a.pool.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = i;
    for (auto& c : cx->cones()) a.gens_at[c.id] = all;
    return a;
}

AffineStructure constants_only(const ComplexPtr& cx) {
    AffineStructure a;
    a.complex = cx;
    return a;
}

bool check_restriction_closure(const AffineStructure& a) {
    const ConeComplex& cx = *a.complex;
    for (auto& sigma : cx.cones()) {
        for (auto& delta_id : cx.star(sigma.id)) {
            if (delta_id == sigma.id) continue;
            auto rays = cx.star_rays(delta_id);
            IntMat g = a.slope_columns(delta_id, rays);
            for (size_t gi : a.at(sigma.id)) {
                IntVec b = integer_slopes(a.pool[gi], rays);
                if (!solve_integer(g, b)) return false;
            }
        }
    }
    return true;
}

bool is_affine(const AffineStructure& a, const PLFunction& phi, const std::string& sigma) {
    require_star_domain(a, phi, sigma);
    auto rays = a.complex->star_rays(sigma);
    bool integral = true;
    IntVec b = integer_slopes(phi, rays, &integral);
    if (!integral) return false;
    return solve_integer(a.slope_columns(sigma, rays), b).has_value();
}

namespace {

// solve sum t_i gen_i = b on the given rays, over distinct nonzero restricted columns;
// returns (generator indices, coefficients)
std::optional<std::pair<std::vector<size_t>, IntVec>> match_on_rays(
    const AffineStructure& a, const std::string& cone_id, const std::vector<std::string>& rays,
    const IntVec& b) {
    const auto& gens = a.at(cone_id);
    std::map<IntVec, size_t> seen;
    std::vector<size_t> reps;
    IntMat g = make_mat(rays.size(), 0);
    for (size_t gi : gens) {
        IntVec col(rays.size());
        bool zero = true;
        for (size_t i = 0; i < rays.size(); ++i) {
            Rat v = a.pool[gi].slope(rays[i]);
            if (!is_integer(v))
                fail(errc::precondition, "generator with non-integer slope on '" + rays[i] + "'");
            col[i] = rat_num(v);
            if (col[i] != 0) zero = false;
        }
        if (zero) continue;
        if (!seen.emplace(col, gi).second) continue;
        reps.push_back(gi);
        for (size_t i = 0; i < rays.size(); ++i) g[i].push_back(col[i]);
    }
    auto t = solve_integer(g, b);
    if (!t) return std::nullopt;
    return std::make_pair(std::move(reps), std::move(*t));
}

PLFunction combine_reps(const AffineStructure& a, const std::vector<size_t>& reps,
                        const IntVec& coeff, const std::set<std::string>& domain) {
    PLFunction chi;
    chi.domain = domain;
    for (size_t j = 0; j < reps.size(); ++j) {
        if (coeff[j] == 0) continue;
        for (auto& [r, v] : a.pool[reps[j]].ray_values) chi.ray_values[r] += Rat(coeff[j]) * v;
    }
    std::erase_if(chi.ray_values, [](const auto& kv) { return kv.second == 0; });
    return chi;
}

} // namespace

std::optional<PLFunction> is_cp_at(const AffineStructure& a, const PLFunction& phi,
                                   const std::string& sigma) {
    require_star_domain(a, phi, sigma);
    const Cone& s = a.complex->cone(sigma);
    if (s.rays.empty()) { // nothing to match at the cone point; constants witness
        PLFunction chi;
        chi.domain = star_domain(*a.complex, sigma);
        return chi;
    }
    bool integral = true;
    IntVec b = integer_slopes(phi, s.rays, &integral);
    if (!integral) return std::nullopt;
    auto sol = match_on_rays(a, sigma, s.rays, b);
    if (!sol) return std::nullopt;
    return combine_reps(a, sol->first, sol->second, star_domain(*a.complex, sigma));
}

std::optional<PLFunction> torsor_section(const AffineStructure& a, const PLFunction& phi,
                                         const Cell& cell) {
    const ConeComplex& cx = *a.complex;
    if (!cx.has_cone(cell.sigma) || !cx.has_cone(cell.tau) || !cx.is_face(cell.tau, cell.sigma))
        fail(errc::invalid_cell, "'" + cell.tau + "' is not a face of '" + cell.sigma + "'");
    require_star_domain(a, phi, cell.sigma);
    const Cone& tau = cx.cone(cell.tau);
    if (tau.rays.empty()) { // nothing to cancel at a finite cell
        PLFunction chi;
        chi.domain = star_domain(cx, cell.sigma);
        return chi;
    }
    // chi + phi constant on tau: chi = -phi on the rays of tau
    bool integral = true;
    IntVec b = integer_slopes(phi, tau.rays, &integral);
    if (!integral) return std::nullopt;
    for (auto& v : b) v = -v;
    auto sol = match_on_rays(a, cell.sigma, tau.rays, b);
    if (!sol) return std::nullopt;
    return combine_reps(a, sol->first, sol->second, star_domain(cx, cell.sigma));
}

bool torsor_section_exists(const AffineStructure& a, const PLFunction& phi, const Cell& cell) {
    return torsor_section(a, phi, cell).has_value();
}

DivisorCheck is_tropical_divisor(const AffineStructure& a, const PLFunction& phi,
                                 const std::vector<Cell>& cells) {
    DivisorCheck out;
    for (auto& cell : cells) {
        auto chi = torsor_section(a, phi, cell);
        if (!chi) {
            out.tropical = false;
            out.failing = cell;
            out.data.clear();
            return out;
        }
        CartierDatum d;
        d.cell = cell;
        d.local_equation = pl_scale(-1, pl_add(*chi, phi));
        d.local_equation.domain = chi->domain;
        out.data.push_back(std::move(d));
    }
    return out;
}

namespace {

IntMat basis_matrix(const std::vector<std::map<std::string, Int>>& basis,
                    const std::vector<std::string>& rays) {
    IntMat m = make_mat(rays.size(), basis.size());
    for (size_t j = 0; j < basis.size(); ++j)
        for (size_t i = 0; i < rays.size(); ++i) {
            auto it = basis[j].find(rays[i]);
            if (it != basis[j].end()) m[i][j] = it->second;
        }
    return m;
}

IntMat restrict_rows(const IntMat& m, const std::vector<std::string>& all_rays,
                     const std::vector<std::string>& sub_rays) {
    IntMat out = make_mat(sub_rays.size(), col_count(m));
    for (size_t i = 0; i < sub_rays.size(); ++i) {
        auto it = std::find(all_rays.begin(), all_rays.end(), sub_rays[i]);
        assert(it != all_rays.end());
        out[i] = m[it - all_rays.begin()];
    }
    return out;
}

} // namespace

AffineSubgroup make_affine_subgroup(const ComplexPtr& cx, const std::string& star_cone,
                                    std::vector<std::map<std::string, Int>> basis) {
    auto rays = cx->star_rays(star_cone);
    for (auto& v : basis)
        for (auto& [r, val] : v)
            if (std::find(rays.begin(), rays.end(), r) == rays.end())
                fail(errc::domain_mismatch,
                     "basis vector supported on '" + r + "' outside the star of '" + star_cone + "'");
    IntMat m = basis_matrix(basis, rays);
    if (rank_q(m) != basis.size())
        fail(errc::precondition, "basis vectors are dependent over the rationals");
    return AffineSubgroup{cx, star_cone, std::move(basis)};
}

namespace {

// maximal cones of the star of sigma
std::vector<std::string> star_maximal(const ConeComplex& cx, const std::string& sigma) {
    auto star = cx.star(sigma);
    std::vector<std::string> out;
    for (auto& c : star) {
        bool maximal = true;
        for (auto& d : star)
            if (d != c && cx.is_face(c, d)) { maximal = false; break; }
        if (maximal) out.push_back(c);
    }
    return out;
}

struct SubgroupContext {
    std::vector<std::string> rays;  // star rays, fixed order
    IntMat hmat;                    // basis columns over rays
};

SubgroupContext subgroup_context(const AffineSubgroup& h) {
    SubgroupContext ctx;
    ctx.rays = h.complex->star_rays(h.star_cone);
    ctx.hmat = basis_matrix(h.basis, ctx.rays);
    return ctx;
}

// lattice spanned by {h in span(H) : h|tau = 0}
IntMat vanishing_sublattice(const SubgroupContext& ctx, const ConeComplex& cx,
                            const std::string& tau) {
    if (cx.cone(tau).rays.empty()) return ctx.hmat;
    IntMat sub = restrict_rows(ctx.hmat, ctx.rays, cx.cone(tau).rays);
    IntMat t = kernel_basis(sub);
    return mat_mul(ctx.hmat, t);
}

void require_balanced(const SubgroupContext& ctx, const ConeComplex& cx,
                      const TropicalCycle& w, const std::string& sigma) {
    for (auto& tau : cx.star(sigma)) {
        if (cx.cone(tau).dim() != w.k - 1) continue;
        IntMat van = vanishing_sublattice(ctx, cx, tau);
        for (size_t j = 0; j < col_count(van); ++j) {
            Rat pairing = 0;
            for (auto& cover : cx.covers_of(tau)) {
                std::string extra = cx.extra_ray(cx.cone(cover), cx.cone(tau));
                auto it = std::find(ctx.rays.begin(), ctx.rays.end(), extra);
                if (it == ctx.rays.end()) continue;
                pairing += Rat(van[it - ctx.rays.begin()][j]) * w.weight(cover);
            }
            if (pairing != 0)
                fail(errc::unbalanced_fundamental_class,
                     "weight unbalanced against the subgroup at '" + tau + "'");
        }
    }
}

} // namespace

AffineSubgroup closure(const AffineSubgroup& h, const TropicalCycle& fundamental) {
    const ConeComplex& cx = *h.complex;
    if (fundamental.k < 1) fail(errc::precondition, "fundamental weight must have dimension >= 1");
    SubgroupContext ctx = subgroup_context(h);
    require_balanced(ctx, cx, fundamental, h.star_cone);

    size_t n = ctx.rays.size();
    // CP_H lattice: intersection over maximal cones of the preimages of the projected H
    IntMat cp = make_mat(n, n);
    for (size_t i = 0; i < n; ++i) cp[i][i] = 1;
    for (auto& delta : star_maximal(cx, h.star_cone)) {
        const Cone& d = cx.cone(delta);
        IntMat gens = make_mat(n, 0);
        for (size_t i = 0; i < n; ++i) {
            if (std::binary_search(d.rays.begin(), d.rays.end(), ctx.rays[i])) continue;
            IntVec e(n, 0);
            e[i] = 1;
            for (size_t r = 0; r < n; ++r) gens[r].push_back(e[r]);
        }
        for (size_t j = 0; j < col_count(ctx.hmat); ++j) {
            for (size_t r = 0; r < n; ++r) {
                bool on_delta = std::binary_search(d.rays.begin(), d.rays.end(), ctx.rays[r]);
                gens[r].push_back(on_delta ? ctx.hmat[r][j] : Int(0));
            }
        }
        cp = lattice_intersect(cp, gens);
    }

    // pairing functionals with the fundamental weight, one row per (k-1)-cone of the star
    size_t m = col_count(cp);
    std::vector<std::vector<Rat>> w_rows;
    for (auto& tau : cx.star(h.star_cone)) {
        const Cone& t = cx.cone(tau);
        if (t.dim() != fundamental.k - 1) continue;
        // a maximal cone of the star containing tau, used to pick the matching h
        std::string delta_tau;
        for (auto& dm : star_maximal(cx, h.star_cone))
            if (cx.is_face(tau, dm)) { delta_tau = dm; break; }
        assert(!delta_tau.empty());
        IntMat h_on_delta = restrict_rows(ctx.hmat, ctx.rays, cx.cone(delta_tau).rays);
        std::vector<Rat> row(m, 0);
        for (size_t j = 0; j < m; ++j) {
            IntVec bj(n);
            for (size_t i = 0; i < n; ++i) bj[i] = cp[i][j];
            IntVec hb(n, 0);
            if (!cx.cone(delta_tau).rays.empty()) {
                IntVec b_delta(cx.cone(delta_tau).rays.size());
                for (size_t i = 0; i < b_delta.size(); ++i) {
                    auto it =
                        std::find(ctx.rays.begin(), ctx.rays.end(), cx.cone(delta_tau).rays[i]);
                    b_delta[i] = bj[it - ctx.rays.begin()];
                }
                auto tcoef = solve_integer(h_on_delta, b_delta);
                assert(tcoef && "CP lattice member must match some h on the chosen maximal cone");
                hb = mat_apply(ctx.hmat, *tcoef);
            }
            Rat pairing = 0;
            for (auto& cover : cx.covers_of(tau)) {
                std::string extra = cx.extra_ray(cx.cone(cover), t);
                auto it = std::find(ctx.rays.begin(), ctx.rays.end(), extra);
                if (it == ctx.rays.end()) continue;
                size_t idx = it - ctx.rays.begin();
                pairing += Rat(bj[idx] - hb[idx]) * fundamental.weight(cover);
            }
            row[j] = pairing;
        }
        w_rows.push_back(std::move(row));
    }

    // integer kernel of the rational pairing matrix
    IntMat w_int = make_mat(w_rows.size(), m);
    for (size_t i = 0; i < w_rows.size(); ++i) {
        Int lcm = 1;
        for (auto& v : w_rows[i]) lcm = boost::multiprecision::lcm(lcm, rat_den(v));
        for (size_t j = 0; j < m; ++j) {
            Rat scaled = w_rows[i][j] * Rat(lcm);
            w_int[i][j] = rat_num(scaled);
        }
    }
    IntMat ker = kernel_basis(w_int);
    IntMat closure_basis = lattice_basis(mat_mul(cp, ker));

    std::vector<std::map<std::string, Int>> basis;
    for (size_t j = 0; j < col_count(closure_basis); ++j) {
        std::map<std::string, Int> v;
        for (size_t i = 0; i < n; ++i)
            if (closure_basis[i][j] != 0) v[ctx.rays[i]] = closure_basis[i][j];
        basis.push_back(std::move(v));
    }
    return AffineSubgroup{h.complex, h.star_cone, std::move(basis)};
}

bool is_normal(const AffineSubgroup& h, const TropicalCycle& fundamental) {
    return subgroup_equal(h, closure(h, fundamental));
}

bool subgroup_contains(const AffineSubgroup& h, const std::map<std::string, Int>& vec) {
    SubgroupContext ctx = subgroup_context(h);
    IntVec v(ctx.rays.size(), 0);
    for (auto& [r, val] : vec) {
        auto it = std::find(ctx.rays.begin(), ctx.rays.end(), r);
        if (it == ctx.rays.end()) {
            if (val != 0) return false;
            continue;
        }
        v[it - ctx.rays.begin()] = val;
    }
    return in_lattice(ctx.hmat, v);
}

bool subgroup_equal(const AffineSubgroup& h1, const AffineSubgroup& h2) {
    if (h1.star_cone != h2.star_cone) return false;
    SubgroupContext c1 = subgroup_context(h1), c2 = subgroup_context(h2);
    return lattice_equal(c1.hmat, c2.hmat);
}

} // namespace trop
