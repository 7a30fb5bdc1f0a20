#include "trop/cycle.hpp"

#include <algorithm>

#include "trop/affine.hpp"
#include "trop/intmat.hpp"

namespace trop {

TropicalCycle fundamental_class(const ComplexPtr& cx) {
    if (!cx->pure_dimensional())
        fail(errc::not_pure, "complex has a maximal cone below top dimension");
    TropicalCycle c;
    c.complex = cx;
    c.k = cx->dim();
    for (auto& cone : cx->cones())
        if (cone.dim() == c.k) c.weights[cone.id] = 1;
    return c;
}

TropicalCycle cycle_scale(const Rat& f, const TropicalCycle& a) {
    TropicalCycle out;
    out.complex = a.complex;
    out.k = a.k;
    if (f != 0)
        for (auto& [id, w] : a.weights) out.weights[id] = f * w;
    return out;
}

TropicalCycle cycle_add(const TropicalCycle& a, const TropicalCycle& b) {
    TropicalCycle out = a;
    for (auto& [id, w] : b.weights) out.weights[id] += w;
    std::erase_if(out.weights, [](const auto& kv) { return kv.second == 0; });
    return out;
}

bool cycle_equal(const TropicalCycle& a, const TropicalCycle& b) {
    if (a.k != b.k) return false;
    for (auto& [id, w] : a.weights)
        if (w != b.weight(id)) return false;
    for (auto& [id, w] : b.weights)
        if (w != a.weight(id)) return false;
    return true;
}

BalanceReport is_balanced(const TropicalCycle& c, const AffineStructure& a) {
    const ConeComplex& cx = *c.complex;
    BalanceReport rep;
    if (c.k < 1) fail(errc::precondition, "balancing needs a cycle of dimension >= 1");
    for (auto& tau_id : cx.cones_of_dim(c.k - 1)) {
        const Cone& tau = cx.cone(tau_id);
        auto star_rays = cx.star_rays(tau_id);
        IntMat gens = a.slope_columns(tau_id, star_rays);
        // distinct nonzero restricted columns span the same lattice
        {
            std::set<IntVec> seen;
            IntMat dedup = make_mat(row_count(gens), 0);
            for (size_t j = 0; j < col_count(gens); ++j) {
                IntVec col(row_count(gens));
                bool zero = true;
                for (size_t i = 0; i < row_count(gens); ++i) {
                    col[i] = gens[i][j];
                    if (col[i] != 0) zero = false;
                }
                if (zero || !seen.insert(col).second) continue;
                for (size_t i = 0; i < row_count(gens); ++i) dedup[i].push_back(col[i]);
            }
            gens = std::move(dedup);
        }
        // spanning set of the functions on the star vanishing on tau
        IntMat coeff;
        if (tau.rays.empty()) {
            coeff = identity_mat(col_count(gens));
        } else {
            IntMat on_tau = make_mat(tau.rays.size(), col_count(gens));
            for (size_t i = 0; i < tau.rays.size(); ++i) {
                auto it = std::find(star_rays.begin(), star_rays.end(), tau.rays[i]);
                on_tau[i] = gens[it - star_rays.begin()];
            }
            coeff = kernel_basis(on_tau);
        }
        IntMat vanishing = mat_mul(gens, coeff);
        auto covers = cx.covers_of(tau_id);
        for (size_t j = 0; j < col_count(vanishing); ++j) {
            Rat pairing = 0;
            for (auto& cover : covers) {
                std::string extra = cx.extra_ray(cx.cone(cover), tau);
                auto it = std::find(star_rays.begin(), star_rays.end(), extra);
                pairing += Rat(vanishing[it - star_rays.begin()][j]) * c.weight(cover);
            }
            if (pairing != 0) {
                rep.balanced = false;
                rep.cone = tau_id;
                rep.pairing = pairing;
                PLFunction w;
                for (size_t i = 0; i < star_rays.size(); ++i)
                    if (vanishing[i][j] != 0) w.ray_values[star_rays[i]] = Rat(vanishing[i][j]);
                for (auto& s : cx.star(tau_id)) w.domain.insert(s);
                rep.witness = std::move(w);
                return rep;
            }
        }
    }
    return rep;
}

TropicalCycle intersect(const AffineStructure& a, const PLFunction& phi, const TropicalCycle& c) {
    const ConeComplex& cx = *c.complex;
    if (c.k < 1) fail(errc::precondition, "cap product needs a cycle of dimension >= 1");

    // clear denominators; the product is computed with the strict multiple and rescaled
    Int den = 1;
    for (auto& [r, v] : phi.ray_values) den = boost::multiprecision::lcm(den, rat_den(v));
    PLFunction phi0 = pl_scale(Rat(den), phi);

    // the (k-1)-cones in the closure of the support
    std::set<std::string> taus;
    for (auto& [sid, w] : c.weights) {
        if (w == 0) continue;
        const Cone& sigma = cx.cone(sid);
        if (sigma.dim() != c.k)
            fail(errc::precondition, "weight on cone '" + sid + "' of wrong dimension");
        for (size_t drop = 0; drop < sigma.rays.size(); ++drop) {
            std::vector<std::string> face = sigma.rays;
            face.erase(face.begin() + drop);
            const Cone* f = cx.cone_by_rays(face);
            if (!f) fail(errc::non_closed_under_faces, "missing face of '" + sid + "'");
            taus.insert(f->id);
        }
        if (sigma.rays.empty())
            fail(errc::precondition, "vertex cone cannot carry a weight of positive dimension");
    }

    TropicalCycle out;
    out.complex = c.complex;
    out.k = c.k - 1;
    for (auto& tau : taus) {
        auto chi = is_cp_at(a, phi0, tau);
        if (!chi)
            fail(errc::not_combinatorially_principal,
                 "no affine function matches the divisor on '" + tau + "'");
        PLFunction diff = pl_sub(phi0, *chi);
        Rat weight = 0;
        for (auto& cover : cx.covers_of(tau)) {
            std::string extra = cx.extra_ray(cx.cone(cover), cx.cone(tau));
            weight -= diff.slope(extra) * c.weight(cover);
        }
        if (weight != 0) out.weights[tau] = weight / Rat(den);
    }
    return out;
}

} // namespace trop
