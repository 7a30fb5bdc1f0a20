#include "trop/complex.hpp"

#include <algorithm>

#include "trop/morphism.hpp"

namespace trop {

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::string join_rays(const std::vector<std::string>& rays) {
    std::string s = "{";
    for (size_t i = 0; i < rays.size(); ++i) {
        if (i) s += ",";
        s += rays[i];
    }
    return s + "}";
}

} // namespace

ConeComplex::ConeComplex(std::vector<Ray> rays, std::vector<Cone> cones)
    : rays_(std::move(rays)), cones_(std::move(cones)) {
    for (size_t i = 0; i < rays_.size(); ++i) {
        if (!ray_index_.emplace(rays_[i].id, i).second)
            fail(errc::duplicate_ray, "ray id '" + rays_[i].id + "' appears twice");
    }
    for (size_t i = 0; i < cones_.size(); ++i) {
        Cone& c = cones_[i];
        size_t before = c.rays.size();
        c.rays = sorted_unique(std::move(c.rays));
        if (c.rays.size() != before)
            fail(errc::inconsistent_intersection, "cone '" + c.id + "' repeats a ray");
        if (c.aut_order < 1)
            fail(errc::structurally_invalid, "cone '" + c.id + "' has nonpositive aut order");
        for (auto& r : c.rays)
            if (!ray_index_.count(r))
                fail(errc::unknown_ray, "cone '" + c.id + "' references unknown ray '" + r + "'");
        if (!cone_index_.emplace(c.id, i).second)
            fail(errc::inconsistent_intersection, "cone id '" + c.id + "' appears twice");
        if (!by_ray_set_.emplace(c.rays, i).second)
            fail(errc::inconsistent_intersection,
                 "two cones share the ray set " + join_rays(c.rays));
        dim_ = std::max(dim_, c.dim());
    }
    // face closure: every subset of every cone's ray set indexes a cone
    for (auto& c : cones_) {
        size_t n = c.rays.size();
        for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
            std::vector<std::string> sub;
            for (size_t b = 0; b < n; ++b)
                if (mask & (size_t(1) << b)) sub.push_back(c.rays[b]);
            if (!by_ray_set_.count(sub))
                fail(errc::non_closed_under_faces,
                     "cone '" + c.id + "' is missing its face " + join_rays(sub));
        }
    }
    // every ray must occur as a one-dimensional cone
    for (auto& r : rays_)
        if (!by_ray_set_.count({r.id}))
            fail(errc::non_closed_under_faces, "ray '" + r.id + "' has no one-dimensional cone");
    auto vtx = by_ray_set_.find({});
    if (vtx == by_ray_set_.end())
        fail(errc::non_closed_under_faces, "the vertex cone (empty ray set) is missing");
    vertex_id_ = cones_[vtx->second].id;
    // adjacency: every subset of a cone's rays is a cone, so stars and covers come from
    // one sweep over faces
    star_idx_.resize(cones_.size());
    covers_idx_.resize(cones_.size());
    for (size_t ci = 0; ci < cones_.size(); ++ci) {
        const Cone& c = cones_[ci];
        size_t n = c.rays.size();
        for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
            std::vector<std::string> sub;
            for (size_t b = 0; b < n; ++b)
                if (mask & (size_t(1) << b)) sub.push_back(c.rays[b]);
            size_t face = by_ray_set_.at(sub);
            star_idx_[face].push_back(ci);
            if (sub.size() + 1 == n) covers_idx_[face].push_back(ci);
        }
    }
    star_rays_.resize(cones_.size());
    for (size_t ci = 0; ci < cones_.size(); ++ci) {
        std::set<std::string> seen;
        for (size_t si : star_idx_[ci])
            for (auto& r : cones_[si].rays) seen.insert(r);
        for (auto& r : rays_)
            if (seen.count(r.id)) star_rays_[ci].push_back(r.id);
    }
}

const Ray& ConeComplex::ray(const std::string& id) const {
    auto it = ray_index_.find(id);
    if (it == ray_index_.end()) fail(errc::unknown_ray, "no ray '" + id + "'");
    return rays_[it->second];
}

const Cone& ConeComplex::cone(const std::string& id) const {
    auto it = cone_index_.find(id);
    if (it == cone_index_.end()) fail(errc::unknown_cone, "no cone '" + id + "'");
    return cones_[it->second];
}

const Cone* ConeComplex::cone_by_rays(const std::vector<std::string>& sorted_rays) const {
    auto it = by_ray_set_.find(sorted_rays);
    return it == by_ray_set_.end() ? nullptr : &cones_[it->second];
}

std::vector<std::string> ConeComplex::cones_of_dim(int k) const {
    std::vector<std::string> out;
    for (auto& c : cones_)
        if (c.dim() == k) out.push_back(c.id);
    return out;
}

std::vector<std::string> ConeComplex::star(const std::string& cone_id) const {
    auto it = cone_index_.find(cone_id);
    if (it == cone_index_.end()) fail(errc::unknown_cone, "no cone '" + cone_id + "'");
    std::vector<std::string> out;
    for (size_t i : star_idx_[it->second]) out.push_back(cones_[i].id);
    return out;
}

std::vector<std::string> ConeComplex::covers_of(const std::string& cone_id) const {
    auto it = cone_index_.find(cone_id);
    if (it == cone_index_.end()) fail(errc::unknown_cone, "no cone '" + cone_id + "'");
    std::vector<std::string> out;
    for (size_t i : covers_idx_[it->second]) out.push_back(cones_[i].id);
    return out;
}

std::string ConeComplex::extra_ray(const Cone& sigma, const Cone& tau) const {
    for (auto& r : sigma.rays)
        if (!std::binary_search(tau.rays.begin(), tau.rays.end(), r)) return r;
    fail(errc::invalid_cell, "cone '" + sigma.id + "' does not properly contain '" + tau.id + "'");
}

bool ConeComplex::is_face(const std::string& tau, const std::string& sigma) const {
    const Cone& t = cone(tau);
    const Cone& s = cone(sigma);
    return std::includes(s.rays.begin(), s.rays.end(), t.rays.begin(), t.rays.end());
}

bool ConeComplex::pure_dimensional() const {
    // every cone is a face of a top-dimensional one
    for (size_t ci = 0; ci < cones_.size(); ++ci) {
        bool covered = false;
        for (size_t si : star_idx_[ci])
            if (cones_[si].dim() == dim_) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

std::vector<std::string> ConeComplex::star_rays(const std::string& cone_id) const {
    auto it = cone_index_.find(cone_id);
    if (it == cone_index_.end()) fail(errc::unknown_cone, "no cone '" + cone_id + "'");
    return star_rays_[it->second];
}

ComplexPtr build_complex(std::vector<Ray> rays, std::vector<Cone> cones) {
    return std::make_shared<ConeComplex>(std::move(rays), std::move(cones));
}

Cell make_cell(const ConeComplex& cx, const std::string& sigma, const std::string& tau) {
    if (!cx.has_cone(sigma) || !cx.has_cone(tau))
        fail(errc::invalid_cell, "cell references an unknown cone");
    if (!cx.is_face(tau, sigma))
        fail(errc::invalid_cell, "'" + tau + "' is not a face of '" + sigma + "'");
    return Cell{sigma, tau};
}

std::vector<Cell> all_cells(const ConeComplex& cx) {
    std::vector<Cell> out;
    for (auto& sigma : cx.cones())
        for (auto& tau : cx.cones())
            if (cx.is_face(tau.id, sigma.id)) out.push_back(Cell{sigma.id, tau.id});
    return out;
}

StarQuotient star_quotient(const ComplexPtr& cx, const std::string& tau_id) {
    const Cone& tau = cx->cone(tau_id);
    StarQuotient out;
    out.tau = tau_id;
    std::vector<Ray> qrays;
    for (auto& cover : cx->covers_of(tau_id)) {
        std::string extra = cx->extra_ray(cx->cone(cover), tau);
        qrays.push_back(Ray{cover, cx->ray(extra).label});
        out.ray_to_cover[cover] = cover;
    }
    std::vector<Cone> qcones;
    for (auto& sid : cx->star(tau_id)) {
        const Cone& sigma = cx->cone(sid);
        Cone q;
        q.id = sid;
        q.aut_order = sigma.aut_order;
        for (auto& r : sigma.rays) {
            if (std::binary_search(tau.rays.begin(), tau.rays.end(), r)) continue;
            // the quotient ray is the cover tau + r
            std::vector<std::string> cover_rays = tau.rays;
            cover_rays.push_back(r);
            std::sort(cover_rays.begin(), cover_rays.end());
            const Cone* cover = cx->cone_by_rays(cover_rays);
            if (!cover)
                fail(errc::non_closed_under_faces,
                     "star of '" + tau_id + "' is missing the cover through ray '" + r + "'");
            q.rays.push_back(cover->id);
        }
        std::sort(q.rays.begin(), q.rays.end());
        qcones.push_back(q);
        out.cone_to_quotient[sid] = sid;
    }
    out.quotient = build_complex(std::move(qrays), std::move(qcones));
    return out;
}

StellarSubdivision stellar_subdivide(const ComplexPtr& cx, const std::string& sigma_id,
                                     const std::map<std::string, Int>& coords) {
    const Cone& sigma = cx->cone(sigma_id);
    if (sigma.dim() < 1) fail(errc::not_interior, "cannot subdivide the vertex cone");
    for (auto& r : sigma.rays)
        if (!coords.count(r) || coords.at(r) <= 0)
            fail(errc::not_interior, "coordinates must be positive on every ray of '" + sigma_id + "'");
    for (auto& [r, v] : coords)
        if (!std::binary_search(sigma.rays.begin(), sigma.rays.end(), r))
            fail(errc::not_interior, "coordinate on ray '" + r + "' outside '" + sigma_id + "'");
    Int g = 0;
    for (auto& [r, v] : coords) g = boost::multiprecision::gcd(g, v);
    if (g != 1) fail(errc::non_primitive_ray, "interior coordinates are not primitive");

    StellarSubdivision out;
    if (sigma.dim() == 1) {
        // the only primitive interior point of a ray is its generator: trivial subdivision
        out.refined = cx;
        out.to_original = std::make_shared<ComplexMorphism>(identity_morphism(cx));
        return out;
    }

    // fresh ray id
    std::string new_ray = "x0";
    for (int i = 0; cx->has_ray(new_ray); ++i) new_ray = "x" + std::to_string(i + 1);

    std::vector<Ray> rays = cx->rays();
    rays.push_back(Ray{new_ray, "stellar(" + sigma_id + ")"});

    auto contains_sigma = [&](const Cone& c) {
        return std::includes(c.rays.begin(), c.rays.end(), sigma.rays.begin(), sigma.rays.end());
    };

    std::vector<Cone> cones;
    std::set<std::vector<std::string>> seen;
    ComplexMorphism f;
    for (auto& c : cx->cones()) {
        if (contains_sigma(c)) continue;
        cones.push_back(c);
        seen.insert(c.rays);
        f.cone_map[c.id] = c.id;
    }
    // each coface delta of sigma is replaced by the cones {new_ray} ∪ tau ∪ (delta \ sigma)
    // over the proper faces tau of sigma
    int counter = 0;
    for (auto& delta : cx->cones()) {
        if (!contains_sigma(delta)) continue;
        std::vector<std::string> rest;
        for (auto& r : delta.rays)
            if (!std::binary_search(sigma.rays.begin(), sigma.rays.end(), r)) rest.push_back(r);
        size_t n = sigma.rays.size();
        for (size_t mask = 0; mask + 1 < (size_t(1) << n); ++mask) { // proper faces of sigma
            std::vector<std::string> piece = {new_ray};
            for (size_t b = 0; b < n; ++b)
                if (mask & (size_t(1) << b)) piece.push_back(sigma.rays[b]);
            for (auto& r : rest) piece.push_back(r);
            std::sort(piece.begin(), piece.end());
            if (!seen.insert(piece).second) continue;
            Cone piece_cone;
            piece_cone.id = "x" + std::to_string(counter++) + "." + delta.id;
            piece_cone.rays = piece;
            piece_cone.aut_order = delta.aut_order;
            cones.push_back(piece_cone);
            f.cone_map[piece_cone.id] = delta.id;
        }
    }
    // a piece created from a smaller coface is a face of pieces of bigger ones; its
    // cone_map entry must be the smallest coface it sits in, which is how it was created

    out.refined = build_complex(std::move(rays), std::move(cones));
    out.new_ray = new_ray;
    f.source = out.refined;
    f.target = cx;
    for (auto& r : cx->rays()) f.ray_images[r.id] = {{r.id, 1}};
    std::map<std::string, Int> img;
    for (auto& [r, v] : coords) img[r] = v;
    f.ray_images[new_ray] = img;
    validate_morphism(f);
    out.to_original = std::make_shared<ComplexMorphism>(std::move(f));
    return out;
}

} // namespace trop
