#include "trop/morphism.hpp"

#include <algorithm>

#include "trop/affine.hpp"
#include "trop/cycle.hpp"
#include "trop/intmat.hpp"

namespace trop {

void validate_morphism(const ComplexMorphism& f) {
    const ConeComplex& src = *f.source;
    const ConeComplex& tgt = *f.target;
    for (auto& [r, img] : f.ray_images) {
        if (!src.has_ray(r)) fail(errc::structurally_invalid, "image for unknown ray '" + r + "'");
        for (auto& [t, v] : img) {
            if (!tgt.has_ray(t))
                fail(errc::structurally_invalid, "ray '" + r + "' maps through unknown ray '" + t + "'");
            if (v < 0)
                fail(errc::structurally_invalid, "ray '" + r + "' has a negative image coordinate");
        }
    }
    for (auto& c : src.cones()) {
        auto it = f.cone_map.find(c.id);
        if (it == f.cone_map.end())
            fail(errc::structurally_invalid, "cone '" + c.id + "' has no image cone");
        if (!tgt.has_cone(it->second))
            fail(errc::structurally_invalid, "cone '" + c.id + "' maps to unknown cone");
        const Cone& image = tgt.cone(it->second);
        for (auto& r : c.rays) {
            auto ri = f.ray_images.find(r);
            if (ri == f.ray_images.end())
                fail(errc::structurally_invalid, "ray '" + r + "' has no image");
            for (auto& [t, v] : ri->second)
                if (v != 0 && !std::binary_search(image.rays.begin(), image.rays.end(), t))
                    fail(errc::structurally_invalid,
                         "image of ray '" + r + "' leaves cone '" + image.id + "'");
        }
        // face compatibility
        for (auto& d : src.cones())
            if (src.is_face(d.id, c.id) && !tgt.is_face(f.cone_map.at(d.id), it->second))
                fail(errc::structurally_invalid,
                     "cone map does not respect the face '" + d.id + "' of '" + c.id + "'");
    }
}

ComplexMorphism identity_morphism(const ComplexPtr& cx) {
    ComplexMorphism f;
    f.source = cx;
    f.target = cx;
    for (auto& c : cx->cones()) f.cone_map[c.id] = c.id;
    for (auto& r : cx->rays()) f.ray_images[r.id] = {{r.id, 1}};
    f.certified_linear = true;
    return f;
}

namespace {

// minimal cone of the target containing the images of the cone's rays
const Cone* minimal_image_cone(const ComplexMorphism& f, const Cone& c) {
    std::set<std::string> support;
    for (auto& r : c.rays)
        for (auto& [t, v] : f.ray_images.at(r))
            if (v != 0) support.insert(t);
    std::vector<std::string> rays(support.begin(), support.end());
    return f.target->cone_by_rays(rays);
}

Int det_bareiss(IntMat m) {
    size_t n = row_count(m);
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace

ComplexMorphism compose(const ComplexMorphism& g, const ComplexMorphism& f) {
    if (f.target.get() != g.source.get())
        fail(errc::structurally_invalid, "composition through mismatched complexes");
    ComplexMorphism h;
    h.source = f.source;
    h.target = g.target;
    for (auto& [r, img] : f.ray_images) {
        std::map<std::string, Int> composed;
        for (auto& [t, v] : img) {
            if (v == 0) continue;
            for (auto& [u, w] : g.ray_images.at(t)) composed[u] += v * w;
        }
        std::erase_if(composed, [](const auto& kv) { return kv.second == 0; });
        h.ray_images[r] = std::move(composed);
    }
    for (auto& c : f.source->cones()) {
        const Cone* image = minimal_image_cone(h, c);
        if (!image)
            fail(errc::structurally_invalid, "composed image of '" + c.id + "' spans no cone");
        h.cone_map[c.id] = image->id;
    }
    h.certified_linear = f.certified_linear && g.certified_linear;
    validate_morphism(h);
    return h;
}

PLFunction pullback(const ComplexMorphism& f, const PLFunction& phi) {
    PLFunction out;
    out.constant = phi.constant;
    for (auto& [r, img] : f.ray_images) {
        Rat v = 0;
        for (auto& [t, c] : img) v += Rat(c) * phi.slope(t);
        if (v != 0) out.ray_values[r] = v;
    }
    for (auto& c : f.source->cones())
        if (phi.domain.count(f.cone_map.at(c.id))) out.domain.insert(c.id);
    return out;
}

bool check_linearity(const ComplexMorphism& f, const AffineStructure& a_src,
                     const AffineStructure& a_tgt) {
    validate_morphism(f);
    for (auto& tau : f.target->cones()) {
        for (size_t gi : a_tgt.at(tau.id)) {
            PLFunction pulled = pullback(f, a_tgt.pool[gi]);
            for (auto& sigma : f.source->cones()) {
                if (!f.target->is_face(tau.id, f.cone_map.at(sigma.id))) continue;
                if (!is_affine(a_src, pulled, sigma.id)) return false;
            }
        }
    }
    return true;
}

TropicalCycle pushforward(const ComplexMorphism& f, const TropicalCycle& c) {
    if (!f.certified_linear) fail(errc::not_certified, "morphism is not certified linear");
    if (c.complex.get() != f.source.get())
        fail(errc::precondition, "cycle lives on a different complex");
    TropicalCycle out;
    out.complex = f.target;
    out.k = c.k;
    for (auto& [sid, w] : c.weights) {
        if (w == 0) continue;
        const Cone& sigma = f.source->cone(sid);
        if (sigma.dim() != c.k)
            fail(errc::precondition, "weight on cone '" + sid + "' of wrong dimension");
        const Cone* image = minimal_image_cone(f, sigma);
        if (!image || image->dim() != c.k) continue;
        IntMat m = make_mat(c.k, c.k);
        for (size_t j = 0; j < sigma.rays.size(); ++j) {
            auto& img = f.ray_images.at(sigma.rays[j]);
            for (size_t i = 0; i < image->rays.size(); ++i) {
                auto it = img.find(image->rays[i]);
                if (it != img.end()) m[i][j] = it->second;
            }
        }
        Int index = det_bareiss(m);
        if (index < 0) index = -index;
        if (index == 0) continue;
        out.weights[image->id] +=
            w * Rat(index) * Rat(image->aut_order, sigma.aut_order);
    }
    std::erase_if(out.weights, [](const auto& kv) { return kv.second == 0; });
    return out;
}

} // namespace trop
