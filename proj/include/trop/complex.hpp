#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "trop/errors.hpp"
#include "trop/rational.hpp"

namespace trop {

struct Ray {
    std::string id;
    std::string label;
};

struct Cone {
    std::string id;
    std::vector<std::string> rays; // sorted, unique
    long aut_order = 1;
    int dim() const { return static_cast<int>(rays.size()); }
};

// Simplicial abstract cone complex. Every subset of a cone's ray set must itself be a
// cone of the complex (including the empty vertex cone), and no two cones share a ray
// set. Each cone's lattice is by convention the free abelian group on its rays, so
// points and slopes are coordinate vectors in the ray basis.
class ConeComplex {
public:
    ConeComplex(std::vector<Ray> rays, std::vector<Cone> cones);

    const std::vector<Ray>& rays() const { return rays_; }
    const std::vector<Cone>& cones() const { return cones_; }
    int dim() const { return dim_; }

    bool has_ray(const std::string& id) const { return ray_index_.count(id) > 0; }
    bool has_cone(const std::string& id) const { return cone_index_.count(id) > 0; }
    const Ray& ray(const std::string& id) const;
    const Cone& cone(const std::string& id) const;
    const std::string& vertex_id() const { return vertex_id_; }

    // cone with the given ray set, if present
    const Cone* cone_by_rays(const std::vector<std::string>& sorted_rays) const;

    std::vector<std::string> cones_of_dim(int k) const;
    // all cone ids whose ray set contains the given cone's ray set (the closed star)
    std::vector<std::string> star(const std::string& cone_id) const;
    // cones of the star having exactly one more ray than tau
    std::vector<std::string> covers_of(const std::string& cone_id) const;
    // the ray of sigma not in tau, for sigma covering tau
    std::string extra_ray(const Cone& sigma, const Cone& tau) const;

    bool is_face(const std::string& tau, const std::string& sigma) const;
    bool pure_dimensional() const;

    // union of the ray sets of the cones in the star of cone_id, in complex ray order
    std::vector<std::string> star_rays(const std::string& cone_id) const;

private:
    std::vector<Ray> rays_;
    std::vector<Cone> cones_;
    std::map<std::string, size_t> ray_index_;
    std::map<std::string, size_t> cone_index_;
    std::map<std::vector<std::string>, size_t> by_ray_set_;
    std::string vertex_id_;
    int dim_ = 0;
    // precomputed adjacency, indexed like cones_
    std::vector<std::vector<size_t>> star_idx_;
    std::vector<std::vector<size_t>> covers_idx_;
    std::vector<std::vector<std::string>> star_rays_;
};

using ComplexPtr = std::shared_ptr<const ConeComplex>;

ComplexPtr build_complex(std::vector<Ray> rays, std::vector<Cone> cones);

// cell sigma/tau of the extended complex: tau must be a face of sigma
struct Cell {
    std::string sigma;
    std::string tau;
};

Cell make_cell(const ConeComplex& cx, const std::string& sigma, const std::string& tau);
std::vector<Cell> all_cells(const ConeComplex& cx);

// star quotient Sigma^tau / tau: rays are the covers of tau, cones the images of the
// cones containing tau
struct StarQuotient {
    ComplexPtr quotient;
    std::string tau;
    std::map<std::string, std::string> cone_to_quotient; // cone ⊇ tau -> quotient cone
    std::map<std::string, std::string> ray_to_cover;     // quotient ray -> covering cone of tau
};

StarQuotient star_quotient(const ComplexPtr& cx, const std::string& tau);

struct ComplexMorphism; // morphism.hpp

// stellar subdivision of sigma at the interior point with the given positive primitive
// coordinates (in sigma's ray basis); returns the refined complex and the
// identity-on-support morphism from it to the original one
struct StellarSubdivision {
    ComplexPtr refined;
    std::string new_ray; // empty when the subdivision is trivial
    std::shared_ptr<ComplexMorphism> to_original;
};

StellarSubdivision stellar_subdivide(const ComplexPtr& cx, const std::string& sigma,
                                     const std::map<std::string, Int>& interior_ray_coords);

} // namespace trop
