#pragma once

#include <map>
#include <string>

#include "trop/complex.hpp"
#include "trop/plfunction.hpp"

namespace trop {

// Morphism of cone complexes. Each source ray maps to an integer combination of the
// rays of a target cone; an empty combination contracts the ray to the cone point.
// cone_map records, per source cone, the minimal target cone containing the image.
struct ComplexMorphism {
    ComplexPtr source;
    ComplexPtr target;
    std::map<std::string, std::string> cone_map;
    std::map<std::string, std::map<std::string, Int>> ray_images;
    bool certified_linear = false;
};

// face compatibility and containment of ray images in the mapped cones
void validate_morphism(const ComplexMorphism& f);

ComplexMorphism identity_morphism(const ComplexPtr& cx);
ComplexMorphism compose(const ComplexMorphism& g, const ComplexMorphism& f); // g ∘ f

// slopes composed through the ray images; the domain is the preimage of phi's domain
PLFunction pullback(const ComplexMorphism& f, const PLFunction& phi);

struct AffineStructure; // affine.hpp
struct TropicalCycle;   // cycle.hpp

// true iff the pullback of every target generator is affine at every source cone
// mapping into its star; sets no state, callers record the certificate
bool check_linearity(const ComplexMorphism& f, const AffineStructure& a_src,
                     const AffineStructure& a_tgt);

// stacky pushforward: a k-cone whose ray images span a k-dimensional target cone
// contributes weight * |det| * aut(target)/aut(source); others contribute zero
TropicalCycle pushforward(const ComplexMorphism& f, const TropicalCycle& c);

} // namespace trop
