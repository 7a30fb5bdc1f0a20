#pragma once

#include <string>

#include <json.hpp>

#include "trop/affine.hpp"
#include "trop/complex.hpp"
#include "trop/cycle.hpp"
#include "trop/morphism.hpp"
#include "trop/plfunction.hpp"

namespace trop {

using ordered_json = nlohmann::ordered_json;

// schema complex.v1
ordered_json complex_to_json(const ConeComplex& cx);
ComplexPtr complex_from_json(const ordered_json& j);

// schema plfn.v1
ordered_json plfn_to_json(const PLFunction& phi);
PLFunction plfn_from_json(const ordered_json& j, const ConeComplex& cx);

// schema affine.v1: map coneId -> [plfn.v1]
ordered_json affine_to_json(const AffineStructure& a);
AffineStructure affine_from_json(const ordered_json& j, const ComplexPtr& cx);

// schema cycle.v1
ordered_json cycle_to_json(const TropicalCycle& c);
TropicalCycle cycle_from_json(const ordered_json& j, const ComplexPtr& cx);

// schema morphism.v1
ordered_json morphism_to_json(const ComplexMorphism& f);
ComplexMorphism morphism_from_json(const ordered_json& j, const ComplexPtr& source,
                                   const ComplexPtr& target);

ordered_json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const ordered_json& j);

} // namespace trop
