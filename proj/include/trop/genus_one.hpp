#pragma once

#include <utility>

#include "trop/affine.hpp"
#include "trop/complex.hpp"
#include "trop/cycle.hpp"
#include "trop/degree.hpp"
#include "trop/m0n.hpp"
#include "trop/morphism.hpp"

namespace trop {

// Static combinatorics of the two-dimensional space of genus-one degree-3 admissible
// covers with one triple and four simple branch points. Rays come in kinds a,b (indexed
// by a 2-subset of {2,3,4,5}) and c,d (indexed by the mark paired with 1); faces in
// kinds 1..5.
struct CaseStudyTables {
    std::map<char, Rat> fundamentalish_weight; // face kind '1'..'5'
    std::map<char, Int> br_dilation;           // ray kind 'a'..'d'
    std::map<std::string, char> face_kind;     // face id -> kind
    std::map<std::string, char> ray_kind;      // ray id -> kind
};

std::pair<ComplexPtr, CaseStudyTables> build_adm();

// stacky model of the moduli of genus-one two-marked tropical curves, with the folded
// cone subdivided along its diagonal: rays sec (aut 1), irr (aut 2), E (aut 2), cones
// <irr,sec> (aut 2, trivial fold) and <E,irr> (the fold half, aut 1)
ComplexPtr build_m12_target();

struct GenusOneCaseStudy {
    ComplexPtr adm;
    CaseStudyTables tables;
    ComplexPtr m05;
    AffineStructure m05_structure; // cross ratios
    AffineStructure adm_structure; // pulled back through br
    ComplexMorphism br;            // certified against the two structures
    ComplexPtr m12;
    TropicalCycle trop_psi; // (1/2) irr
    TropicalCycle trop_w;   // (1/2)(irr + E)
};

GenusOneCaseStudy build_case_study();

TropicalCycle fundamentalish(const GenusOneCaseStudy& cs);
// (1/3) * br-pullback of the psi_1 boundary representative on the target fan
PLFunction psi1_function(const GenusOneCaseStudy& cs);
TropicalCycle psi1_cap_fundamentalish(const GenusOneCaseStudy& cs);

// forgetful map to the two-marked model: i = 1 remembers the unramified end over
// mark 2, i = 2 the simply ramified end over mark 2
struct ForgetfulMap {
    ComplexMorphism morphism; // ray-level data on the subdivided model
    DegreeProblem degree;     // stacky charts; targets "same" and "fold"
};
ForgetfulMap forgetful_phi(const GenusOneCaseStudy& cs, int i);

enum class M12Region { same_vertex, fold_outer, fold_inner };
// deterministic generic samples, indexed; fold samples are in unfolded coordinates
std::vector<Rat> m12_sample(M12Region region, int index);
const char* m12_region_target(M12Region region); // "same" or "fold"

} // namespace trop
