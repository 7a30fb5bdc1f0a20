#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trop/complex.hpp"
#include "trop/cycle.hpp"
#include "trop/intmat.hpp"
#include "trop/plfunction.hpp"

namespace trop {

// Affine structure as data: per-cone generating sets of strict PL functions on the
// cone's open star, drawn from a shared pool. Constants are implicit; all lattice
// computations happen on slope vectors.
struct AffineStructure {
    ComplexPtr complex;
    std::vector<PLFunction> pool;
    std::map<std::string, std::vector<size_t>> gens_at;

    const std::vector<size_t>& at(const std::string& cone_id) const;
    // generator slope columns restricted to the given rays
    IntMat slope_columns(const std::string& cone_id, const std::vector<std::string>& rays) const;
};

// every cone sees the whole pool (restriction to the star is implicit)
AffineStructure global_structure(const ComplexPtr& cx, std::vector<PLFunction> pool);
// structure with no generators besides the constants
AffineStructure constants_only(const ComplexPtr& cx);

// restriction closure: each generator at sigma, restricted to the star of a coface,
// lies in the integer span of the coface's generators
bool check_restriction_closure(const AffineStructure& a);

// integer-span membership of phi - constant at sigma, by HNF reduction
bool is_affine(const AffineStructure& a, const PLFunction& phi, const std::string& sigma);

// witness chi, an integer combination of the generators on star(sigma), with
// chi|_sigma = phi|_sigma; nullopt when the integer system is infeasible
std::optional<PLFunction> is_cp_at(const AffineStructure& a, const PLFunction& phi,
                                   const std::string& sigma);

// section of the pseudo-torsor Aff(phi) over the cell sigma/tau: chi affine on
// star(sigma) with chi + phi constant on tau
std::optional<PLFunction> torsor_section(const AffineStructure& a, const PLFunction& phi,
                                         const Cell& cell);
bool torsor_section_exists(const AffineStructure& a, const PLFunction& phi, const Cell& cell);

struct CartierDatum {
    Cell cell;
    PLFunction local_equation; // -chi - phi on the star of cell.sigma
};

struct DivisorCheck {
    bool tropical = true;
    std::vector<CartierDatum> data; // one entry per cell when tropical
    Cell failing;                   // first failing cell otherwise
};

DivisorCheck is_tropical_divisor(const AffineStructure& a, const PLFunction& phi,
                                 const std::vector<Cell>& cells);

// subgroup of sPL on the star of a cone, given by independent slope vectors
struct AffineSubgroup {
    ComplexPtr complex;
    std::string star_cone;
    std::vector<std::map<std::string, Int>> basis;
};

AffineSubgroup make_affine_subgroup(const ComplexPtr& cx, const std::string& star_cone,
                                    std::vector<std::map<std::string, Int>> basis);

// H-bar: cone-wise H-matching strict functions pairing to zero with the fundamental
// weight; requires the weight to be balanced with respect to H
AffineSubgroup closure(const AffineSubgroup& h, const TropicalCycle& fundamental);
bool is_normal(const AffineSubgroup& h, const TropicalCycle& fundamental);
bool subgroup_contains(const AffineSubgroup& h, const std::map<std::string, Int>& vec);
bool subgroup_equal(const AffineSubgroup& h1, const AffineSubgroup& h2);

} // namespace trop
