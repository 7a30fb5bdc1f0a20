#pragma once

#include <map>
#include <optional>
#include <string>

#include "trop/complex.hpp"
#include "trop/plfunction.hpp"

namespace trop {

struct AffineStructure;

// dimension-k rational weight on the k-cones of a complex; absent key = 0
struct TropicalCycle {
    ComplexPtr complex;
    int k = 0;
    std::map<std::string, Rat> weights;

    Rat weight(const std::string& cone_id) const {
        auto it = weights.find(cone_id);
        return it == weights.end() ? Rat(0) : it->second;
    }
};

TropicalCycle fundamental_class(const ComplexPtr& cx); // NotPure unless pure-dimensional

TropicalCycle cycle_scale(const Rat& c, const TropicalCycle& a);
TropicalCycle cycle_add(const TropicalCycle& a, const TropicalCycle& b);
bool cycle_equal(const TropicalCycle& a, const TropicalCycle& b); // zero weights ignored

struct BalanceReport {
    bool balanced = true;
    std::string cone;    // failing (k-1)-cone when unbalanced
    PLFunction witness;  // function vanishing on it with nonzero pairing
    Rat pairing;
};

// checks, for every (k-1)-cone tau and a lattice basis of the affine functions on
// star(tau) vanishing on tau, that the pairing with the star-quotient weight vanishes
BalanceReport is_balanced(const TropicalCycle& c, const AffineStructure& a);

// cap product with a combinatorially principal function; the function may have
// rational slopes, in which case denominators are cleared and the result rescaled
TropicalCycle intersect(const AffineStructure& a, const PLFunction& phi, const TropicalCycle& c);

} // namespace trop
