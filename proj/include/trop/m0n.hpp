#pragma once

#include <array>
#include <vector>

#include "trop/affine.hpp"
#include "trop/complex.hpp"
#include "trop/cycle.hpp"
#include "trop/morphism.hpp"

namespace trop {

// 2|(n-2) ... (n-2)|2 split of the marks {1..n}; the stored side is the
// lexicographically smaller one, which is always the side containing mark 1
struct Split {
    std::vector<int> part; // sorted
};

Split make_split(int n, std::vector<int> side);
bool splits_compatible(int n, const Split& a, const Split& b);
std::vector<Split> all_splits(int n);
std::string split_ray_id(const Split& s);

// rays = splits, k-cones = k-element pairwise compatible split sets
ComplexPtr build_m0n(int n); // OutOfRange unless 4 <= n <= 8

// ray id of the split whose non-1 side is the given set
std::string m0n_ray_for(int n, const std::vector<int>& side);

// morphism to the fan of the four given marks: a split goes to the matching
// 2|2 separation of the quadruple, or to the cone point when there is none
struct Forgetful {
    ComplexMorphism morphism;
    ComplexPtr m04; // target, marks relabeled (p1,p2,p3,p4) -> (1,2,3,4)
};
Forgetful forgetful(const ComplexPtr& m0n_complex, int n, std::array<int, 4> marks);

// slope +1 on splits separating {p1,p3}|{p2,p4}, -1 on {p1,p4}|{p2,p3}, 0 otherwise
PLFunction cross_ratio(const ComplexPtr& m0n_complex, int n, std::array<int, 2> first,
                       std::array<int, 2> second);

// generated by the restrictions of all global cross ratios
AffineStructure cross_ratio_structure(const ComplexPtr& m0n_complex, int n);

// boundary expression: sum of ray functions over splits with i on one side and j,k on
// the other; (j,k) defaults to the two smallest marks different from i
PLFunction psi_representative(const ComplexPtr& m0n_complex, int n, int i);
PLFunction psi_representative(const ComplexPtr& m0n_complex, int n, int i, int j, int k);

// vertex weight of psi_1^a1 ... psi_n^an capped on the fundamental class
Rat psi_degree(const ComplexPtr& m0n_complex, const AffineStructure& a, int n,
               const std::vector<int>& exponents);

} // namespace trop
