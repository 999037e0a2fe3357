#pragma once

#include <vector>

#include "tdesc/bialgebra.hpp"
#include "tdesc/set_composition.hpp"

namespace tdesc {

// --- the twisted structure on arbitrary finite supports ---

// split every block in two; 2^n unstandardized terms
TensorCombination<SetComposition> twisted_coproduct(const SetComposition& p);

// the single component restrict(P,A) (x) restrict(P,B); A,B must partition the support
TensorCombination<SetComposition> delta_component(const SetComposition& p,
                                                  const std::vector<int>& a,
                                                  const std::vector<int>& b);

// --- the two ordinary structures on initial supports ---

// n+1 terms P|_[p] (x) P|_(p+[q]), both standardized
TensorCombination<SetComposition> restricted_coproduct(const SetComposition& p);

// 2^n terms P|_A (x) P|_B over all splittings, both standardized
TensorCombination<SetComposition> cosym_coproduct(const SetComposition& p);

// shift Q above P, then concatenate blocks
SetComposition restricted_product(const SetComposition& p, const SetComposition& q);

// sum over all |A|=p splittings of [p+q] of the relabelled concatenations
LinearCombination<SetComposition> symmetrized_product(const SetComposition& p,
                                                      const SetComposition& q);

// the pairings of Hopf structures carried by the graded span of compositions
Bialgebra<SetComposition> restricted_cosym_structure();      // (shift-concat, all-splits)
Bialgebra<SetComposition> symmetrized_restricted_structure(); // (shuffled concat, prefix splits)

// P *^ Q = P *- Q + strictly larger terms w.r.t. order_ll, all coefficients 1
bool check_triangularity(const SetComposition& p, const SetComposition& q);

// Free generators of the primitive Lie algebra: the graded convolution
// logarithm of the identity (in the shift-concatenation / all-splits
// structure, the cocommutative one) applied to each reduced composition
// of degree n. Every output is primitive for the all-splits coproduct.
std::vector<std::pair<SetComposition, LinearCombination<SetComposition>>>
primitive_generators(int n);

// (a) reduced-factor roundtrip, (b) graded-dimension series identity,
// (c) unitriangular change of basis for the shuffled products of factors
Report check_freeness(int n_max, int workers = 1);

} // namespace tdesc
