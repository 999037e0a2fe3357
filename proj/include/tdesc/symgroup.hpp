#pragma once

#include "tdesc/bialgebra.hpp"
#include "tdesc/permutation.hpp"

namespace tdesc {

// word of a followed by the word of b shifted by deg(a)
Permutation concat_perm(const Permutation& a, const Permutation& b);

// sum of the C(n+m, n) permutations increasing on the first n and last m positions
LinearCombination<Permutation> q_shuffle_sum(int n, int m);

// shifted-shuffle (Malvenuto-Reutenauer) product: q_(n,m) composed with a x b
LinearCombination<Permutation> mr_product(const Permutation& a, const Permutation& b);

// value splits: prefix on values <= i kept verbatim, suffix standardized
TensorCombination<Permutation> mr_coproduct(const Permutation& a);

// all value splittings, both parts standardized
TensorCombination<Permutation> cosym_coproduct_perm(const Permutation& a);

// (concatenation, all-splits): the cocommutative enveloping-algebra structure
Bialgebra<Permutation> perm_concat_cosym_structure();
// (shifted shuffle, prefix splits): the Malvenuto-Reutenauer structure
Bialgebra<Permutation> malvenuto_reutenauer_structure();

} // namespace tdesc
