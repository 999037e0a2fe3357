#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tdesc/basis_traits.hpp"
#include "tdesc/linear.hpp"
#include "tdesc/report.hpp"

namespace tdesc {

// A graded connected bialgebra presented on a basis, together with the basis
// enumeration per degree needed for exhaustive degree-bounded verification.
template <class K>
struct Bialgebra {
    std::string name;
    BasisProduct<K> product;
    BasisCoproduct<K> coproduct;
    std::function<std::vector<K>(int)> basis_of_degree;
    K unit_key;                      // the degree-0 basis element
    bool expect_cocommutative = false;
};

namespace detail {

template <class K>
LinearCombination<K> tensor_counit_left(const TensorCombination<K>& t) {
    LinearCombination<K> out;
    for (const auto& [pair, c] : t.terms())
        if (BasisTraits<K>::degree(pair.first) == 0) out.add(pair.second, c);
    return out;
}

template <class K>
LinearCombination<K> tensor_counit_right(const TensorCombination<K>& t) {
    LinearCombination<K> out;
    for (const auto& [pair, c] : t.terms())
        if (BasisTraits<K>::degree(pair.second) == 0) out.add(pair.first, c);
    return out;
}

// componentwise product of tensors: (a (x) b)(c (x) d) = ac (x) bd
template <class K>
TensorCombination<K> tensor_multiply(const BasisProduct<K>& prod, const TensorCombination<K>& x,
                                     const TensorCombination<K>& y) {
    TensorCombination<K> out;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            LinearCombination<K> left = prod(kx.first, ky.first);
            LinearCombination<K> right = prod(kx.second, ky.second);
            for (const auto& [l, cl] : left.terms())
                for (const auto& [r, cr] : right.terms())
                    out.add(l, r, cx * cy * cl * cr);
        }
    return out;
}

// three-factor tensors, for coassociativity
template <class K>
using TripleTerms = std::map<std::tuple<K, K, K>, Rational>;

template <class K>
void triple_add(TripleTerms<K>& terms, const K& a, const K& b, const K& c, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto key = std::make_tuple(a, b, c);
    auto [it, inserted] = terms.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms.erase(it);
    }
}

} // namespace detail

// The antipode of a connected graded bialgebra, by the triangular recursion
// S(x) = -x - sum S(x') x'' over the reduced coproduct.
template <class K>
LinearCombination<K> antipode_basis(const K& key, const Bialgebra<K>& h) {
    if (BasisTraits<K>::degree(key) == 0) return LinearCombination<K>::basis(key);
    LinearCombination<K> out;
    out.add(key, Rational(-1));
    for (const auto& [pair, c] : h.coproduct(key).terms()) {
        int dl = BasisTraits<K>::degree(pair.first);
        int dr = BasisTraits<K>::degree(pair.second);
        if (dl == 0 || dr == 0) continue;
        LinearCombination<K> s = antipode_basis(pair.first, h);
        LinearCombination<K> term = multiply(h.product, s, LinearCombination<K>::basis(pair.second));
        term *= -c;
        out += term;
    }
    return out;
}

template <class K>
LinearCombination<K> antipode(const LinearCombination<K>& x, const Bialgebra<K>& h) {
    LinearCombination<K> out;
    for (const auto& [k, c] : x.terms()) {
        LinearCombination<K> s = antipode_basis(k, h);
        s *= c;
        out += s;
    }
    return out;
}

// Exhaustive degree-bounded verification of the bialgebra axioms. One check
// line per axiom; the first counterexample is reported in the detail field.
template <class K>
Report check_bialgebra(const Bialgebra<K>& h, int n_max, int workers = 1);

} // namespace tdesc

#include "tdesc/bialgebra_impl.hpp"
