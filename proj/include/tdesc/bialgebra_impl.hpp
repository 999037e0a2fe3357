#pragma once

#include <tuple>

#include "tdesc/parallel.hpp"

namespace tdesc {

namespace detail {

template <class K>
std::vector<K> basis_up_to(const Bialgebra<K>& h, int n_max) {
    std::vector<K> all;
    for (int n = 0; n <= n_max; ++n)
        for (const K& k : h.basis_of_degree(n)) all.push_back(k);
    return all;
}

template <class K>
std::string pair_detail(const K& a, const K& b) {
    return BasisTraits<K>::literal(a) + " , " + BasisTraits<K>::literal(b);
}

} // namespace detail

template <class K>
Report check_bialgebra(const Bialgebra<K>& h, int n_max, int workers) {
    using detail::pair_detail;
    Report report;
    report.title = h.name;

    std::vector<std::vector<K>> by_degree;
    for (int n = 0; n <= n_max; ++n) by_degree.push_back(h.basis_of_degree(n));
    std::vector<K> all = detail::basis_up_to(h, n_max);

    // associativity over all triples of total degree <= n_max
    {
        std::vector<std::tuple<K, K, K>> triples;
        for (const K& a : all)
            for (const K& b : all)
                for (const K& c : all) {
                    if (BasisTraits<K>::degree(a) + BasisTraits<K>::degree(b) +
                            BasisTraits<K>::degree(c) <=
                        n_max)
                        triples.emplace_back(a, b, c);
                }
        auto failure = parallel_find_failure(triples.size(), workers, [&](size_t i) -> std::optional<std::string> {
            const auto& [a, b, c] = triples[i];
            LinearCombination<K> left = multiply(h.product, h.product(a, b), LinearCombination<K>::basis(c));
            LinearCombination<K> right = multiply(h.product, LinearCombination<K>::basis(a), h.product(b, c));
            if (left == right) return std::nullopt;
            return BasisTraits<K>::literal(a) + " , " + BasisTraits<K>::literal(b) + " , " +
                   BasisTraits<K>::literal(c);
        });
        report.add(h.name + ": product associativity (total degree <= " + std::to_string(n_max) + ")",
                   !failure, failure.value_or(""));
    }

    // two-sided unit
    {
        std::optional<std::string> failure;
        for (const K& a : all) {
            if (h.product(h.unit_key, a) != LinearCombination<K>::basis(a) ||
                h.product(a, h.unit_key) != LinearCombination<K>::basis(a)) {
                failure = BasisTraits<K>::literal(a);
                break;
            }
        }
        report.add(h.name + ": product unit", !failure, failure.value_or(""));
    }

    // coassociativity
    {
        auto failure = parallel_find_failure(all.size(), workers, [&](size_t i) -> std::optional<std::string> {
            const K& x = all[i];
            detail::TripleTerms<K> left, right;
            for (const auto& [pair, c] : h.coproduct(x).terms()) {
                for (const auto& [inner, ci] : h.coproduct(pair.first).terms())
                    detail::triple_add(left, inner.first, inner.second, pair.second, c * ci);
                for (const auto& [inner, ci] : h.coproduct(pair.second).terms())
                    detail::triple_add(right, pair.first, inner.first, inner.second, c * ci);
            }
            if (left == right) return std::nullopt;
            return BasisTraits<K>::literal(x);
        });
        report.add(h.name + ": coproduct coassociativity (degree <= " + std::to_string(n_max) + ")", !failure,
                   failure.value_or(""));
    }

    // counit
    {
        std::optional<std::string> failure;
        for (const K& x : all) {
            TensorCombination<K> t = h.coproduct(x);
            if (detail::tensor_counit_left(t) != LinearCombination<K>::basis(x) ||
                detail::tensor_counit_right(t) != LinearCombination<K>::basis(x)) {
                failure = BasisTraits<K>::literal(x);
                break;
            }
        }
        report.add(h.name + ": coproduct counit", !failure, failure.value_or(""));
    }

    // compatibility: coproduct of a product = product of coproducts
    {
        std::vector<std::pair<K, K>> pairs;
        for (const K& a : all)
            for (const K& b : all)
                if (BasisTraits<K>::degree(a) + BasisTraits<K>::degree(b) <= n_max)
                    pairs.emplace_back(a, b);
        auto failure = parallel_find_failure(pairs.size(), workers, [&](size_t i) -> std::optional<std::string> {
            const auto& [a, b] = pairs[i];
            TensorCombination<K> lhs;
            for (const auto& [k, c] : h.product(a, b).terms()) {
                TensorCombination<K> d = h.coproduct(k);
                d *= c;
                lhs += d;
            }
            TensorCombination<K> rhs =
                detail::tensor_multiply(h.product, h.coproduct(a), h.coproduct(b));
            if (lhs == rhs) return std::nullopt;
            return pair_detail(a, b);
        });
        report.add(h.name + ": product/coproduct compatibility (total degree <= " + std::to_string(n_max) + ")",
                   !failure, failure.value_or(""));
    }

    // cocommutativity, or an explicit witness against it
    {
        std::optional<std::string> witness;
        for (const K& x : all) {
            TensorCombination<K> t = h.coproduct(x);
            if (t.flipped() != t) {
                witness = BasisTraits<K>::literal(x);
                break;
            }
        }
        if (h.expect_cocommutative) {
            report.add(h.name + ": coproduct cocommutativity", !witness,
                       witness ? "flip differs at " + *witness : "");
        } else {
            report.add(h.name + ": coproduct non-cocommutativity witness", witness.has_value(),
                       witness ? "flip differs at " + *witness
                               : "no witness up to degree " + std::to_string(n_max));
        }
    }

    return report;
}

} // namespace tdesc
