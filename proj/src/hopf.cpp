#include "tdesc/hopf.hpp"

#include <algorithm>

namespace tdesc {

namespace {

// subsets of a sorted set, as (chosen, complement) pairs, by bitmask
template <class Fn>
void for_each_split(const std::vector<int>& support, Fn fn) {
    size_t n = support.size();
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        std::vector<int> a, b;
        for (size_t i = 0; i < n; ++i)
            (mask & (size_t{1} << i) ? a : b).push_back(support[i]);
        fn(a, b);
    }
}

} // namespace

TensorCombination<SetComposition> twisted_coproduct(const SetComposition& p) {
    TensorCombination<SetComposition> out;
    for_each_split(p.support(), [&](const std::vector<int>& a, const std::vector<int>& b) {
        out.add(restrict(p, a), restrict(p, b), Rational(1));
    });
    return out;
}

TensorCombination<SetComposition> delta_component(const SetComposition& p,
                                                  const std::vector<int>& a,
                                                  const std::vector<int>& b) {
    std::vector<int> merged(a);
    merged.insert(merged.end(), b.begin(), b.end());
    std::sort(merged.begin(), merged.end());
    if (std::adjacent_find(merged.begin(), merged.end()) != merged.end() ||
        merged != p.support())
        throw std::domain_error("delta_component: A, B must partition the support");
    return TensorCombination<SetComposition>::basis(restrict(p, a), restrict(p, b));
}

TensorCombination<SetComposition> restricted_coproduct(const SetComposition& p) {
    if (!p.has_initial_support())
        throw std::domain_error("restricted_coproduct: support is not an initial segment");
    int n = p.degree();
    TensorCombination<SetComposition> out;
    for (int cut = 0; cut <= n; ++cut) {
        std::vector<int> head, tail;
        for (int v = 1; v <= cut; ++v) head.push_back(v);
        for (int v = cut + 1; v <= n; ++v) tail.push_back(v);
        out.add(restrict(p, head), standardize(restrict(p, tail)), Rational(1));
    }
    return out;
}

TensorCombination<SetComposition> cosym_coproduct(const SetComposition& p) {
    if (!p.has_initial_support())
        throw std::domain_error("cosym_coproduct: support is not an initial segment");
    TensorCombination<SetComposition> out;
    for_each_split(p.support(), [&](const std::vector<int>& a, const std::vector<int>& b) {
        out.add(standardize(restrict(p, a)), standardize(restrict(p, b)), Rational(1));
    });
    return out;
}

SetComposition restricted_product(const SetComposition& p, const SetComposition& q) {
    if (!p.has_initial_support() || !q.has_initial_support())
        throw std::domain_error("restricted_product: supports must be initial segments");
    return concat_disjoint(p, relabel(q, OrderIso::shift_initial(q.degree(), p.degree())));
}

LinearCombination<SetComposition> symmetrized_product(const SetComposition& p,
                                                      const SetComposition& q) {
    if (!p.has_initial_support() || !q.has_initial_support())
        throw std::domain_error("symmetrized_product: supports must be initial segments");
    int dp = p.degree(), dq = q.degree();
    std::vector<int> all(static_cast<size_t>(dp + dq));
    for (int i = 0; i < dp + dq; ++i) all[static_cast<size_t>(i)] = i + 1;
    LinearCombination<SetComposition> out;
    // choose the image A of [p]'s support; B gets the complement
    std::vector<int> chosen;
    auto rec = [&](auto&& self, size_t from, int left) -> void {
        if (left == 0) {
            std::vector<int> rest;
            size_t ci = 0;
            for (int v : all) {
                if (ci < chosen.size() && chosen[ci] == v)
                    ++ci;
                else
                    rest.push_back(v);
            }
            SetComposition lhs = relabel(p, OrderIso(p.support(), chosen));
            SetComposition rhs = relabel(q, OrderIso(q.support(), rest));
            out.add(concat_disjoint(lhs, rhs), Rational(1));
            return;
        }
        for (size_t i = from; i + static_cast<size_t>(left) <= all.size(); ++i) {
            chosen.push_back(all[i]);
            self(self, i + 1, left - 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0, dp);
    return out;
}

Bialgebra<SetComposition> restricted_cosym_structure() {
    Bialgebra<SetComposition> h;
    h.name = "restricted-cosym";
    h.product = [](const SetComposition& p, const SetComposition& q) {
        return LinearCombination<SetComposition>::basis(restricted_product(p, q));
    };
    h.coproduct = cosym_coproduct;
    h.basis_of_degree = enumerate_set_compositions;
    h.unit_key = SetComposition();
    h.expect_cocommutative = true;
    return h;
}

Bialgebra<SetComposition> symmetrized_restricted_structure() {
    Bialgebra<SetComposition> h;
    h.name = "symmetrized-restricted";
    h.product = symmetrized_product;
    h.coproduct = restricted_coproduct;
    h.basis_of_degree = enumerate_set_compositions;
    h.unit_key = SetComposition();
    h.expect_cocommutative = false;
    return h;
}

bool check_triangularity(const SetComposition& p, const SetComposition& q) {
    SetComposition base = restricted_product(p, q);
    LinearCombination<SetComposition> shuffled = symmetrized_product(p, q);
    if (shuffled.coeff(base) != Rational(1)) return false;
    for (const auto& [term, coeff] : shuffled.terms()) {
        if (coeff != Rational(1)) return false;
        if (term == base) continue;
        if (!(base < term)) return false;
    }
    return true;
}

std::vector<std::pair<SetComposition, LinearCombination<SetComposition>>>
primitive_generators(int n) {
    Bialgebra<SetComposition> h = restricted_cosym_structure();
    GradedMap<SetComposition> log_id = convolution_log_identity<SetComposition>(h.product, h.coproduct);
    std::vector<std::pair<SetComposition, LinearCombination<SetComposition>>> out;
    for (const SetComposition& p : enumerate_set_compositions(n))
        if (n >= 1 && is_reduced(p)) out.emplace_back(p, log_id(p));
    return out;
}

Report check_freeness(int n_max, int workers) {
    Report report;
    report.title = "freeness";

    std::vector<std::vector<SetComposition>> comp(static_cast<size_t>(n_max) + 1);
    std::vector<long> fubini(static_cast<size_t>(n_max) + 1);
    std::vector<long> reduced_count(static_cast<size_t>(n_max) + 1, 0);
    for (int n = 0; n <= n_max; ++n) {
        comp[static_cast<size_t>(n)] = enumerate_set_compositions(n);
        fubini[static_cast<size_t>(n)] = static_cast<long>(comp[static_cast<size_t>(n)].size());
        if (n >= 1)
            for (const auto& p : comp[static_cast<size_t>(n)])
                if (is_reduced(p)) ++reduced_count[static_cast<size_t>(n)];
    }

    // (a) factor and refold every composition; each factor must be reduced
    {
        std::optional<std::string> failure;
        for (int n = 0; n <= n_max && !failure; ++n) {
            for (const auto& p : comp[static_cast<size_t>(n)]) {
                std::vector<SetComposition> factors = factor_reduced(p);
                SetComposition refold;
                bool ok = true;
                for (const auto& f : factors) {
                    if (!is_reduced(f)) ok = false;
                    refold = restricted_product(refold, f);
                }
                if (!ok || refold != p) {
                    failure = p.str();
                    break;
                }
            }
        }
        report.add("reduced factorization roundtrip (degree <= " + std::to_string(n_max) + ")",
                   !failure, failure.value_or(""));
    }

    // (b) graded dimensions: F(t) = 1 / (1 - R(t)), i.e. F(n) = sum R(j) F(n-j)
    {
        std::optional<std::string> failure;
        for (int n = 1; n <= n_max; ++n) {
            long sum = 0;
            for (int j = 1; j <= n; ++j)
                sum += reduced_count[static_cast<size_t>(j)] * fubini[static_cast<size_t>(n - j)];
            if (sum != fubini[static_cast<size_t>(n)]) {
                failure = "degree " + std::to_string(n);
                break;
            }
        }
        report.add("graded dimension series identity (degree <= " + std::to_string(n_max) + ")",
                   !failure, failure.value_or(""));
    }

    // (c) shuffled products of the reduced factors form a unitriangular
    // change of basis w.r.t. the word order
    {
        std::optional<std::string> failure;
        Bialgebra<SetComposition> h = symmetrized_restricted_structure();
        for (int n = 0; n <= n_max && !failure; ++n) {
            const auto& basis = comp[static_cast<size_t>(n)];
            auto check = [&](size_t i) -> std::optional<std::string> {
                const SetComposition& p = basis[i];
                LinearCombination<SetComposition> row =
                    LinearCombination<SetComposition>::basis(SetComposition());
                for (const auto& f : factor_reduced(p))
                    row = multiply(h.product, row, LinearCombination<SetComposition>::basis(f));
                if (row.coeff(p) != Rational(1)) return p.str();
                for (const auto& [term, coeff] : row.terms())
                    if (term < p) return p.str();
                return std::nullopt;
            };
            failure = parallel_find_failure(basis.size(), workers, check);
        }
        report.add("unitriangular shuffle-product basis change (degree <= " + std::to_string(n_max) + ")",
                   !failure, failure.value_or(""));
    }

    return report;
}

} // namespace tdesc
