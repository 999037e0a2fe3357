#include "tdesc/symgroup.hpp"

#include <algorithm>

namespace tdesc {

Permutation concat_perm(const Permutation& a, const Permutation& b) {
    std::vector<int> word = a.word();
    for (int v : b.word()) word.push_back(v + a.degree());
    return Permutation(std::move(word));
}

LinearCombination<Permutation> q_shuffle_sum(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("q_shuffle_sum: negative degree");
    LinearCombination<Permutation> out;
    // the first n positions take a sorted subset of values, the rest its complement
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int from, int left) -> void {
        if (left == 0) {
            std::vector<int> word(chosen);
            for (int v = 1; v <= n + m; ++v)
                if (!std::binary_search(chosen.begin(), chosen.end(), v)) word.push_back(v);
            out.add(Permutation(std::move(word)), Rational(1));
            return;
        }
        for (int v = from; v + left <= n + m + 1; ++v) {
            chosen.push_back(v);
            self(self, v + 1, left - 1);
            chosen.pop_back();
        }
    };
    rec(rec, 1, n);
    return out;
}

LinearCombination<Permutation> mr_product(const Permutation& a, const Permutation& b) {
    Permutation base = concat_perm(a, b);
    LinearCombination<Permutation> out;
    for (const auto& [pi, c] : q_shuffle_sum(a.degree(), b.degree()).terms())
        out.add(pi.compose(base), c);
    return out;
}

TensorCombination<Permutation> mr_coproduct(const Permutation& a) {
    int n = a.degree();
    TensorCombination<Permutation> out;
    for (int i = 0; i <= n; ++i) {
        std::vector<int> low, high;
        for (int v = 1; v <= i; ++v) low.push_back(v);
        for (int v = i + 1; v <= n; ++v) high.push_back(v);
        // the prefix part is already a word on [i]
        Permutation left(a.subsequence_on(low));
        Permutation right = a.restrict_std(high);
        out.add(left, right, Rational(1));
    }
    return out;
}

TensorCombination<Permutation> cosym_coproduct_perm(const Permutation& a) {
    int n = a.degree();
    TensorCombination<Permutation> out;
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        std::vector<int> s, t;
        for (int v = 1; v <= n; ++v)
            (mask & (size_t{1} << (v - 1)) ? s : t).push_back(v);
        out.add(a.restrict_std(s), a.restrict_std(t), Rational(1));
    }
    return out;
}

Bialgebra<Permutation> perm_concat_cosym_structure() {
    Bialgebra<Permutation> h;
    h.name = "perm-concat-cosym";
    h.product = [](const Permutation& a, const Permutation& b) {
        return LinearCombination<Permutation>::basis(concat_perm(a, b));
    };
    h.coproduct = cosym_coproduct_perm;
    h.basis_of_degree = enumerate_permutations;
    h.unit_key = Permutation();
    h.expect_cocommutative = true;
    return h;
}

Bialgebra<Permutation> malvenuto_reutenauer_structure() {
    Bialgebra<Permutation> h;
    h.name = "malvenuto-reutenauer";
    h.product = mr_product;
    h.coproduct = mr_coproduct;
    h.basis_of_degree = enumerate_permutations;
    h.unit_key = Permutation();
    h.expect_cocommutative = false;
    return h;
}

} // namespace tdesc
