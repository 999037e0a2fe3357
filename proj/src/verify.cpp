#include "tdesc/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tdesc/hopf.hpp"
#include "tdesc/parallel.hpp"
#include "tdesc/permutation.hpp"
#include "tdesc/symgroup.hpp"

namespace tdesc {

namespace {

// ---- independent counting oracles (no shared code with the enumerators) ----

// set compositions of [n] counted over raw maps [n] -> [k], filtered for
// surjectivity
long count_surjection_bruteforce(int n) {
    if (n == 0) return 1;
    long total = 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> image(static_cast<size_t>(n), 1);
        while (true) {
            std::vector<bool> hit(static_cast<size_t>(k), false);
            for (int v : image) hit[static_cast<size_t>(v - 1)] = true;
            if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) ++total;
            int pos = n - 1;
            while (pos >= 0 && image[static_cast<size_t>(pos)] == k) {
                image[static_cast<size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++image[static_cast<size_t>(pos)];
        }
    }
    return total;
}

// binomial-sum recurrence for the same counts
std::vector<long> fubini_recurrence(int n_max) {
    std::vector<std::vector<long>> choose(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        choose[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1, 1);
        for (int k = 1; k < n; ++k)
            choose[static_cast<size_t>(n)][static_cast<size_t>(k)] =
                choose[static_cast<size_t>(n - 1)][static_cast<size_t>(k - 1)] +
                choose[static_cast<size_t>(n - 1)][static_cast<size_t>(k)];
    }
    std::vector<long> f(static_cast<size_t>(n_max) + 1, 0);
    f[0] = 1;
    for (int n = 1; n <= n_max; ++n)
        for (int j = 1; j <= n; ++j)
            f[static_cast<size_t>(n)] +=
                choose[static_cast<size_t>(n)][static_cast<size_t>(j)] * f[static_cast<size_t>(n - j)];
    return f;
}

// planar trees with n branchings (n+1 leaves), counted by a first-child
// convolution over leaf counts
std::vector<long> tree_count_recurrence(int n_max) {
    int leaves = n_max + 1;
    std::vector<long> t(static_cast<size_t>(leaves) + 1, 0); // trees by leaf count
    std::vector<long> g(static_cast<size_t>(leaves) + 1, 0); // nonempty child sequences
    t[1] = 1;
    g[1] = 1;
    for (int l = 2; l <= leaves; ++l) {
        long trees = 0;
        for (int j = 1; j < l; ++j) trees += t[static_cast<size_t>(j)] * g[static_cast<size_t>(l - j)];
        t[static_cast<size_t>(l)] = trees;
        long seqs = t[static_cast<size_t>(l)];
        for (int j = 1; j < l; ++j) seqs += t[static_cast<size_t>(j)] * g[static_cast<size_t>(l - j)];
        g[static_cast<size_t>(l)] = seqs;
    }
    std::vector<long> out(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) out[static_cast<size_t>(n)] = t[static_cast<size_t>(n) + 1];
    return out;
}

std::vector<long> catalan_recurrence(int n_max) {
    std::vector<long> c(static_cast<size_t>(n_max) + 1, 0);
    c[0] = 1;
    for (int n = 1; n <= n_max; ++n)
        for (int i = 0; i < n; ++i)
            c[static_cast<size_t>(n)] +=
                c[static_cast<size_t>(i)] * c[static_cast<size_t>(n - 1 - i)];
    return c;
}

std::string plural(size_t n, const char* noun) {
    return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

SetComposition comp_on_support(const SetComposition& standard, const std::vector<int>& support) {
    return relabel(standard, OrderIso(standard.support(), support));
}

template <class Fn>
void for_each_subset(const std::vector<int>& universe, Fn fn) {
    size_t n = universe.size();
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        std::vector<int> subset;
        for (size_t i = 0; i < n; ++i)
            if (mask & (size_t{1} << i)) subset.push_back(universe[i]);
        fn(subset);
    }
}

std::vector<int> initial_segment(int n) {
    std::vector<int> out(static_cast<size_t>(n));
    std::iota(out.begin(), out.end(), 1);
    return out;
}

// apply a basis coproduct linearly to a combination
template <class K>
TensorCombination<K> coproduct_apply(const BasisCoproduct<K>& coprod,
                                     const LinearCombination<K>& x) {
    TensorCombination<K> out;
    for (const auto& [k, c] : x.terms()) {
        TensorCombination<K> t = coprod(k);
        t *= c;
        out += t;
    }
    return out;
}

} // namespace

Report verify_bijection(int n_max, int workers) {
    Report report;
    report.title = "bijection";

    for (int n = 0; n <= n_max; ++n) {
        std::vector<SetComposition> comps = enumerate_set_compositions(n);
        auto failure = parallel_find_failure(comps.size(), workers, [&](size_t i) -> std::optional<std::string> {
            const SetComposition& p = comps[i];
            IncreasingTree t = to_increasing_tree(p);
            if (t.branching_count() != n || !t.is_standard()) return p.str();
            if (to_set_composition(t) != p) return p.str();
            return std::nullopt;
        });
        report.add("composition -> tree -> composition roundtrip, degree " + std::to_string(n),
                   !failure, failure.value_or(""));

        std::vector<IncreasingTree> trees = enumerate_increasing_trees(n);
        std::optional<std::string> tree_failure;
        if (trees.size() != comps.size())
            tree_failure = "count " + std::to_string(trees.size()) + " != " +
                           std::to_string(comps.size());
        if (!tree_failure) {
            auto f2 = parallel_find_failure(trees.size(), workers, [&](size_t i) -> std::optional<std::string> {
                const IncreasingTree& t = trees[i];
                if (to_increasing_tree(to_set_composition(t)) != t) return t.str();
                return std::nullopt;
            });
            tree_failure = f2;
        }
        report.add("tree -> composition -> tree roundtrip, " + std::to_string(n) + " branchings",
                   !tree_failure, tree_failure.value_or(""));
    }

    // worked examples, frozen
    {
        IncreasingTree t = to_increasing_tree(SetComposition::parse("2,6|3,4|1|5"));
        bool ok = t.str() == "((*((**)**))(**))@4,3,2,1,1";
        report.add("worked example 2,6|3,4|1|5 -> tree literal", ok, ok ? "" : t.str());
    }
    {
        const char* expected[3][2] = {
            {"((**)(***)*)@3,1,2", "1|3,4|2,5"},
            {"((**)(***)*)@2,1,1", "1,3,4|2,5"},
            {"((**)(***)*)@3,2,1", "3,4|1|2,5"},
        };
        bool ok = true;
        std::string detail;
        for (const auto& [tree_lit, comp_lit] : expected) {
            SetComposition got = to_set_composition(IncreasingTree::parse(tree_lit));
            if (got.str() != comp_lit) {
                ok = false;
                detail = std::string(tree_lit) + " -> " + got.str();
                break;
            }
        }
        report.add("worked example: all three level functions on ((**)(***)*)", ok, detail);
    }
    {
        IncreasingTree t = to_increasing_tree(SetComposition::parse("2,6|3,4|1|5"));
        IncreasingTree c = contract(t, {1, 2, 4, 6});
        bool ok = c == to_increasing_tree(SetComposition::parse("2,4|3|1"));
        report.add("worked example: contraction of 2,6|3,4|1|5 at {1,2,4,6}", ok,
                   ok ? "" : c.str());
    }
    return report;
}

Report verify_counts(int n_max, int workers) {
    (void)workers;
    Report report;
    report.title = "counts";

    const std::vector<long> fubini_table = {1, 1, 3, 13, 75, 541, 4683, 47293};
    const std::vector<long> tree_table = {1, 1, 3, 11, 45, 197, 903};
    const std::vector<long> catalan_table = {1, 1, 2, 5, 14, 42, 132};

    int n_cap = std::min<int>(n_max, static_cast<int>(fubini_table.size()) - 1);
    std::vector<long> fub_rec = fubini_recurrence(n_max);
    {
        std::optional<std::string> failure;
        for (int n = 0; n <= n_cap; ++n) {
            long enumerated = static_cast<long>(enumerate_set_compositions(n).size());
            long brute = count_surjection_bruteforce(n);
            if (enumerated != fubini_table[static_cast<size_t>(n)] || enumerated != brute ||
                enumerated != fub_rec[static_cast<size_t>(n)]) {
                failure = "degree " + std::to_string(n) + ": " + std::to_string(enumerated);
                break;
            }
        }
        report.add("set compositions per degree match the surjection oracle", !failure,
                   failure.value_or(""));
    }

    int t_cap = std::min<int>(n_cap, static_cast<int>(tree_table.size()) - 1);
    std::vector<long> tree_rec = tree_count_recurrence(t_cap);
    std::vector<long> cat_rec = catalan_recurrence(t_cap);
    std::optional<std::string> tree_failure, binary_failure, left_failure, level_failure;
    for (int n = 0; n <= t_cap; ++n) {
        std::vector<PlanarTree> trees = enumerate_trees(n);
        long total = static_cast<long>(trees.size());
        if (total != tree_table[static_cast<size_t>(n)] ||
            total != tree_rec[static_cast<size_t>(n)]) {
            if (!tree_failure) tree_failure = "degree " + std::to_string(n);
        }
        long binary = static_cast<long>(
            std::count_if(trees.begin(), trees.end(), [](const PlanarTree& t) { return t.is_binary(); }));
        if (binary != catalan_table[static_cast<size_t>(n)] ||
            binary != cat_rec[static_cast<size_t>(n)]) {
            if (!binary_failure) binary_failure = "degree " + std::to_string(n);
        }

        std::vector<IncreasingTree> inc_trees = enumerate_increasing_trees(n);
        long left = 0, one_per_level = 0, left_one_per_level = 0;
        for (const auto& t : inc_trees) {
            bool li = is_left_increasing(t);
            bool single = static_cast<int>(t.level_set().size()) == n;
            if (li) ++left;
            if (single) ++one_per_level;
            if (li && single) ++left_one_per_level;
        }
        if (left != total && !left_failure) left_failure = "degree " + std::to_string(n);
        long factorial = 1;
        for (int j = 2; j <= n; ++j) factorial *= j;
        if ((one_per_level != factorial || left_one_per_level != binary) && !level_failure)
            level_failure = "degree " + std::to_string(n);
    }
    report.add("planar trees per degree match the convolution oracle", !tree_failure,
               tree_failure.value_or(""));
    report.add("binary trees per degree match the Catalan oracle", !binary_failure,
               binary_failure.value_or(""));
    report.add("left increasing trees are as numerous as planar trees", !left_failure,
               left_failure.value_or(""));
    report.add("one-branching-per-level trees count n!, and their left increasing part is Catalan",
               !level_failure, level_failure.value_or(""));

    {
        std::optional<std::string> failure;
        for (int n = 0; n <= std::min(n_cap, 6); ++n) {
            long trees = static_cast<long>(enumerate_increasing_trees(n).size());
            if (trees != fubini_table[static_cast<size_t>(n)]) {
                failure = "degree " + std::to_string(n);
                break;
            }
        }
        report.add("standard increasing trees per degree match set compositions", !failure,
                   failure.value_or(""));
    }
    return report;
}

Report verify_hopf(int n_max, int workers) {
    Report report;
    report.title = "hopf";

    Bialgebra<SetComposition> cocommutative = restricted_cosym_structure();
    Bialgebra<SetComposition> noncocommutative = symmetrized_restricted_structure();

    report.merge(check_bialgebra(cocommutative, n_max, workers));
    report.merge(check_bialgebra(noncocommutative, n_max, workers));

    // cocommutativity of the all-splits coproduct, pushed one degree further
    {
        int bound = std::max(n_max, 5);
        std::optional<std::string> failure;
        for (int n = 0; n <= bound && !failure; ++n) {
            std::vector<SetComposition> comps = enumerate_set_compositions(n);
            failure = parallel_find_failure(comps.size(), workers, [&](size_t i) -> std::optional<std::string> {
                TensorCombination<SetComposition> t = cosym_coproduct(comps[i]);
                if (t.flipped() != t) return comps[i].str();
                return std::nullopt;
            });
        }
        report.add("all-splits coproduct cocommutative through degree " + std::to_string(bound),
                   !failure, failure.value_or(""));
    }

    // antipode identity m(S (x) id) delta = unit counit, both structures
    for (const auto* h : {&cocommutative, &noncocommutative}) {
        std::optional<std::string> failure;
        for (int n = 0; n <= n_max && !failure; ++n) {
            for (const SetComposition& p : enumerate_set_compositions(n)) {
                LinearCombination<SetComposition> folded;
                for (const auto& [pair, c] : h->coproduct(p).terms()) {
                    LinearCombination<SetComposition> term = multiply(
                        h->product, antipode_basis(pair.first, *h),
                        LinearCombination<SetComposition>::basis(pair.second));
                    term *= c;
                    folded += term;
                }
                LinearCombination<SetComposition> expected;
                if (n == 0) expected = LinearCombination<SetComposition>::basis(SetComposition());
                if (folded != expected) {
                    failure = p.str();
                    break;
                }
            }
        }
        report.add("antipode identity for " + h->name + " (degree <= " + std::to_string(n_max) + ")",
                   !failure, failure.value_or(""));
    }

    return report;
}

Report verify_twisted(int n_max, int workers) {
    Report report;
    report.title = "twisted";

    std::vector<int> universe = initial_segment(n_max);
    // all compositions of every subset of the universe
    std::map<std::vector<int>, std::vector<SetComposition>> by_support;
    for_each_subset(universe, [&](const std::vector<int>& s) {
        std::vector<SetComposition>& bucket = by_support[s];
        for (const auto& p : enumerate_set_compositions(static_cast<int>(s.size())))
            bucket.push_back(comp_on_support(p, s));
    });

    // coassociativity and cocommutativity of the block-splitting coproduct
    {
        std::vector<SetComposition> all;
        for (const auto& [s, bucket] : by_support)
            all.insert(all.end(), bucket.begin(), bucket.end());
        auto fail_coassoc = parallel_find_failure(all.size(), workers, [&](size_t i) -> std::optional<std::string> {
            const SetComposition& p = all[i];
            std::map<std::tuple<SetComposition, SetComposition, SetComposition>, Rational> left, right;
            auto add = [](auto& m, const SetComposition& a, const SetComposition& b,
                          const SetComposition& c, const Rational& coeff) {
                auto key = std::make_tuple(a, b, c);
                auto [it, inserted] = m.try_emplace(key, coeff);
                if (!inserted) {
                    it->second += coeff;
                    if (it->second.is_zero()) m.erase(it);
                }
            };
            for (const auto& [pair, c] : twisted_coproduct(p).terms()) {
                for (const auto& [inner, ci] : twisted_coproduct(pair.first).terms())
                    add(left, inner.first, inner.second, pair.second, c * ci);
                for (const auto& [inner, ci] : twisted_coproduct(pair.second).terms())
                    add(right, pair.first, inner.first, inner.second, c * ci);
            }
            if (left != right) return p.str();
            return std::nullopt;
        });
        report.add("block-splitting coproduct coassociative on supports within [" +
                       std::to_string(n_max) + "]",
                   !fail_coassoc, fail_coassoc.value_or(""));

        auto fail_cocomm = parallel_find_failure(all.size(), workers, [&](size_t i) -> std::optional<std::string> {
            TensorCombination<SetComposition> t = twisted_coproduct(all[i]);
            if (t.flipped() != t) return all[i].str();
            return std::nullopt;
        });
        report.add("block-splitting coproduct cocommutative", !fail_cocomm,
                   fail_cocomm.value_or(""));

        std::optional<std::string> fail_counit;
        for (const auto& p : all) {
            LinearCombination<SetComposition> left_strip, right_strip;
            for (const auto& [pair, c] : twisted_coproduct(p).terms()) {
                if (pair.first.degree() == 0) left_strip.add(pair.second, c);
                if (pair.second.degree() == 0) right_strip.add(pair.first, c);
            }
            if (left_strip != LinearCombination<SetComposition>::basis(p) ||
                right_strip != LinearCombination<SetComposition>::basis(p)) {
                fail_counit = p.str();
                break;
            }
        }
        report.add("block-splitting coproduct counital", !fail_counit, fail_counit.value_or(""));
    }

    // multiplicativity over concatenation for disjoint supports
    {
        struct Task {
            const SetComposition* p;
            const SetComposition* q;
        };
        std::vector<Task> tasks;
        for (const auto& [s, ps] : by_support)
            for (const auto& [t, qs] : by_support) {
                std::vector<int> common;
                std::set_intersection(s.begin(), s.end(), t.begin(), t.end(),
                                      std::back_inserter(common));
                if (!common.empty()) continue;
                for (const auto& p : ps)
                    for (const auto& q : qs) tasks.push_back({&p, &q});
            }
        auto failure = parallel_find_failure(tasks.size(), workers, [&](size_t i) -> std::optional<std::string> {
            const SetComposition& p = *tasks[i].p;
            const SetComposition& q = *tasks[i].q;
            TensorCombination<SetComposition> lhs = twisted_coproduct(concat_disjoint(p, q));
            TensorCombination<SetComposition> rhs;
            for (const auto& [kp, cp] : twisted_coproduct(p).terms())
                for (const auto& [kq, cq] : twisted_coproduct(q).terms())
                    rhs.add(concat_disjoint(kp.first, kq.first),
                            concat_disjoint(kp.second, kq.second), cp * cq);
            if (lhs != rhs) return p.str() + " , " + q.str();
            return std::nullopt;
        });
        report.add("coproduct multiplicative for concatenation on disjoint supports within [" +
                       std::to_string(n_max) + "]",
                   !failure, failure.value_or(""));
    }

    return report;
}

Report verify_freeness(int n_max, int workers) {
    Report report;
    report.title = "freeness";

    // reduced counts per degree, frozen
    {
        const std::vector<long> reduced_table = {0, 1, 2, 8, 48};
        std::optional<std::string> failure;
        for (int n = 1; n <= std::min<int>(n_max, 4); ++n) {
            long count = 0;
            for (const auto& p : enumerate_set_compositions(n))
                if (is_reduced(p)) ++count;
            if (count != reduced_table[static_cast<size_t>(n)]) {
                failure = "degree " + std::to_string(n) + ": " + std::to_string(count);
                break;
            }
        }
        report.add("reduced compositions count 1, 2, 8, 48 in degrees 1..4", !failure,
                   failure.value_or(""));
    }

    report.merge(check_freeness(n_max, workers));

    // triangularity of the shuffled product over the shifted one
    {
        int pair_bound = std::min(n_max, 5);
        struct Task {
            SetComposition p, q;
        };
        std::vector<Task> tasks;
        for (int dp = 0; dp <= pair_bound; ++dp)
            for (int dq = 0; dp + dq <= pair_bound; ++dq)
                for (const auto& p : enumerate_set_compositions(dp))
                    for (const auto& q : enumerate_set_compositions(dq))
                        tasks.push_back({p, q});
        auto failure = parallel_find_failure(tasks.size(), workers, [&](size_t i) -> std::optional<std::string> {
            if (!check_triangularity(tasks[i].p, tasks[i].q))
                return tasks[i].p.str() + " , " + tasks[i].q.str();
            return std::nullopt;
        });
        report.add("shuffled product triangular over shifted product (total degree <= " +
                       std::to_string(pair_bound) + ", " + plural(tasks.size(), "pair") + ")",
                   !failure, failure.value_or(""));
    }

    return report;
}

Report verify_generators(int n_max, int workers) {
    (void)workers;
    Report report;
    report.title = "generators";

    const std::vector<long> reduced_table = {0, 1, 2, 8, 48, 402};
    Bialgebra<SetComposition> h = restricted_cosym_structure();

    long total = 0;
    std::optional<std::string> count_failure, primitive_failure;
    for (int n = 1; n <= n_max; ++n) {
        auto gens = primitive_generators(n);
        total += static_cast<long>(gens.size());
        if (n < static_cast<int>(reduced_table.size()) &&
            static_cast<long>(gens.size()) != reduced_table[static_cast<size_t>(n)] &&
            !count_failure)
            count_failure = "degree " + std::to_string(n);
        for (const auto& [source, x] : gens) {
            TensorCombination<SetComposition> d = coproduct_apply(h.coproduct, x);
            TensorCombination<SetComposition> primitive_form =
                tensor(x, LinearCombination<SetComposition>::basis(SetComposition())) +
                tensor(LinearCombination<SetComposition>::basis(SetComposition()), x);
            if (d != primitive_form) {
                if (!primitive_failure) primitive_failure = source.str();
                break;
            }
        }
    }
    report.add("one generator per reduced composition (degree <= " + std::to_string(n_max) +
                   ", " + plural(static_cast<size_t>(total), "generator") + ")",
               !count_failure, count_failure.value_or(""));
    report.add("every generator is primitive for the all-splits coproduct", !primitive_failure,
               primitive_failure.value_or(""));

    // the convolution exponential inverts the logarithm degreewise
    {
        GradedMap<SetComposition> log_id = convolution_log_identity<SetComposition>(h.product, h.coproduct);
        std::optional<std::string> failure;
        for (int n = 0; n <= std::min(n_max, 4) && !failure; ++n) {
            for (const auto& p : enumerate_set_compositions(n)) {
                LinearCombination<SetComposition> back =
                    convolution_exp_apply<SetComposition>(log_id, h.product, h.coproduct, p);
                if (back != LinearCombination<SetComposition>::basis(p)) {
                    failure = p.str();
                    break;
                }
            }
        }
        report.add("convolution exp of the log recovers the identity (degree <= " +
                       std::to_string(std::min(n_max, 4)) + ")",
                   !failure, failure.value_or(""));
    }

    return report;
}

Report verify_embeddings(int n_max, int workers) {
    Report report;
    report.title = "embeddings";

    // permutations into compositions: products
    {
        struct Task {
            Permutation a, b;
        };
        std::vector<Task> tasks;
        for (int da = 0; da <= n_max; ++da)
            for (int db = 0; da + db <= n_max; ++db)
                for (const auto& a : enumerate_permutations(da))
                    for (const auto& b : enumerate_permutations(db)) tasks.push_back({a, b});

        auto fail_concat = parallel_find_failure(tasks.size(), workers, [&](size_t i) -> std::optional<std::string> {
            const auto& [a, b] = tasks[i];
            if (perm_to_setcomp(concat_perm(a, b)) !=
                restricted_product(perm_to_setcomp(a), perm_to_setcomp(b)))
                return a.str() + " , " + b.str();
            return std::nullopt;
        });
        report.add("concatenation of permutations matches the shifted product (total degree <= " +
                       std::to_string(n_max) + ")",
                   !fail_concat, fail_concat.value_or(""));

        auto fail_mr = parallel_find_failure(tasks.size(), workers, [&](size_t i) -> std::optional<std::string> {
            const auto& [a, b] = tasks[i];
            LinearCombination<SetComposition> image;
            for (const auto& [w, c] : mr_product(a, b).terms()) image.add(perm_to_setcomp(w), c);
            if (image != symmetrized_product(perm_to_setcomp(a), perm_to_setcomp(b)))
                return a.str() + " , " + b.str();
            return std::nullopt;
        });
        report.add("shifted-shuffle product of permutations matches the shuffled product",
                   !fail_mr, fail_mr.value_or(""));
    }

    // permutations into compositions: coproducts
    {
        std::vector<Permutation> all;
        for (int n = 0; n <= n_max; ++n)
            for (const auto& w : enumerate_permutations(n)) all.push_back(w);
        auto embed_tensor = [](const TensorCombination<Permutation>& t) {
            TensorCombination<SetComposition> out;
            for (const auto& [pair, c] : t.terms())
                out.add(perm_to_setcomp(pair.first), perm_to_setcomp(pair.second), c);
            return out;
        };
        auto fail_cosym = parallel_find_failure(all.size(), workers, [&](size_t i) -> std::optional<std::string> {
            const Permutation& w = all[i];
            if (embed_tensor(cosym_coproduct_perm(w)) != cosym_coproduct(perm_to_setcomp(w)))
                return w.str();
            return std::nullopt;
        });
        report.add("all-splits coproduct commutes with the permutation embedding (degree <= " +
                       std::to_string(n_max) + ")",
                   !fail_cosym, fail_cosym.value_or(""));

        auto fail_mr = parallel_find_failure(all.size(), workers, [&](size_t i) -> std::optional<std::string> {
            const Permutation& w = all[i];
            if (embed_tensor(mr_coproduct(w)) != restricted_coproduct(perm_to_setcomp(w)))
                return w.str();
            return std::nullopt;
        });
        report.add("prefix-splits coproduct commutes with the permutation embedding", !fail_mr,
                   fail_mr.value_or(""));
    }

    // trees: the level section and its multiplicativity
    {
        std::vector<PlanarTree> shapes;
        for (int n = 0; n <= n_max; ++n)
            for (const auto& t : enumerate_trees(n)) shapes.push_back(t);
        std::optional<std::string> fail_section, fail_li;
        for (const auto& t : shapes) {
            IncreasingTree lifted = inc(t);
            if (fgt(lifted) != t || !lifted.is_standard()) {
                fail_section = t.str();
                break;
            }
            if (!is_left_increasing(lifted)) {
                fail_li = t.str();
                break;
            }
        }
        report.add("level section splits the forgetful map (branchings <= " + std::to_string(n_max) + ")",
                   !fail_section, fail_section.value_or(""));
        report.add("the level section lands in left increasing trees", !fail_li,
                   fail_li.value_or(""));

        struct Task {
            const PlanarTree* t1;
            const PlanarTree* t2;
        };
        std::vector<Task> tasks;
        for (const auto& t1 : shapes)
            for (const auto& t2 : shapes)
                if (t1.branching_count() + t2.branching_count() <= n_max)
                    tasks.push_back({&t1, &t2});
        auto fail_mult = parallel_find_failure(tasks.size(), workers, [&](size_t i) -> std::optional<std::string> {
            const PlanarTree& t1 = *tasks[i].t1;
            const PlanarTree& t2 = *tasks[i].t2;
            if (inc(graft_left(t1, t2)) != restricted_product_tree(inc(t1), inc(t2)))
                return t1.str() + " , " + t2.str();
            return std::nullopt;
        });
        report.add("level section is multiplicative for left grafting", !fail_mult,
                   fail_mult.value_or(""));
    }

    // closure of left increasing trees under contraction and prefix splits
    {
        std::vector<IncreasingTree> left_trees;
        for (int n = 0; n <= n_max; ++n)
            for (const auto& t : enumerate_increasing_trees(n))
                if (is_left_increasing(t)) left_trees.push_back(t);

        auto fail_contract = parallel_find_failure(left_trees.size(), workers, [&](size_t i) -> std::optional<std::string> {
            const IncreasingTree& t = left_trees[i];
            int b = t.branching_count();
            std::optional<std::string> bad;
            for_each_subset(initial_segment(b), [&](const std::vector<int>& labels) {
                if (bad) return;
                if (!is_left_increasing(contract(t, labels))) bad = t.str();
            });
            return bad;
        });
        report.add("contractions of left increasing trees stay left increasing (branchings <= " +
                       std::to_string(n_max) + ")",
                   !fail_contract, fail_contract.value_or(""));

        auto fail_split = parallel_find_failure(left_trees.size(), workers, [&](size_t i) -> std::optional<std::string> {
            const IncreasingTree& t = left_trees[i];
            for (const auto& [pair, c] : restricted_coproduct(to_set_composition(t)).terms()) {
                if (!is_left_increasing(to_increasing_tree(pair.first)) ||
                    !is_left_increasing(to_increasing_tree(pair.second)))
                    return t.str();
            }
            return std::nullopt;
        });
        report.add("prefix splits of left increasing trees stay left increasing", !fail_split,
                   fail_split.value_or(""));
    }

    // the composition bijection intertwines products and contractions on trees
    {
        struct Task {
            SetComposition p, q;
        };
        std::vector<Task> tasks;
        for (int dp = 0; dp <= n_max; ++dp)
            for (int dq = 0; dp + dq <= n_max; ++dq)
                for (const auto& p : enumerate_set_compositions(dp))
                    for (const auto& q : enumerate_set_compositions(dq)) tasks.push_back({p, q});
        auto fail_graft = parallel_find_failure(tasks.size(), workers, [&](size_t i) -> std::optional<std::string> {
            const auto& [p, q] = tasks[i];
            if (to_increasing_tree(restricted_product(p, q)) !=
                restricted_product_tree(to_increasing_tree(p), to_increasing_tree(q)))
                return p.str() + " , " + q.str();
            return std::nullopt;
        });
        report.add("shifted product of compositions is grafting with shifted levels (total degree <= " +
                       std::to_string(n_max) + ")",
                   !fail_graft, fail_graft.value_or(""));

        std::vector<SetComposition> comps;
        for (int n = 0; n <= n_max; ++n)
            for (const auto& p : enumerate_set_compositions(n)) comps.push_back(p);
        auto fail_contract = parallel_find_failure(comps.size(), workers, [&](size_t i) -> std::optional<std::string> {
            const SetComposition& p = comps[i];
            IncreasingTree t = to_increasing_tree(p);
            std::optional<std::string> bad;
            for_each_subset(p.support(), [&](const std::vector<int>& a) {
                if (bad) return;
                // contraction agrees with restriction, and keeps the relative
                // levels and left-to-right order of the surviving branchings
                IncreasingTree c = contract(t, a);
                if (to_set_composition(c) != standardize(restrict(p, a))) {
                    bad = p.str();
                    return;
                }
                std::vector<int> full = branching_levels(t);
                std::vector<int> survived;
                for (int label : a) survived.push_back(full[static_cast<size_t>(label - 1)]);
                std::vector<int> sorted(survived);
                std::sort(sorted.begin(), sorted.end());
                sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
                for (int& level : survived)
                    level = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), level) -
                                             sorted.begin()) +
                            1;
                if (branching_levels(c) != survived) bad = p.str();
            });
            return bad;
        });
        report.add("contraction keeps surviving levels and label order (degree <= " +
                       std::to_string(n_max) + ")",
                   !fail_contract, fail_contract.value_or(""));
    }

    // binary trees sit over permutations
    {
        std::optional<std::string> failure;
        for (int n = 0; n <= n_max && !failure; ++n) {
            std::set<Permutation> seen;
            long binary = 0;
            for (const auto& t : enumerate_trees(n)) {
                if (!t.is_binary()) continue;
                ++binary;
                SetComposition p = to_set_composition(inc(t));
                bool singletons = true;
                for (const auto& block : p.blocks())
                    if (block.size() != 1) singletons = false;
                if (!singletons) {
                    failure = t.str();
                    break;
                }
                if (!seen.insert(setcomp_to_perm(p)).second) {
                    failure = t.str();
                    break;
                }
            }
            if (!failure && static_cast<long>(seen.size()) != binary)
                failure = "degree " + std::to_string(n);
        }
        report.add("binary trees embed injectively into permutations (branchings <= " +
                       std::to_string(n_max) + ")",
                   !failure, failure.value_or(""));
    }

    return report;
}

Report verify_all(int workers) {
    Report report;
    report.title = "all";
    report.merge(verify_bijection(6, workers));
    report.merge(verify_counts(6, workers));
    report.merge(verify_hopf(4, workers));
    report.merge(verify_twisted(5, workers));
    report.merge(verify_freeness(6, workers));
    report.merge(verify_generators(4, workers));
    report.merge(verify_embeddings(5, workers));
    return report;
}

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {
        "bijection", "counts", "hopf", "twisted", "freeness", "generators", "embeddings", "all"};
    return names;
}

Report run_verify_suite(const std::string& name, int n_max, int workers) {
    if (name == "bijection") return verify_bijection(n_max < 0 ? 6 : n_max, workers);
    if (name == "counts") return verify_counts(n_max < 0 ? 6 : n_max, workers);
    if (name == "hopf") return verify_hopf(n_max < 0 ? 4 : n_max, workers);
    if (name == "twisted") return verify_twisted(n_max < 0 ? 5 : n_max, workers);
    if (name == "freeness") return verify_freeness(n_max < 0 ? 6 : n_max, workers);
    if (name == "generators") return verify_generators(n_max < 0 ? 4 : n_max, workers);
    if (name == "embeddings") return verify_embeddings(n_max < 0 ? 5 : n_max, workers);
    if (name == "all") return verify_all(workers);
    throw std::invalid_argument("unknown verification suite '" + name + "'");
}

} // namespace tdesc
