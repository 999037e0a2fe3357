#pragma once

#include <string>
#include <vector>

#include "tdesc/set_composition.hpp"

namespace tdesc {

// A permutation of [n] in one-line notation (w(1),...,w(n)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);

    const std::vector<int>& word() const { return word_; }
    int degree() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const;

    Permutation inverse() const;
    // (this o other)(i) = this(other(i)); degrees must agree
    Permutation compose(const Permutation& other) const;

    // subsequence of the word on values in S (no relabelling)
    std::vector<int> subsequence_on(const std::vector<int>& values) const;
    // subsequence on values in S, relabelled through S -> [|S|]; requires S c [n]
    Permutation restrict_std(const std::vector<int>& values) const;

    // literal "p:3,5,2,4,1"; the empty permutation is "p:"
    std::string str() const;
    static Permutation parse(const std::string& text);

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend bool operator<(const Permutation& a, const Permutation& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.word_ < b.word_;
    }

private:
    std::vector<int> word_;
};

// (w(1)),...,(w(n)) as singleton blocks
SetComposition perm_to_setcomp(const Permutation& w);

// inverse of perm_to_setcomp; requires all blocks singletons and initial support
Permutation setcomp_to_perm(const SetComposition& p);

// all n! permutations of [n], in lexicographic word order
std::vector<Permutation> enumerate_permutations(int n);

} // namespace tdesc
