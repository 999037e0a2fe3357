#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tdesc/errors.hpp"

namespace tdesc {

// The unique order-preserving bijection between two finite sets of
// positive integers of equal cardinality.
class OrderIso {
public:
    OrderIso(std::vector<int> source, std::vector<int> target);

    // S -> [|S|]
    static OrderIso onto_initial(std::vector<int> source);
    // [n] -> {offset+1, ..., offset+n}
    static OrderIso shift_initial(int n, int offset);

    int operator()(int value) const;

    const std::vector<int>& source() const { return source_; }
    const std::vector<int>& target() const { return target_; }

private:
    std::vector<int> source_; // strictly sorted
    std::vector<int> target_; // strictly sorted
};

// An ordered tuple of disjoint non-empty finite sets of positive integers.
// Canonical form: each block stored strictly sorted. The empty tuple is the
// unique composition with empty support.
class SetComposition {
public:
    SetComposition() = default;
    explicit SetComposition(std::vector<std::vector<int>> blocks);

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    size_t length() const { return blocks_.size(); }
    bool empty() const { return blocks_.empty(); }

    std::vector<int> support() const; // sorted union of the blocks
    int degree() const;               // support size
    bool contains(int value) const;
    // true iff support == {1,...,degree()}
    bool has_initial_support() const;
    // index (1-based) of the block containing value; 0 if absent
    int block_of(int value) const;

    // blocks separated by '|', elements by ','; the empty composition is "0"
    std::string str() const;
    static SetComposition parse(const std::string& text);

    friend bool operator==(const SetComposition&, const SetComposition&) = default;

private:
    std::vector<std::vector<int>> blocks_;
};

// word-lexicographic order over the alphabet {,} u N with , < 1 < 2 < ...,
// after comparing support cardinalities
std::strong_ordering order_ll(const SetComposition& p, const SetComposition& q);

inline bool operator<(const SetComposition& p, const SetComposition& q) {
    return order_ll(p, q) == std::strong_ordering::less;
}

// (P_1 n A, ..., P_k n A) with empty intersections deleted; requires A c support(P)
SetComposition restrict(const SetComposition& p, const std::vector<int>& subset);

// relabel through the order iso support(P) -> [degree(P)]
SetComposition standardize(const SetComposition& p);

// apply an order iso elementwise; requires support(P) == iso.source()
SetComposition relabel(const SetComposition& p, const OrderIso& iso);

// interleaved-intersection (composition/Tits) product; requires equal supports
SetComposition internal_product(const SetComposition& p, const SetComposition& q);

// block concatenation; requires disjoint supports
SetComposition concat_disjoint(const SetComposition& p, const SetComposition& q);

// no proper block prefix unions to a proper initial segment [m];
// requires initial support
bool is_reduced(const SetComposition& p);

// the unique finest factorization into reduced standardized factors,
// splitting at every prefix whose union is an initial segment
std::vector<SetComposition> factor_reduced(const SetComposition& p);

// all set compositions of [n], sorted by order_ll
std::vector<SetComposition> enumerate_set_compositions(int n);

} // namespace tdesc
