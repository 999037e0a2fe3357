#pragma once

#include <string>
#include <vector>

#include "tdesc/planar_tree.hpp"
#include "tdesc/set_composition.hpp"

namespace tdesc {

// A planar rooted tree with a level on every vertex, strictly increasing
// along each leaf-to-root path (the root carries the maximum level).
// Level sets need not be contiguous; "standard" means the image is [k].
class IncreasingTree {
public:
    IncreasingTree() = default; // trivial tree
    IncreasingTree(int root_level, std::vector<IncreasingTree> children);

    bool is_leaf() const { return children_.empty(); }
    int root_level() const;
    const std::vector<IncreasingTree>& children() const { return children_; }

    int branching_count() const;
    // distinct levels, ascending
    std::vector<int> level_set() const;
    bool is_standard() const;

    // literal: shape "@" levels in vertex pre-order, e.g. "(*(**))@2,1";
    // the trivial tree is "*"
    std::string str() const;
    static IncreasingTree parse(const std::string& text);

    friend bool operator==(const IncreasingTree&, const IncreasingTree&) = default;

private:
    int level_ = 0;                        // meaningful only when not a leaf
    std::vector<IncreasingTree> children_; // empty = leaf
};

// shape first (planar-tree order), then pre-order level words
bool operator<(const IncreasingTree& a, const IncreasingTree& b);

// forget the levels
PlanarTree fgt(const IncreasingTree& t);

// relabel levels through the order iso onto [k]
IncreasingTree standardize_levels(const IncreasingTree& t);

// the unique increasing tree with one more branching, rightmost, at `level`
IncreasingTree add_rightmost_branching(const IncreasingTree& t, int level);

// block index per element read as a level: the bijection's inverse direction.
// Works for any finite support; labels are the support elements in order.
IncreasingTree to_increasing_tree(const SetComposition& p);

// i-th block = natural labels of the branchings at level i;
// requires standard levels
SetComposition to_set_composition(const IncreasingTree& t);

// levels of the branchings in natural order (level of the branching's vertex)
std::vector<int> branching_levels(const IncreasingTree& t);

// the increasing tree of restrict(to_set_composition(t), A), standardized;
// A is a set of natural labels
IncreasingTree contract(const IncreasingTree& t, const std::vector<int>& labels);

// the left increasing tree over a shape: subtrees levelled left to right in
// ascending disjoint ranges, root on top; a section of fgt
IncreasingTree inc(const PlanarTree& t);

// Lemma-style characterization of the image of inc: every branching strictly
// left of another one whose vertex shares no leaf-to-root path with it must
// have the smaller level
bool is_left_increasing(const IncreasingTree& t);

// grafting product: t1 keeps its levels, t2 is shifted above them
IncreasingTree restricted_product_tree(const IncreasingTree& t1, const IncreasingTree& t2);

// all standard increasing trees with n branchings (independent of the
// set-composition enumeration: level functions are assigned per shape)
std::vector<IncreasingTree> enumerate_increasing_trees(int n);

} // namespace tdesc
