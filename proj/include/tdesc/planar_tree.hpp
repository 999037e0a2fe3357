#pragma once

#include <string>
#include <vector>

#include "tdesc/errors.hpp"

namespace tdesc {

// A planar rooted tree: either the trivial tree (a single leaf, no vertex)
// or a wedge of at least two subtrees joined at a new root vertex.
class PlanarTree {
public:
    PlanarTree() = default; // trivial tree
    static PlanarTree wedge(std::vector<PlanarTree> children);

    bool is_leaf() const { return children_.empty(); }
    const std::vector<PlanarTree>& children() const { return children_; }

    // number of branchings: sum over vertices of (arity - 1)
    int branching_count() const;
    int leaf_count() const;
    bool is_binary() const; // every vertex has exactly 2 children

    // literal: leaf "*", wedge "(" children ")", e.g. "(*(**))"
    std::string str() const;
    static PlanarTree parse(const std::string& text);

    friend bool operator==(const PlanarTree&, const PlanarTree&) = default;

private:
    std::vector<PlanarTree> children_; // empty = leaf
};

// branching count first, then recursively arity and children
bool operator<(const PlanarTree& a, const PlanarTree& b);

// A branching of a tree: the slot between two adjacent children of a vertex.
// `vertex` is the child-index path from the root; `slot` is 1-based.
struct Branching {
    std::vector<int> vertex;
    int slot = 0;
};

// the branchings in natural (left-to-right) order; the 1-based position in
// the returned list is the natural label
std::vector<Branching> natural_labels(const PlanarTree& t);

// substitute t1 for the leftmost leaf of t2
PlanarTree graft_left(const PlanarTree& t1, const PlanarTree& t2);

// all planar rooted trees with n branchings, sorted
std::vector<PlanarTree> enumerate_trees(int n);

} // namespace tdesc
