#include "tdesc/planar_tree.hpp"

#include <algorithm>

namespace tdesc {

PlanarTree PlanarTree::wedge(std::vector<PlanarTree> children) {
    if (children.size() < 2)
        throw std::invalid_argument("wedge: a vertex needs at least two children");
    PlanarTree t;
    t.children_ = std::move(children);
    return t;
}

int PlanarTree::branching_count() const {
    if (is_leaf()) return 0;
    int b = static_cast<int>(children_.size()) - 1;
    for (const auto& c : children_) b += c.branching_count();
    return b;
}

int PlanarTree::leaf_count() const {
    if (is_leaf()) return 1;
    int n = 0;
    for (const auto& c : children_) n += c.leaf_count();
    return n;
}

bool PlanarTree::is_binary() const {
    if (is_leaf()) return true;
    if (children_.size() != 2) return false;
    return children_[0].is_binary() && children_[1].is_binary();
}

std::string PlanarTree::str() const {
    if (is_leaf()) return "*";
    std::string out = "(";
    for (const auto& c : children_) out += c.str();
    out += ")";
    return out;
}

namespace {

PlanarTree parse_tree(const std::string& text, size_t& pos) {
    if (pos >= text.size()) throw ParseError("tree: unexpected end of literal");
    if (text[pos] == '*') {
        ++pos;
        return PlanarTree();
    }
    if (text[pos] != '(')
        throw ParseError(std::string("tree: unexpected character '") + text[pos] + "'");
    ++pos;
    std::vector<PlanarTree> children;
    while (pos < text.size() && text[pos] != ')')
        children.push_back(parse_tree(text, pos));
    if (pos >= text.size()) throw ParseError("tree: missing ')'");
    ++pos;
    if (children.size() < 2)
        throw std::domain_error("tree: a vertex needs at least two children");
    return PlanarTree::wedge(std::move(children));
}

} // namespace

PlanarTree PlanarTree::parse(const std::string& text) {
    size_t pos = 0;
    PlanarTree t = parse_tree(text, pos);
    if (pos != text.size()) throw ParseError("tree: trailing characters in literal");
    return t;
}

bool operator<(const PlanarTree& a, const PlanarTree& b) {
    int ba = a.branching_count(), bb = b.branching_count();
    if (ba != bb) return ba < bb;
    auto structural_less = [](const PlanarTree& x, const PlanarTree& y, auto&& self) -> int {
        if (x.children().size() != y.children().size())
            return x.children().size() < y.children().size() ? -1 : 1;
        for (size_t i = 0; i < x.children().size(); ++i)
            if (int c = self(x.children()[i], y.children()[i], self)) return c;
        return 0;
    };
    return structural_less(a, b, structural_less) < 0;
}

std::vector<Branching> natural_labels(const PlanarTree& t) {
    // left-to-right order: B(T_0), slot 1, B(T_1), slot 2, ..., slot m, B(T_m)
    std::vector<Branching> out;
    std::vector<int> path;
    auto rec = [&](auto&& self, const PlanarTree& node) -> void {
        if (node.is_leaf()) return;
        const auto& kids = node.children();
        for (size_t i = 0; i < kids.size(); ++i) {
            if (i > 0) out.push_back({path, static_cast<int>(i)});
            path.push_back(static_cast<int>(i));
            self(self, kids[i]);
            path.pop_back();
        }
    };
    rec(rec, t);
    return out;
}

PlanarTree graft_left(const PlanarTree& t1, const PlanarTree& t2) {
    if (t2.is_leaf()) return t1;
    std::vector<PlanarTree> kids = t2.children();
    kids[0] = graft_left(t1, kids[0]);
    return PlanarTree::wedge(std::move(kids));
}

std::vector<PlanarTree> enumerate_trees(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_trees: negative branching count");
    // trees with n branchings have n+1 leaves
    std::vector<std::vector<PlanarTree>> by_leaves(static_cast<size_t>(n) + 2);
    by_leaves[1] = {PlanarTree()};
    for (int leaves = 2; leaves <= n + 1; ++leaves) {
        std::vector<PlanarTree> acc;
        // split the leaves among >= 2 children, then pick each child
        std::vector<PlanarTree> kids;
        auto rec = [&](auto&& self, int remaining) -> void {
            if (remaining == 0) {
                if (kids.size() >= 2) acc.push_back(PlanarTree::wedge(kids));
                return;
            }
            for (int take = 1; take <= remaining; ++take) {
                for (const auto& sub : by_leaves[static_cast<size_t>(take)]) {
                    kids.push_back(sub);
                    self(self, remaining - take);
                    kids.pop_back();
                }
            }
        };
        rec(rec, leaves);
        by_leaves[static_cast<size_t>(leaves)] = std::move(acc);
    }
    std::vector<PlanarTree> out = by_leaves[static_cast<size_t>(n) + 1];
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace tdesc
