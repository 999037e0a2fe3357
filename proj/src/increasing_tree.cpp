#include "tdesc/increasing_tree.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tdesc {

IncreasingTree::IncreasingTree(int root_level, std::vector<IncreasingTree> children)
    : level_(root_level), children_(std::move(children)) {
    if (children_.size() < 2)
        throw std::invalid_argument("IncreasingTree: a vertex needs at least two children");
    if (root_level < 1)
        throw std::invalid_argument("IncreasingTree: levels must be positive");
    for (const auto& c : children_)
        if (!c.is_leaf() && c.level_ >= level_)
            throw std::invalid_argument("IncreasingTree: levels must increase toward the root");
}

int IncreasingTree::root_level() const {
    if (is_leaf()) throw std::domain_error("IncreasingTree: the trivial tree has no vertex");
    return level_;
}

int IncreasingTree::branching_count() const {
    if (is_leaf()) return 0;
    int b = static_cast<int>(children_.size()) - 1;
    for (const auto& c : children_) b += c.branching_count();
    return b;
}

std::vector<int> IncreasingTree::level_set() const {
    std::vector<int> out;
    auto rec = [&](auto&& self, const IncreasingTree& node) -> void {
        if (node.is_leaf()) return;
        out.push_back(node.level_);
        for (const auto& c : node.children_) self(self, c);
    };
    rec(rec, *this);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool IncreasingTree::is_standard() const {
    std::vector<int> levels = level_set();
    for (size_t i = 0; i < levels.size(); ++i)
        if (levels[i] != static_cast<int>(i) + 1) return false;
    return true;
}

namespace {

void preorder_levels(const IncreasingTree& t, std::vector<int>& out) {
    if (t.is_leaf()) return;
    out.push_back(t.root_level());
    for (const auto& c : t.children()) preorder_levels(c, out);
}

} // namespace

std::string IncreasingTree::str() const {
    if (is_leaf()) return "*";
    std::ostringstream out;
    out << fgt(*this).str() << '@';
    std::vector<int> levels;
    preorder_levels(*this, levels);
    for (size_t i = 0; i < levels.size(); ++i) {
        if (i) out << ',';
        out << levels[i];
    }
    return out.str();
}

namespace {

IncreasingTree attach_levels(const PlanarTree& shape, const std::vector<int>& levels,
                             size_t& next) {
    if (shape.is_leaf()) return IncreasingTree();
    if (next >= levels.size()) throw std::domain_error("increasing tree: too few levels");
    int level = levels[next++];
    std::vector<IncreasingTree> kids;
    kids.reserve(shape.children().size());
    for (const auto& c : shape.children()) kids.push_back(attach_levels(c, levels, next));
    try {
        return IncreasingTree(level, std::move(kids));
    } catch (const std::invalid_argument& e) {
        throw std::domain_error(e.what());
    }
}

} // namespace

IncreasingTree IncreasingTree::parse(const std::string& text) {
    size_t at = text.find('@');
    if (at == std::string::npos) {
        PlanarTree shape = PlanarTree::parse(text);
        if (!shape.is_leaf())
            throw ParseError("increasing tree: missing '@' level list");
        return IncreasingTree();
    }
    PlanarTree shape = PlanarTree::parse(text.substr(0, at));
    std::string body = text.substr(at + 1);
    std::vector<int> levels;
    size_t start = 0;
    while (true) {
        size_t pos = body.find(',', start);
        std::string piece = body.substr(start, pos - start);
        if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("increasing tree: expected a level, got '" + piece + "'");
        levels.push_back(std::stoi(piece));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    size_t next = 0;
    IncreasingTree t = attach_levels(shape, levels, next);
    if (next != levels.size())
        throw std::domain_error("increasing tree: too many levels");
    return t;
}

bool operator<(const IncreasingTree& a, const IncreasingTree& b) {
    PlanarTree sa = fgt(a), sb = fgt(b);
    if (sa < sb) return true;
    if (sb < sa) return false;
    std::vector<int> la, lb;
    preorder_levels(a, la);
    preorder_levels(b, lb);
    return la < lb;
}

PlanarTree fgt(const IncreasingTree& t) {
    if (t.is_leaf()) return PlanarTree();
    std::vector<PlanarTree> kids;
    kids.reserve(t.children().size());
    for (const auto& c : t.children()) kids.push_back(fgt(c));
    return PlanarTree::wedge(std::move(kids));
}

namespace {

IncreasingTree map_levels(const IncreasingTree& t, const std::map<int, int>& to) {
    if (t.is_leaf()) return IncreasingTree();
    std::vector<IncreasingTree> kids;
    kids.reserve(t.children().size());
    for (const auto& c : t.children()) kids.push_back(map_levels(c, to));
    return IncreasingTree(to.at(t.root_level()), std::move(kids));
}

} // namespace

IncreasingTree standardize_levels(const IncreasingTree& t) {
    std::vector<int> levels = t.level_set();
    std::map<int, int> to;
    for (size_t i = 0; i < levels.size(); ++i) to[levels[i]] = static_cast<int>(i) + 1;
    return map_levels(t, to);
}

IncreasingTree add_rightmost_branching(const IncreasingTree& t, int level) {
    if (level < 1) throw std::invalid_argument("add_rightmost_branching: level must be positive");
    if (t.is_leaf()) return IncreasingTree(level, {IncreasingTree(), IncreasingTree()});
    int root = t.root_level();
    if (level > root) // new root with the old tree on the left
        return IncreasingTree(level, {t, IncreasingTree()});
    std::vector<IncreasingTree> kids = t.children();
    if (level == root) {
        kids.push_back(IncreasingTree());
    } else {
        // descend along the rightmost path; splits an edge or the rightmost leaf
        kids.back() = add_rightmost_branching(kids.back(), level);
    }
    return IncreasingTree(root, std::move(kids));
}

IncreasingTree to_increasing_tree(const SetComposition& p) {
    IncreasingTree t;
    for (int v : p.support()) t = add_rightmost_branching(t, p.block_of(v));
    return t;
}

std::vector<int> branching_levels(const IncreasingTree& t) {
    // same traversal as natural_labels: B(T_0), slot 1, B(T_1), ...
    std::vector<int> out;
    auto rec = [&](auto&& self, const IncreasingTree& node) -> void {
        if (node.is_leaf()) return;
        for (size_t i = 0; i < node.children().size(); ++i) {
            if (i > 0) out.push_back(node.root_level());
            self(self, node.children()[i]);
        }
    };
    rec(rec, t);
    return out;
}

SetComposition to_set_composition(const IncreasingTree& t) {
    if (!t.is_standard())
        throw std::domain_error("to_set_composition: levels are not standard");
    std::vector<int> levels = branching_levels(t);
    int k = levels.empty() ? 0 : *std::max_element(levels.begin(), levels.end());
    std::vector<std::vector<int>> blocks(static_cast<size_t>(k));
    for (size_t i = 0; i < levels.size(); ++i)
        blocks[static_cast<size_t>(levels[i] - 1)].push_back(static_cast<int>(i) + 1);
    return SetComposition(std::move(blocks));
}

IncreasingTree contract(const IncreasingTree& t, const std::vector<int>& labels) {
    SetComposition p = to_set_composition(t);
    return to_increasing_tree(standardize(restrict(p, labels)));
}

IncreasingTree inc(const PlanarTree& t) {
    if (t.is_leaf()) return IncreasingTree();
    std::vector<IncreasingTree> kids;
    kids.reserve(t.children().size());
    int offset = 0;
    auto shift = [](const IncreasingTree& node, int by, auto&& self) -> IncreasingTree {
        if (node.is_leaf()) return node;
        std::vector<IncreasingTree> out;
        out.reserve(node.children().size());
        for (const auto& c : node.children()) out.push_back(self(c, by, self));
        return IncreasingTree(node.root_level() + by, std::move(out));
    };
    for (const auto& c : t.children()) {
        IncreasingTree sub = inc(c);
        int span = static_cast<int>(sub.level_set().size());
        kids.push_back(shift(sub, offset, shift));
        offset += span;
    }
    return IncreasingTree(offset + 1, std::move(kids));
}

namespace {

struct BranchingInfo {
    std::vector<int> vertex; // child-index path of the branching's vertex
    int level = 0;
};

std::vector<BranchingInfo> branching_info(const IncreasingTree& t) {
    std::vector<BranchingInfo> out;
    std::vector<int> path;
    auto rec = [&](auto&& self, const IncreasingTree& node) -> void {
        if (node.is_leaf()) return;
        for (size_t i = 0; i < node.children().size(); ++i) {
            if (i > 0) out.push_back({path, node.root_level()});
            path.push_back(static_cast<int>(i));
            self(self, node.children()[i]);
            path.pop_back();
        }
    };
    rec(rec, t);
    return out;
}

bool is_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() > b.size()) return false;
    return std::equal(a.begin(), a.end(), b.begin());
}

} // namespace

bool is_left_increasing(const IncreasingTree& t) {
    if (!t.is_standard())
        throw std::domain_error("is_left_increasing: levels are not standard");
    std::vector<BranchingInfo> info = branching_info(t);
    for (size_t i = 0; i < info.size(); ++i) {
        for (size_t j = i + 1; j < info.size(); ++j) {
            // vertices share a leaf-to-root path iff one is an ancestor of the
            // other (or they coincide), i.e. one address prefixes the other
            if (is_prefix(info[i].vertex, info[j].vertex) ||
                is_prefix(info[j].vertex, info[i].vertex))
                continue;
            if (!(info[i].level < info[j].level)) return false;
        }
    }
    return true;
}

IncreasingTree restricted_product_tree(const IncreasingTree& t1, const IncreasingTree& t2) {
    if (t2.is_leaf()) return t1;
    int span = static_cast<int>(t1.level_set().size());
    auto rec = [&](auto&& self, const IncreasingTree& node) -> IncreasingTree {
        if (node.is_leaf()) return node;
        std::vector<IncreasingTree> kids;
        kids.reserve(node.children().size());
        for (const auto& c : node.children()) kids.push_back(self(self, c));
        return IncreasingTree(node.root_level() + span, std::move(kids));
    };
    IncreasingTree shifted = rec(rec, t2);
    // graft t1 onto the leftmost leaf of the shifted tree
    auto graft = [&](auto&& self, const IncreasingTree& node) -> IncreasingTree {
        if (node.is_leaf()) return t1;
        std::vector<IncreasingTree> kids = node.children();
        kids[0] = self(self, kids[0]);
        return IncreasingTree(node.root_level(), std::move(kids));
    };
    return graft(graft, shifted);
}

std::vector<IncreasingTree> enumerate_increasing_trees(int n) {
    std::vector<IncreasingTree> out;
    for (const PlanarTree& shape : enumerate_trees(n)) {
        if (shape.is_leaf()) {
            out.push_back(IncreasingTree());
            continue;
        }
        // assign levels in pre-order, children strictly below their parent,
        // keeping only surjective (standard) assignments
        int vertices = 0;
        auto count = [&](auto&& self, const PlanarTree& node) -> void {
            if (node.is_leaf()) return;
            ++vertices;
            for (const auto& c : node.children()) self(self, c);
        };
        count(count, shape);
        std::vector<int> levels;
        // pre-order list of (parent index in pre-order) to know the bound
        std::vector<int> parent;
        {
            int idx = -1;
            auto walk = [&](auto&& self, const PlanarTree& node, int up) -> void {
                if (node.is_leaf()) return;
                int me = ++idx;
                parent.push_back(up);
                for (const auto& c : node.children()) self(self, c, me);
            };
            walk(walk, shape, -1);
        }
        std::vector<int> assignment(static_cast<size_t>(vertices));
        auto emit = [&]() {
            std::vector<int> sorted(assignment);
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            for (size_t i = 0; i < sorted.size(); ++i)
                if (sorted[i] != static_cast<int>(i) + 1) return;
            size_t next = 0;
            std::vector<int> pre(assignment);
            auto build = [&](auto&& self, const PlanarTree& node) -> IncreasingTree {
                if (node.is_leaf()) return IncreasingTree();
                int level = pre[next++];
                std::vector<IncreasingTree> kids;
                for (const auto& c : node.children()) kids.push_back(self(self, c));
                return IncreasingTree(level, std::move(kids));
            };
            out.push_back(build(build, shape));
        };
        auto rec = [&](auto&& self, int v) -> void {
            if (v == vertices) {
                emit();
                return;
            }
            int bound = parent[static_cast<size_t>(v)] < 0
                            ? vertices
                            : assignment[static_cast<size_t>(parent[static_cast<size_t>(v)])] - 1;
            for (int level = 1; level <= bound; ++level) {
                assignment[static_cast<size_t>(v)] = level;
                self(self, v + 1);
            }
        };
        rec(rec, 0);
    }
    return out;
}

} // namespace tdesc
