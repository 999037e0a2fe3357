#include "tdesc/set_composition.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tdesc {

OrderIso::OrderIso(std::vector<int> source, std::vector<int> target)
    : source_(std::move(source)), target_(std::move(target)) {
    std::sort(source_.begin(), source_.end());
    std::sort(target_.begin(), target_.end());
    if (source_.size() != target_.size())
        throw std::invalid_argument("OrderIso: source and target differ in size");
    auto strictly_sorted = [](const std::vector<int>& v) {
        return std::adjacent_find(v.begin(), v.end(),
                                  [](int a, int b) { return a >= b; }) == v.end();
    };
    if (!strictly_sorted(source_) || !strictly_sorted(target_))
        throw std::invalid_argument("OrderIso: repeated elements");
}

OrderIso OrderIso::onto_initial(std::vector<int> source) {
    std::vector<int> target(source.size());
    for (size_t i = 0; i < target.size(); ++i) target[i] = static_cast<int>(i) + 1;
    return OrderIso(std::move(source), std::move(target));
}

OrderIso OrderIso::shift_initial(int n, int offset) {
    std::vector<int> source(n), target(n);
    for (int i = 0; i < n; ++i) {
        source[i] = i + 1;
        target[i] = offset + i + 1;
    }
    return OrderIso(std::move(source), std::move(target));
}

int OrderIso::operator()(int value) const {
    auto it = std::lower_bound(source_.begin(), source_.end(), value);
    if (it == source_.end() || *it != value)
        throw std::invalid_argument("OrderIso: value outside the source set");
    return target_[static_cast<size_t>(it - source_.begin())];
}

SetComposition::SetComposition(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
    std::set<int> seen;
    for (auto& block : blocks_) {
        if (block.empty())
            throw std::invalid_argument("SetComposition: empty block");
        std::sort(block.begin(), block.end());
        for (int v : block) {
            if (v <= 0)
                throw std::invalid_argument("SetComposition: elements must be positive");
            if (!seen.insert(v).second)
                throw std::invalid_argument("SetComposition: blocks are not disjoint");
        }
        block.erase(std::unique(block.begin(), block.end()), block.end());
    }
}

std::vector<int> SetComposition::support() const {
    std::vector<int> all;
    for (const auto& block : blocks_) all.insert(all.end(), block.begin(), block.end());
    std::sort(all.begin(), all.end());
    return all;
}

int SetComposition::degree() const {
    size_t n = 0;
    for (const auto& block : blocks_) n += block.size();
    return static_cast<int>(n);
}

bool SetComposition::contains(int value) const { return block_of(value) != 0; }

bool SetComposition::has_initial_support() const {
    auto s = support();
    for (size_t i = 0; i < s.size(); ++i)
        if (s[i] != static_cast<int>(i) + 1) return false;
    return true;
}

int SetComposition::block_of(int value) const {
    for (size_t i = 0; i < blocks_.size(); ++i)
        if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), value))
            return static_cast<int>(i) + 1;
    return 0;
}

std::string SetComposition::str() const {
    if (blocks_.empty()) return "0";
    std::ostringstream out;
    for (size_t i = 0; i < blocks_.size(); ++i) {
        if (i) out << '|';
        for (size_t j = 0; j < blocks_[i].size(); ++j) {
            if (j) out << ',';
            out << blocks_[i][j];
        }
    }
    return out.str();
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

int parse_positive_int(const std::string& piece, const char* what) {
    if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(std::string(what) + ": expected a positive integer, got '" + piece + "'");
    long v = std::stol(piece);
    if (v <= 0 || v > 1'000'000)
        throw ParseError(std::string(what) + ": element out of range: '" + piece + "'");
    return static_cast<int>(v);
}

} // namespace

SetComposition SetComposition::parse(const std::string& text) {
    if (text == "0") return SetComposition();
    if (text.empty()) throw ParseError("set composition: empty literal");
    std::vector<std::vector<int>> blocks;
    for (const std::string& block_text : split(text, '|')) {
        std::vector<int> block;
        for (const std::string& piece : split(block_text, ','))
            block.push_back(parse_positive_int(piece, "set composition"));
        blocks.push_back(std::move(block));
    }
    try {
        return SetComposition(std::move(blocks));
    } catch (const std::invalid_argument& e) {
        throw std::domain_error(e.what());
    }
}

std::strong_ordering order_ll(const SetComposition& p, const SetComposition& q) {
    int dp = p.degree(), dq = q.degree();
    if (dp != dq) return dp <=> dq;
    // word over {,} u N, encoded with 0 as the comma so that , < 1 < 2 < ...
    auto word = [](const SetComposition& c) {
        std::vector<int> w;
        for (size_t i = 0; i < c.blocks().size(); ++i) {
            if (i) w.push_back(0);
            w.insert(w.end(), c.blocks()[i].begin(), c.blocks()[i].end());
        }
        return w;
    };
    std::vector<int> wp = word(p), wq = word(q);
    if (wp < wq) return std::strong_ordering::less;
    if (wq < wp) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

SetComposition restrict(const SetComposition& p, const std::vector<int>& subset) {
    for (int v : subset)
        if (!p.contains(v))
            throw std::domain_error("restrict: subset not contained in the support");
    std::vector<int> a(subset);
    std::sort(a.begin(), a.end());
    std::vector<std::vector<int>> out;
    for (const auto& block : p.blocks()) {
        std::vector<int> inter;
        std::set_intersection(block.begin(), block.end(), a.begin(), a.end(),
                              std::back_inserter(inter));
        if (!inter.empty()) out.push_back(std::move(inter));
    }
    return SetComposition(std::move(out));
}

SetComposition relabel(const SetComposition& p, const OrderIso& iso) {
    if (p.support() != iso.source())
        throw std::domain_error("relabel: iso source does not match the support");
    std::vector<std::vector<int>> out;
    out.reserve(p.length());
    for (const auto& block : p.blocks()) {
        std::vector<int> b;
        b.reserve(block.size());
        for (int v : block) b.push_back(iso(v));
        out.push_back(std::move(b));
    }
    return SetComposition(std::move(out));
}

SetComposition standardize(const SetComposition& p) {
    return relabel(p, OrderIso::onto_initial(p.support()));
}

SetComposition internal_product(const SetComposition& p, const SetComposition& q) {
    if (p.support() != q.support())
        throw std::domain_error("internal_product: supports differ");
    std::vector<std::vector<int>> out;
    for (const auto& pb : p.blocks()) {
        for (const auto& qb : q.blocks()) {
            std::vector<int> inter;
            std::set_intersection(pb.begin(), pb.end(), qb.begin(), qb.end(),
                                  std::back_inserter(inter));
            if (!inter.empty()) out.push_back(std::move(inter));
        }
    }
    return SetComposition(std::move(out));
}

SetComposition concat_disjoint(const SetComposition& p, const SetComposition& q) {
    std::vector<std::vector<int>> out = p.blocks();
    out.insert(out.end(), q.blocks().begin(), q.blocks().end());
    try {
        return SetComposition(std::move(out));
    } catch (const std::invalid_argument&) {
        throw std::domain_error("concat_disjoint: overlapping supports");
    }
}

namespace {

// prefix-cut positions: block counts a with P_1 u ... u P_a = [m], m = elements so far
std::vector<size_t> initial_segment_cuts(const SetComposition& p) {
    std::vector<size_t> cuts;
    int count = 0, max_seen = 0;
    for (size_t a = 0; a + 1 < p.blocks().size(); ++a) {
        count += static_cast<int>(p.blocks()[a].size());
        max_seen = std::max(max_seen, p.blocks()[a].back());
        if (max_seen == count) cuts.push_back(a + 1);
    }
    return cuts;
}

} // namespace

bool is_reduced(const SetComposition& p) {
    if (!p.has_initial_support())
        throw std::domain_error("is_reduced: support is not an initial segment");
    return initial_segment_cuts(p).empty();
}

std::vector<SetComposition> factor_reduced(const SetComposition& p) {
    if (!p.has_initial_support())
        throw std::domain_error("factor_reduced: support is not an initial segment");
    std::vector<size_t> cuts = initial_segment_cuts(p);
    cuts.push_back(p.length());
    std::vector<SetComposition> factors;
    size_t start = 0;
    for (size_t cut : cuts) {
        std::vector<std::vector<int>> part(p.blocks().begin() + static_cast<long>(start),
                                           p.blocks().begin() + static_cast<long>(cut));
        if (!part.empty())
            factors.push_back(standardize(SetComposition(std::move(part))));
        start = cut;
    }
    return factors;
}

std::vector<SetComposition> enumerate_set_compositions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_set_compositions: negative degree");
    std::vector<SetComposition> all;
    if (n == 0) {
        all.emplace_back();
        return all;
    }
    // surjections [n] -> [k], one composition each: assign a block index to every
    // element, pruning so that the remaining elements can still fill the empty blocks
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<int>> blocks(static_cast<size_t>(k));
        int unused = k;
        auto rec = [&](auto&& self, int element) -> void {
            if (element > n) {
                all.push_back(SetComposition(blocks));
                return;
            }
            int remaining = n - element + 1;
            for (int b = 0; b < k; ++b) {
                bool was_empty = blocks[static_cast<size_t>(b)].empty();
                if (was_empty && unused > remaining) continue; // cannot become surjective
                if (!was_empty && unused >= remaining) continue;
                blocks[static_cast<size_t>(b)].push_back(element);
                if (was_empty) --unused;
                self(self, element + 1);
                if (was_empty) ++unused;
                blocks[static_cast<size_t>(b)].pop_back();
            }
        };
        rec(rec, 1);
    }
    std::sort(all.begin(), all.end());
    return all;
}

} // namespace tdesc
