#include "tdesc/render.hpp"

#include <algorithm>
#include <vector>

namespace tdesc {

namespace {

constexpr int kLeafSpacing = 4;

struct Canvas {
    std::vector<std::string> rows;

    void put(int row, int col, char c) {
        auto r = static_cast<size_t>(row);
        auto k = static_cast<size_t>(col);
        if (rows.size() <= r) rows.resize(r + 1);
        if (rows[r].size() <= k) rows[r].resize(k + 1, ' ');
        rows[r][k] = c;
    }

    void put_text(int row, int col, const std::string& text) {
        for (size_t i = 0; i < text.size(); ++i)
            put(row, col + static_cast<int>(i), text[i]);
    }

    std::string str() const {
        std::string out;
        for (size_t i = 0; i < rows.size(); ++i) {
            std::string line = rows[i];
            while (!line.empty() && line.back() == ' ') line.pop_back();
            out += line;
            out += '\n';
        }
        if (!out.empty()) out.pop_back();
        return out;
    }
};

// Generic node view so one renderer serves both tree types.
template <class Tree>
int node_row(const Tree& t);

template <>
int node_row(const IncreasingTree& t) {
    return t.root_level();
}

template <>
int node_row(const PlanarTree& t) {
    int h = 0;
    for (const auto& c : t.children())
        if (!c.is_leaf()) h = std::max(h, node_row(c));
    return h + 1;
}

template <class Tree>
struct Placed {
    int row = 0;
    int col = 0;
};

template <class Tree>
Placed<Tree> draw(Canvas& canvas, const Tree& t, int& next_leaf_col, int& next_label) {
    if (t.is_leaf()) {
        int col = next_leaf_col;
        next_leaf_col += kLeafSpacing;
        canvas.put(0, col, '*');
        return {0, col};
    }
    int row = node_row(t);
    std::vector<Placed<Tree>> kids;
    std::vector<int> labels; // label of slot j between children j-1 and j
    for (size_t i = 0; i < t.children().size(); ++i) {
        if (i > 0) labels.push_back(++next_label);
        kids.push_back(draw(canvas, t.children()[i], next_leaf_col, next_label));
    }
    // bus
    for (int c = kids.front().col; c <= kids.back().col; ++c) canvas.put(row, c, '-');
    for (const auto& k : kids) canvas.put(row, k.col, '+');
    // labels between attachment points
    for (size_t j = 1; j < kids.size(); ++j) {
        std::string text = std::to_string(labels[j - 1]);
        int mid = (kids[j - 1].col + kids[j].col) / 2;
        canvas.put_text(row, mid - (static_cast<int>(text.size()) - 1) / 2, text);
    }
    // vertical drops from each child down to the bus
    for (const auto& k : kids)
        for (int r = k.row + 1; r < row; ++r) canvas.put(r, k.col, '|');
    int center = (kids.front().col + kids.back().col) / 2;
    return {row, center};
}

template <class Tree>
std::string render(const Tree& t) {
    if (t.is_leaf()) return "*";
    Canvas canvas;
    int next_leaf_col = 0;
    int next_label = 0;
    draw(canvas, t, next_leaf_col, next_label);
    return canvas.str();
}

} // namespace

std::string render_ascii(const PlanarTree& t) { return render(t); }

std::string render_ascii(const IncreasingTree& t) { return render(t); }

} // namespace tdesc
