#include "tdesc/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tdesc {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size(), false);
    for (int v : word_) {
        if (v < 1 || v > static_cast<int>(word_.size()) || seen[static_cast<size_t>(v - 1)])
            throw std::invalid_argument("Permutation: word is not a rearrangement of 1..n");
        seen[static_cast<size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

int Permutation::operator()(int i) const {
    if (i < 1 || i > degree()) throw std::invalid_argument("Permutation: index out of range");
    return word_[static_cast<size_t>(i - 1)];
}

Permutation Permutation::inverse() const {
    std::vector<int> w(word_.size());
    for (size_t i = 0; i < word_.size(); ++i)
        w[static_cast<size_t>(word_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(w));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (degree() != other.degree())
        throw std::domain_error("Permutation::compose: degrees differ");
    std::vector<int> w(word_.size());
    for (size_t i = 0; i < word_.size(); ++i)
        w[i] = word_[static_cast<size_t>(other.word_[i] - 1)];
    return Permutation(std::move(w));
}

std::vector<int> Permutation::subsequence_on(const std::vector<int>& values) const {
    std::vector<int> sorted(values);
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> out;
    for (int v : word_)
        if (std::binary_search(sorted.begin(), sorted.end(), v)) out.push_back(v);
    return out;
}

Permutation Permutation::restrict_std(const std::vector<int>& values) const {
    for (int v : values)
        if (v < 1 || v > degree())
            throw std::domain_error("Permutation::restrict_std: values outside [n]");
    std::vector<int> sub = subsequence_on(values);
    OrderIso iso = OrderIso::onto_initial(sub);
    for (int& v : sub) v = iso(v);
    return Permutation(std::move(sub));
}

std::string Permutation::str() const {
    std::ostringstream out;
    out << "p:";
    for (size_t i = 0; i < word_.size(); ++i) {
        if (i) out << ',';
        out << word_[i];
    }
    return out.str();
}

Permutation Permutation::parse(const std::string& text) {
    if (text.rfind("p:", 0) != 0)
        throw ParseError("permutation: literal must start with 'p:'");
    std::string body = text.substr(2);
    if (body.empty()) return Permutation();
    std::vector<int> word;
    size_t start = 0;
    while (true) {
        size_t pos = body.find(',', start);
        std::string piece = body.substr(start, pos - start);
        if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("permutation: expected a positive integer, got '" + piece + "'");
        word.push_back(std::stoi(piece));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    try {
        return Permutation(std::move(word));
    } catch (const std::invalid_argument& e) {
        throw std::domain_error(e.what());
    }
}

SetComposition perm_to_setcomp(const Permutation& w) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(w.word().size());
    for (int v : w.word()) blocks.push_back({v});
    return SetComposition(std::move(blocks));
}

Permutation setcomp_to_perm(const SetComposition& p) {
    if (!p.has_initial_support())
        throw std::domain_error("setcomp_to_perm: support is not an initial segment");
    std::vector<int> word;
    word.reserve(p.length());
    for (const auto& block : p.blocks()) {
        if (block.size() != 1)
            throw std::domain_error("setcomp_to_perm: non-singleton block");
        word.push_back(block[0]);
    }
    return Permutation(std::move(word));
}

std::vector<Permutation> enumerate_permutations(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_permutations: negative degree");
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> all;
    do {
        all.push_back(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return all;
}

} // namespace tdesc
