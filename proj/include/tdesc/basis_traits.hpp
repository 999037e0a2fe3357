#pragma once

#include "tdesc/increasing_tree.hpp"
#include "tdesc/linear.hpp"
#include "tdesc/permutation.hpp"
#include "tdesc/planar_tree.hpp"
#include "tdesc/set_composition.hpp"

namespace tdesc {

template <>
struct BasisTraits<SetComposition> {
    static const char* kind() { return "set_composition"; }
    static int degree(const SetComposition& p) { return p.degree(); }
    static std::string literal(const SetComposition& p) { return p.str(); }
    static SetComposition parse(const std::string& text) { return SetComposition::parse(text); }
};

template <>
struct BasisTraits<Permutation> {
    static const char* kind() { return "permutation"; }
    static int degree(const Permutation& w) { return w.degree(); }
    static std::string literal(const Permutation& w) { return w.str(); }
    static Permutation parse(const std::string& text) { return Permutation::parse(text); }
};

template <>
struct BasisTraits<PlanarTree> {
    static const char* kind() { return "planar_tree"; }
    static int degree(const PlanarTree& t) { return t.branching_count(); }
    static std::string literal(const PlanarTree& t) { return t.str(); }
    static PlanarTree parse(const std::string& text) { return PlanarTree::parse(text); }
};

template <>
struct BasisTraits<IncreasingTree> {
    static const char* kind() { return "increasing_tree"; }
    static int degree(const IncreasingTree& t) { return t.branching_count(); }
    static std::string literal(const IncreasingTree& t) { return t.str(); }
    static IncreasingTree parse(const std::string& text) { return IncreasingTree::parse(text); }
};

} // namespace tdesc
