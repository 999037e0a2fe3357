#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "tdesc/rational.hpp"

namespace tdesc {

// Per-basis metadata; specializations live next to each basis type's header.
template <class K>
struct BasisTraits; // { static const char* kind(); static int degree(const K&);
                    //   static std::string literal(const K&); }

// Finitely supported exact-coefficient map from basis keys. Terms iterate in
// the key type's deterministic order; zero coefficients are never stored.
template <class K>
class LinearCombination {
public:
    using Terms = std::map<K, Rational>;

    LinearCombination() = default;

    static LinearCombination basis(const K& key) {
        LinearCombination x;
        x.add(key, Rational(1));
        return x;
    }

    LinearCombination& add(const K& key, const Rational& coeff) {
        if (coeff.is_zero()) return *this;
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
        return *this;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    Rational coeff(const K& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    LinearCombination& operator+=(const LinearCombination& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    LinearCombination& operator-=(const LinearCombination& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    LinearCombination& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }
    friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

private:
    Terms terms_;
};

// Finitely supported map from ordered pairs of basis keys.
template <class K>
class TensorCombination {
public:
    using Key = std::pair<K, K>;
    using Terms = std::map<Key, Rational>;

    TensorCombination() = default;

    static TensorCombination basis(const K& left, const K& right) {
        TensorCombination x;
        x.add(left, right, Rational(1));
        return x;
    }

    TensorCombination& add(const K& left, const K& right, const Rational& coeff) {
        if (coeff.is_zero()) return *this;
        auto [it, inserted] = terms_.try_emplace(Key(left, right), coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
        return *this;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    Rational coeff(const K& left, const K& right) const {
        auto it = terms_.find(Key(left, right));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    TensorCombination& operator+=(const TensorCombination& o) {
        for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
        return *this;
    }
    TensorCombination& operator-=(const TensorCombination& o) {
        for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
        return *this;
    }
    TensorCombination& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    TensorCombination flipped() const {
        TensorCombination out;
        for (const auto& [k, c] : terms_) out.add(k.second, k.first, c);
        return out;
    }

    friend TensorCombination operator+(TensorCombination a, const TensorCombination& b) { return a += b; }
    friend TensorCombination operator-(TensorCombination a, const TensorCombination& b) { return a -= b; }
    friend bool operator==(const TensorCombination&, const TensorCombination&) = default;

private:
    Terms terms_;
};

template <class K>
TensorCombination<K> tensor(const LinearCombination<K>& x, const LinearCombination<K>& y) {
    TensorCombination<K> out;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) out.add(kx, ky, cx * cy);
    return out;
}

// Rule applied degreewise to basis keys; linear extension is lc_apply.
template <class K>
using GradedMap = std::function<LinearCombination<K>(const K&)>;

// bilinear product and coproduct on basis keys
template <class K>
using BasisProduct = std::function<LinearCombination<K>(const K&, const K&)>;
template <class K>
using BasisCoproduct = std::function<TensorCombination<K>(const K&)>;

template <class K>
LinearCombination<K> lc_apply(const GradedMap<K>& f, const LinearCombination<K>& x) {
    LinearCombination<K> out;
    for (const auto& [k, c] : x.terms()) {
        LinearCombination<K> fx = f(k);
        fx *= c;
        out += fx;
    }
    return out;
}

template <class K>
LinearCombination<K> multiply(const BasisProduct<K>& prod, const LinearCombination<K>& x,
                              const LinearCombination<K>& y) {
    LinearCombination<K> out;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            LinearCombination<K> p = prod(kx, ky);
            p *= cx * cy;
            out += p;
        }
    return out;
}

template <class K>
GradedMap<K> identity_map() {
    return [](const K& k) { return LinearCombination<K>::basis(k); };
}

// unit-after-counit: fixes the degree-0 component, kills the rest
template <class K>
GradedMap<K> unit_counit_map() {
    return [](const K& k) {
        if (BasisTraits<K>::degree(k) == 0) return LinearCombination<K>::basis(k);
        return LinearCombination<K>();
    };
}

// (f * g)(x) = product o (f (x) g) o coproduct (x)
template <class K>
GradedMap<K> convolve(const GradedMap<K>& f, const GradedMap<K>& g, const BasisProduct<K>& prod,
                      const BasisCoproduct<K>& coprod) {
    return [f, g, prod, coprod](const K& k) {
        LinearCombination<K> out;
        for (const auto& [pair, c] : coprod(k).terms()) {
            LinearCombination<K> term = multiply(prod, f(pair.first), g(pair.second));
            term *= c;
            out += term;
        }
        return out;
    };
}

// log of the identity in the convolution algebra: on a degree-n key the
// series sum_{k>=1} (-1)^(k-1)/k (id - unit o counit)^(*k) stops at k = n
template <class K>
GradedMap<K> convolution_log_identity(const BasisProduct<K>& prod, const BasisCoproduct<K>& coprod) {
    return [prod, coprod](const K& key) {
        int n = BasisTraits<K>::degree(key);
        GradedMap<K> j = [](const K& k) {
            if (BasisTraits<K>::degree(k) == 0) return LinearCombination<K>();
            return LinearCombination<K>::basis(k);
        };
        LinearCombination<K> out;
        GradedMap<K> power = j;
        for (int k = 1; k <= n; ++k) {
            LinearCombination<K> term = power(key);
            term *= Rational((k % 2 == 1) ? 1 : -1, k);
            out += term;
            if (k < n) power = convolve(j, power, prod, coprod);
        }
        return out;
    };
}

// convolution exponential of a map vanishing in degree 0, truncated by degree
template <class K>
LinearCombination<K> convolution_exp_apply(const GradedMap<K>& f, const BasisProduct<K>& prod,
                                           const BasisCoproduct<K>& coprod, const K& key) {
    int n = BasisTraits<K>::degree(key);
    LinearCombination<K> out = unit_counit_map<K>()(key);
    GradedMap<K> power = f;
    Rational factorial(1);
    for (int k = 1; k <= n; ++k) {
        factorial *= Rational(k);
        LinearCombination<K> term = power(key);
        term *= Rational(1) / factorial;
        out += term;
        if (k < n) power = convolve(f, power, prod, coprod);
    }
    return out;
}

} // namespace tdesc
