#pragma once

#include <map>
#include <stdexcept>

#include "operad_forge/rational.hpp"

namespace operad_forge {

/// A finite rational combination of canonically ordered basis keys, all of
/// the same arity. Keys with coefficient zero are never stored.
template <class Key>
struct Element {
    int arity = 0;
    std::map<Key, Scalar> terms;

    Element() = default;
    explicit Element(int n) : arity(n) {}
    Element(Key k, Scalar c) : arity(k.arity()) {
        if (c != 0) terms.emplace(std::move(k), std::move(c));
    }

    bool is_zero() const { return terms.empty(); }
    size_t size() const { return terms.size(); }

    void add_term(const Key& k, const Scalar& c) {
        if (c == 0) return;
        if (terms.empty() && arity == 0) arity = k.arity();
        if (k.arity() != arity) throw std::invalid_argument("mixed arities in element");
        auto it = terms.find(k);
        if (it == terms.end()) {
            terms.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    Element& operator+=(const Element& o) {
        if (!o.is_zero() && !is_zero() && arity != o.arity)
            throw std::invalid_argument("arity mismatch in sum");
        if (is_zero()) arity = o.arity;
        for (auto& [k, c] : o.terms) add_term(k, c);
        return *this;
    }
    Element& operator-=(const Element& o) { return *this += o * Scalar(-1); }
    Element& operator*=(const Scalar& s) {
        if (s == 0) {
            terms.clear();
            return *this;
        }
        for (auto& [k, c] : terms) c *= s;
        return *this;
    }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const Scalar& s) { return a *= s; }
    friend Element operator*(const Scalar& s, Element a) { return a *= s; }
    friend bool operator==(const Element& a, const Element& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.arity == b.arity && a.terms == b.terms;
    }

    /// Zero unless the element is homogeneous; the common degree otherwise.
    template <class DegFn>
    std::pair<bool, int> homogeneous_degree(DegFn deg) const {
        bool first = true;
        int d = 0;
        for (auto& [k, c] : terms) {
            int kd = deg(k);
            if (first) { d = kd; first = false; }
            else if (kd != d) return {false, 0};
        }
        return {true, d};
    }
};

}  // namespace operad_forge
