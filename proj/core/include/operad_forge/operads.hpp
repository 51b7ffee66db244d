#pragma once

#include <utility>

#include "operad_forge/element.hpp"
#include "operad_forge/permutation.hpp"

namespace operad_forge {

/// Chapoton's permutation operad in the marked-point model: Perm(n) has
/// basis e_1..e_n, the word x_1...x_n with the i-th factor marked.
struct PermKey {
    int n = 1;
    int mark = 1;

    int arity() const { return n; }
    auto operator<=>(const PermKey&) const = default;
};

class PermOperad {
public:
    using Key = PermKey;
    using Elt = Element<PermKey>;

    static int key_degree(const Key&) { return 0; }

    Elt unit() const { return Elt(PermKey{1, 1}, 1); }

    std::vector<Key> basis(int n) const {
        std::vector<Key> out;
        for (int i = 1; i <= n; ++i) out.push_back(PermKey{n, i});
        return out;
    }

    Elt compose_keys(const PermKey& p, int i, const PermKey& q) const {
        if (i < 1 || i > p.n) throw std::out_of_range("composition slot out of range");
        int mark;
        if (p.mark < i)
            mark = p.mark;
        else if (p.mark == i)
            mark = i + q.mark - 1;
        else
            mark = p.mark + q.n - 1;
        return Elt(PermKey{p.n + q.n - 1, mark}, 1);
    }

    Elt act_key(const Permutation& sigma, const PermKey& k) const {
        if (sigma.size() != k.n) throw std::invalid_argument("permutation size mismatch");
        return Elt(PermKey{k.n, sigma(k.mark)}, 1);
    }

    Elt compose(const Elt& p, int i, const Elt& q) const {
        Elt out(p.arity + q.arity - 1);
        for (auto& [pk, pc] : p.terms)
            for (auto& [qk, qc] : q.terms) out += compose_keys(pk, i, qk) * (pc * qc);
        return out;
    }
    Elt act(const Permutation& sigma, const Elt& e) const {
        Elt out(e.arity);
        for (auto& [k, c] : e.terms) out += act_key(sigma, k) * c;
        return out;
    }
};

/// Hadamard (arity-wise) tensor product of two operads. Basis keys are
/// pairs; the symmetric action is diagonal; compositions interchange the
/// inner factors with the Koszul sign (-1)^{|q| |p'|} for
/// (p x q) o_i (p' x q').
template <class A, class B>
struct PairKey {
    typename A::Key first;
    typename B::Key second;

    int arity() const { return first.arity(); }
    bool operator<(const PairKey& o) const {
        if (first < o.first) return true;
        if (o.first < first) return false;
        return second < o.second;
    }
    bool operator==(const PairKey& o) const {
        return first == o.first && second == o.second;
    }
};

template <class A, class B>
class HadamardOperad {
public:
    using Key = PairKey<A, B>;
    using Elt = Element<Key>;

    HadamardOperad(A a, B b) : a_(std::move(a)), b_(std::move(b)) {}
    const A& first() const { return a_; }
    const B& second() const { return b_; }

    int key_degree(const Key& k) const {
        return a_.key_degree(k.first) + b_.key_degree(k.second);
    }

    Elt unit() const {
        Elt out(1);
        for (auto& [ak, ac] : a_.unit().terms)
            for (auto& [bk, bc] : b_.unit().terms) out.add_term(Key{ak, bk}, ac * bc);
        return out;
    }

    Elt compose_keys(const Key& p, int i, const Key& q) const {
        auto left = a_.compose_keys(p.first, i, q.first);
        auto right = b_.compose_keys(p.second, i, q.second);
        long s = long(b_.key_degree(p.second)) * a_.key_degree(q.first);
        Scalar sign = s % 2 == 0 ? Scalar(1) : Scalar(-1);
        Elt out(p.arity() + q.arity() - 1);
        for (auto& [ak, ac] : left.terms)
            for (auto& [bk, bc] : right.terms) out.add_term(Key{ak, bk}, sign * ac * bc);
        return out;
    }

    Elt act_key(const Permutation& sigma, const Key& k) const {
        auto left = a_.act_key(sigma, k.first);
        auto right = b_.act_key(sigma, k.second);
        Elt out(k.arity());
        for (auto& [ak, ac] : left.terms)
            for (auto& [bk, bc] : right.terms) out.add_term(Key{ak, bk}, ac * bc);
        return out;
    }

    Elt compose(const Elt& p, int i, const Elt& q) const {
        Elt out(p.arity + q.arity - 1);
        for (auto& [pk, pc] : p.terms)
            for (auto& [qk, qc] : q.terms) out += compose_keys(pk, i, qk) * (pc * qc);
        return out;
    }
    Elt act(const Permutation& sigma, const Elt& e) const {
        Elt out(e.arity);
        for (auto& [k, c] : e.terms) out += act_key(sigma, k) * c;
        return out;
    }

private:
    A a_;
    B b_;
};

/// Operadic suspension: degrees shift by n-1 in arity n, the symmetric
/// action twists by the sign representation, and compositions pick up
/// (-1)^{(m-1)|q| + (i-1)(n-1)}, the structure constants of the
/// endomorphism operad of a shifted line. direction = -1 gives the
/// inverse suspension (same signs, degrees shift down).
template <class P>
struct SuspendedKey {
    typename P::Key inner;

    int arity() const { return inner.arity(); }
    bool operator<(const SuspendedKey& o) const { return inner < o.inner; }
    bool operator==(const SuspendedKey& o) const { return inner == o.inner; }
};

template <class P>
class SuspendedOperad {
public:
    using Key = SuspendedKey<P>;
    using Elt = Element<Key>;

    explicit SuspendedOperad(P p, int direction = +1) : p_(std::move(p)), dir_(direction) {}
    const P& inner() const { return p_; }

    int key_degree(const Key& k) const {
        return p_.key_degree(k.inner) + dir_ * (k.arity() - 1);
    }

    Elt unit() const {
        Elt out(1);
        for (auto& [k, c] : p_.unit().terms) out.add_term(Key{k}, c);
        return out;
    }

    Elt compose_keys(const Key& p, int i, const Key& q) const {
        int m = p.arity(), n = q.arity();
        long s = long(m - 1) * p_.key_degree(q.inner) + long(i - 1) * (n - 1);
        Scalar sign = s % 2 == 0 ? Scalar(1) : Scalar(-1);
        Elt out(m + n - 1);
        for (auto& [k, c] : p_.compose_keys(p.inner, i, q.inner).terms)
            out.add_term(Key{k}, sign * c);
        return out;
    }

    Elt act_key(const Permutation& sigma, const Key& k) const {
        Scalar tw(sigma.sign());
        Elt out(k.arity());
        for (auto& [ik, c] : p_.act_key(sigma, k.inner).terms) out.add_term(Key{ik}, tw * c);
        return out;
    }

    Elt compose(const Elt& p, int i, const Elt& q) const {
        Elt out(p.arity + q.arity - 1);
        for (auto& [pk, pc] : p.terms)
            for (auto& [qk, qc] : q.terms) out += compose_keys(pk, i, qk) * (pc * qc);
        return out;
    }
    Elt act(const Permutation& sigma, const Elt& e) const {
        Elt out(e.arity);
        for (auto& [k, c] : e.terms) out += act_key(sigma, k) * c;
        return out;
    }

private:
    P p_;
    int dir_;
};

template <class P>
SuspendedOperad<P> suspend(P p) { return SuspendedOperad<P>(std::move(p), +1); }
template <class P>
SuspendedOperad<P> desuspend(P p) { return SuspendedOperad<P>(std::move(p), -1); }

}  // namespace operad_forge
