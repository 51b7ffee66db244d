#include "operad_forge/trees.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace operad_forge {

namespace {

// Validates a preorder arity word and returns one past the end of the
// subtree starting at `pos`.
size_t subtree_end(const std::vector<int>& code, size_t pos) {
    if (pos >= code.size()) throw std::invalid_argument("truncated tree code");
    int k = code[pos];
    if (k == 0) return pos + 1;
    if (k < 2) throw std::invalid_argument("internal vertex of arity < 2");
    size_t p = pos + 1;
    for (int c = 0; c < k; ++c) p = subtree_end(code, p);
    return p;
}

}  // namespace

PlanarTree::PlanarTree(std::vector<int> code) : code_(std::move(code)) {
    if (subtree_end(code_, 0) != code_.size())
        throw std::invalid_argument("trailing data in tree code");
}

PlanarTree PlanarTree::corolla(int arity) {
    if (arity < 2) throw std::invalid_argument("corolla arity must be >= 2");
    std::vector<int> c(arity + 1, 0);
    c[0] = arity;
    return PlanarTree(std::move(c));
}

int PlanarTree::leaf_count() const {
    int n = 0;
    for (int k : code_)
        if (k == 0) ++n;
    return n;
}

int PlanarTree::vertex_count() const {
    int n = 0;
    for (int k : code_)
        if (k != 0) ++n;
    return n;
}

std::vector<PlanarTree> PlanarTree::children() const {
    std::vector<PlanarTree> out;
    if (is_leaf()) return out;
    size_t p = 1;
    for (int c = 0; c < code_[0]; ++c) {
        size_t e = subtree_end(code_, p);
        out.push_back(PlanarTree(std::vector<int>(code_.begin() + p, code_.begin() + e)));
        p = e;
    }
    return out;
}

PlanarTree PlanarTree::from_children(int arity, const std::vector<PlanarTree>& ch) {
    if (arity != static_cast<int>(ch.size()) || arity < 2)
        throw std::invalid_argument("bad child count");
    std::vector<int> code{arity};
    for (auto& c : ch) code.insert(code.end(), c.code().begin(), c.code().end());
    return PlanarTree(std::move(code));
}

std::map<int, int> PlanarTree::arity_multiset() const {
    std::map<int, int> m;
    for (int k : code_)
        if (k != 0) ++m[k];
    return m;
}

PlanarTree PlanarTree::graft(int i, const PlanarTree& g) const {
    if (i < 1 || i > leaf_count()) throw std::out_of_range("graft leaf index out of range");
    int seen = 0;
    std::vector<int> code;
    code.reserve(code_.size() + g.code_.size() - 1);
    for (int k : code_) {
        if (k == 0 && ++seen == i)
            code.insert(code.end(), g.code_.begin(), g.code_.end());
        else
            code.push_back(k);
    }
    return PlanarTree(std::move(code));
}

std::string PlanarTree::text() const {
    std::string s;
    struct R {
        const std::vector<int>& c;
        size_t pos = 0;
        void go(std::string& out) {
            int k = c[pos++];
            if (k == 0) { out += '.'; return; }
            out += '(';
            for (int i = 0; i < k; ++i) go(out);
            out += ')';
        }
    } r{code_};
    r.go(s);
    return s;
}

PlanarTree PlanarTree::parse(const std::string& s) {
    std::vector<int> code;
    struct P {
        const std::string& s;
        size_t pos = 0;
        std::vector<int>& code;
        void go() {
            if (pos >= s.size()) throw std::invalid_argument("truncated tree text");
            if (s[pos] == '.') { code.push_back(0); ++pos; return; }
            if (s.compare(pos, 3, "\xe2\x88\x99") == 0) { code.push_back(0); pos += 3; return; }
            if (s[pos] != '(') throw std::invalid_argument("expected leaf or '(' at offset " + std::to_string(pos + 1));
            ++pos;
            size_t slot = code.size();
            code.push_back(-1);
            int k = 0;
            while (pos < s.size() && s[pos] != ')') { go(); ++k; }
            if (pos >= s.size()) throw std::invalid_argument("missing ')'");
            ++pos;
            if (k < 2) throw std::invalid_argument("vertex with fewer than two children");
            code[slot] = k;
        }
    } p{s, 0, code};
    p.go();
    if (p.pos != s.size()) throw std::invalid_argument("trailing characters in tree text");
    return PlanarTree(std::move(code));
}

LabeledTree::LabeledTree(PlanarTree s, Permutation l) : shape(std::move(s)), labels(std::move(l)) {
    if (shape.leaf_count() != labels.size())
        throw std::invalid_argument("label count does not match leaf count");
}

LabeledTree LabeledTree::graft(int i, const LabeledTree& g) const {
    int pos = -1;
    for (int p = 1; p <= labels.size(); ++p)
        if (labels(p) == i) { pos = p; break; }
    if (pos < 0) throw std::out_of_range("no leaf with that label");
    int gn = g.leaf_count();
    PlanarTree sh = shape.graft(pos, g.shape);
    std::vector<int> lab;
    lab.reserve(labels.size() + gn - 1);
    for (int p = 1; p <= labels.size(); ++p) {
        int l = labels(p);
        if (p == pos)
            for (int q = 1; q <= gn; ++q) lab.push_back(g.labels(q) + i - 1);
        else
            lab.push_back(l > i ? l + gn - 1 : l);
    }
    return LabeledTree(std::move(sh), Permutation(std::move(lab)));
}

std::vector<PlanarTree> enumerate_trees(int n) {
    if (n < 1) throw std::invalid_argument("tree must have at least one leaf");
    static std::mutex mu;
    static std::map<int, std::vector<PlanarTree>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto hit = cache.find(n);
        if (hit != cache.end()) return hit->second;
    }

    std::vector<PlanarTree> out;
    if (n == 1) {
        out.push_back(PlanarTree::leaf());
    } else {
        for (int k = 2; k <= n; ++k) {
            // compositions of n into k parts >= 1, children enumerated recursively
            struct Rec {
                int k;
                std::vector<int> parts;
                std::vector<PlanarTree> stack;
                std::vector<PlanarTree>& out;
                void comp(int idx, int remaining) {
                    if (idx == k - 1) {
                        parts[idx] = remaining;
                        build(0);
                        return;
                    }
                    for (int v = 1; v <= remaining - (k - 1 - idx); ++v) {
                        parts[idx] = v;
                        comp(idx + 1, remaining - v);
                    }
                }
                void build(int idx) {
                    if (idx == k) {
                        out.push_back(PlanarTree::from_children(k, stack));
                        return;
                    }
                    for (auto& t : enumerate_trees(parts[idx])) {
                        stack.push_back(t);
                        build(idx + 1);
                        stack.pop_back();
                    }
                }
            } rec{k, std::vector<int>(k), {}, out};
            rec.comp(0, n);
        }
        std::sort(out.begin(), out.end());
    }
    std::lock_guard<std::mutex> lock(mu);
    cache[n] = out;
    return out;
}

Int schroeder(int n) {
    if (n < 1) throw std::invalid_argument("schroeder(n) needs n >= 1");
    // super-Catalan recurrence: (m+1) a(m) = (6m-3) a(m-1) - (m-2) a(m-2)
    // with a(0) = a(1) = 1 and s(n) = a(n-1).
    std::vector<Int> a{1, 1};
    for (int m = 2; m < n; ++m) {
        Int t = Int(6 * m - 3) * a[m - 1] - Int(m - 2) * a[m - 2];
        a.push_back(t / (m + 1));
    }
    return a[n - 1];
}

Int CorollaMultiset::total_copies() const {
    Int s = 0;
    for (auto& l : lambda) s += l;
    return s;
}

Int CorollaMultiset::leaf_count() const {
    Int s = 1;
    for (size_t i = 0; i < lambda.size(); ++i) s += Int(i + 1) * lambda[i];
    return s;
}

Int count_trees_from_corollas(const CorollaMultiset& c) {
    Int big_lambda = c.total_copies();
    if (big_lambda == 0) throw std::invalid_argument("empty corolla multiset");
    Int t = c.leaf_count();
    int tt = static_cast<int>(t), ll = static_cast<int>(big_lambda);
    Scalar r = Scalar(binomial(tt + ll - 1, ll)) / Scalar(t);
    Int multi = factorial(ll);
    for (auto& l : c.lambda) multi /= factorial(static_cast<int>(l));
    r *= Scalar(multi);
    if (denominator(r) != 1) throw std::logic_error("corolla count is not an integer");
    return numerator(r);
}

Int fuss_catalan(int k, int m) {
    if (k < 2 || m < 1) throw std::invalid_argument("fuss_catalan needs k >= 2, m >= 1");
    CorollaMultiset c;
    c.lambda.assign(k - 1, 0);
    c.lambda[k - 2] = m;
    return count_trees_from_corollas(c);
}

}  // namespace operad_forge
