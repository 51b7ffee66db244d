#include "operad_forge/lie.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "operad_forge/linalg.hpp"

namespace operad_forge {

BracketWord BracketWord::label(int l) {
    if (l < 1) throw std::invalid_argument("labels are positive");
    BracketWord w;
    w.kind_ = Kind::Label;
    w.index_ = l;
    return w;
}

BracketWord BracketWord::delta(int k) {
    if (k < 1) throw std::invalid_argument("delta index must be >= 1");
    BracketWord w;
    w.kind_ = Kind::Delta;
    w.index_ = k;
    return w;
}

BracketWord BracketWord::derived(std::vector<int> word, int l) {
    if (word.empty()) return label(l);
    BracketWord w;
    w.kind_ = Kind::Derived;
    w.index_ = l;
    w.word_ = std::move(word);
    return w;
}

BracketWord BracketWord::tletter(int k, std::vector<int> labels) {
    BracketWord w;
    w.kind_ = Kind::TLetter;
    w.index_ = k;
    w.word_ = std::move(labels);
    return w;
}

BracketWord BracketWord::bracket(BracketWord a, BracketWord b) {
    BracketWord w;
    w.kind_ = Kind::Bracket;
    w.left_ = std::make_shared<const BracketWord>(std::move(a));
    w.right_ = std::make_shared<const BracketWord>(std::move(b));
    return w;
}

BracketWord BracketWord::left_fold(const std::vector<BracketWord>& xs) {
    if (xs.empty()) throw std::invalid_argument("left_fold of empty sequence");
    BracketWord acc = xs[0];
    for (size_t i = 1; i < xs.size(); ++i) acc = bracket(acc, xs[i]);
    return acc;
}

BracketWord BracketWord::left_fold_labels(const std::vector<int>& labels) {
    std::vector<BracketWord> xs;
    xs.reserve(labels.size());
    for (int l : labels) xs.push_back(label(l));
    return left_fold(xs);
}

int BracketWord::degree() const {
    switch (kind_) {
        case Kind::Label: return 0;
        case Kind::Delta: return 1;
        case Kind::Derived: return static_cast<int>(word_.size());
        case Kind::TLetter: return 1;
        case Kind::Bracket: return left_->degree() + right_->degree();
    }
    return 0;
}

int BracketWord::leaf_count() const {
    if (kind_ == Kind::Bracket) return left_->leaf_count() + right_->leaf_count();
    return 1;
}

void BracketWord::collect_labels(std::vector<int>& out) const {
    switch (kind_) {
        case Kind::Label: out.push_back(index_); break;
        case Kind::Derived: out.push_back(index_); break;
        case Kind::TLetter:
            for (int l : word_) out.push_back(l);
            break;
        case Kind::Delta: break;
        case Kind::Bracket:
            left_->collect_labels(out);
            right_->collect_labels(out);
            break;
    }
}

int BracketWord::weight() const {
    switch (kind_) {
        case Kind::Label: return 0;
        case Kind::Delta: return index_ + 1;
        case Kind::Derived: {
            int s = 0;
            for (int k : word_) s += k;
            return s;
        }
        case Kind::TLetter: return index_ + 1 - static_cast<int>(word_.size());
        case Kind::Bracket: return left_->weight() + right_->weight() - 1;
    }
    return 0;
}

BracketWord BracketWord::adjoint_embed() const {
    switch (kind_) {
        case Kind::Label:
        case Kind::Delta:
        case Kind::TLetter: return *this;
        case Kind::Derived: {
            BracketWord acc = label(index_);
            for (auto it = word_.rbegin(); it != word_.rend(); ++it)
                acc = bracket(delta(*it), acc);
            return acc;
        }
        case Kind::Bracket: return bracket(left_->adjoint_embed(), right_->adjoint_embed());
    }
    return *this;
}

BracketWord BracketWord::expand_tletters() const {
    switch (kind_) {
        case Kind::Label:
        case Kind::Delta:
        case Kind::Derived: return *this;
        case Kind::TLetter: {
            BracketWord acc = delta(index_);
            for (int l : word_) acc = bracket(acc, label(l));
            return acc;
        }
        case Kind::Bracket: return bracket(left_->expand_tletters(), right_->expand_tletters());
    }
    return *this;
}

std::string BracketWord::text() const {
    switch (kind_) {
        case Kind::Label: return std::to_string(index_);
        case Kind::Delta: return "D" + std::to_string(index_);
        case Kind::Derived: {
            std::string s;
            for (size_t i = 0; i < word_.size(); ++i) {
                if (i) s += '.';
                s += 'd';
                s += std::to_string(word_[i]);
            }
            return s + "(" + std::to_string(index_) + ")";
        }
        case Kind::TLetter: {
            std::string s = "{D" + std::to_string(index_);
            for (int l : word_) s += "," + std::to_string(l);
            return s + "}";
        }
        case Kind::Bracket: return "{" + left_->text() + "," + right_->text() + "}";
    }
    return {};
}

namespace {

struct WordParser {
    const std::string& s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("bracket parse error at offset " +
                                    std::to_string(pos + 1) + ": " + msg);
    }
    int number() {
        size_t start = pos;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return std::stoi(s.substr(start, pos - start));
    }
    BracketWord atom() {
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '{') {
            ++pos;
            std::vector<BracketWord> parts{atom()};
            while (pos < s.size() && s[pos] == ',') {
                ++pos;
                parts.push_back(atom());
            }
            if (pos >= s.size() || s[pos] != '}') fail("expected '}'");
            ++pos;
            if (parts.size() < 2) fail("bracket needs at least two entries");
            // {a,b,c,...} reads as the left-normed fold
            return BracketWord::left_fold(parts);
        }
        if (c == 'D') {
            ++pos;
            return BracketWord::delta(number());
        }
        if (c == 'd') {
            std::vector<int> letters;
            while (pos < s.size() && s[pos] == 'd') {
                ++pos;
                letters.push_back(number());
                if (pos < s.size() && s[pos] == '.') ++pos;
            }
            if (pos >= s.size() || s[pos] != '(') fail("expected '(' after derivation word");
            ++pos;
            int l = number();
            if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
            ++pos;
            return BracketWord::derived(std::move(letters), l);
        }
        if (isdigit(static_cast<unsigned char>(c))) return BracketWord::label(number());
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

BracketWord BracketWord::parse(const std::string& s) {
    WordParser p{s};
    BracketWord w = p.atom();
    if (p.pos != s.size()) p.fail("trailing characters");
    return w;
}

bool BracketWord::operator<(const BracketWord& o) const {
    if (kind_ != o.kind_) return kind_ < o.kind_;
    if (index_ != o.index_) return index_ < o.index_;
    if (word_ != o.word_) return word_ < o.word_;
    if (kind_ != Kind::Bracket) return false;
    if (*left_ < *o.left_) return true;
    if (*o.left_ < *left_) return false;
    return *right_ < *o.right_;
}

bool BracketWord::operator==(const BracketWord& o) const {
    return !(*this < o) && !(o < *this);
}

namespace {

std::string leaf_encoding(const BracketWord& w) {
    switch (w.kind()) {
        case BracketWord::Kind::Label: return "l" + std::to_string(w.index());
        case BracketWord::Kind::Delta: return "D" + std::to_string(w.index());
        default: return w.text();
    }
}

void expand_into(const BracketWord& w, std::map<AssocWord, Scalar>& out, const Scalar& coeff) {
    if (w.kind() != BracketWord::Kind::Bracket) {
        AssocWord a{leaf_encoding(w)};
        auto [it, fresh] = out.try_emplace(std::move(a), coeff);
        if (!fresh && (it->second += coeff) == 0) out.erase(it);
        return;
    }
    std::map<AssocWord, Scalar> la, ra;
    expand_into(w.left(), la, 1);
    expand_into(w.right(), ra, 1);
    int sg = (w.left().degree() * w.right().degree()) % 2 ? -1 : 1;
    auto emit = [&out](const AssocWord& x, const AssocWord& y, const Scalar& c) {
        AssocWord xy;
        xy.reserve(x.size() + y.size());
        xy.insert(xy.end(), x.begin(), x.end());
        xy.insert(xy.end(), y.begin(), y.end());
        auto [it, fresh] = out.try_emplace(std::move(xy), c);
        if (!fresh && (it->second += c) == 0) out.erase(it);
    };
    for (auto& [x, cx] : la)
        for (auto& [y, cy] : ra) {
            emit(x, y, coeff * cx * cy);
            emit(y, x, -Scalar(sg) * coeff * cx * cy);
        }
}

}  // namespace

std::map<AssocWord, Scalar> assoc_expand(const BracketWord& w) {
    std::map<AssocWord, Scalar> out;
    expand_into(w, out, 1);
    return out;
}

std::map<AssocWord, Scalar> assoc_expand(const BracketCombo& c) {
    std::map<AssocWord, Scalar> out;
    for (auto& [w, coeff] : c) expand_into(w, out, coeff);
    return out;
}

BracketWord LieKey::to_word() const {
    BracketWord acc = BracketWord::label(seq.back());
    for (int i = static_cast<int>(seq.size()) - 2; i >= 0; --i)
        acc = BracketWord::bracket(BracketWord::label(seq[i]), acc);
    return acc;
}

std::vector<LieKey> LieOperad::basis(int n) const {
    if (n < 1) throw std::invalid_argument("basis arity must be >= 1");
    if (n == 1) return {LieKey{{1}}};
    std::vector<LieKey> out;
    for (auto& sigma : all_permutations(n - 1)) {
        std::vector<int> seq = sigma.images();
        seq.push_back(n);
        out.push_back(LieKey{std::move(seq)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// label-only expansion into the dense space of label sequences,
// indexed by lexicographic rank among permutations of the label set
int lex_rank(const std::vector<int>& seq, const std::vector<int>& sorted) {
    int n = static_cast<int>(seq.size());
    std::vector<char> used(n, 0);
    long long rank = 0, f = 1;
    for (int i = 2; i < n; ++i) f *= i;  // (n-1)!
    // f starts as (n-1)! and divides down
    long long fact = f;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = 0; j < n; ++j) {
            if (used[j]) continue;
            if (sorted[j] == seq[i]) break;
            ++smaller;
        }
        int pos = 0;
        for (int j = 0; j < n; ++j)
            if (!used[j] && sorted[j] == seq[i]) { pos = j; break; }
        used[pos] = 1;
        rank += smaller * fact;
        if (n - 1 - i > 0) fact /= (n - 1 - i);
    }
    return static_cast<int>(rank);
}

// expand a label-linear bracket word; returns leaf sequences with signs
void label_expand(const BracketWord& w, std::vector<std::pair<std::vector<int>, int>>& out) {
    if (w.kind() == BracketWord::Kind::Label) {
        out.push_back({{w.index()}, 1});
        return;
    }
    if (w.kind() != BracketWord::Kind::Bracket)
        throw std::invalid_argument("normalize expects a label-linear bracket word");
    std::vector<std::pair<std::vector<int>, int>> la, ra;
    label_expand(w.left(), la);
    label_expand(w.right(), ra);
    for (auto& [x, cx] : la)
        for (auto& [y, cy] : ra) {
            std::vector<int> xy = x;
            xy.insert(xy.end(), y.begin(), y.end());
            out.push_back({std::move(xy), cx * cy});
            std::vector<int> yx = y;
            yx.insert(yx.end(), x.begin(), x.end());
            out.push_back({std::move(yx), -cx * cy});
        }
}

// Per-arity solver mapping associative expansions back to right-normed
// coordinates. Built once, then read-only.
struct LieSolver {
    int n;
    std::vector<LieKey> basis;
    std::vector<std::vector<Scalar>> inv;  // inverse of the pivot square
    std::vector<int> pivot_seqs;           // sequence ranks chosen as pivots
    std::vector<std::map<int, Scalar>> basis_expansions;  // per key: seq rank -> coeff

    explicit LieSolver(int arity) : n(arity) {
        basis = LieOperad().basis(n);
        int r = static_cast<int>(basis.size());
        std::vector<int> sorted(n);
        for (int i = 0; i < n; ++i) sorted[i] = i + 1;

        basis_expansions.resize(r);
        for (int b = 0; b < r; ++b) {
            std::vector<std::pair<std::vector<int>, int>> terms;
            label_expand(basis[b].to_word(), terms);
            for (auto& [seq, sg] : terms) {
                auto& m = basis_expansions[b];
                int idx = lex_rank(seq, sorted);
                auto [it, fresh] = m.try_emplace(idx, sg);
                if (!fresh && (it->second += sg) == 0) m.erase(it);
            }
        }

        // greedy pivot selection by exact elimination on the transpose
        std::vector<std::map<int, Scalar>> work(r);
        for (int b = 0; b < r; ++b) work[b] = basis_expansions[b];
        std::vector<char> row_used(r, 0);
        for (int step = 0; step < r; ++step) {
            // find the smallest sequence rank present in any unused row
            int best_col = -1, best_row = -1;
            for (int b = 0; b < r; ++b) {
                if (row_used[b] || work[b].empty()) continue;
                int c = work[b].begin()->first;
                if (best_col < 0 || c < best_col) { best_col = c; best_row = b; }
            }
            if (best_row < 0) throw std::logic_error("right-normed basis is rank deficient");
            pivot_seqs.push_back(best_col);
            row_used[best_row] = 1;
            Scalar pv = work[best_row].at(best_col);
            for (int b = 0; b < r; ++b) {
                if (row_used[b]) continue;
                auto it = work[b].find(best_col);
                if (it == work[b].end()) continue;
                Scalar f = it->second / pv;
                for (auto& [c, v] : work[best_row]) {
                    auto jt = work[b].find(c);
                    if (jt == work[b].end()) {
                        work[b][c] = -f * v;
                    } else {
                        jt->second -= f * v;
                        if (jt->second == 0) work[b].erase(jt);
                    }
                }
            }
        }
        std::sort(pivot_seqs.begin(), pivot_seqs.end());

        // invert the pivot square M[b][j] = coeff of pivot_seqs[j] in basis b
        std::vector<std::vector<Scalar>> m(r, std::vector<Scalar>(2 * r, 0));
        for (int b = 0; b < r; ++b) {
            for (int j = 0; j < r; ++j) {
                auto it = basis_expansions[b].find(pivot_seqs[j]);
                m[b][j] = it == basis_expansions[b].end() ? Scalar(0) : it->second;
            }
            m[b][r + b] = 1;
        }
        for (int col = 0; col < r; ++col) {
            int sel = col;
            while (sel < r && m[sel][col] == 0) ++sel;
            if (sel == r) throw std::logic_error("pivot square is singular");
            std::swap(m[col], m[sel]);
            Scalar pv = m[col][col];
            for (int j = 0; j < 2 * r; ++j) m[col][j] /= pv;
            for (int b = 0; b < r; ++b) {
                if (b == col || m[b][col] == 0) continue;
                Scalar f = m[b][col];
                for (int j = 0; j < 2 * r; ++j) m[b][j] -= f * m[col][j];
            }
        }
        inv.assign(r, std::vector<Scalar>(r));
        for (int b = 0; b < r; ++b)
            for (int j = 0; j < r; ++j) inv[b][j] = m[b][r + j];
    }
};

const LieSolver& lie_solver(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<LieSolver>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::make_unique<LieSolver>(n)).first;
    return *it->second;
}

}  // namespace

LieOperad::Elt LieOperad::normalize(const BracketWord& w) const {
    std::vector<int> labels;
    w.collect_labels(labels);
    int n = static_cast<int>(labels.size());
    {
        std::vector<int> sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < n; ++i)
            if (sorted[i] != i + 1)
                throw std::invalid_argument("normalize expects each label 1..n exactly once");
    }
    if (n == 1) return Elt(LieKey{{1}}, 1);

    const LieSolver& solver = lie_solver(n);
    std::vector<int> sorted(n);
    for (int i = 0; i < n; ++i) sorted[i] = i + 1;

    std::vector<std::pair<std::vector<int>, int>> terms;
    label_expand(w, terms);
    std::map<int, Scalar> e;
    for (auto& [seq, sg] : terms) {
        int idx = lex_rank(seq, sorted);
        auto [it, fresh] = e.try_emplace(idx, sg);
        if (!fresh && (it->second += sg) == 0) e.erase(it);
    }

    int r = static_cast<int>(solver.basis.size());
    std::vector<Scalar> rhs(r, 0);
    for (int j = 0; j < r; ++j) {
        auto it = e.find(solver.pivot_seqs[j]);
        if (it != e.end()) rhs[j] = it->second;
    }
    Elt out(n);
    std::vector<Scalar> x(r, 0);
    for (int b = 0; b < r; ++b) {
        Scalar acc = 0;
        for (int j = 0; j < r; ++j)
            if (rhs[j] != 0 && solver.inv[j][b] != 0) acc += solver.inv[j][b] * rhs[j];
        x[b] = acc;
        if (acc != 0) out.add_term(solver.basis[b], acc);
    }
    // consistency: the expansion must be reproduced on all sequences
    std::map<int, Scalar> check;
    for (int b = 0; b < r; ++b) {
        if (x[b] == 0) continue;
        for (auto& [c, v] : solver.basis_expansions[b]) {
            auto [it, fresh] = check.try_emplace(c, x[b] * v);
            if (!fresh && (it->second += x[b] * v) == 0) check.erase(it);
        }
    }
    if (check != e) throw std::logic_error("expansion is not in the Lie span");
    return out;
}

LieOperad::Elt LieOperad::normalize(const BracketCombo& c) const {
    Elt out;
    for (auto& [w, coeff] : c) out += normalize(w) * coeff;
    return out;
}

namespace {

// substitute q's word at the leaf labeled i of p's word, with the standard
// operadic relabeling
BracketWord substitute(const BracketWord& p, int i, const BracketWord& q, int qn) {
    switch (p.kind()) {
        case BracketWord::Kind::Label: {
            int l = p.index();
            if (l == i) {
                // shift q's labels into the block starting at i
                struct Sh {
                    int off;
                    BracketWord go(const BracketWord& w) const {
                        if (w.kind() == BracketWord::Kind::Label)
                            return BracketWord::label(w.index() + off);
                        if (w.kind() == BracketWord::Kind::Bracket)
                            return BracketWord::bracket(go(w.left()), go(w.right()));
                        throw std::invalid_argument("composition expects label-only words");
                    }
                } sh{i - 1};
                return sh.go(q);
            }
            return BracketWord::label(l > i ? l + qn - 1 : l);
        }
        case BracketWord::Kind::Bracket:
            return BracketWord::bracket(substitute(p.left(), i, q, qn),
                                        substitute(p.right(), i, q, qn));
        default:
            throw std::invalid_argument("composition expects label-only words");
    }
}

}  // namespace

LieOperad::Elt LieOperad::compose_keys(const LieKey& p, int i, const LieKey& q) const {
    if (i < 1 || i > p.arity()) throw std::out_of_range("composition slot out of range");
    return normalize(substitute(p.to_word(), i, q.to_word(), q.arity()));
}

LieOperad::Elt LieOperad::compose(const Elt& p, int i, const Elt& q) const {
    Elt out(p.arity + q.arity - 1);
    for (auto& [pk, pc] : p.terms)
        for (auto& [qk, qc] : q.terms) out += compose_keys(pk, i, qk) * (pc * qc);
    return out;
}

LieOperad::Elt LieOperad::act_key(const Permutation& sigma, const LieKey& k) const {
    if (sigma.size() != k.arity()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> seq = k.seq;
    for (int& l : seq) l = sigma(l);
    // relabeled word is generally not right-normed; renormalize
    return normalize(LieKey{seq}.to_word());
}

LieOperad::Elt LieOperad::act(const Permutation& sigma, const Elt& e) const {
    Elt out(e.arity);
    for (auto& [k, c] : e.terms) out += act_key(sigma, k) * c;
    return out;
}

Int LieOperad::lie_dim(int n) {
    if (n < 1) throw std::invalid_argument("lie_dim needs n >= 1");
    return factorial(n - 1);
}

int LieOperad::expansion_rank(int n) {
    const LieSolver& solver = lie_solver(n);
    int rows = static_cast<int>(solver.basis.size());
    SparseMatrix m(rows, static_cast<int>(factorial(n)));
    for (int b = 0; b < rows; ++b)
        for (auto& [c, v] : solver.basis_expansions[b]) m.set(b, c, v);
    return m.rank();
}

namespace {

bool is_pure_label(const BracketWord& w) {
    if (w.kind() == BracketWord::Kind::Label) return true;
    if (w.kind() == BracketWord::Kind::Bracket)
        return is_pure_label(w.left()) && is_pure_label(w.right());
    return false;
}

void combo_add(BracketCombo& c, const BracketWord& w, const Scalar& v) {
    auto [it, fresh] = c.try_emplace(w, v);
    if (!fresh && (it->second += v) == 0) c.erase(it);
}

// {a, b} with a a normal T-monomial and b a normal pure-label monomial:
// absorb b's labels into a's T-letters via the Jacobi identity.
BracketCombo absorb(const BracketWord& a, const BracketWord& b);

BracketCombo absorb_label(const BracketWord& a, int l) {
    BracketCombo out;
    if (a.kind() == BracketWord::Kind::TLetter) {
        std::vector<int> labels = a.word();
        labels.push_back(l);
        combo_add(out, BracketWord::tletter(a.index(), std::move(labels)), 1);
        return out;
    }
    // {{x,y},l} = {{x,l},y} + {x,{y,l}}   (l has degree zero)
    for (auto& [xl, c] : absorb_label(a.left(), l))
        combo_add(out, BracketWord::bracket(xl, a.right()), c);
    for (auto& [yl, c] : absorb_label(a.right(), l))
        combo_add(out, BracketWord::bracket(a.left(), yl), c);
    return out;
}

BracketCombo absorb(const BracketWord& a, const BracketWord& b) {
    if (b.kind() == BracketWord::Kind::Label) return absorb_label(a, b.index());
    // {a,{b1,b2}} = {{a,b1},b2} - {{a,b2},b1}  for pure-label b1, b2
    BracketCombo out;
    for (auto& [ab1, c] : absorb(a, b.left()))
        for (auto& [t, c2] : absorb(ab1, b.right())) combo_add(out, t, c * c2);
    for (auto& [ab2, c] : absorb(a, b.right()))
        for (auto& [t, c2] : absorb(ab2, b.left())) combo_add(out, t, -c * c2);
    return out;
}

// rewrite w into a combination of pure monomials (leaves all TLetters or
// all labels)
BracketCombo normal_monomials(const BracketWord& w) {
    BracketCombo out;
    switch (w.kind()) {
        case BracketWord::Kind::Label: combo_add(out, w, 1); return out;
        case BracketWord::Kind::Delta: combo_add(out, BracketWord::tletter(w.index(), {}), 1); return out;
        case BracketWord::Kind::TLetter: combo_add(out, w, 1); return out;
        case BracketWord::Kind::Derived:
            throw std::invalid_argument("eliminate expects delta leaves; apply adjoint_embed first");
        case BracketWord::Kind::Bracket: break;
    }
    BracketCombo la = normal_monomials(w.left());
    BracketCombo ra = normal_monomials(w.right());
    for (auto& [x, cx] : la) {
        for (auto& [y, cy] : ra) {
            Scalar c = cx * cy;
            bool xn = is_pure_label(x), yn = is_pure_label(y);
            if (xn == yn) {
                combo_add(out, BracketWord::bracket(x, y), c);
            } else if (!xn && yn) {
                for (auto& [t, c2] : absorb(x, y)) combo_add(out, t, c * c2);
            } else {
                // {n, t} = -{t, n}; the label side has degree zero
                for (auto& [t, c2] : absorb(y, x)) combo_add(out, t, -c * c2);
            }
        }
    }
    return out;
}

}  // namespace

Decomposition eliminate(const BracketWord& w) {
    Decomposition d;
    for (auto& [m, c] : normal_monomials(w)) {
        if (is_pure_label(m))
            combo_add(d.n_part, m, c);
        else
            combo_add(d.t_part, m, c);
    }
    return d;
}

Decomposition eliminate(const BracketCombo& c) {
    Decomposition d;
    for (auto& [w, coeff] : c) {
        Decomposition piece = eliminate(w);
        for (auto& [m, v] : piece.t_part) combo_add(d.t_part, m, v * coeff);
        for (auto& [m, v] : piece.n_part) combo_add(d.n_part, m, v * coeff);
    }
    return d;
}

}  // namespace operad_forge
