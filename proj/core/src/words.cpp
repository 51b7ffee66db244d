#include "operad_forge/words.hpp"

#include <algorithm>

#include "operad_forge/errors.hpp"
#include "operad_forge/linalg.hpp"

namespace operad_forge {

bool WordTuple::operator<(const WordTuple& o) const {
    if (arity() != o.arity()) return arity() < o.arity();
    if (degree() != o.degree()) return degree() < o.degree();
    size_t lmax = 0, rmax = 0;
    for (auto& w : slots) lmax = std::max(lmax, w.size());
    for (auto& w : o.slots) rmax = std::max(rmax, w.size());
    if (lmax != rmax) return lmax < rmax;
    for (int i = 0; i < arity(); ++i)
        if (slots[i].size() != o.slots[i].size()) return slots[i].size() > o.slots[i].size();
    return slots < o.slots;
}

std::string WordTuple::text() const {
    std::string s;
    for (int i = 0; i < arity(); ++i) {
        if (i) s += '|';
        if (slots[i].empty()) {
            s += '1';
        } else {
            for (size_t j = 0; j < slots[i].size(); ++j) {
                if (j) s += '.';
                s += 'd';
                s += std::to_string(slots[i][j]);
            }
        }
    }
    return s;
}

WordTuple WordTuple::parse(const std::string& s) {
    WordTuple t;
    t.slots.emplace_back();
    size_t pos = 0;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("word tuple parse error at offset " +
                                    std::to_string(pos + 1) + ": " + msg);
    };
    bool slot_done = false;
    while (pos < s.size()) {
        char c = s[pos];
        if (c == '|') {
            if (t.slots.back().empty() && !slot_done) fail("empty slot (write \"1\")");
            t.slots.emplace_back();
            slot_done = false;
            ++pos;
        } else if (c == '1') {
            if (!t.slots.back().empty() || slot_done) fail("unexpected '1'");
            slot_done = true;
            ++pos;
        } else if (c == 'd') {
            if (slot_done) fail("letter after '1'");
            ++pos;
            size_t start = pos;
            while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) fail("expected letter index after 'd'");
            t.slots.back().push_back(std::stoi(s.substr(start, pos - start)));
            if (pos < s.size() && s[pos] == '.') ++pos;
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
    }
    if (t.slots.back().empty() && !slot_done)
        throw std::invalid_argument("word tuple parse error at offset " +
                                    std::to_string(s.size()) + ": trailing empty slot");
    return t;
}

namespace {

// In the Q model the only letter is the square-zero d_0, so any slot word
// of length two or more vanishes.
bool q_dead(const WordTuple& t) {
    for (auto& w : t.slots)
        if (w.size() >= 2) return true;
    return false;
}

}  // namespace

WordOperad::Elt WordOperad::apply_letter(int letter, const WordTuple& t) const {
    Elt out(t.arity());
    int passed = 0;  // total degree of the slots to the left
    for (int j = 0; j < t.arity(); ++j) {
        WordTuple nt = t;
        nt.slots[j].insert(nt.slots[j].begin(), letter);
        if (mode_ == Mode::Q && q_dead(nt)) {
            passed += static_cast<int>(t.slots[j].size());
            continue;
        }
        out.add_term(nt, passed % 2 == 0 ? Scalar(1) : Scalar(-1));
        passed += static_cast<int>(t.slots[j].size());
    }
    return out;
}

WordOperad::Elt WordOperad::compose_keys(const WordTuple& p, int i, const WordTuple& q) const {
    if (i < 1 || i > p.arity()) throw std::out_of_range("composition slot out of range");

    // Koszul sign of moving q past the words of p to the right of slot i.
    int right = 0;
    for (int u = i; u < p.arity(); ++u) right += static_cast<int>(p.slots[u].size());
    Scalar sign = (q.degree() * right) % 2 == 0 ? Scalar(1) : Scalar(-1);

    // Distribute the word of slot i over q, innermost letter first.
    const std::vector<int>& w = p.slots[i - 1];
    Elt body(q.arity());
    body.add_term(q, 1);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        Elt next(q.arity());
        for (auto& [key, coeff] : body.terms) {
            Elt d = apply_letter(*it, key);
            next += d * coeff;
        }
        body = std::move(next);
    }

    // Splice the q block into p's slot list.
    Elt out(p.arity() + q.arity() - 1);
    for (auto& [key, coeff] : body.terms) {
        WordTuple nt;
        nt.slots.reserve(out.arity);
        for (int u = 0; u < i - 1; ++u) nt.slots.push_back(p.slots[u]);
        for (auto& s : key.slots) nt.slots.push_back(s);
        for (int u = i; u < p.arity(); ++u) nt.slots.push_back(p.slots[u]);
        if (mode_ == Mode::Q && q_dead(nt)) continue;
        out.add_term(nt, coeff * sign);
    }
    return out;
}

WordOperad::Elt WordOperad::compose(const Elt& p, int i, const Elt& q) const {
    Elt out(p.arity + q.arity - 1);
    for (auto& [pk, pc] : p.terms)
        for (auto& [qk, qc] : q.terms) out += compose_keys(pk, i, qk) * (pc * qc);
    return out;
}

WordOperad::Elt WordOperad::act_key(const Permutation& sigma, const WordTuple& t) const {
    if (sigma.size() != t.arity()) throw std::invalid_argument("permutation size mismatch");
    WordTuple nt = WordTuple::empty(t.arity());
    long exp = 0;
    for (int u = 1; u <= t.arity(); ++u) {
        for (int v = u + 1; v <= t.arity(); ++v)
            if (sigma(u) > sigma(v)) exp += long(t.slots[u - 1].size()) * t.slots[v - 1].size();
        nt.slots[sigma(u) - 1] = t.slots[u - 1];
    }
    return Elt(nt, exp % 2 == 0 ? Scalar(1) : Scalar(-1));
}

WordOperad::Elt WordOperad::act(const Permutation& sigma, const Elt& e) const {
    Elt out(e.arity);
    for (auto& [k, c] : e.terms) out += act_key(sigma, k) * c;
    return out;
}

WordOperad::Elt WordOperad::differential_key(const WordTuple& t) const {
    if (mode_ != Mode::DInfinity)
        throw std::logic_error("differential is defined on the deformation operad only");
    Elt out(t.arity());
    int slot_sign = 0;
    for (int i = 0; i < t.arity(); ++i) {
        const auto& w = t.slots[i];
        for (size_t k = 0; k < w.size(); ++k) {
            int m = w[k];
            for (int a = 1; a <= m - 1; ++a) {
                int b = m - a;
                WordTuple nt = t;
                nt.slots[i][k] = a;
                nt.slots[i].insert(nt.slots[i].begin() + k + 1, b);
                // overall -1 from [d_0, d_m] = -sum d_a d_b, position sign
                // (-1)^{k} inside the word, slot sign across the tuple
                bool neg = (slot_sign + static_cast<int>(k) + 1) % 2 != 0;
                out.add_term(nt, neg ? Scalar(-1) : Scalar(1));
            }
        }
        slot_sign += static_cast<int>(w.size());
    }
    return out;
}

WordOperad::Elt WordOperad::differential(const Elt& e) const {
    Elt out(e.arity);
    for (auto& [k, c] : e.terms) out += differential_key(k) * c;
    return out;
}

std::vector<WordTuple> basis_D(int n, int a) {
    if (n < 1) throw std::invalid_argument("basis_D needs n >= 1");
    if (n == 1) {
        if (a != 0) return {};
        return {WordTuple::empty(1)};
    }
    if (a < 1 || a > n - 1) return {};
    // tuples of words with total length a whose letter indices sum to n-1
    std::vector<WordTuple> out;
    struct Gen {
        int n;
        std::vector<WordTuple>& out;
        WordTuple cur;
        void slot(int i, int deg_left, int sum_left) {
            if (i == n) {
                if (deg_left == 0 && sum_left == 0) out.push_back(cur);
                return;
            }
            word(i, deg_left, sum_left);
        }
        // either close slot i or extend its word by one more letter
        void word(int i, int deg_left, int sum_left) {
            slot(i + 1, deg_left, sum_left);
            if (deg_left == 0) return;
            for (int l = 1; l <= sum_left - (deg_left - 1); ++l) {
                cur.slots[i].push_back(l);
                word(i, deg_left - 1, sum_left - l);
                cur.slots[i].pop_back();
            }
        }
    } g{n, out, WordTuple::empty(n)};
    g.slot(0, a, n - 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<WordTuple> basis_D(int n) {
    if (n < 1) throw std::invalid_argument("basis_D needs n >= 1");
    if (n == 1) return {WordTuple::empty(1)};
    std::vector<WordTuple> out;
    for (int a = 1; a <= n - 1; ++a) {
        auto part = basis_D(n, a);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<WordTuple> basis_sperm(int n) {
    if (n < 1) throw std::invalid_argument("basis_sperm needs n >= 1");
    std::vector<WordTuple> out;
    for (int hole = 1; hole <= n; ++hole) {
        WordTuple t = WordTuple::empty(n);
        for (int i = 1; i <= n; ++i)
            if (i != hole) t.slots[i - 1].push_back(0);
        out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int LambdaProfile::degree() const {
    Int s = 0;
    for (auto& l : lambda) s += l;
    return s;
}

Int LambdaProfile::weighted_sum() const {
    Int s = 0;
    for (size_t i = 0; i < lambda.size(); ++i) s += Int(i + 1) * lambda[i];
    return s;
}

Int dim_delta(const LambdaProfile& profile, int n) {
    if (profile.weighted_sum() != n - 1)
        throw std::invalid_argument("profile violates the weight constraint for this arity");
    int a = static_cast<int>(profile.degree());
    Int r = binomial(n + a - 1, a) * factorial(a);
    for (auto& l : profile.lambda) r /= factorial(static_cast<int>(l));
    return r;
}

Int dim_formula(int n, int a) {
    if (n < 2 || a < 1 || a > n - 1) throw std::invalid_argument("dim_formula out of range");
    return binomial(n + a - 1, a) * binomial(n - 2, a - 1);
}

std::vector<LambdaProfile> lambda_profiles(int n, int a) {
    std::vector<LambdaProfile> out;
    std::vector<Int> cur(n - 1, 0);
    struct Rec {
        int n, a;
        std::vector<Int>& cur;
        std::vector<LambdaProfile>& out;
        void go(int i, int deg_left, int sum_left) {
            if (i == n - 1) {
                if (deg_left == 0 && sum_left == 0) out.push_back(LambdaProfile{cur});
                return;
            }
            int idx = i + 1;
            for (int c = 0; c <= deg_left && c * idx <= sum_left; ++c) {
                cur[i] = c;
                go(i + 1, deg_left - c, sum_left - c * idx);
            }
            cur[i] = 0;
        }
    } rec{n, a, cur, out};
    rec.go(0, a, n - 1);
    return out;
}

std::vector<int> homology_D(int n, int max_arity) {
    if (n < 2) throw std::invalid_argument("homology_D needs n >= 2");
    if (n > max_arity)
        throw resource_error("homology_D: arity " + std::to_string(n) +
                             " above configured bound " + std::to_string(max_arity));
    WordOperad D(WordOperad::Mode::DInfinity);
    std::vector<std::vector<WordTuple>> bases;
    for (int a = 1; a <= n - 1; ++a) bases.push_back(basis_D(n, a));

    std::vector<int> ranks;  // rank of d : D^a -> D^{a+1}
    for (int a = 1; a <= n - 2; ++a) {
        const auto& dom = bases[a - 1];
        const auto& cod = bases[a];
        std::map<WordTuple, int> index;
        for (size_t i = 0; i < cod.size(); ++i) index[cod[i]] = static_cast<int>(i);
        SparseMatrix m(static_cast<int>(dom.size()), static_cast<int>(cod.size()));
        for (size_t r = 0; r < dom.size(); ++r)
            for (auto& [k, c] : D.differential_key(dom[r]).terms) m.add(static_cast<int>(r), index.at(k), c);
        ranks.push_back(m.rank());
    }

    std::vector<int> h;
    for (int a = 1; a <= n - 1; ++a) {
        int dim = static_cast<int>(bases[a - 1].size());
        int rk_out = a <= n - 2 ? ranks[a - 1] : 0;
        int rk_in = a >= 2 ? ranks[a - 2] : 0;
        h.push_back(dim - rk_out - rk_in);
    }
    return h;
}

}  // namespace operad_forge
