#include "operad_forge/linalg.hpp"

#include <stdexcept>

namespace operad_forge {

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

void SparseMatrix::set(int r, int c, const Scalar& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
    if (v == 0)
        data_[r].erase(c);
    else
        data_[r][c] = v;
}

void SparseMatrix::add(int r, int c, const Scalar& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
    auto it = data_[r].find(c);
    if (it == data_[r].end()) {
        if (v != 0) data_[r][c] = v;
        return;
    }
    it->second += v;
    if (it->second == 0) data_[r].erase(it);
}

Scalar SparseMatrix::get(int r, int c) const {
    auto it = data_[r].find(c);
    return it == data_[r].end() ? Scalar(0) : it->second;
}

void SparseMatrix::set_row(int r, SparseVector v) {
    for (auto& [c, x] : v)
        if (c < 0 || c >= cols_) throw std::out_of_range("row entry out of range");
    data_[r] = std::move(v);
}

long long SparseMatrix::entry_count() const {
    long long n = 0;
    for (auto& r : data_) n += static_cast<long long>(r.size());
    return n;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (auto& [c, v] : data_[r]) t.data_[c][r] = v;
    return t;
}

namespace {

using IntRow = std::map<int, Int>;

// Clear denominators row by row; the rank and the echelon pivot structure
// over Q are unchanged.
std::vector<IntRow> integerize(const std::vector<SparseVector>& rows) {
    std::vector<IntRow> out;
    out.reserve(rows.size());
    for (auto& r : rows) {
        Int l = 1;
        for (auto& [c, v] : r) l = lcm(l, denominator(v));
        IntRow ir;
        for (auto& [c, v] : r) ir[c] = numerator(v) * (l / denominator(v));
        out.push_back(std::move(ir));
    }
    return out;
}

struct Echelon {
    // pivot column -> (row, previous pivot value at elimination time)
    std::vector<IntRow> rows;       // echelon rows, in elimination order
    std::vector<int> pivot_cols;    // pivot column of rows[k]
};

// Fraction-free one-pass Bareiss elimination. Rows are consumed in order;
// pivoting is by column order (leftmost surviving entry), first row wins.
Echelon bareiss(std::vector<IntRow> rows, int cols) {
    Echelon e;
    Int prev_pivot = 1;
    for (int col = 0; col < cols; ++col) {
        int found = -1;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (!rows[r].empty() && rows[r].begin()->first == col) { found = static_cast<int>(r); break; }
        }
        if (found < 0) continue;
        IntRow pivot_row = std::move(rows[found]);
        rows.erase(rows.begin() + found);
        Int pv = pivot_row.begin()->second;
        for (auto& r : rows) {
            auto it = r.find(col);
            if (it == r.end()) {
                // Bareiss still rescales: entry' = entry * pv / prev_pivot
                IntRow nr;
                for (auto& [c, v] : r) {
                    Int t = v * pv;
                    t /= prev_pivot;  // exact by Bareiss' theorem
                    if (t != 0) nr[c] = std::move(t);
                }
                r = std::move(nr);
            } else {
                // entry' = (entry * pv - r[col] * pivot_row[c]) / prev_pivot,
                // merged over the union of both column sets (fill-in included)
                Int rv = it->second;
                IntRow nr;
                auto ir = r.begin();
                auto ip = pivot_row.begin();
                while (ir != r.end() || ip != pivot_row.end()) {
                    int c;
                    Int t;
                    if (ip == pivot_row.end() || (ir != r.end() && ir->first < ip->first)) {
                        c = ir->first;
                        t = ir->second * pv;
                        ++ir;
                    } else if (ir == r.end() || ip->first < ir->first) {
                        c = ip->first;
                        t = -rv * ip->second;
                        ++ip;
                    } else {
                        c = ir->first;
                        t = ir->second * pv - rv * ip->second;
                        ++ir;
                        ++ip;
                    }
                    if (c == col) continue;
                    t /= prev_pivot;
                    if (t != 0) nr[c] = std::move(t);
                }
                r = std::move(nr);
            }
        }
        e.pivot_cols.push_back(col);
        e.rows.push_back(std::move(pivot_row));
        prev_pivot = pv;
    }
    return e;
}

}  // namespace

int SparseMatrix::rank() const {
    return static_cast<int>(bareiss(integerize(data_), cols_).pivot_cols.size());
}

std::vector<SparseVector> SparseMatrix::kernel_basis() const {
    Echelon e = bareiss(integerize(data_), cols_);
    std::vector<char> is_pivot(cols_, 0);
    for (int c : e.pivot_cols) is_pivot[c] = 1;

    std::vector<SparseVector> basis;
    for (int free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        SparseVector v;
        v[free_col] = 1;
        // back-substitute through the echelon rows, last pivot first
        for (int k = static_cast<int>(e.rows.size()) - 1; k >= 0; --k) {
            const IntRow& row = e.rows[k];
            int pc = e.pivot_cols[k];
            Scalar dot = 0;
            for (auto& [c, a] : row) {
                if (c == pc) continue;
                auto it = v.find(c);
                if (it != v.end()) dot += Scalar(a) * it->second;
            }
            if (dot != 0) v[pc] = -dot / Scalar(row.at(pc));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank_mod_p(std::vector<std::vector<uint32_t>>& m, uint32_t p) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t sel = rank;
        while (sel < rows && m[sel][col] % p == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[rank], m[sel]);
        uint64_t pivot = m[rank][col] % p;
        // pivot^{-1} mod p by Fermat
        uint64_t inv = 1, base = pivot, exp = p - 2;
        while (exp) {
            if (exp & 1) inv = inv * base % p;
            base = base * base % p;
            exp >>= 1;
        }
        for (size_t c = col; c < cols; ++c) m[rank][c] = static_cast<uint32_t>(m[rank][c] * inv % p);
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            uint64_t f = m[r][col] % p;
            if (!f) continue;
            uint64_t neg = p - f;
            for (size_t c = col; c < cols; ++c)
                m[r][c] = static_cast<uint32_t>((m[r][c] + neg * m[rank][c]) % p);
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

int exact_rank(const SparseMatrix& m) {
    int bound = std::min(m.rows(), m.cols());
    static const uint32_t primes[] = {65521u, 65519u, 65497u};
    for (uint32_t p : primes) {
        std::vector<std::vector<uint32_t>> dense(m.rows(), std::vector<uint32_t>(m.cols(), 0));
        bool fits = true;
        for (int r = 0; r < m.rows() && fits; ++r) {
            for (auto& [c, v] : m.row(r)) {
                Int num = numerator(v) % p, den = denominator(v) % p;
                if (den == 0) { fits = false; break; }  // denominator divisible by p
                uint64_t nu = static_cast<uint64_t>(num >= 0 ? num : num + p);
                uint64_t de = static_cast<uint64_t>(den);
                uint64_t inv = 1, base = de, exp = p - 2;
                while (exp) {
                    if (exp & 1) inv = inv * base % p;
                    base = base * base % p;
                    exp >>= 1;
                }
                dense[r][c] = static_cast<uint32_t>(nu * inv % p);
            }
        }
        if (!fits) continue;
        if (rank_mod_p(dense, p) == bound) return bound;
    }
    return m.rank();
}

}  // namespace operad_forge
