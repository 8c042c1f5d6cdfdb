#pragma once

// Exact linear algebra over prime fields F_l. Entries are residues in
// [0, l); no floating point anywhere.

#include <algorithm>
#include <optional>
#include <vector>

#include "picurve/errors.hpp"

namespace picurve {

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline int mod_reduce(long long x, int l) {
    long long r = x % l;
    return static_cast<int>(r < 0 ? r + l : r);
}

inline int mod_inverse(int a, int l) {
    a = mod_reduce(a, l);
    if (a == 0) throw validation_error("mod_inverse of 0");
    // extended Euclid
    int t = 0, new_t = 1, r = l, new_r = a;
    while (new_r != 0) {
        int q = r / new_r;
        int tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return mod_reduce(t, l);
}

using FlVector = std::vector<int>;

struct FlMatrix {
    int l = 2;
    int rows = 0;
    int cols = 0;
    std::vector<int> entries;  // row-major

    FlMatrix() = default;
    FlMatrix(int l_, int rows_, int cols_)
        : l(l_), rows(rows_), cols(cols_), entries(static_cast<size_t>(rows_) * cols_, 0) {
        if (!is_prime(l_)) throw validation_error("modulus is not prime");
    }

    static FlMatrix identity(int l, int n) {
        FlMatrix m(l, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static FlMatrix from_rows(int l, const std::vector<FlVector>& rows_in, int cols) {
        FlMatrix m(l, static_cast<int>(rows_in.size()), cols);
        for (size_t i = 0; i < rows_in.size(); ++i) {
            if (static_cast<int>(rows_in[i].size()) != cols)
                throw validation_error("row length mismatch");
            for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = mod_reduce(rows_in[i][j], l);
        }
        return m;
    }

    int& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
    int at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }

    FlVector row(int r) const {
        return FlVector(entries.begin() + static_cast<long>(r) * cols,
                        entries.begin() + static_cast<long>(r + 1) * cols);
    }

    bool operator==(const FlMatrix& o) const {
        return l == o.l && rows == o.rows && cols == o.cols && entries == o.entries;
    }
};

inline FlMatrix mat_mul(const FlMatrix& a, const FlMatrix& b) {
    if (a.l != b.l || a.cols != b.rows) throw validation_error("matrix shape mismatch");
    FlMatrix c(a.l, a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            int aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                c.at(i, j) = mod_reduce(c.at(i, j) + static_cast<long long>(aik) * b.at(k, j), a.l);
        }
    return c;
}

inline FlVector mat_apply(const FlMatrix& m, const FlVector& v) {
    if (static_cast<int>(v.size()) != m.cols) throw validation_error("matrix/vector shape mismatch");
    FlVector out(m.rows, 0);
    for (int i = 0; i < m.rows; ++i) {
        long long acc = 0;
        for (int j = 0; j < m.cols; ++j) acc += static_cast<long long>(m.at(i, j)) * v[j];
        out[i] = mod_reduce(acc, m.l);
    }
    return out;
}

inline FlVector vec_add(const FlVector& a, const FlVector& b, int l) {
    FlVector out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = mod_reduce(a[i] + b[i], l);
    return out;
}

inline FlVector vec_sub(const FlVector& a, const FlVector& b, int l) {
    FlVector out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = mod_reduce(a[i] - b[i], l);
    return out;
}

inline FlVector vec_scale(int c, const FlVector& a, int l) {
    FlVector out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = mod_reduce(static_cast<long long>(c) * a[i], l);
    return out;
}

inline bool vec_is_zero(const FlVector& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

// In-place reduced row echelon form; returns pivot column per nonzero row.
inline std::vector<int> row_reduce(FlMatrix& m) {
    std::vector<int> pivots;
    int lead = 0;
    for (int col = 0; col < m.cols && lead < m.rows; ++col) {
        int pr = -1;
        for (int r = lead; r < m.rows; ++r)
            if (m.at(r, col) != 0) { pr = r; break; }
        if (pr < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(lead, j), m.at(pr, j));
        int inv = mod_inverse(m.at(lead, col), m.l);
        for (int j = 0; j < m.cols; ++j) m.at(lead, j) = mod_reduce(static_cast<long long>(m.at(lead, j)) * inv, m.l);
        for (int r = 0; r < m.rows; ++r) {
            if (r == lead) continue;
            int f = m.at(r, col);
            if (f == 0) continue;
            for (int j = 0; j < m.cols; ++j)
                m.at(r, j) = mod_reduce(m.at(r, j) - static_cast<long long>(f) * m.at(lead, j), m.l);
        }
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

inline int rank(FlMatrix m) {
    return static_cast<int>(row_reduce(m).size());
}

// A subspace of F_l^n held as a reduced-echelon basis (canonical representative).
struct Subspace {
    int l = 2;
    int ambient_dim = 0;
    std::vector<FlVector> basis;   // rref rows, sorted by pivot column
    std::vector<int> pivots;       // pivot column of each basis row

    Subspace() = default;
    Subspace(int l_, int ambient) : l(l_), ambient_dim(ambient) {}

    int dim() const { return static_cast<int>(basis.size()); }

    // Residue of v after eliminating all pivot coordinates.
    FlVector reduce(FlVector v) const {
        for (size_t i = 0; i < basis.size(); ++i) {
            int c = v[pivots[i]];
            if (c == 0) continue;
            for (int j = 0; j < ambient_dim; ++j)
                v[j] = mod_reduce(v[j] - static_cast<long long>(c) * basis[i][j], l);
        }
        return v;
    }

    bool contains(const FlVector& v) const { return vec_is_zero(reduce(v)); }

    // Inserts v if independent; keeps the basis in rref. Returns true if grown.
    bool insert(const FlVector& v) {
        FlVector w = reduce(v);
        int p = -1;
        for (int j = 0; j < ambient_dim; ++j)
            if (w[j] != 0) { p = j; break; }
        if (p < 0) return false;
        int inv = mod_inverse(w[p], l);
        for (int j = 0; j < ambient_dim; ++j) w[j] = mod_reduce(static_cast<long long>(w[j]) * inv, l);
        // eliminate column p from existing rows
        for (auto& row : basis) {
            int c = row[p];
            if (c == 0) continue;
            for (int j = 0; j < ambient_dim; ++j)
                row[j] = mod_reduce(row[j] - static_cast<long long>(c) * w[j], l);
        }
        auto pos = std::lower_bound(pivots.begin(), pivots.end(), p);
        size_t idx = static_cast<size_t>(pos - pivots.begin());
        pivots.insert(pos, p);
        basis.insert(basis.begin() + static_cast<long>(idx), std::move(w));
        return true;
    }

    bool operator==(const Subspace& o) const {
        return l == o.l && ambient_dim == o.ambient_dim && basis == o.basis;
    }
};

inline Subspace subspace_from_rows(int l, int ambient, const std::vector<FlVector>& rows) {
    Subspace s(l, ambient);
    for (const auto& r : rows) s.insert(r);
    return s;
}

// Nullspace of m as a Subspace of F_l^cols.
inline Subspace kernel(FlMatrix m) {
    std::vector<int> piv = row_reduce(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : piv) is_pivot[p] = true;
    Subspace ker(m.l, m.cols);
    for (int j = 0; j < m.cols; ++j) {
        if (is_pivot[j]) continue;
        FlVector v(m.cols, 0);
        v[j] = 1;
        for (size_t r = 0; r < piv.size(); ++r)
            v[piv[r]] = mod_reduce(-m.at(static_cast<int>(r), j), m.l);
        ker.insert(v);
    }
    return ker;
}

inline Subspace row_space(const FlMatrix& m) {
    Subspace s(m.l, m.cols);
    for (int r = 0; r < m.rows; ++r) s.insert(m.row(r));
    return s;
}

// One solution of m x = b, if consistent.
inline std::optional<FlVector> solve(const FlMatrix& m, const FlVector& b) {
    if (static_cast<int>(b.size()) != m.rows) throw validation_error("rhs length mismatch");
    FlMatrix aug(m.l, m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = mod_reduce(b[i], m.l);
    }
    std::vector<int> piv = row_reduce(aug);
    for (size_t r = 0; r < piv.size(); ++r)
        if (piv[r] == m.cols) return std::nullopt;  // inconsistent
    FlVector x(m.cols, 0);
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug.at(static_cast<int>(r), m.cols);
    return x;
}

inline std::optional<FlMatrix> inverse(const FlMatrix& m) {
    if (m.rows != m.cols) throw validation_error("inverse of non-square matrix");
    int n = m.rows;
    FlMatrix aug(m.l, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<int> piv = row_reduce(aug);
    int left_rank = static_cast<int>(std::count_if(piv.begin(), piv.end(), [n](int p) { return p < n; }));
    if (left_rank != n) return std::nullopt;
    FlMatrix inv(m.l, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

}  // namespace picurve
