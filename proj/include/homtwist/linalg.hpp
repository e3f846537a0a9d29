#pragma once

#include <optional>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace homtwist {

using Vec = std::vector<Rational>;

inline Vec basis_vec(int dim, int i) {
    Vec v(dim, Rational(0));
    v[i] = Rational(1);
    return v;
}

inline bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rational(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Vec apply(const Vec& v) const {
        if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("Matrix::apply: size mismatch");
        Vec out(rows_, Rational(0));
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                if (!is_zero(at(r, c)) && !is_zero(v[c])) out[r] += at(r, c) * v[c];
        return out;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("Matrix::operator*: shape mismatch");
        Matrix out(rows_, o.cols_);
        for (int r = 0; r < rows_; ++r)
            for (int k = 0; k < cols_; ++k) {
                const Rational& x = at(r, k);
                if (is_zero(x)) continue;
                for (int c = 0; c < o.cols_; ++c)
                    if (!is_zero(o.at(k, c))) out.at(r, c) += x * o.at(k, c);
            }
        return out;
    }

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

enum class SolveStatus { unique, no_solution, non_unique };

struct LinearSolution {
    SolveStatus status;
    Vec x;  // populated only when status == unique
};

namespace detail {

// Clears denominators rowwise and runs fraction-free (Bareiss) forward
// elimination on the augmented system. Returns echelon data shared by the
// solver and the nullspace routine.
struct Echelon {
    std::vector<std::vector<BigInt>> m;  // rows of the reduced augmented matrix
    std::vector<int> pivot_col;          // pivot column per pivot row
    int rank = 0;
    bool consistent = true;
};

inline Echelon bareiss(const Matrix& A, const Vec* b) {
    const int rows = A.rows(), cols = A.cols();
    const int width = cols + (b ? 1 : 0);
    std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(width));
    for (int r = 0; r < rows; ++r) {
        BigInt scale = 1;
        for (int c = 0; c < cols; ++c) scale = boost::multiprecision::lcm(scale, denominator_of(A.at(r, c)));
        if (b) scale = boost::multiprecision::lcm(scale, denominator_of((*b)[r]));
        for (int c = 0; c < cols; ++c) {
            Rational q = A.at(r, c) * scale;
            m[r][c] = numerator_of(q);
        }
        if (b) m[r][cols] = numerator_of((*b)[r] * scale);
    }

    Echelon e;
    BigInt prev = 1;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int piv = -1;
        for (int r = row; r < rows; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[row], m[piv]);
        for (int r = row + 1; r < rows; ++r) {
            for (int c = col + 1; c < width; ++c)
                m[r][c] = (m[row][col] * m[r][c] - m[r][col] * m[row][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[row][col];
        e.pivot_col.push_back(col);
        ++row;
    }
    e.rank = row;
    if (b) {
        for (int r = e.rank; r < rows; ++r)
            if (m[r][cols] != 0) e.consistent = false;
    }
    e.m = std::move(m);
    return e;
}

}  // namespace detail

// Exact solve of M x = b by fraction-free elimination. Inconsistent systems
// and systems with a nontrivial kernel are reported explicitly.
inline LinearSolution solve_linear(const Matrix& M, const Vec& b) {
    if (static_cast<int>(b.size()) != M.rows()) throw DimensionMismatch("solve_linear: rhs size mismatch");
    auto e = detail::bareiss(M, &b);
    if (!e.consistent) return {SolveStatus::no_solution, {}};
    if (e.rank < M.cols()) return {SolveStatus::non_unique, {}};
    const int cols = M.cols();
    Vec x(cols, Rational(0));
    for (int r = e.rank - 1; r >= 0; --r) {
        const int pc = e.pivot_col[r];
        Rational acc(e.m[r][cols]);
        for (int c = pc + 1; c < cols; ++c)
            if (e.m[r][c] != 0) acc -= Rational(e.m[r][c]) * x[c];
        x[pc] = acc / Rational(e.m[r][pc]);
    }
    return {SolveStatus::unique, std::move(x)};
}

// Basis of the kernel of M, one Vec per free column.
inline std::vector<Vec> nullspace(const Matrix& M) {
    auto e = detail::bareiss(M, nullptr);
    const int cols = M.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int pc : e.pivot_col) is_pivot[pc] = true;
    std::vector<Vec> basis;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        Vec v(cols, Rational(0));
        v[fc] = Rational(1);
        for (int r = e.rank - 1; r >= 0; --r) {
            const int pc = e.pivot_col[r];
            Rational acc(0);
            for (int c = pc + 1; c < cols; ++c)
                if (e.m[r][c] != 0 && !is_zero(v[c])) acc -= Rational(e.m[r][c]) * v[c];
            v[pc] = acc / Rational(e.m[r][pc]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::optional<Matrix> inverse(const Matrix& M) {
    if (M.rows() != M.cols()) return std::nullopt;
    const int n = M.rows();
    // Gauss-Jordan on [M | I]
    std::vector<Vec> a(n, Vec(2 * n, Rational(0)));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) a[r][c] = M.at(r, c);
        a[r][n + r] = Rational(1);
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!is_zero(a[r][c])) { piv = r; break; }
        if (piv < 0) return std::nullopt;
        std::swap(a[c], a[piv]);
        const Rational p = a[c][c];
        for (int k = c; k < 2 * n; ++k)
            if (!is_zero(a[c][k])) a[c][k] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == c || is_zero(a[r][c])) continue;
            const Rational f = a[r][c];
            for (int k = c; k < 2 * n; ++k)
                if (!is_zero(a[c][k])) a[r][k] -= f * a[c][k];
        }
    }
    Matrix inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = a[r][n + c];
    return inv;
}

}  // namespace homtwist
