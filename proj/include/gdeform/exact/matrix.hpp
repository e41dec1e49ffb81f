#pragma once

// Dense matrices over an exact field and Gauss-Jordan elimination with a
// deterministic pivot rule: leftmost nonzero column, then smallest row index.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdeform/error.hpp"

namespace gdeform {

template <class T>
using Vec = std::vector<T>;

template <class T>
bool is_zero_vector(const Vec<T>& v)
{
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<Vec<T>>& rows, std::size_t cols)
    {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw MathError("Matrix::from_rows: ragged rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_columns(const std::vector<Vec<T>>& cols, std::size_t rows)
    {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw MathError("Matrix::from_columns: ragged columns");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec<T> row(std::size_t i) const { return Vec<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
    Vec<T> col(std::size_t j) const
    {
        Vec<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    std::vector<Vec<T>> row_list() const
    {
        std::vector<Vec<T>> out;
        for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
        return out;
    }
    std::vector<Vec<T>> col_list() const
    {
        std::vector<Vec<T>> out;
        for (std::size_t j = 0; j < cols_; ++j) out.push_back(col(j));
        return out;
    }

    void append_row(const Vec<T>& r)
    {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw MathError("Matrix::append_row: width mismatch");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero_matrix() const
    {
        for (const auto& x : data_)
            if (!is_zero(x)) return false;
        return true;
    }

    Vec<T> apply(const Vec<T>& v) const
    {
        if (v.size() != cols_) throw MathError("Matrix::apply: dimension mismatch");
        Vec<T> out(rows_, T(0));
        for (std::size_t j = 0; j < cols_; ++j) {
            if (is_zero(v[j])) continue;
            for (std::size_t i = 0; i < rows_; ++i) {
                const T& a = (*this)(i, j);
                if (!is_zero(a)) out[i] += a * v[j];
            }
        }
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw MathError("Matrix product: dimension mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (is_zero(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& y = b(k, j);
                    if (!is_zero(y)) c(i, j) += x * y;
                }
            }
        return c;
    }
    friend Matrix operator+(Matrix a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw MathError("Matrix sum: dimension mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw MathError("Matrix difference: dimension mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }
    friend Matrix operator*(const T& s, Matrix a)
    {
        for (auto& x : a.data_) x *= s;
        return a;
    }
    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))>
    {
        using U = decltype(f(std::declval<const T&>()));
        Matrix<U> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

    T trace() const
    {
        T t(0);
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b)
{
    Matrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const T& x = a(i, j);
            if (is_zero(x)) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    if (!is_zero(b(p, q))) k(i * b.rows() + p, j * b.cols() + q) = x * b(p, q);
        }
    return k;
}

/// Result of Gauss-Jordan elimination.
template <class T>
struct Echelon {
    Matrix<T> reduced;                 // RREF, zero rows dropped
    std::vector<std::size_t> pivots;   // pivot column of each row
    std::vector<std::size_t> row_order;  // original row index that supplied each pivot
    std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form.  Pivot rule: leftmost column with a nonzero
/// entry among the unreduced rows, taking the smallest such row index.
template <class T>
Echelon<T> rref(Matrix<T> m)
{
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::size_t> perm(R);
    for (std::size_t i = 0; i < R; ++i) perm[i] = i;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = R;
        std::size_t best = R;
        for (std::size_t i = r; i < R; ++i)
            if (!is_zero(m(i, c)) && perm[i] < best) {
                best = perm[i];
                p = i;
            }
        if (p == R) continue;
        if (p != r) {
            for (std::size_t j = 0; j < C; ++j) std::swap(m(p, j), m(r, j));
            std::swap(perm[p], perm[r]);
        }
        T inv = T(1) / m(r, c);
        for (std::size_t j = c; j < C; ++j)
            if (!is_zero(m(r, j))) m(r, j) *= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            T f = m(i, c);
            for (std::size_t j = c; j < C; ++j)
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Echelon<T> e;
    e.reduced = Matrix<T>(r, C);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < C; ++j) e.reduced(i, j) = m(i, j);
    e.pivots = pivots;
    e.row_order.assign(perm.begin(), perm.begin() + r);
    return e;
}

template <class T>
std::size_t rank(const Matrix<T>& m)
{
    return rref(m).rank();
}

/// Basis of the right kernel {v : M v = 0}, one vector per free column,
/// normalized to 1 in that column.
template <class T>
std::vector<Vec<T>> kernel_basis(const Matrix<T>& m)
{
    auto e = rref(m);
    const std::size_t C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vec<T>> basis;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        Vec<T> v(C, T(0));
        v[f] = T(1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            if (!is_zero(e.reduced(i, f))) v[e.pivots[i]] = -e.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class T>
struct RankKernel {
    std::size_t rank;
    std::vector<Vec<T>> kernel;
};

template <class T>
RankKernel<T> matrix_rank_kernel(const Matrix<T>& m)
{
    auto k = kernel_basis(m);
    return {m.cols() - k.size(), std::move(k)};
}

/// Inverse of a square matrix; throws MathError when singular.
template <class T>
Matrix<T> inverse(const Matrix<T>& m)
{
    const std::size_t n = m.rows();
    if (m.cols() != n) throw MathError("inverse: matrix not square");
    Matrix<T> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = T(1);
    }
    auto e = rref(aug);
    if (e.rank() < n || e.pivots[n - 1] != n - 1) throw MathError("inverse: matrix is singular");
    Matrix<T> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

template <class T>
T determinant(Matrix<T> m)
{
    const std::size_t n = m.rows();
    if (m.cols() != n) throw MathError("determinant: matrix not square");
    T det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = n;
        for (std::size_t i = c; i < n; ++i)
            if (!is_zero(m(i, c))) {
                p = i;
                break;
            }
        if (p == n) return T(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        T inv = T(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c))) continue;
            T f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

/// Incrementally maintained row space in echelon form, keyed by pivot column.
/// Supports membership, reduction and canonical (RREF) basis extraction.
template <class T>
class RowSpace {
public:
    explicit RowSpace(std::size_t width = 0) : width_(width) {}

    std::size_t width() const { return width_; }
    std::size_t dim() const { return rows_.size(); }

    /// Reduce v against the current basis (in place); returns true if v became zero.
    bool reduce(Vec<T>& v) const
    {
        for (const auto& [c, row] : rows_) {
            if (is_zero(v[c])) continue;
            T f = v[c];
            for (std::size_t j = c; j < width_; ++j)
                if (!is_zero(row[j])) v[j] -= f * row[j];
        }
        return is_zero_vector(v);
    }

    bool contains(Vec<T> v) const
    {
        check(v);
        return reduce(v);
    }

    /// Insert v; returns true when the dimension grew.
    bool insert(Vec<T> v)
    {
        check(v);
        if (reduce(v)) return false;
        std::size_t c = 0;
        while (is_zero(v[c])) ++c;
        T inv = T(1) / v[c];
        for (std::size_t j = c; j < width_; ++j)
            if (!is_zero(v[j])) v[j] *= inv;
        rows_.emplace(c, std::move(v));
        return true;
    }

    std::vector<Vec<T>> basis() const
    {
        std::vector<Vec<T>> out;
        for (const auto& [c, row] : rows_) out.push_back(row);
        return out;
    }

    /// Unique reduced row echelon basis of the span.
    std::vector<Vec<T>> canonical_basis() const
    {
        if (rows_.empty()) return {};
        return rref(Matrix<T>::from_rows(basis(), width_)).reduced.row_list();
    }

    std::vector<std::size_t> pivot_columns() const
    {
        std::vector<std::size_t> out;
        for (const auto& [c, row] : rows_) out.push_back(c);
        return out;
    }

private:
    void check(const Vec<T>& v) const
    {
        if (v.size() != width_) throw MathError("RowSpace: vector width mismatch");
    }
    std::size_t width_;
    std::map<std::size_t, Vec<T>> rows_;
};

template <class T>
RowSpace<T> span_of(const std::vector<Vec<T>>& vectors, std::size_t width)
{
    RowSpace<T> s(width);
    for (const auto& v : vectors) s.insert(v);
    return s;
}

/// True when every vector of `sub` lies in the span of `super`.
template <class T>
bool span_contains(const std::vector<Vec<T>>& super, const std::vector<Vec<T>>& sub, std::size_t width)
{
    auto s = span_of(super, width);
    for (const auto& v : sub)
        if (!s.contains(v)) return false;
    return true;
}

/// Basis of the annihilator {u : u . v = 0 for every v in span(vectors)}.
template <class T>
std::vector<Vec<T>> annihilator(const std::vector<Vec<T>>& vectors, std::size_t width)
{
    if (vectors.empty()) {
        std::vector<Vec<T>> id;
        for (std::size_t i = 0; i < width; ++i) {
            Vec<T> e(width, T(0));
            e[i] = T(1);
            id.push_back(std::move(e));
        }
        return id;
    }
    return kernel_basis(Matrix<T>::from_rows(vectors, width));
}

template <class T>
T dot(const Vec<T>& a, const Vec<T>& b)
{
    T s(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!is_zero(a[i]) && !is_zero(b[i])) s += a[i] * b[i];
    return s;
}

}  // namespace gdeform
