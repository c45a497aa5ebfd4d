#pragma once

#include <vector>

#include "repglt/error.hpp"
#include "repglt/field.hpp"

namespace repglt {

// Dense matrix over an exact field. Row-major.
template <FieldLike F>
class Matrix {
public:
    using Elem = typename F::Elem;

    Matrix(F field, int rows, int cols)
        : field_(field), rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), field.zero()) {}

    static Matrix identity(F field, int n) {
        Matrix m(field, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
        return m;
    }
    static Matrix unit(F field, int n, int i, int j) {
        Matrix m(field, n, n);
        m.at(i, j) = field.one();
        return m;
    }

    const F& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Elem& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Elem& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!field_.is_zero(x)) return false;
        return true;
    }
    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!(at(i, j) == (i == j ? field_.one() : field_.zero()))) return false;
        return true;
    }

    // c * Id when the matrix is scalar.
    bool scalar_value(Elem& out) const {
        if (rows_ != cols_ || rows_ == 0) return false;
        const Elem& c = at(0, 0);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!(at(i, j) == (i == j ? c : field_.zero()))) return false;
        out = c;
        return true;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        require(x.rows_ == y.rows_ && x.cols_ == y.cols_, "argument", "matrix shape mismatch");
        Matrix r = x;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = r.a_[k] + y.a_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        require(x.rows_ == y.rows_ && x.cols_ == y.cols_, "argument", "matrix shape mismatch");
        Matrix r = x;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = r.a_[k] - y.a_[k];
        return r;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        require(x.cols_ == y.rows_, "argument", "matrix shape mismatch in product");
        Matrix r(x.field_, x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const Elem& xik = x.at(i, k);
                if (x.field_.is_zero(xik)) continue;
                for (int j = 0; j < y.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + xik * y.at(k, j);
            }
        return r;
    }

    Matrix scaled(const Elem& s) const {
        Matrix r = *this;
        for (auto& x : r.a_) x = x * s;
        return r;
    }
    Matrix operator-() const { return scaled(-field_.one()); }

    std::vector<Elem> apply(const std::vector<Elem>& v) const {
        require(static_cast<int>(v.size()) == cols_, "argument", "vector length mismatch");
        std::vector<Elem> r(static_cast<std::size_t>(rows_), field_.zero());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                if (field_.is_zero(at(i, j))) continue;
                r[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i)] + at(i, j) * v[static_cast<std::size_t>(j)];
            }
        return r;
    }

    static Matrix kronecker(const Matrix& x, const Matrix& y) {
        Matrix r(x.field_, x.rows_ * y.rows_, x.cols_ * y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int j = 0; j < x.cols_; ++j) {
                if (x.field_.is_zero(x.at(i, j))) continue;
                for (int k = 0; k < y.rows_; ++k)
                    for (int l = 0; l < y.cols_; ++l)
                        r.at(i * y.rows_ + k, j * y.cols_ + l) = x.at(i, j) * y.at(k, l);
            }
        return r;
    }

    // In-place reduced row echelon form; returns the rank.
    int rref() {
        int rank = 0;
        for (int col = 0; col < cols_ && rank < rows_; ++col) {
            int pivot = -1;
            for (int i = rank; i < rows_; ++i)
                if (!field_.is_zero(at(i, col))) { pivot = i; break; }
            if (pivot < 0) continue;
            swap_rows(pivot, rank);
            Elem inv = field_.inverse(at(rank, col));
            for (int j = col; j < cols_; ++j) at(rank, j) = at(rank, j) * inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == rank || field_.is_zero(at(i, col))) continue;
                Elem f = at(i, col);
                for (int j = col; j < cols_; ++j) at(i, j) = at(i, j) - f * at(rank, j);
            }
            ++rank;
        }
        return rank;
    }

    int rank() const {
        Matrix m = *this;
        return m.rref();
    }

    // Basis of the right kernel, as rows.
    Matrix kernel() const {
        Matrix m = *this;
        int rank = m.rref();
        std::vector<int> pivot_col;
        pivot_col.reserve(static_cast<std::size_t>(rank));
        for (int i = 0, col = 0; i < rank; ++i) {
            while (col < cols_ && field_.is_zero(m.at(i, col))) ++col;
            pivot_col.push_back(col);
        }
        std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
        for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
        Matrix basis(field_, cols_ - rank, cols_);
        int row = 0;
        for (int freec = 0; freec < cols_; ++freec) {
            if (is_pivot[static_cast<std::size_t>(freec)]) continue;
            basis.at(row, freec) = field_.one();
            for (int i = 0; i < rank; ++i)
                basis.at(row, pivot_col[static_cast<std::size_t>(i)]) = -m.at(i, freec);
            ++row;
        }
        return basis;
    }

private:
    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }

    F field_;
    int rows_, cols_;
    std::vector<Elem> a_;
};

// Incrementally maintained row space in reduced echelon form; the workhorse
// behind rank-of-span, cyclic closures and quotient reductions.
template <FieldLike F>
class RowSpan {
public:
    using Elem = typename F::Elem;

    RowSpan(F field, int width) : field_(field), width_(width) {}

    int dim() const { return static_cast<int>(rows_.size()); }
    int width() const { return width_; }

    // Reduces v against the current rows; zero iff v lies in the span.
    std::vector<Elem> reduce(std::vector<Elem> v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Elem& c = v[static_cast<std::size_t>(lead_[r])];
            if (field_.is_zero(c)) continue;
            Elem f = c;
            for (int j = 0; j < width_; ++j)
                v[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j)] - f * rows_[r][static_cast<std::size_t>(j)];
        }
        return v;
    }

    // Returns true when v enlarged the span.
    bool add(std::vector<Elem> v) {
        v = reduce(std::move(v));
        int lead = -1;
        for (int j = 0; j < width_; ++j)
            if (!field_.is_zero(v[static_cast<std::size_t>(j)])) { lead = j; break; }
        if (lead < 0) return false;
        Elem inv = field_.inverse(v[static_cast<std::size_t>(lead)]);
        for (int j = lead; j < width_; ++j) v[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j)] * inv;
        // back-substitute into existing rows
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            Elem c = rows_[r][static_cast<std::size_t>(lead)];
            if (field_.is_zero(c)) continue;
            for (int j = 0; j < width_; ++j)
                rows_[r][static_cast<std::size_t>(j)] = rows_[r][static_cast<std::size_t>(j)] - c * v[static_cast<std::size_t>(j)];
        }
        rows_.push_back(std::move(v));
        lead_.push_back(lead);
        return true;
    }

    bool contains(std::vector<Elem> v) const {
        v = reduce(std::move(v));
        for (const auto& x : v)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    const std::vector<int>& leads() const { return lead_; }
    const std::vector<std::vector<Elem>>& rows() const { return rows_; }

private:
    F field_;
    int width_;
    std::vector<std::vector<Elem>> rows_;
    std::vector<int> lead_;
};

} // namespace repglt
