#pragma once

#include <stdexcept>
#include <vector>

#include "specht/scalar.hpp"

namespace specht {

/// Dense matrix over an exact field.  Elimination divides only by pivots,
/// which is exact in a field, and zero pivots are detected exactly, never
/// approximately.
template <class F>
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols, F fill = F())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    static ExactMatrix identity(std::size_t n, const F& one) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        ExactMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (FieldOps<F>::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    out(i, j) += aik * b(k, j);
                }
            }
        }
        return out;
    }

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
        ExactMatrix out = a;
        for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
        return out;
    }

    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
        ExactMatrix out = a;
        for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
        return out;
    }

    bool operator==(const ExactMatrix&) const = default;

    bool is_zero() const {
        for (const F& x : data_) {
            if (!FieldOps<F>::is_zero(x)) return false;
        }
        return true;
    }

    F trace() const {
        if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
        F t{};
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    /// Rank by exact elimination.
    std::size_t rank() const {
        ExactMatrix m = *this;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
            std::size_t pivot = rank;
            while (pivot < rows_ && FieldOps<F>::is_zero(m(pivot, col))) ++pivot;
            if (pivot == rows_) continue;
            m.swap_rows(pivot, rank);
            F inv = FieldOps<F>::inverse(m(rank, col));
            for (std::size_t r = rank + 1; r < rows_; ++r) {
                if (FieldOps<F>::is_zero(m(r, col))) continue;
                F factor = m(r, col) * inv;
                for (std::size_t c = col; c < cols_; ++c) {
                    m(r, c) -= factor * m(rank, c);
                }
            }
            ++rank;
        }
        return rank;
    }

    /// Exact inverse by Gauss-Jordan; throws on singular input.
    ExactMatrix inverse(const F& one) const {
        if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
        ExactMatrix m = *this;
        ExactMatrix inv = identity(rows_, one);
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t pivot = col;
            while (pivot < rows_ && FieldOps<F>::is_zero(m(pivot, col))) ++pivot;
            if (pivot == rows_) throw std::domain_error("singular matrix");
            m.swap_rows(pivot, col);
            inv.swap_rows(pivot, col);
            F pinv = FieldOps<F>::inverse(m(col, col));
            for (std::size_t c = 0; c < cols_; ++c) {
                m(col, c) *= pinv;
                inv(col, c) *= pinv;
            }
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == col || FieldOps<F>::is_zero(m(r, col))) continue;
                F factor = m(r, col);
                for (std::size_t c = 0; c < cols_; ++c) {
                    m(r, c) -= factor * m(col, c);
                    inv(r, c) -= factor * inv(col, c);
                }
            }
        }
        return inv;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F> data_;
};

/// Row vector times matrix.
template <class F>
std::vector<F> row_times(const std::vector<F>& v, const ExactMatrix<F>& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("shape mismatch");
    std::vector<F> out(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (FieldOps<F>::is_zero(v[r])) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out[c] += v[r] * m(r, c);
        }
    }
    return out;
}

}  // namespace specht
