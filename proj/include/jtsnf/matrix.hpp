#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace jtsnf {

// Dense row-major matrix; just enough for exact linear algebra on small sizes.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
        d_.resize(static_cast<size_t>(rows) * static_cast<size_t>(cols));
    }

    static Matrix identity(int n, const T& one) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& at(int i, int j) { return d_[static_cast<size_t>(i) * cols_ + static_cast<size_t>(j)]; }
    const T& at(int i, int j) const {
        return d_[static_cast<size_t>(i) * cols_ + static_cast<size_t>(j)];
    }

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
    }

    Matrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
        Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (size_t a = 0; a < rows.size(); ++a)
            for (size_t b = 0; b < cols.size(); ++b) m.at((int)a, (int)b) = at(rows[a], cols[b]);
        return m;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
    }

private:
    int rows_, cols_;
    std::vector<T> d_;
};

template <class T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul dimension mismatch");
    Matrix<T> r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const T& aik = a.at(i, k);
            for (int j = 0; j < b.cols(); ++j) r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
        }
    return r;
}

}  // namespace jtsnf
