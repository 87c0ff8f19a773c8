#include "propwheel/matrix.hpp"

#include <stdexcept>

namespace propwheel {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::multiply(const QMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in multiply");
    QMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rat& b = o.at(k, j);
                if (b != 0) out.at(i, j) += a * b;
            }
        }
    return out;
}

QMatrix QMatrix::transpose() const {
    QMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Rat QMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
    Rat t(0);
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool QMatrix::operator==(const QMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

template <bool Parallel>
std::vector<int> QMatrix::rref_impl() {
    std::vector<int> pivots;
    int lead = 0;
    for (int col = 0; col < cols_ && lead < rows_; ++col) {
        int pivot = -1;
        for (int r = lead; r < rows_; ++r)
            if (at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != lead)
            for (int j = 0; j < cols_; ++j) std::swap(at(pivot, j), at(lead, j));
        {
            Rat inv = 1 / at(lead, col);
            for (int j = col; j < cols_; ++j) at(lead, j) *= inv;
        }
        if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
            for (int r = 0; r < rows_; ++r) {
                if (r == lead || at(r, col) == 0) continue;
                Rat factor = at(r, col);
                for (int j = col; j < cols_; ++j) {
                    const Rat& s = at(lead, j);
                    if (s != 0) at(r, j) -= factor * s;
                }
            }
        } else {
            for (int r = 0; r < rows_; ++r) {
                if (r == lead || at(r, col) == 0) continue;
                Rat factor = at(r, col);
                for (int j = col; j < cols_; ++j) {
                    const Rat& s = at(lead, j);
                    if (s != 0) at(r, j) -= factor * s;
                }
            }
        }
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

std::vector<int> QMatrix::rref_serial() { return rref_impl<false>(); }
std::vector<int> QMatrix::rref_parallel() { return rref_impl<true>(); }

int QMatrix::rank() const {
    QMatrix copy = *this;
    return static_cast<int>(copy.rref().size());
}

QMatrix QMatrix::kernel_basis() const {
    QMatrix copy = *this;
    std::vector<int> pivots = copy.rref();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    QMatrix out(cols_, static_cast<int>(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        out.at(fc, static_cast<int>(k)) = 1;
        for (std::size_t p = 0; p < pivots.size(); ++p)
            out.at(pivots[p], static_cast<int>(k)) = -copy.at(static_cast<int>(p), fc);
    }
    return out;
}

std::vector<int> QMatrix::independent_columns() const {
    QMatrix copy = *this;
    return copy.rref();
}

bool QMatrix::solve(const QMatrix& rhs, QMatrix* solution) const {
    if (rhs.rows_ != rows_) throw std::invalid_argument("rhs row count mismatch in solve");
    QMatrix aug = augment(*this, rhs);
    std::vector<int> pivots = aug.rref();
    // Any pivot in the rhs block means an inconsistent column.
    for (int c : pivots)
        if (c >= cols_) return false;
    QMatrix x(cols_, rhs.cols_);
    for (std::size_t p = 0; p < pivots.size(); ++p)
        for (int j = 0; j < rhs.cols_; ++j)
            x.at(pivots[p], j) = aug.at(static_cast<int>(p), cols_ + j);
    if (solution) *solution = std::move(x);
    return true;
}

QMatrix QMatrix::augment(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("row count mismatch in augment");
    QMatrix out(a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols_; ++j) out.at(i, a.cols_ + j) = b.at(i, j);
    }
    return out;
}

QMatrix QMatrix::columns(const std::vector<int>& indices) const {
    QMatrix out(rows_, static_cast<int>(indices.size()));
    for (std::size_t k = 0; k < indices.size(); ++k)
        for (int i = 0; i < rows_; ++i) out.at(i, static_cast<int>(k)) = at(i, indices[k]);
    return out;
}

bool is_zero_matrix(const QMatrix& m) {
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != 0) return false;
    return true;
}

}  // namespace propwheel
