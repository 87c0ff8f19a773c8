#ifndef PROPWHEEL_MATRIX_HPP
#define PROPWHEEL_MATRIX_HPP

#include <vector>

#include "propwheel/rational.hpp"

namespace propwheel {

// Dense matrix over the exact rationals. Elimination uses deterministic
// pivoting (leftmost column, first nonzero row), so results are identical
// between the serial reference and the OpenMP row-update variant.
class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Rat(0)) {}
    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    QMatrix multiply(const QMatrix& o) const;
    QMatrix transpose() const;
    Rat trace() const;
    bool operator==(const QMatrix& o) const;
    bool operator!=(const QMatrix& o) const { return !(*this == o); }

    // In-place reduced row echelon form; returns the pivot columns.
    std::vector<int> rref_serial();
    std::vector<int> rref_parallel();
    std::vector<int> rref() { return rref_parallel(); }

    int rank() const;
    // Columns span the null space {x : Ax = 0}; cols() - rank() of them.
    QMatrix kernel_basis() const;
    // Indices of a maximal independent subset of columns.
    std::vector<int> independent_columns() const;
    // Solves A x = b for every column b of rhs. Returns true and fills
    // `solution` (one column per rhs column) when consistent.
    bool solve(const QMatrix& rhs, QMatrix* solution) const;

    // Glue two matrices side by side (same row count).
    static QMatrix augment(const QMatrix& a, const QMatrix& b);
    QMatrix columns(const std::vector<int>& indices) const;

  private:
    template <bool Parallel>
    std::vector<int> rref_impl();

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> data_;
};

bool is_zero_matrix(const QMatrix& m);

}  // namespace propwheel

#endif
