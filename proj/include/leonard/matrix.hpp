// matrix.hpp -- dense exact matrices over a single field.
//
// Row-major storage of Scalars sharing one FieldDescriptor. Everything is
// exact: rank and inverse use Gaussian elimination with a deterministic
// first-nonzero pivot rule, so elimination traces are reproducible.

#ifndef LEONARD_MATRIX_HPP
#define LEONARD_MATRIX_HPP

#include "leonard/field.hpp"

#include <optional>
#include <vector>

namespace leonard {

class ExactMatrix {
public:
    ExactMatrix(int rows, int cols, const FieldDescriptor& f);  // zero-filled
    static ExactMatrix identity(int n, const FieldDescriptor& f);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldDescriptor& field() const { return desc_; }

    Scalar& operator()(int r, int c) { return entries_[index(r, c)]; }
    const Scalar& operator()(int r, int c) const { return entries_[index(r, c)]; }

    ExactMatrix operator*(const ExactMatrix& rhs) const;
    ExactMatrix operator+(const ExactMatrix& rhs) const;
    ExactMatrix operator-(const ExactMatrix& rhs) const;
    ExactMatrix scaled(const Scalar& k) const;

    bool is_zero() const;
    bool operator==(const ExactMatrix& rhs) const;
    bool operator!=(const ExactMatrix& rhs) const { return !(*this == rhs); }

    Scalar trace() const;  // throws for non-square input
    int rank() const;

    /// Gauss-Jordan inverse; nullopt when singular.
    std::optional<ExactMatrix> inverse() const;

    void swap_rows(int i, int j);

private:
    int index(int r, int c) const;
    void require_same_shape(const ExactMatrix& rhs) const;

    int rows_;
    int cols_;
    FieldDescriptor desc_;
    std::vector<Scalar> entries_;
};

}  // namespace leonard

#endif
