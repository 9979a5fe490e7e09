#include "leonard/matrix.hpp"

#include <utility>

namespace leonard {

ExactMatrix::ExactMatrix(int rows, int cols, const FieldDescriptor& f)
    : rows_(rows), cols_(cols), desc_(f) {
    if (rows < 0 || cols < 0) throw error("negative matrix dimension");
    entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Scalar::zero(f));
}

ExactMatrix ExactMatrix::identity(int n, const FieldDescriptor& f) {
    ExactMatrix m(n, n, f);
    const Scalar one = Scalar::one(f);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
}

int ExactMatrix::index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw error("matrix index (" + std::to_string(r) + "," + std::to_string(c) + ") out of range");
    return r * cols_ + c;
}

void ExactMatrix::require_same_shape(const ExactMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw error("matrix shape mismatch");
    if (desc_ != rhs.desc_) throw error("matrix field mismatch");
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw error("matrix product shape mismatch");
    if (desc_ != rhs.desc_) throw error("matrix field mismatch");
    ExactMatrix out(rows_, rhs.cols_, desc_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& left = (*this)(i, k);
            if (left.is_zero()) continue;
            for (int j = 0; j < rhs.cols_; ++j) out(i, j) += left * rhs(k, j);
        }
    return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& rhs) const {
    require_same_shape(rhs);
    ExactMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& rhs) const {
    require_same_shape(rhs);
    ExactMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
    return out;
}

ExactMatrix ExactMatrix::scaled(const Scalar& k) const {
    ExactMatrix out = *this;
    for (Scalar& e : out.entries_) e *= k;
    return out;
}

bool ExactMatrix::is_zero() const {
    for (const Scalar& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool ExactMatrix::operator==(const ExactMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && desc_ == rhs.desc_ && entries_ == rhs.entries_;
}

Scalar ExactMatrix::trace() const {
    if (rows_ != cols_) throw error("trace of non-square matrix");
    Scalar t = Scalar::zero(desc_);
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

void ExactMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

int ExactMatrix::rank() const {
    ExactMatrix work = *this;
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (!work(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        work.swap_rows(rank, pivot);
        const Scalar inv = work(rank, col).inverse();
        for (int r = rank + 1; r < rows_; ++r) {
            if (work(r, col).is_zero()) continue;
            const Scalar factor = work(r, col) * inv;
            for (int c = col; c < cols_; ++c) work(r, c) -= factor * work(rank, c);
        }
        ++rank;
    }
    return rank;
}

std::optional<ExactMatrix> ExactMatrix::inverse() const {
    if (rows_ != cols_) throw error("inverse of non-square matrix");
    const int n = rows_;
    ExactMatrix work = *this;
    ExactMatrix inv = identity(n, desc_);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!work(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        work.swap_rows(col, pivot);
        inv.swap_rows(col, pivot);
        const Scalar scale = work(col, col).inverse();
        for (int c = 0; c < n; ++c) {
            work(col, c) *= scale;
            inv(col, c) *= scale;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || work(r, col).is_zero()) continue;
            const Scalar factor = work(r, col);
            for (int c = 0; c < n; ++c) {
                work(r, c) -= factor * work(col, c);
                inv(r, c) -= factor * inv(col, c);
            }
        }
    }
    return inv;
}

}  // namespace leonard
