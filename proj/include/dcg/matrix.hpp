#ifndef DCG_MATRIX_HPP
#define DCG_MATRIX_HPP

#include <cstddef>
#include <vector>

namespace dcg {

// Dense row-major matrix. Target graphs stay small (<= ~4096 vertices),
// so dense storage is used throughout.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, T fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::vector<T>& data() { return data_; }
    const std::vector<T>& data() const { return data_; }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> data_;
};

} // namespace dcg

#endif
