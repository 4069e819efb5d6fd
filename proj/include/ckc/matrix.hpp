#pragma once

#include <cstddef>
#include <vector>

#include "ckc/error.hpp"

namespace ckc {

/// Dense row-major matrix of doubles. The one container every module shares.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}
    Matrix(int rows, int cols, std::vector<double> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != static_cast<size_t>(rows_) * cols_)
            throw Error(ErrorCode::ShapeMismatch, "data size does not match rows*cols");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    const std::vector<double>& storage() const { return data_; }

    std::vector<double> column(int j) const {
        std::vector<double> out(rows_);
        for (int i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
        return out;
    }

    bool same_shape(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

}  // namespace ckc
