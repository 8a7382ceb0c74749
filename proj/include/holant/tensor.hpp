#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <vector>

#include "holant/parallel.hpp"

namespace holant {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Dense tensors are flat arrays indexed row-major over an ordered axis list.
// These helpers are shape-agnostic; the Space-aware wrappers live in space.hpp.

std::size_t total_size(std::span<const int> dims);

std::vector<std::size_t> row_major_strides(std::span<const int> dims);

// Flat index of a multi-index under row-major layout.
std::size_t flatten_index(std::span<const int> idx, std::span<const std::size_t> strides);

// Inverse of flatten_index.
void unflatten_index(std::size_t flat, std::span<const int> dims, std::span<int> idx);

// Mode-k product: applies M (p x dims[axis]) along `axis`; the axis dimension
// becomes p, all other axes are untouched.
Vector mode_apply(const Vector& data, std::span<const int> dims, int axis, const Matrix& M);

// Contracts `axes` of the tensor against a plain coefficient tensor g whose
// row-major dims equal the listed axis dimensions in order. The result keeps
// the remaining axes in their original relative order.
Vector contract_axes(const Vector& data, std::span<const int> dims, std::span<const int> axes,
                     const Vector& g, Exec exec = Exec::Serial);

}  // namespace holant
