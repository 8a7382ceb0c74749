#include "holant/tensor.hpp"

#include <algorithm>

#include "holant/errors.hpp"

namespace holant {

std::size_t total_size(std::span<const int> dims) {
  std::size_t n = 1;
  for (int d : dims) n *= static_cast<std::size_t>(d);
  return n;
}

std::vector<std::size_t> row_major_strides(std::span<const int> dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k) {
    strides[k] = strides[k + 1] * static_cast<std::size_t>(dims[k + 1]);
  }
  return strides;
}

std::size_t flatten_index(std::span<const int> idx, std::span<const std::size_t> strides) {
  std::size_t flat = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) flat += static_cast<std::size_t>(idx[k]) * strides[k];
  return flat;
}

void unflatten_index(std::size_t flat, std::span<const int> dims, std::span<int> idx) {
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    idx[k] = static_cast<int>(flat % static_cast<std::size_t>(dims[k]));
    flat /= static_cast<std::size_t>(dims[k]);
  }
}

Vector mode_apply(const Vector& data, std::span<const int> dims, int axis, const Matrix& M) {
  if (axis < 0 || axis >= static_cast<int>(dims.size())) throw DimensionError("mode_apply: axis out of range");
  if (M.cols() != dims[axis]) throw DimensionError("mode_apply: matrix does not match axis dimension");

  const std::size_t q = static_cast<std::size_t>(dims[axis]);
  const std::size_t p = static_cast<std::size_t>(M.rows());
  std::size_t outer = 1, inner = 1;
  for (int k = 0; k < axis; ++k) outer *= static_cast<std::size_t>(dims[k]);
  for (int k = axis + 1; k < static_cast<int>(dims.size()); ++k) inner *= static_cast<std::size_t>(dims[k]);

  Vector out(static_cast<Eigen::Index>(outer * p * inner));
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t r = 0; r < p; ++r) {
      for (std::size_t i = 0; i < inner; ++i) {
        double s = 0.0;
        for (std::size_t c = 0; c < q; ++c) {
          s += M(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) *
               data[static_cast<Eigen::Index>((o * q + c) * inner + i)];
        }
        out[static_cast<Eigen::Index>((o * p + r) * inner + i)] = s;
      }
    }
  }
  return out;
}

Vector contract_axes(const Vector& data, std::span<const int> dims, std::span<const int> axes,
                     const Vector& g, Exec exec) {
  const std::size_t order = dims.size();
  std::vector<bool> contracted(order, false);
  std::vector<int> cdims;
  cdims.reserve(axes.size());
  for (int a : axes) {
    if (a < 0 || a >= static_cast<int>(order) || contracted[static_cast<std::size_t>(a)]) {
      throw DimensionError("contract_axes: bad axis list");
    }
    contracted[static_cast<std::size_t>(a)] = true;
    cdims.push_back(dims[static_cast<std::size_t>(a)]);
  }
  if (static_cast<std::size_t>(g.size()) != total_size(cdims)) {
    throw DimensionError("contract_axes: contraction tensor size mismatch");
  }

  std::vector<int> kept;
  for (std::size_t k = 0; k < order; ++k) {
    if (!contracted[k]) kept.push_back(static_cast<int>(k));
  }
  std::vector<int> kdims(kept.size());
  for (std::size_t k = 0; k < kept.size(); ++k) kdims[k] = dims[static_cast<std::size_t>(kept[k])];

  const auto strides = row_major_strides(dims);
  const std::size_t nk = total_size(kdims);
  const std::size_t nc = total_size(cdims);

  // Flat offsets of the contracted block relative to a kept-index base.
  std::vector<std::size_t> coffsets(nc);
  {
    std::vector<int> cidx(cdims.size(), 0);
    for (std::size_t c = 0; c < nc; ++c) {
      unflatten_index(c, cdims, cidx);
      std::size_t off = 0;
      for (std::size_t k = 0; k < axes.size(); ++k) {
        off += static_cast<std::size_t>(cidx[k]) * strides[static_cast<std::size_t>(axes[k])];
      }
      coffsets[c] = off;
    }
  }

  Vector out(static_cast<Eigen::Index>(nk));
  parallel_for(nk, exec, [&](std::size_t flat) {
    std::vector<int> kidx(kdims.size(), 0);
    unflatten_index(flat, kdims, kidx);
    std::size_t base = 0;
    for (std::size_t k = 0; k < kept.size(); ++k) {
      base += static_cast<std::size_t>(kidx[k]) * strides[static_cast<std::size_t>(kept[k])];
    }
    double s = 0.0;
    for (std::size_t c = 0; c < nc; ++c) {
      s += data[static_cast<Eigen::Index>(base + coffsets[c])] * g[static_cast<Eigen::Index>(c)];
    }
    out[static_cast<Eigen::Index>(flat)] = s;
  });
  return out;
}

}  // namespace holant
