#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "holant/tensor.hpp"

namespace holant {

class Space;
using SpacePtr = std::shared_ptr<const Space>;

// Real linear space with a symmetric nondegenerate bilinear form, stored as
// the Gram matrix of the storage basis. Immutable and shared.
class Space {
 public:
  // Validates symmetry (1e-12 relative) and nondegeneracy (sigma_min > 1e-10 sigma_max).
  static SpacePtr make(std::string id, Matrix gram);
  static SpacePtr euclidean(std::string id, int dim);

  const std::string& id() const { return id_; }
  int dim() const { return static_cast<int>(gram_.rows()); }
  const Matrix& gram() const { return gram_; }
  const Matrix& gram_inverse() const { return gram_inv_; }
  bool has_identity_gram() const { return identity_gram_; }
  bool positive_definite() const { return positive_definite_; }

 private:
  Space(std::string id, Matrix gram);

  std::string id_;
  Matrix gram_;
  Matrix gram_inv_;
  bool positive_definite_ = false;
  bool identity_gram_ = false;
};

// Same space for pairing purposes: equal id and dimension.
bool same_space(const Space& a, const Space& b);

// Coefficient tensor over an ordered list of factor spaces (one axis each).
// An empty factor list is a scalar with a single coefficient.
struct Vec {
  std::vector<SpacePtr> factors;
  Vector coeffs;

  static Vec over(SpacePtr space, Vector coeffs);
  static Vec over(std::vector<SpacePtr> factors, Vector coeffs);

  int order() const { return static_cast<int>(factors.size()); }
  std::vector<int> dims() const;
  std::size_t size() const { return static_cast<std::size_t>(coeffs.size()); }
};

// <f, g> = f^T (tensor product of factor Grams) g. Both vectors must live in
// the same (product) space.
double bilinear_form(const Vec& f, const Vec& g);

// Kronecker product of the factor Gram matrices; intended for small products.
Matrix product_gram(std::span<const SpacePtr> factors);

Vec tensor_product(const Vec& f, const Vec& g);

// Right adjoint of A: V -> W, i.e. A* = K_V^{-1} A^T K_W, the unique map with
// <A f, g>_W = <f, A* g>_V.
Matrix right_adjoint(const Matrix& A, const Space& from, const Space& to);

// Unique h with <h, w> = <f, g (x) w> for all w; `axes` lists the positions of
// g's factors inside f, in g's factor order. Remaining axes keep their order.
Vec partial_inner(const Vec& f, std::span<const int> axes, const Vec& g);

// Orthonormal basis from the symmetric inverse square root of the Gram matrix;
// requires a positive definite form. Deterministic.
std::vector<Vec> orthonormalize(const SpacePtr& space);

// Applies a square matrix along one axis (a per-edge linear map).
Vec mode_apply(const Vec& f, int axis, const Matrix& M);

}  // namespace holant
