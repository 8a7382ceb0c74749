#include "holant/space.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <utility>

#include "holant/errors.hpp"

namespace holant {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kDegeneracyTol = 1e-10;

}  // namespace

Space::Space(std::string id, Matrix gram) : id_(std::move(id)), gram_(std::move(gram)) {
  if (gram_.rows() == 0 || gram_.rows() != gram_.cols()) {
    throw DimensionError("space '" + id_ + "': Gram matrix must be square and nonempty");
  }
  const double scale = gram_.cwiseAbs().maxCoeff();
  if (!gram_.allFinite() || scale == 0.0) {
    throw SingularMatrixError("space '" + id_ + "': Gram matrix is zero or not finite");
  }
  if ((gram_ - gram_.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol * scale) {
    throw ValidationError("space '" + id_ + "': Gram matrix is not symmetric");
  }
  gram_ = 0.5 * (gram_ + gram_.transpose().eval());

  Eigen::JacobiSVD<Matrix> svd(gram_);
  const auto& sv = svd.singularValues();
  if (sv[sv.size() - 1] <= kDegeneracyTol * sv[0]) {
    throw SingularMatrixError("space '" + id_ + "': bilinear form is degenerate");
  }
  gram_inv_ = gram_.inverse();

  Eigen::SelfAdjointEigenSolver<Matrix> es(gram_);
  positive_definite_ = es.eigenvalues().minCoeff() > 0.0;
  identity_gram_ = (gram_ - Matrix::Identity(gram_.rows(), gram_.cols())).cwiseAbs().maxCoeff() <
                   kSymmetryTol * std::max(1.0, scale);
}

SpacePtr Space::make(std::string id, Matrix gram) {
  return SpacePtr(new Space(std::move(id), std::move(gram)));
}

SpacePtr Space::euclidean(std::string id, int dim) {
  return make(std::move(id), Matrix::Identity(dim, dim));
}

bool same_space(const Space& a, const Space& b) {
  return &a == &b || (a.id() == b.id() && a.dim() == b.dim());
}

Vec Vec::over(SpacePtr space, Vector coeffs) {
  return over(std::vector<SpacePtr>{std::move(space)}, std::move(coeffs));
}

Vec Vec::over(std::vector<SpacePtr> factors, Vector coeffs) {
  std::size_t n = 1;
  for (const auto& s : factors) {
    if (!s) throw SpaceMismatchError("Vec: null factor space");
    n *= static_cast<std::size_t>(s->dim());
  }
  if (static_cast<std::size_t>(coeffs.size()) != n) {
    throw DimensionError("Vec: coefficient length does not match factor dimensions");
  }
  return Vec{std::move(factors), std::move(coeffs)};
}

std::vector<int> Vec::dims() const {
  std::vector<int> d(factors.size());
  for (std::size_t k = 0; k < factors.size(); ++k) d[k] = factors[k]->dim();
  return d;
}

namespace {

void require_same_spaces(const Vec& f, const Vec& g, const char* what) {
  if (f.factors.size() != g.factors.size()) {
    throw SpaceMismatchError(std::string(what) + ": different factor counts");
  }
  for (std::size_t k = 0; k < f.factors.size(); ++k) {
    if (!same_space(*f.factors[k], *g.factors[k])) {
      throw SpaceMismatchError(std::string(what) + ": factor " + std::to_string(k) +
                               " spaces differ ('" + f.factors[k]->id() + "' vs '" +
                               g.factors[k]->id() + "')");
    }
  }
}

// (tensor product of Grams) applied to the coefficients.
Vector apply_product_gram(const Vec& g) {
  Vector out = g.coeffs;
  const auto d = g.dims();
  for (int k = 0; k < g.order(); ++k) {
    if (g.factors[static_cast<std::size_t>(k)]->has_identity_gram()) continue;
    out = mode_apply(out, d, k, g.factors[static_cast<std::size_t>(k)]->gram());
  }
  return out;
}

}  // namespace

double bilinear_form(const Vec& f, const Vec& g) {
  require_same_spaces(f, g, "bilinear_form");
  return f.coeffs.dot(apply_product_gram(g));
}

Matrix product_gram(std::span<const SpacePtr> factors) {
  Matrix out = Matrix::Identity(1, 1);
  for (const auto& s : factors) {
    Matrix next(out.rows() * s->dim(), out.cols() * s->dim());
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
      for (Eigen::Index j = 0; j < out.cols(); ++j) {
        next.block(i * s->dim(), j * s->dim(), s->dim(), s->dim()) = out(i, j) * s->gram();
      }
    }
    out = std::move(next);
  }
  return out;
}

Vec tensor_product(const Vec& f, const Vec& g) {
  std::vector<SpacePtr> factors = f.factors;
  factors.insert(factors.end(), g.factors.begin(), g.factors.end());
  Vector coeffs(f.coeffs.size() * g.coeffs.size());
  for (Eigen::Index i = 0; i < f.coeffs.size(); ++i) {
    coeffs.segment(i * g.coeffs.size(), g.coeffs.size()) = f.coeffs[i] * g.coeffs;
  }
  return Vec{std::move(factors), std::move(coeffs)};
}

Matrix right_adjoint(const Matrix& A, const Space& from, const Space& to) {
  if (A.rows() != to.dim() || A.cols() != from.dim()) {
    throw DimensionError("right_adjoint: map shape does not match the spaces");
  }
  if (!A.allFinite()) throw SingularMatrixError("right_adjoint: map has non-finite entries");
  return from.gram_inverse() * A.transpose() * to.gram();
}

Vec partial_inner(const Vec& f, std::span<const int> axes, const Vec& g) {
  if (axes.size() != g.factors.size()) {
    throw SpaceMismatchError("partial_inner: axis list does not match g's factors");
  }
  for (std::size_t k = 0; k < axes.size(); ++k) {
    const int a = axes[k];
    if (a < 0 || a >= f.order()) throw DimensionError("partial_inner: axis out of range");
    if (!same_space(*f.factors[static_cast<std::size_t>(a)], *g.factors[k])) {
      throw SpaceMismatchError("partial_inner: axis " + std::to_string(a) +
                               " space does not match g factor " + std::to_string(k));
    }
  }
  const Vector weighted = apply_product_gram(g);
  const auto d = f.dims();
  Vector out = contract_axes(f.coeffs, d, axes, weighted);

  std::vector<bool> used(f.factors.size(), false);
  for (int a : axes) used[static_cast<std::size_t>(a)] = true;
  std::vector<SpacePtr> kept;
  for (std::size_t k = 0; k < f.factors.size(); ++k) {
    if (!used[k]) kept.push_back(f.factors[k]);
  }
  return Vec{std::move(kept), std::move(out)};
}

std::vector<Vec> orthonormalize(const SpacePtr& space) {
  if (!space->positive_definite()) {
    throw ValidationError("orthonormalize: space '" + space->id() + "' is not positive definite");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(space->gram());
  const Matrix inv_sqrt = es.operatorInverseSqrt();
  std::vector<Vec> basis;
  basis.reserve(static_cast<std::size_t>(space->dim()));
  for (int x = 0; x < space->dim(); ++x) {
    basis.push_back(Vec::over(space, inv_sqrt.col(x)));
  }
  return basis;
}

Vec mode_apply(const Vec& f, int axis, const Matrix& M) {
  if (axis < 0 || axis >= f.order()) throw DimensionError("mode_apply: axis out of range");
  if (M.rows() != M.cols() || M.rows() != f.factors[static_cast<std::size_t>(axis)]->dim()) {
    throw DimensionError("mode_apply: matrix does not match the axis space");
  }
  const auto d = f.dims();
  return Vec{f.factors, mode_apply(f.coeffs, d, axis, M)};
}

}  // namespace holant
