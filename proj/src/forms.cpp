#include "skt/forms.hpp"

#include <algorithm>
#include <cmath>

namespace skt {

AltForm::AltForm(int degree, int dim, int value_dim)
    : deg_(degree), dim_(dim), value_dim_(value_dim) {
  if (degree < 0 || degree > 4) throw PreconditionError("AltForm: degree must be in 0..4");
  if (dim < 1) throw InputError("AltForm: dimension must be positive");
  coef_ = Mat::Zero(binomial(dim, degree), width());
}

AltForm AltForm::covector(const Vec& v) {
  AltForm a(1, static_cast<int>(v.size()));
  a.coef_.col(0) = v;
  return a;
}

Vec AltForm::at(const int* idx, int k) const {
  std::array<int, 4> tmp{};
  std::copy(idx, idx + k, tmp.begin());
  int sign = sort_sign(tmp.data(), k);
  if (sign == 0) return Vec::Zero(width());
  return sign * coef_.row(tuple_rank(tmp.data(), k)).transpose();
}

Vec AltForm::at(std::initializer_list<int> idx) const {
  return at(idx.begin(), static_cast<int>(idx.size()));
}

double AltForm::scalar_at(std::initializer_list<int> idx) const {
  return at(idx)(0);
}

void AltForm::set(std::initializer_list<int> idx, const Vec& value) {
  std::array<int, 4> tmp{};
  std::copy(idx.begin(), idx.end(), tmp.begin());
  int k = static_cast<int>(idx.size());
  int sign = sort_sign(tmp.data(), k);
  if (sign == 0) throw InputError("AltForm::set: repeated index");
  coef_.row(tuple_rank(tmp.data(), k)) = sign * value.transpose();
}

void AltForm::set(std::initializer_list<int> idx, double value) {
  Vec v(1);
  v(0) = value;
  set(idx, v);
}

void AltForm::add(const int* idx, int k, const Vec& value) {
  std::array<int, 4> tmp{};
  std::copy(idx, idx + k, tmp.begin());
  int sign = sort_sign(tmp.data(), k);
  if (sign == 0) return;
  coef_.row(tuple_rank(tmp.data(), k)) += sign * value.transpose();
}

Vec AltForm::eval(const Mat& args) const {
  if (args.cols() != deg_) throw InputError("AltForm::eval: argument count mismatch");
  Vec out = Vec::Zero(width());
  if (deg_ == 0) return coef_.row(0).transpose();
  const auto tuples = increasing_tuples(dim_, deg_);
  Eigen::Matrix4d minor;
  for (long r = 0; r < static_cast<long>(tuples.size()); ++r) {
    const auto& tu = tuples[r];
    for (int a = 0; a < deg_; ++a)
      for (int b = 0; b < deg_; ++b) minor(a, b) = args(tu[a], b);
    double det;
    switch (deg_) {
      case 1: det = minor(0, 0); break;
      case 2: det = minor(0, 0) * minor(1, 1) - minor(0, 1) * minor(1, 0); break;
      case 3:
        det = minor.topLeftCorner<3, 3>().determinant();
        break;
      default:
        det = minor.determinant();
    }
    if (det != 0.0) out += det * coef_.row(r).transpose();
  }
  return out;
}

double AltForm::eval_scalar(const Mat& args) const { return eval(args)(0); }

AltForm AltForm::operator+(const AltForm& o) const {
  AltForm r = *this;
  r += o;
  return r;
}

AltForm& AltForm::operator+=(const AltForm& o) {
  if (deg_ != o.deg_ || dim_ != o.dim_ || value_dim_ != o.value_dim_)
    throw InputError("AltForm: shape mismatch in sum");
  coef_ += o.coef_;
  return *this;
}

AltForm AltForm::operator-(const AltForm& o) const {
  AltForm r = *this;
  if (deg_ != o.deg_ || dim_ != o.dim_ || value_dim_ != o.value_dim_)
    throw InputError("AltForm: shape mismatch in difference");
  r.coef_ -= o.coef_;
  return r;
}

AltForm AltForm::operator*(double s) const {
  AltForm r = *this;
  r.coef_ *= s;
  return r;
}

AltForm AltForm::map_values(const Mat& m) const {
  if (m.cols() != width()) throw InputError("AltForm::map_values: width mismatch");
  AltForm r(deg_, dim_, static_cast<int>(m.rows()));
  r.coef_ = coef_ * m.transpose();
  return r;
}

AltForm AltForm::pullback(const Mat& a) const {
  if (a.rows() != dim_ || a.cols() != dim_)
    throw InputError("AltForm::pullback: endomorphism dimension mismatch");
  AltForm r(deg_, dim_, value_dim_);
  const auto tuples = increasing_tuples(dim_, deg_);
  Mat args(dim_, deg_);
  for (long t = 0; t < static_cast<long>(tuples.size()); ++t) {
    for (int s = 0; s < deg_; ++s) args.col(s) = a.col(tuples[t][s]);
    r.coef_.row(t) = eval(args).transpose();
  }
  return r;
}

double AltForm::norm_inf() const {
  return coef_.size() == 0 ? 0.0 : coef_.cwiseAbs().maxCoeff();
}

AltForm wedge(const AltForm& a, const AltForm& b) {
  if (a.dim() != b.dim()) throw InputError("wedge: dimension mismatch");
  if (a.value_dim() > 0 && b.value_dim() > 0)
    throw InputError("wedge: at most one operand may be vector-valued");
  int p = a.degree(), q = b.degree();
  AltForm r(p + q, a.dim(), std::max(a.value_dim(), b.value_dim()));
  const auto tuples = increasing_tuples(a.dim(), p + q);
  const auto shuffles = increasing_tuples(p + q, p);
  std::vector<int> left(p), right(q);
  for (const auto& tu : tuples) {
    Vec acc = Vec::Zero(r.width());
    for (const auto& sh : shuffles) {
      std::vector<bool> used(p + q, false);
      for (int s = 0; s < p; ++s) {
        left[s] = tu[sh[s]];
        used[sh[s]] = true;
      }
      int w = 0;
      for (int s = 0; s < p + q; ++s)
        if (!used[s]) right[w++] = tu[s];
      // sign of the (p,q)-shuffle
      int inv = 0;
      for (int s = 0; s < p; ++s) inv += sh[s] - s;
      double sign = (inv % 2 == 0) ? 1.0 : -1.0;
      double sa = 1.0;
      Vec va = a.at(left.data(), p);
      Vec vb = b.at(right.data(), q);
      if (a.value_dim() > 0)
        acc += sign * vb(0) * va;
      else if (b.value_dim() > 0)
        acc += sign * va(0) * vb;
      else
        acc += sign * sa * va(0) * vb;
    }
    r.add(tu.data(), p + q, acc);
  }
  return r;
}

AltForm antisymmetrize(int arity, int dim, int value_dim, const MultilinearFn& t) {
  if (arity > 4) throw PreconditionError("antisymmetrize: arity must be <= 4");
  AltForm r(arity, dim, value_dim);
  const auto tuples = increasing_tuples(dim, arity);
  std::vector<int> perm(arity);
  double norm = 1.0;
  for (int i = 2; i <= arity; ++i) norm *= i;
  for (const auto& tu : tuples) {
    for (int s = 0; s < arity; ++s) perm[s] = s;
    Vec acc = Vec::Zero(r.width());
    std::vector<int> args(arity);
    do {
      int inv = 0;
      for (int i2 = 0; i2 < arity; ++i2)
        for (int j2 = i2 + 1; j2 < arity; ++j2)
          if (perm[i2] > perm[j2]) ++inv;
      double sign = (inv % 2 == 0) ? 1.0 : -1.0;
      for (int s = 0; s < arity; ++s) args[s] = tu[perm[s]];
      acc += sign * t(args.data(), arity);
    } while (std::next_permutation(perm.begin(), perm.end()));
    r.add(tu.data(), arity, acc / norm);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(int ambient_dim, const Mat& span, const Mat& metric, const Tol& tol)
    : n_(ambient_dim), metric_(metric) {
  if (span.rows() != ambient_dim) throw InputError("Subspace: span row count mismatch");
  if (span.cols() == 0) {
    basis_ = Mat::Zero(ambient_dim, 0);
    return;
  }
  Eigen::LLT<Mat> llt(metric);
  if (llt.info() != Eigen::Success) throw PreconditionError("Subspace: metric not positive definite");
  Mat l = llt.matrixL();
  Mat m = l.transpose() * span;
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU);
  double cut = tol.eps_rank * std::max(1.0, svd.singularValues().size() ? svd.singularValues()(0) : 0.0);
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > cut) ++r;
  Mat u = svd.matrixU().leftCols(r);
  basis_ = l.transpose().triangularView<Eigen::Upper>().solve(u);
}

Subspace Subspace::zero(int ambient_dim) {
  Subspace s;
  s.n_ = ambient_dim;
  s.basis_ = Mat::Zero(ambient_dim, 0);
  s.metric_ = Mat::Identity(ambient_dim, ambient_dim);
  return s;
}

Subspace Subspace::full(int ambient_dim) {
  Subspace s;
  s.n_ = ambient_dim;
  s.basis_ = Mat::Identity(ambient_dim, ambient_dim);
  s.metric_ = Mat::Identity(ambient_dim, ambient_dim);
  return s;
}

Mat Subspace::projector() const {
  if (dim() == 0) return Mat::Zero(n_, n_);
  return basis_ * basis_.transpose() * metric_;
}

Vec Subspace::project(const Vec& v) const {
  if (dim() == 0) return Vec::Zero(n_);
  return basis_ * (basis_.transpose() * (metric_ * v));
}

double Subspace::defect(const Vec& v) const {
  return (v - project(v)).cwiseAbs().maxCoeff();
}

bool Subspace::contains(const Vec& v, double eps) const { return defect(v) <= eps; }

Subspace Subspace::complement_of(const Subspace& other, const Tol& tol) const {
  Mat rest = basis_ - other.projector() * basis_;
  return Subspace(n_, rest, metric_, tol);
}

std::pair<Subspace, Subspace> split_complex_real(const Subspace& v, const Mat& j,
                                                 const Mat& g, const Tol& tol) {
  const int n = v.ambient_dim();
  if (j.rows() != n || j.cols() != n) throw InputError("split_complex_real: J dimension mismatch");
  if ((j * j + Mat::Identity(n, n)).cwiseAbs().maxCoeff() > tol.eps)
    throw PreconditionError("split_complex_real: J is not a complex structure");
  if (v.dim() == 0) return {Subspace::zero(n), Subspace::zero(n)};
  // x in V with J x in V  <=>  (1 - P) J B c = 0
  Mat defect_map = (Mat::Identity(n, n) - v.projector()) * j * v.basis();
  Mat coeff_kernel = kernel(defect_map, tol.eps_rank);
  Subspace vj(n, v.basis() * coeff_kernel, g, tol);
  Subspace vr = v.complement_of(vj, tol);
  return {vj, vr};
}

Mat standard_j(int n) {
  Mat j = Mat::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    j(2 * k + 1, 2 * k) = 1.0;
    j(2 * k, 2 * k + 1) = -1.0;
  }
  return j;
}

AltForm fundamental_form(const Mat& g, const Mat& j) {
  const int n = static_cast<int>(g.rows());
  AltForm sigma(2, n);
  Mat m = j.transpose() * g;  // sigma(x,y) = g(Jx, y) = x^T J^T g y
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) sigma.set({i, k}, m(i, k));
  return sigma;
}

KahlerStructure standard_structure(int n) {
  if (n < 1) throw InputError("standard_structure: n must be >= 1");
  KahlerStructure s;
  s.g = Mat::Identity(2 * n, 2 * n);
  s.j = standard_j(n);
  s.sigma = fundamental_form(s.g, s.j);
  return s;
}

int rank_at(const Mat& m, double eps_rank) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(m);
  double cut = eps_rank * std::max(1.0, svd.singularValues()(0));
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > cut) ++r;
  return r;
}

Mat column_span(const Mat& m, double eps_rank) {
  if (m.cols() == 0) return Mat::Zero(m.rows(), 0);
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU);
  double cut = eps_rank * std::max(1.0, svd.singularValues()(0));
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > cut) ++r;
  return svd.matrixU().leftCols(r);
}

Mat kernel(const Mat& m, double eps_rank) {
  if (m.cols() == 0) return Mat::Zero(0, 0);
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  double cut = eps_rank * std::max(1.0, svd.singularValues().size() ? svd.singularValues()(0) : 0.0);
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > cut) ++r;
  return svd.matrixV().rightCols(svd.matrixV().cols() - r);
}

}  // namespace skt
