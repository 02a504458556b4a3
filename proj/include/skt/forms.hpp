#ifndef SKT_FORMS_HPP
#define SKT_FORMS_HPP

#include <functional>
#include <vector>

#include "skt/common.hpp"
#include "skt/combinatorics.hpp"

namespace skt {

/// Dense alternating k-form on R^N, scalar- or vector-valued.
///
/// Coefficients are stored per strictly increasing basis tuple, one row per
/// tuple in combinadic rank order; columns hold the value (a single column
/// for scalar forms, value_dim columns otherwise).  Degrees up to 4 only.
class AltForm {
 public:
  AltForm() = default;
  AltForm(int degree, int dim, int value_dim = 0);

  static AltForm covector(const Vec& v);

  int degree() const { return deg_; }
  int dim() const { return dim_; }
  int value_dim() const { return value_dim_; }
  bool scalar_valued() const { return value_dim_ == 0; }
  int width() const { return value_dim_ == 0 ? 1 : value_dim_; }
  long terms() const { return coef_.rows(); }

  Mat& raw() { return coef_; }
  const Mat& raw() const { return coef_; }

  /// Value on a basis tuple in any order (sign-adjusted; 0 on repeats).
  Vec at(std::initializer_list<int> idx) const;
  Vec at(const int* idx, int k) const;
  double scalar_at(std::initializer_list<int> idx) const;

  /// Sets the coefficient of an increasing basis tuple.
  void set(std::initializer_list<int> idx, const Vec& value);
  void set(std::initializer_list<int> idx, double value);
  void add(const int* idx, int k, const Vec& value);

  /// Evaluation on general vectors (degree-many columns of args).
  Vec eval(const Mat& args) const;
  double eval_scalar(const Mat& args) const;

  AltForm operator+(const AltForm& o) const;
  AltForm operator-(const AltForm& o) const;
  AltForm operator*(double s) const;
  AltForm& operator+=(const AltForm& o);

  /// Applies a linear map to the values of a vector-valued form.
  AltForm map_values(const Mat& m) const;

  /// Pullback by an endomorphism: (A*w)(X1..Xk) = w(A X1, .., A Xk).
  AltForm pullback(const Mat& a) const;

  double norm_inf() const;

  friend AltForm wedge(const AltForm& a, const AltForm& b);

 private:
  int deg_ = 0, dim_ = 0, value_dim_ = 0;
  Mat coef_;
};

/// Exterior product; at most one operand may be vector-valued.
AltForm wedge(const AltForm& a, const AltForm& b);

/// Full antisymmetrisation with the 1/k! normalisation, so that A is a
/// projection and fixes alternating input.  T receives basis indices.
using MultilinearFn = std::function<Vec(const int*, int)>;
AltForm antisymmetrize(int arity, int dim, int value_dim, const MultilinearFn& t);

/// Subspace of R^N stored with a basis orthonormal w.r.t. a metric.
class Subspace {
 public:
  Subspace() = default;
  /// Orthonormalizes the columns of span; rank decided at tol.eps_rank.
  Subspace(int ambient_dim, const Mat& span, const Mat& metric, const Tol& tol = {});
  static Subspace zero(int ambient_dim);
  static Subspace full(int ambient_dim);

  int ambient_dim() const { return n_; }
  int dim() const { return static_cast<int>(basis_.cols()); }
  const Mat& basis() const { return basis_; }
  Mat projector() const;  // g-orthogonal projector onto the subspace
  bool contains(const Vec& v, double eps) const;
  Vec project(const Vec& v) const;
  /// Distance (inf-norm) from v to the subspace.
  double defect(const Vec& v) const;

  /// Orthogonal complement of other inside this subspace (other <= this).
  Subspace complement_of(const Subspace& other, const Tol& tol = {}) const;

 private:
  int n_ = 0;
  Mat basis_;   // n x d, g-orthonormal columns
  Mat metric_;  // ambient metric
};

/// V_J = V cap JV (maximal complex subspace) and V_r = its orthogonal
/// complement inside V.  Rank decisions at tol.eps_rank.
std::pair<Subspace, Subspace> split_complex_real(const Subspace& v, const Mat& j,
                                                 const Mat& g, const Tol& tol = {});

struct KahlerStructure {
  Mat g;       // identity
  Mat j;       // J e_{2k-1} = e_{2k}
  AltForm sigma;  // g(J., .)
};

/// Flat Kahler structure on R^{2n}.
KahlerStructure standard_structure(int n);

/// The standard complex structure matrix on R^{2n}.
Mat standard_j(int n);

/// Fundamental two-form g(J., .) for an arbitrary compatible pair.
AltForm fundamental_form(const Mat& g, const Mat& j);

/// Rank of a matrix with singular values cut at eps_rank * scale.
int rank_at(const Mat& m, double eps_rank);

/// Orthonormal basis of the column span (w.r.t. the identity metric).
Mat column_span(const Mat& m, double eps_rank);

/// Orthonormal basis of the kernel.
Mat kernel(const Mat& m, double eps_rank);

}  // namespace skt

#endif
