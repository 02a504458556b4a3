#ifndef SKT_LIE_HPP
#define SKT_LIE_HPP

#include <optional>
#include <string>
#include <vector>

#include "skt/common.hpp"
#include "skt/forms.hpp"

namespace skt {

/// Lie algebra given by structure constants on R^N:
/// [e_i, e_j] = sum_k c^k_{ij} e_k, stored for i < j.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(int dim);

  static LieAlgebra abelian(int dim);

  int dim() const { return n_; }

  Vec bracket_basis(int i, int j) const;
  void set_bracket(int i, int j, const Vec& v);
  void add_bracket(int i, int j, const Vec& v);
  Vec bracket(const Vec& x, const Vec& y) const;

  /// Structure constants after the change of basis e'_k = (basis) col k.
  LieAlgebra change_basis(const Mat& basis) const;

  double max_structure_constant() const;

  const Mat& raw() const { return c_; }
  Mat& raw() { return c_; }

 private:
  int n_ = 0;
  Mat c_;  // C(n,2) x n
};

/// Derived/lower-central dimension profile used for classification
/// cross-checks.  Not a complete isomorphism invariant.
struct Fingerprint {
  int dim = 0;
  std::vector<int> derived_dims;         // dim g, dim g', dim g'', ...
  std::vector<int> lower_central_dims;   // dim g, dim [g,g], dim [g,[g,g]], ...
  int center_dim = 0;
  int second_derived_dim = 0;            // dim [g', g']
  int abelianization_dim = 0;

  bool operator==(const Fingerprint& o) const;
  bool operator!=(const Fingerprint& o) const { return !(*this == o); }
  std::string to_string() const;
};

/// Max-norm Jacobi defect over basis triples; 0 within eps iff L is Lie.
double jacobi_residual(const LieAlgebra& l);

Fingerprint series(const LieAlgebra& l, const Tol& tol = {});

/// g'' = 0; abelian algebras count as (degenerately) two-step.
bool is_two_step_solvable(const LieAlgebra& l, const Tol& tol = {});
bool is_abelian(const LieAlgebra& l, const Tol& tol = {});
bool is_nilpotent(const LieAlgebra& l, const Tol& tol = {});

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Orthonormal basis of the span of all brackets (the commutator ideal).
Mat commutator_ideal(const LieAlgebra& l, const Tol& tol = {});

Mat center(const LieAlgebra& l, const Tol& tol = {});

/// ad(x) as an N x N matrix.
Mat ad(const LieAlgebra& l, const Vec& x);

}  // namespace skt

#endif
