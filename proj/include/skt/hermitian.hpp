#ifndef SKT_HERMITIAN_HPP
#define SKT_HERMITIAN_HPP

#include <string>

#include "skt/forms.hpp"
#include "skt/lie.hpp"

namespace skt {

/// Metric + almost complex structure attached to a Lie algebra.
struct HermitianStructure {
  LieAlgebra algebra;
  Mat g;
  Mat j;

  int dim() const { return algebra.dim(); }
  /// max(|J^2 + 1|, |g(J., J.) - g|); 0 within eps iff the pair is Hermitian.
  double compatibility_residual() const;
};

/// Left-invariant Chevalley-Eilenberg differential,
/// da(X_0..X_k) = sum_{i<j} (-1)^{i+j} a([X_i,X_j], X_0, .., ^X_i, .., ^X_j, ..).
AltForm ce_differential(const LieAlgebra& l, const AltForm& a);

/// Max over basis pairs of |[JX,JY] - [X,Y] - J[JX,Y] - J[X,JY]|;
/// zero iff J is integrable.
double nijenhuis_norm(const LieAlgebra& l, const Mat& j);

/// Bismut torsion c = -J^*(d sigma), sigma = g(J., .).
AltForm torsion_three_form(const HermitianStructure& h);

enum class Verdict { kahler, skt_strict, hermitian_not_skt, not_integrable, not_hermitian };

std::string to_string(Verdict v);

struct SktReport {
  double compatibility = 0;
  double nijenhuis = 0;
  double dsigma_norm = 0;
  double dc_norm = 0;
  double scale = 1;  // max(1, max structure constant)
  Verdict verdict = Verdict::kahler;
};

/// Full verdict pipeline.  Thresholds are tol-relative: linear residuals are
/// compared against tol*scale, the quadratic dc against tol*scale^3.
SktReport skt_verdict(const HermitianStructure& h, double tol_eps = 1e-9);

}  // namespace skt

#endif
