#ifndef SKT_SHEAR_HPP
#define SKT_SHEAR_HPP

#include <array>
#include <optional>
#include <string>

#include "skt/forms.hpp"
#include "skt/hermitian.hpp"
#include "skt/lie.hpp"

namespace skt {

/// Shear data on the Abelian R^{2n}: a subspace a and an a-valued two-form
/// with omega|_{Lambda^2 a} = 0.  Encodes the bracket of a two-step solvable
/// algebra on the same vector space.
struct PreShearData {
  int n = 0;
  Subspace a;
  AltForm omega;  // degree 2 on R^{2n}, value_dim 2n, values inside a

  int dim() const { return 2 * n; }
};

/// Validates the structural invariants and projects omega values onto a.
/// A value defect beyond sqrt(eps) or a nonzero restriction to Lambda^2 a
/// is a hard error.
PreShearData make_pre_shear(int n, const Subspace& a, const AltForm& omega,
                            const Tol& tol = {});

/// The splitting g = a_J + a_r + U_J + U_r and omega evaluated on it.
struct ShearDecomposition {
  Subspace a_j, a_r, u_j, u_r;
  Mat basis;        // columns grouped [a_j | a_r | u_j | u_r]
  Mat coords;       // inverse of basis (oblique coordinates in general)
  Mat j_aj;         // J in a_j coordinates
  Mat j_uj;         // J in u_j coordinates
  int dj = 0, dr = 0, uj = 0;  // real dims of a_j, a_r, u_j (u_r has dim dr)
  std::vector<Vec> table;      // omega on adapted basis pairs, ambient values
  double reassembly_residual = 0;

  int dim() const { return static_cast<int>(basis.rows()); }
  int da() const { return dj + dr; }
  // adapted indices: a_j: [0,dj), a_r: [dj,dj+dr), u_j: [dj+dr,dj+dr+uj), u_r: rest
  int idx_ar(int t) const { return dj + t; }
  int idx_uj(int t) const { return dj + dr + t; }
  int idx_ur(int t) const { return dj + dr + uj + t; }
  Vec omega_pair(int p, int q) const;
  /// Coefficients of an ambient vector in the a_j / a_r bases.
  Vec val_aj(const Vec& ambient) const;
  Vec val_ar(const Vec& ambient) const;
};

ShearDecomposition decompose(const PreShearData& data, const Mat& g, const Mat& j,
                             const Tol& tol = {});

/// Residual of A(omega(omega(.,.),.)) over basis triples: the Jacobi
/// obstruction of the sheared bracket.
double check_shear_data(const PreShearData& data);

/// Residual of J^* omega - omega + J(J.omega) over basis pairs, where
/// (J.omega)(X,Y) = -omega(JX,Y) - omega(X,JY).
double check_integrability(const PreShearData& data, const Mat& j);

/// The nine named components of the integrability equation.
struct IntegrabilityBreakdown {
  static constexpr int count = 9;
  std::array<double, count> residual{};
  static const std::array<const char*, count>& names();
  bool all_pass(double eps) const;
  double max_residual() const;
};

IntegrabilityBreakdown integrability_breakdown(const PreShearData& data, const Mat& g,
                                               const Mat& j, const Tol& tol = {});

struct NuForms {
  AltForm nu1, nu2, nu;  // nu = nu1 + 2 nu2
};

NuForms compute_nu(const PreShearData& data, const Mat& g, const Mat& j);

/// Max |form| over wedge tuples drawn from the given factor bases
/// (repeated factors take increasing index tuples).
double restricted_residual(const AltForm& form, const std::vector<Mat>& factors,
                           const std::vector<int>& multiplicities);

/// The operators A_X = -omega_0(JX, .) for X in the a_r basis, split into
/// blocks F (a_r->a_r), G (a_j->a_r), H (a_r->a_j), K (a_j->a_j),
/// with f(X,Y) = F_X Y and h(X,Y) = H_X Y.
struct AOperators {
  int dj = 0, dr = 0;
  std::vector<Mat> f_block, g_block, h_block, k_block;
  Mat j_aj;

  Vec f(int s, int t) const { return f_block[s].col(t); }
  Vec h(int s, int t) const { return h_block[s].col(t); }
  /// K_X for X = sum_t x_t X_t.
  Mat k_of(const Vec& x) const;

  /// Simultaneous eigen data of the K family (filled when the K_X commute
  /// and are jointly diagonalizable; see normal_forms).
  bool has_eigen = false;
  CMat unitary;       // dj_c x dj_c complex
  CMat alpha;         // rows: eigenvalue index i, cols: a_r index -> alpha_i(X_t)
  double eigen_residual = 0;
};

AOperators extract_A(const PreShearData& data, const Mat& g, const Mat& j,
                     const Tol& tol = {});

struct FKReport {
  double k_commute = 0;
  double f_commute = 0;
  double mixed_symmetric = 0;   // K_X H_W + H_X F_W symmetric in (X, W)
  double second_order = 0;      // K_X^T K_W + K_X K_W + K_{f(X,W)} antisymmetric
  bool pass(double eps) const;
  double max_residual() const;
};

FKReport check_FK(const AOperators& ops);

/// Bracket [X,Y] := omega(X,Y) on R^{2n}; requires check_shear_data < eps.
std::pair<LieAlgebra, HermitianStructure> construct_shear(const PreShearData& data,
                                                          const Mat& g, const Mat& j,
                                                          const Tol& tol = {});

// ---------------------------------------------------------------------------
// Random data for property tests and scans.

struct RandomShearSpec {
  int n = 3;
  int a_j_pairs = 1;   // complex dimension of a_J
  int a_r_dim = 1;
  bool rotate = true;             // apply a random U(n) change of frame
  bool project_integrable = false;  // project onto the kernel of the
                                    // (linear) integrability operator
  bool omega1_only = false;         // only Lambda^2 U^* components
  double amplitude = 1.0;
};

PreShearData random_pre_shear(const RandomShearSpec& spec, std::uint64_t seed,
                              const Tol& tol = {});

/// A two-form supported on one adapted basis pair with the given a-valued
/// coefficient; used for targeted single-condition perturbations.
AltForm adapted_pair_form(const ShearDecomposition& d, int p, int q, const Vec& value_ambient);

// JSON: {"n": int, "a_basis": [[...]...], "omega": [{"i","j","value"}...],
//        "metric": optional, "J": optional}; 1-based, i < j.
struct ShearFile {
  PreShearData data;
  Mat g;
  Mat j;
};

ShearFile read_shear_json(const std::string& text, const Tol& tol = {});
std::string write_shear_json(const ShearFile& f, int indent = -1);

}  // namespace skt

#endif
