#include "skt/hermitian.hpp"

namespace skt {

double HermitianStructure::compatibility_residual() const {
  const int n = dim();
  double r1 = (j * j + Mat::Identity(n, n)).cwiseAbs().maxCoeff();
  double r2 = (j.transpose() * g * j - g).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Mat> es(g);
  double r3 = es.eigenvalues().minCoeff() <= 0 ? 1.0 : 0.0;
  return std::max({r1, r2, r3});
}

AltForm ce_differential(const LieAlgebra& l, const AltForm& a) {
  const int k = a.degree();
  if (k > 3) throw PreconditionError("ce_differential: degree must be <= 3");
  if (a.dim() != l.dim()) throw InputError("ce_differential: dimension mismatch");
  const int n = l.dim();
  AltForm d(k + 1, n, a.value_dim());
  const auto tuples = increasing_tuples(n, k + 1);
  std::vector<int> rest(std::max(0, k - 1));
  for (const auto& tu : tuples) {
    Vec acc = Vec::Zero(d.width());
    for (int i = 0; i <= k; ++i)
      for (int j2 = i + 1; j2 <= k; ++j2) {
        Vec br = l.bracket_basis(tu[i], tu[j2]);
        int w = 0;
        for (int s = 0; s <= k; ++s)
          if (s != i && s != j2) rest[w++] = tu[s];
        // a(br, e_rest...) expanded over the first slot
        Vec term = Vec::Zero(d.width());
        std::vector<int> args(k);
        for (int s = 0; s < k - 1; ++s) args[s + 1] = rest[s];
        for (int b = 0; b < n; ++b) {
          if (br(b) == 0.0) continue;
          args[0] = b;
          term += br(b) * a.at(args.data(), k);
        }
        double sign = ((i + j2) % 2 == 0) ? 1.0 : -1.0;
        acc += sign * term;
      }
    d.add(tu.data(), k + 1, acc);
  }
  return d;
}

double nijenhuis_norm(const LieAlgebra& l, const Mat& j) {
  const int n = l.dim();
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Vec ja = j.col(a), jb = j.col(b);
      Vec nij = l.bracket(ja, jb) - l.bracket_basis(a, b) - j * l.bracket(ja, Vec::Unit(n, b)) -
                j * l.bracket(Vec::Unit(n, a), jb);
      worst = std::max(worst, nij.cwiseAbs().maxCoeff());
    }
  return worst;
}

AltForm torsion_three_form(const HermitianStructure& h) {
  AltForm sigma = fundamental_form(h.g, h.j);
  AltForm dsigma = ce_differential(h.algebra, sigma);
  return dsigma.pullback(h.j) * -1.0;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kahler: return "kahler";
    case Verdict::skt_strict: return "skt_strict";
    case Verdict::hermitian_not_skt: return "hermitian_not_skt";
    case Verdict::not_integrable: return "not_integrable";
    case Verdict::not_hermitian: return "not_hermitian";
  }
  return "?";
}

SktReport skt_verdict(const HermitianStructure& h, double tol_eps) {
  SktReport r;
  r.scale = std::max(1.0, h.algebra.max_structure_constant());
  r.compatibility = h.compatibility_residual();
  if (r.compatibility > tol_eps) {
    r.verdict = Verdict::not_hermitian;
    return r;
  }
  r.nijenhuis = nijenhuis_norm(h.algebra, h.j);
  AltForm sigma = fundamental_form(h.g, h.j);
  AltForm dsigma = ce_differential(h.algebra, sigma);
  r.dsigma_norm = dsigma.norm_inf();
  if (h.dim() >= 3) {
    AltForm c = dsigma.pullback(h.j) * -1.0;
    r.dc_norm = h.dim() >= 4 ? ce_differential(h.algebra, c).norm_inf() : 0.0;
  }
  if (r.nijenhuis > tol_eps * r.scale) {
    r.verdict = Verdict::not_integrable;
    return r;
  }
  if (r.dsigma_norm <= tol_eps * r.scale) {
    r.verdict = Verdict::kahler;
    return r;
  }
  double cube = r.scale * r.scale * r.scale;
  r.verdict = r.dc_norm <= tol_eps * cube ? Verdict::skt_strict : Verdict::hermitian_not_skt;
  return r;
}

}  // namespace skt
