#include "skt/lie.hpp"

#include <sstream>

namespace skt {

namespace {
long pair_rank(int i, int j) {
  int idx[2] = {i, j};
  return tuple_rank(idx, 2);
}
}  // namespace

LieAlgebra::LieAlgebra(int dim) : n_(dim) {
  if (dim < 1) throw InputError("LieAlgebra: dimension must be positive");
  c_ = Mat::Zero(binomial(dim, 2), dim);
}

LieAlgebra LieAlgebra::abelian(int dim) { return LieAlgebra(dim); }

Vec LieAlgebra::bracket_basis(int i, int j) const {
  if (i == j) return Vec::Zero(n_);
  if (i < j) return c_.row(pair_rank(i, j)).transpose();
  return -c_.row(pair_rank(j, i)).transpose();
}

void LieAlgebra::set_bracket(int i, int j, const Vec& v) {
  if (i == j) throw InputError("set_bracket: equal indices");
  if (i < j)
    c_.row(pair_rank(i, j)) = v.transpose();
  else
    c_.row(pair_rank(j, i)) = -v.transpose();
}

void LieAlgebra::add_bracket(int i, int j, const Vec& v) {
  if (i == j) return;
  if (i < j)
    c_.row(pair_rank(i, j)) += v.transpose();
  else
    c_.row(pair_rank(j, i)) -= v.transpose();
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec out = Vec::Zero(n_);
  for (int i = 0; i < n_; ++i) {
    if (x(i) == 0.0 && y(i) == 0.0) continue;
    for (int j = i + 1; j < n_; ++j) {
      double w = x(i) * y(j) - x(j) * y(i);
      if (w != 0.0) out += w * c_.row(pair_rank(i, j)).transpose();
    }
  }
  return out;
}

LieAlgebra LieAlgebra::change_basis(const Mat& basis) const {
  LieAlgebra out(n_);
  Eigen::PartialPivLU<Mat> lu(basis);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      out.set_bracket(i, j, lu.solve(bracket(basis.col(i), basis.col(j))));
  return out;
}

double LieAlgebra::max_structure_constant() const {
  return c_.size() == 0 ? 0.0 : c_.cwiseAbs().maxCoeff();
}

bool Fingerprint::operator==(const Fingerprint& o) const {
  return dim == o.dim && derived_dims == o.derived_dims &&
         lower_central_dims == o.lower_central_dims && center_dim == o.center_dim &&
         second_derived_dim == o.second_derived_dim &&
         abelianization_dim == o.abelianization_dim;
}

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  os << "dim=" << dim << " derived=(";
  for (size_t i = 0; i < derived_dims.size(); ++i)
    os << (i ? "," : "") << derived_dims[i];
  os << ") lcs=(";
  for (size_t i = 0; i < lower_central_dims.size(); ++i)
    os << (i ? "," : "") << lower_central_dims[i];
  os << ") center=" << center_dim << " [g',g']=" << second_derived_dim
     << " ab=" << abelianization_dim;
  return os.str();
}

double jacobi_residual(const LieAlgebra& l) {
  const int n = l.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec r = l.bracket(l.bracket_basis(i, j), Vec::Unit(n, k)) +
                l.bracket(l.bracket_basis(j, k), Vec::Unit(n, i)) +
                l.bracket(l.bracket_basis(k, i), Vec::Unit(n, j));
        worst = std::max(worst, r.cwiseAbs().maxCoeff());
      }
  return worst;
}

namespace {

// Span of brackets of the column spaces of a and b.
Mat bracket_span(const LieAlgebra& l, const Mat& a, const Mat& b, const Tol& tol) {
  Mat prods(l.dim(), a.cols() * b.cols());
  long col = 0;
  for (int i = 0; i < a.cols(); ++i)
    for (int j = 0; j < b.cols(); ++j) prods.col(col++) = l.bracket(a.col(i), b.col(j));
  return column_span(prods, tol.eps_rank);
}

}  // namespace

Mat commutator_ideal(const LieAlgebra& l, const Tol& tol) {
  Mat id = Mat::Identity(l.dim(), l.dim());
  return bracket_span(l, id, id, tol);
}

Mat center(const LieAlgebra& l, const Tol& tol) {
  const int n = l.dim();
  Mat m(n * n, n);
  for (int v = 0; v < n; ++v) {
    Mat adv = ad(l, Vec::Unit(n, v));
    m.col(v) = Eigen::Map<Vec>(adv.data(), n * n);
  }
  return kernel(m, tol.eps_rank);
}

Mat ad(const LieAlgebra& l, const Vec& x) {
  const int n = l.dim();
  Mat m(n, n);
  for (int j = 0; j < n; ++j) m.col(j) = l.bracket(x, Vec::Unit(n, j));
  return m;
}

Fingerprint series(const LieAlgebra& l, const Tol& tol) {
  Fingerprint fp;
  fp.dim = l.dim();

  // Both series are descending chains of ideals/subalgebras, so a repeated
  // dimension means the chain has stabilized.  The repeated value is kept
  // once, so nilpotent profiles end in 0 and non-nilpotent ones do not.
  Mat cur = Mat::Identity(l.dim(), l.dim());
  fp.derived_dims.push_back(l.dim());
  while (true) {
    Mat next = bracket_span(l, cur, cur, tol);
    int d = static_cast<int>(next.cols());
    bool stable = d == fp.derived_dims.back();
    fp.derived_dims.push_back(d);
    cur = next;
    if (d == 0 || stable) break;
  }
  Mat g1 = commutator_ideal(l, tol);
  fp.second_derived_dim = static_cast<int>(bracket_span(l, g1, g1, tol).cols());

  Mat id = Mat::Identity(l.dim(), l.dim());
  Mat lc = id;
  fp.lower_central_dims.push_back(l.dim());
  while (true) {
    Mat next = bracket_span(l, id, lc, tol);
    int d = static_cast<int>(next.cols());
    bool stable = d == fp.lower_central_dims.back();
    fp.lower_central_dims.push_back(d);
    lc = next;
    if (d == 0 || stable) break;
  }

  fp.center_dim = static_cast<int>(center(l, tol).cols());
  fp.abelianization_dim =
      fp.dim - (fp.derived_dims.size() > 1 ? fp.derived_dims[1] : 0);
  return fp;
}

bool is_abelian(const LieAlgebra& l, const Tol& tol) {
  return l.max_structure_constant() <= tol.eps;
}

bool is_two_step_solvable(const LieAlgebra& l, const Tol& tol) {
  if (is_abelian(l, tol)) return true;
  Mat d1 = commutator_ideal(l, tol);
  Mat d2 = bracket_span(l, d1, d1, tol);
  return d2.cols() == 0;
}

bool is_nilpotent(const LieAlgebra& l, const Tol& tol) {
  Fingerprint fp = series(l, tol);
  return fp.lower_central_dims.back() == 0;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  LieAlgebra out(a.dim() + b.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j) {
      Vec v = Vec::Zero(out.dim());
      v.head(a.dim()) = a.bracket_basis(i, j);
      out.set_bracket(i, j, v);
    }
  for (int i = 0; i < b.dim(); ++i)
    for (int j = i + 1; j < b.dim(); ++j) {
      Vec v = Vec::Zero(out.dim());
      v.tail(b.dim()) = b.bracket_basis(i, j);
      out.set_bracket(a.dim() + i, a.dim() + j, v);
    }
  return out;
}

}  // namespace skt
