#ifndef SKT_TEST_HELPERS_HPP
#define SKT_TEST_HELPERS_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "skt/forms.hpp"

namespace skt::test {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double unif(std::mt19937_64& g, double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline Vec random_vec(std::mt19937_64& g, int n, double lo = -1.0, double hi = 1.0) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = unif(g, lo, hi);
  return v;
}

inline Mat random_mat(std::mt19937_64& g, int r, int c, double lo = -1.0, double hi = 1.0) {
  Mat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = unif(g, lo, hi);
  return m;
}

inline Mat random_orthogonal(std::mt19937_64& g, int n) {
  Mat m = random_mat(g, n, n);
  Eigen::HouseholderQR<Mat> qr(m);
  Mat q = qr.householderQ();
  return q;
}

// Dense multilinear map of given arity as a plain coefficient table,
// independent of AltForm storage.
struct DenseTensor {
  int arity, dim, width;
  std::vector<double> data;

  DenseTensor(std::mt19937_64& g, int arity_, int dim_, int width_)
      : arity(arity_), dim(dim_), width(width_) {
    long total = width;
    for (int i = 0; i < arity; ++i) total *= dim;
    data.resize(total);
    for (auto& x : data) x = unif(g);
  }

  long flat(const int* idx) const {
    long f = 0;
    for (int i = 0; i < arity; ++i) f = f * dim + idx[i];
    return f * width;
  }

  Vec operator()(const int* idx, int) const {
    Vec v(width);
    for (int w = 0; w < width; ++w) v(w) = data[flat(idx) + w];
    return v;
  }
};

// Definition-level oracle: (a ^ b)(v_1..v_{p+q}) as the full permutation sum
// with 1/(p! q!) weights, evaluated on general vector arguments.
inline double wedge_oracle(const AltForm& a, const AltForm& b, const Mat& args) {
  int p = a.degree(), q = b.degree();
  std::vector<int> perm(p + q);
  for (int i = 0; i < p + q; ++i) perm[i] = i;
  double sum = 0;
  do {
    int inv = 0;
    for (int i = 0; i < p + q; ++i)
      for (int j = i + 1; j < p + q; ++j)
        if (perm[i] > perm[j]) ++inv;
    double sign = (inv % 2 == 0) ? 1.0 : -1.0;
    Mat la(args.rows(), p), rb(args.rows(), q);
    for (int i = 0; i < p; ++i) la.col(i) = args.col(perm[i]);
    for (int i = 0; i < q; ++i) rb.col(i) = args.col(perm[p + i]);
    sum += sign * a.eval_scalar(la) * b.eval_scalar(rb);
  } while (std::next_permutation(perm.begin(), perm.end()));
  double fact = 1;
  for (int i = 2; i <= p; ++i) fact *= i;
  for (int i = 2; i <= q; ++i) fact *= i;
  return sum / fact;
}

}  // namespace skt::test

#endif
