#ifndef SKT_COMMON_HPP
#define SKT_COMMON_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace skt {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using Complex = std::complex<double>;

/// Absolute tolerance for "= 0" verdicts and rank decisions.
/// Both are configurable from the CLI (--tol, SKT_TOL).
struct Tol {
  double eps = 1e-9;
  double eps_rank = 1e-7;
};

/// Malformed input: bad JSON, bad notation string, unknown name, bad flags.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition of an operation does not hold for the data.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A bounded numeric search exhausted its budget without a certificate.
struct SearchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool all_finite(const Mat& m) { return m.allFinite(); }

/// Deterministic per-index stream seed; independent of worker scheduling.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace skt

#endif
