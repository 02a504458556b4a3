#ifndef SKT_IO_HPP
#define SKT_IO_HPP

#include <optional>
#include <string>

#include "skt/hermitian.hpp"
#include "skt/lie.hpp"

namespace skt {

/// An algebra file: structure constants plus optional metric and J.
/// Schema: {"dim": N, "structure": [{"i","j","k","c"}...],
///          "metric": optional NxN, "J": optional NxN}; indices 1-based, i<j.
struct AlgebraFile {
  LieAlgebra algebra;
  std::optional<Mat> metric;
  std::optional<Mat> j;

  /// Hermitian structure with the stored or default (identity, standard J)
  /// pair.  Requires even dimension when J is not supplied.
  HermitianStructure hermitian() const;
};

AlgebraFile read_algebra_json(const std::string& text);
std::string write_algebra_json(const AlgebraFile& f, int indent = -1);

}  // namespace skt

#endif
