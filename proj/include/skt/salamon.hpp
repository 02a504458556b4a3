#ifndef SKT_SALAMON_HPP
#define SKT_SALAMON_HPP

#include <map>
#include <string>

#include "skt/lie.hpp"

namespace skt {

using ParamMap = std::map<std::string, double>;

/// Parses a differential tuple in Salamon notation, e.g. "(0,0,21)" or
/// "(0,lambda.21+31,-21+lambda.31)".  Entry m gives de^m; the bracket is
/// recovered through the convention  d a (X, Y) = -a([X, Y]).
/// Dimensions up to 9 (digit-pair indices).  The result is checked against
/// the Jacobi identity; a violation raises PreconditionError.
LieAlgebra parse_salamon(const std::string& text, const ParamMap& params = {},
                         const Tol& tol = {});

/// Canonical tuple for a Lie algebra; parse_salamon(print_salamon(L)) == L.
std::string print_salamon(const LieAlgebra& l);

/// Named algebras of the catalog with their parameter-range validation.
/// Names: abelian(n), aff, h(k) [dim 2k+1], r3p, r4, r4p, g5_14, g5_17,
/// g6_1, g6_8, g6_11, n37D; plus the shorthands h3, h5, h7, R.
LieAlgebra catalog(const std::string& name, const ParamMap& params = {},
                   const Tol& tol = {});

/// True iff the fingerprint of l equals the fingerprint of the catalog
/// expression, e.g. "h3 + R^3", "2aff + R^2", "g5_14 + R".
bool fingerprint_match(const LieAlgebra& l, const std::string& target,
                       const ParamMap& params = {}, const Tol& tol = {});

/// Builds the direct sum described by a catalog expression.
LieAlgebra catalog_expression(const std::string& target, const ParamMap& params = {},
                              const Tol& tol = {});

}  // namespace skt

#endif
