#ifndef SKT_COMBINATORICS_HPP
#define SKT_COMBINATORICS_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace skt {

long binomial(int n, int k);

/// Strictly increasing index tuples (0-based) enumerated in colex order,
/// ranked by the combinatorial number system:
///   rank(i_1 < ... < i_k) = C(i_1,1) + C(i_2,2) + ... + C(i_k,k).
long tuple_rank(const int* idx, int k);
void tuple_unrank(long rank, int k, int* idx_out);

/// All increasing k-tuples from {0..n-1} in rank order.
std::vector<std::vector<int>> increasing_tuples(int n, int k);

/// Sorts idx in place; returns the sign of the sorting permutation,
/// or 0 if two entries coincide.
int sort_sign(int* idx, int k);

}  // namespace skt

#endif
