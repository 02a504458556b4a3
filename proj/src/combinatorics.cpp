#include "skt/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace skt {

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long tuple_rank(const int* idx, int k) {
  long r = 0;
  for (int t = 0; t < k; ++t) r += binomial(idx[t], t + 1);
  return r;
}

void tuple_unrank(long rank, int k, int* idx_out) {
  for (int t = k; t >= 1; --t) {
    int v = t - 1;
    while (binomial(v + 1, t) <= rank) ++v;
    idx_out[t - 1] = v;
    rank -= binomial(v, t);
  }
}

std::vector<std::vector<int>> increasing_tuples(int n, int k) {
  std::vector<std::vector<int>> out;
  out.reserve(binomial(n, k));
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  if (k > n) return out;
  while (true) {
    out.push_back(idx);
    int t = k - 1;
    while (t >= 0 && idx[t] == n - k + t) --t;
    if (t < 0) break;
    ++idx[t];
    for (int s = t + 1; s < k; ++s) idx[s] = idx[s - 1] + 1;
  }
  std::sort(out.begin(), out.end(), [k](const auto& a, const auto& b) {
    return tuple_rank(a.data(), k) < tuple_rank(b.data(), k);
  });
  return out;
}

int sort_sign(int* idx, int k) {
  int sign = 1;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j + 1 < k - i; ++j) {
      if (idx[j] == idx[j + 1]) return 0;
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
    }
  return sign;
}

}  // namespace skt
