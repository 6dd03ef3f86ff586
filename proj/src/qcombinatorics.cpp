#include "flowloop/qcombinatorics.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace flowloop {

namespace {

QLaurent one_minus_q_pow(int k) {
  return QLaurent::from_terms({{0, 1}, {2 * k, -1}});
}

QLaurent compute_qbinom(int n, int k) {
  // Cancel matching factors first: for 0 <= k <= n the numerator exponents
  // n-k+1..n and denominator exponents 1..k overlap whenever n-k+1 <= k.
  std::map<int, int> factors;  // exponent -> multiplicity (+num, -den)
  for (int j = 1; j <= k; ++j) {
    ++factors[n - k + j];
    --factors[j];
  }
  QLaurent num = 1, den = 1;
  for (const auto& [e, mult] : factors) {
    if (e == 0) continue;  // only for n-k+j = 0, i.e. a zero factor
    for (int i = 0; i < mult; ++i) num *= one_minus_q_pow(e);
    for (int i = 0; i < -mult; ++i) den *= one_minus_q_pow(e);
  }
  return QLaurent::divide_exact(num, den);
}

}  // namespace

QLaurent qbinom(int n, int k) {
  if (k < 0) return {};
  if (k == 0) return 1;
  // A numerator factor (1 - q^0) vanishes exactly when 0 <= n < k.
  if (n >= 0 && n < k) return {};

  static std::mutex mutex;
  static std::map<std::pair<int, int>, QLaurent> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({n, k}); it != cache.end()) return it->second;
  }
  QLaurent r = compute_qbinom(n, k);
  std::lock_guard lock(mutex);
  return cache.emplace(std::pair{n, k}, std::move(r)).first->second;
}

QLaurent qtrinom(int total, int k1, int k2, int k3) {
  if (k1 < 0 || k2 < 0 || k3 < 0 || k1 + k2 + k3 != total) return {};
  return qbinom(k1 + k2, k2) * qbinom(total, k3);
}

mpz_class generalized_binomial(int n, int k) {
  if (k < 0) return 0;
  mpz_class num = 1, den = 1;
  for (int j = 1; j <= k; ++j) {
    num *= n - k + j;
    den *= j;
  }
  return num / den;
}

}  // namespace flowloop
