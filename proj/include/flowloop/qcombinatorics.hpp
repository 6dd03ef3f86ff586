#pragma once

#include "flowloop/qlaurent.hpp"

namespace flowloop {

/// Generalized Gaussian binomial
///   prod_{j=1}^{k} (1 - q^{n-k+j}) / (1 - q^j)
/// for any integer n and k >= 0; zero for k < 0.
QLaurent qbinom(int n, int k);

/// Same coefficient with q replaced by q^{-1}.
inline QLaurent qbinom_inv(int n, int k) { return qbinom(n, k).inverted(); }

/// [N; k1, k2, k3]_q = [k1+k2; k2]_q [N; k3]_q when k1+k2+k3 = N and all
/// k_i >= 0, zero otherwise.
QLaurent qtrinom(int total, int k1, int k2, int k3);

/// Ordinary integer binomial C(n, k) for arbitrary integer n and k >= 0.
mpz_class generalized_binomial(int n, int k);

}  // namespace flowloop
