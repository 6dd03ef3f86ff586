#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flowloop/braid.hpp"
#include "flowloop/xseries.hpp"

namespace flowloop {

struct PhiOptions {
  /// Largest label (and sector index) enumerated; defaults to the x-order.
  std::optional<int> label_cap;
  /// Recompute with the cap raised by 2 and require identical output.
  bool check_stabilization = true;
  /// Debug only: swap the before/after roles of the labels on inverted
  /// columns.  This orientation does not reproduce the figure-eight series.
  bool mirrored_negative_roles = false;
};

/// Flow loop count of a positive braid closure through the graded traces:
///   Phi = sum_m (1 - q^{2m+n-1} x^n) q^{-m} Tr_{V_{n,m}}(beta).
/// Throws InputError for negative letters or a multi-component closure.
XSeries phi_positive(const BraidWord& word, HalfInt order, const PhiOptions& opts = {});

/// Flow loop count of a homogeneous braid closure through the inverted state
/// sum: labels on negative columns are re-parametrized as -1 - h with h >= 0.
/// Agrees with phi_positive on positive words.
XSeries phi_homogeneous(const BraidWord& word, HalfInt order, const PhiOptions& opts = {});

/// Monomial sign * q^{q_twice/2} * x^{x_twice/2}.
struct Prefactor {
  int sign = 1;
  int q_twice = 0;
  int x_twice = 0;
  XSeries as_series() const;
  /// "-1 * q^(2/2) * x^(1/2)".
  std::string to_string() const;
  friend bool operator==(const Prefactor&, const Prefactor&) = default;
};

struct ZhatResult {
  XSeries phi;
  XSeries zhat;
  Prefactor prefactor;
  BraidStats stats;
  HalfInt genus;
  HalfInt hopf_invariant;
};

/// Phi and Zhat = (-1)^{1+cr_-+col_-} q^{(w-(n-1))/2 + col_-} x^{(w-n)/2 + cr_-} Phi.
ZhatResult zhat(const BraidWord& word, HalfInt order, const PhiOptions& opts = {});

/// Prefactor from braid data; cross-checked against the genus / Hopf
/// invariant form (InternalError on mismatch).
Prefactor zhat_prefactor(const BraidStats& stats);

/// JSON document for a result; integers are decimal strings.
std::string zhat_json(const ZhatResult& r, const BraidWord& word);
/// JSON array of {"x_exp_half", "coeff": [{"q_exp_half", "value"}]} terms.
std::string series_to_json(const XSeries& s);
/// Parses one of the "phi"/"zhat" arrays back into an exact series.
XSeries series_from_json(const std::string& json_array);

/// Hand-derived state sums for the trefoil and figure-eight, evaluated
/// term by term.  Used as oracles for the pipelines above.
enum class ClosedForm { TrefoilBraid, TrefoilDirect, Fig8Braid, Fig8Direct };
XSeries closed_form(ClosedForm which, HalfInt order);

namespace detail {

/// Per-column labels: ordinary label on positive columns, hat label on
/// negative columns.
using HatState = std::vector<int>;

struct Transfer {
  HatState to;
  XSeries weight;
};

/// Sum of positive-column labels minus sum of hat labels.
int conserved_charge(const std::vector<int>& column_sign, const HatState& s);

/// All transfers across one crossing in the inverted state sum, including
/// the (-x) factor on negative crossings.  Transfers whose weight has
/// x-exponent above max_x_twice / 2 are skipped.
std::vector<Transfer> crossing_transfers(const std::vector<int>& column_sign, const HatState& from,
                                         const Letter& letter, int cap, bool mirrored = false,
                                         int max_x_twice = XSeries::kExact);

/// Inverted state sum with every local factor carried explicitly; relates to
/// Phi by a factor (-x)^{cr_-} q^{col_-}.
XSeries inverted_state_sum(const BraidWord& word, int order_twice, int cap, bool mirrored);

}  // namespace detail

}  // namespace flowloop
