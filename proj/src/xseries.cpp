#include "flowloop/xseries.hpp"

#include <algorithm>

#include "flowloop/error.hpp"

namespace flowloop {

namespace {

int sat_add(int a, int b) {
  if (a == XSeries::kExact || b == XSeries::kExact) return XSeries::kExact;
  return a + b;
}

}  // namespace

XSeries XSeries::monomial(int x_twice, const QLaurent& coeff, int order_twice) {
  XSeries s(order_twice);
  s.add_term(x_twice, coeff);
  return s;
}

QLaurent XSeries::coefficient(int x_twice) const {
  auto it = terms_.find(x_twice);
  return it == terms_.end() ? QLaurent{} : it->second;
}

void XSeries::add_term(int x_twice, const QLaurent& c) {
  if (c.is_zero() || x_twice > order_) return;
  auto [it, inserted] = terms_.try_emplace(x_twice, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool XSeries::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) {
    return kv.first % 2 == 0 && kv.second.is_integral();
  });
}

XSeries XSeries::operator-() const {
  XSeries r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

XSeries& XSeries::operator+=(const XSeries& o) {
  order_ = std::min(order_, o.order_);
  for (auto it = terms_.upper_bound(order_); it != terms_.end();) it = terms_.erase(it);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

XSeries& XSeries::operator-=(const XSeries& o) { return *this += -o; }

XSeries operator*(const XSeries& a, const XSeries& b) {
  const int low_a = a.is_zero() ? 0 : std::min(0, a.min_exponent());
  const int low_b = b.is_zero() ? 0 : std::min(0, b.min_exponent());
  int order;
  if (a.is_exact() && b.is_exact()) {
    order = XSeries::kExact;
  } else if (a.is_exact()) {
    order = a.is_zero() ? XSeries::kExact : sat_add(b.order_, a.min_exponent());
  } else if (b.is_exact()) {
    order = b.is_zero() ? XSeries::kExact : sat_add(a.order_, b.min_exponent());
  } else {
    order = std::min(a.order_ + low_b, b.order_ + low_a);
  }
  XSeries r(order);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      if (ea + eb > order) break;
      r.add_term(ea + eb, ca * cb);
    }
  }
  return r;
}

XSeries XSeries::scaled(const QLaurent& c) const {
  XSeries r(order_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

XSeries XSeries::shifted_x(int twice) const {
  XSeries r(sat_add(order_, twice));
  for (const auto& [e, v] : terms_) r.terms_.emplace(e + twice, v);
  return r;
}

XSeries XSeries::shifted_q(int twice) const {
  XSeries r(order_);
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v.shifted(twice));
  return r;
}

XSeries XSeries::truncated_to(int order_twice) const {
  XSeries r(std::min(order_, order_twice));
  for (const auto& [e, v] : terms_) {
    if (e > r.order_) break;
    r.terms_.emplace(e, v);
  }
  return r;
}

XSeries XSeries::at_q_one() const {
  XSeries r(order_);
  for (const auto& [e, v] : terms_) r.add_term(e, QLaurent::constant(v.at_one()));
  return r;
}

XSeries XSeries::inverted_x() const {
  if (!is_exact()) throw InternalError("XSeries::inverted_x on a truncated series");
  XSeries r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(-e, v);
  return r;
}

XSeries XSeries::inverted_q() const {
  XSeries r(order_);
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v.inverted());
  return r;
}

QLaurent XSeries::x_as_q_power(int k) const {
  if (!is_exact()) throw InternalError("XSeries::x_as_q_power on a truncated series");
  QLaurent r;
  for (const auto& [e, v] : terms_) r += v.shifted(e * k);
  return r;
}

XSeries XSeries::inverse() const {
  if (is_zero() || min_exponent() != 0 || !terms_.begin()->second.is_unit())
    throw InternalError("XSeries::inverse: constant term is not a unit monomial");
  if (is_exact()) throw InternalError("XSeries::inverse: needs a truncation order");
  const QLaurent& c0 = terms_.begin()->second;
  // c0^{-1} for a unit monomial s*q^k is s*q^{-k}.
  const QLaurent c0_inv = QLaurent::monomial(-c0.min_exponent(), c0.terms().front().second);
  // Exponents live on the lattice generated by the stored exponents; half
  // units cover every case.
  XSeries r(order_);
  std::map<int, QLaurent> inv;
  inv.emplace(0, c0_inv);
  for (int e = 1; e <= order_; ++e) {
    QLaurent acc;
    for (const auto& [k, a] : terms_) {
      if (k == 0) continue;
      if (k > e) break;
      auto it = inv.find(e - k);
      if (it != inv.end()) acc += a * it->second;
    }
    if (!acc.is_zero()) inv.emplace(e, -(acc * c0_inv));
  }
  for (auto& [e, v] : inv) r.add_term(e, v);
  return r;
}

bool XSeries::agrees_to(const XSeries& o, int order_twice) const {
  auto upto = [order_twice](const XSeries& s) {
    std::map<int, QLaurent> m;
    for (const auto& [e, v] : s.terms_)
      if (e <= order_twice) m.emplace(e, v);
    return m;
  };
  return upto(*this) == upto(o);
}

}  // namespace flowloop
