#include "macaulay/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace macaulay {

std::uint64_t Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial q(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] -= divisor.exps_[i];
  return q;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a);
  for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial m(a);
  for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m(a);
  for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] += b.exps_[i];
  return m;
}

int compare_degrevlex(const Monomial& a, const Monomial& b) {
  auto da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int compare_storage(const ModuleMonomial& a, const ModuleMonomial& b) {
  if (a.component != b.component) return a.component < b.component ? -1 : 1;
  return -compare_degrevlex(a.monomial, b.monomial);
}

}  // namespace macaulay
