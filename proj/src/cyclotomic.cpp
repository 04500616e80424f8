#include "qeuler/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

#include "qeuler/errors.hpp"

namespace qeuler {

unsigned long euler_phi(unsigned long m) {
  if (m == 0) throw DomainError("phi(0) is undefined");
  unsigned long result = m;
  unsigned long n = m;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      result -= result / d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::shared_mutex cache_mutex;
std::map<unsigned long, std::unique_ptr<const std::vector<BigInt>>> cache;

std::vector<BigInt> compute_cyclotomic(unsigned long m) {
  // (x^m - 1) / prod_{d | m, d < m} Phi_d, exact division by monic polynomials.
  std::vector<BigInt> num(m + 1, BigInt(0));
  num[0] = -1;
  num[m] = 1;
  for (unsigned long d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    const std::size_t dn = den.size() - 1;
    std::vector<BigInt> quot(num.size() - dn, BigInt(0));
    for (std::size_t i = num.size(); i-- > dn;) {
      BigInt c = num[i];
      quot[i - dn] = c;
      if (c == 0) continue;
      for (std::size_t k = 0; k <= dn; ++k) num[i - dn + k] -= c * den[k];
    }
    num = std::move(quot);
  }
  return num;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(unsigned long m) {
  if (m == 0) throw DomainError("cyclotomic polynomial of order 0");
  {
    std::shared_lock lock(cache_mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;
  }
  auto computed = std::make_unique<const std::vector<BigInt>>(compute_cyclotomic(m));
  std::unique_lock lock(cache_mutex);
  auto [it, inserted] = cache.try_emplace(m, std::move(computed));
  return *it->second;
}

namespace {

void reduce_in_place(std::vector<Rational>& poly, unsigned long m) {
  const auto& phi = cyclotomic_polynomial(m);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (poly[i] == 0) continue;
    Rational c = poly[i];
    for (std::size_t k = 0; k < deg; ++k) {
      if (phi[k] != 0) poly[i - deg + k] -= c * Rational(phi[k]);
    }
    poly[i] = 0;
  }
  poly.resize(deg, Rational(0));
}

// Solves A x = b over Q, A given by its columns; false when inconsistent.
// Columns must be linearly independent.
bool solve_rational(std::vector<std::vector<Rational>> columns, std::vector<Rational> rhs,
                    std::vector<Rational>& solution) {
  const std::size_t rows = rhs.size();
  const std::size_t cols = columns.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = columns[c][r];
    a[r][cols] = rhs[r];
  }
  std::vector<std::size_t> pivot_row(cols);
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t piv = row;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) throw Error("singular basis in cyclotomic solve");
    std::swap(a[piv], a[row]);
    Rational inv = 1 / a[row][c];
    for (std::size_t k = c; k <= cols; ++k) a[row][k] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t k = c; k <= cols; ++k) a[r][k] -= f * a[row][k];
    }
    pivot_row[c] = row++;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (a[r][cols] != 0) return false;
  solution.assign(cols, Rational(0));
  for (std::size_t c = 0; c < cols; ++c) solution[c] = a[pivot_row[c]][cols];
  return true;
}

}  // namespace

Cyclo::Cyclo(const Rational& value) : order_(1), coeffs_{value} {}

Cyclo::Cyclo(unsigned long order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {}

Cyclo cyclo_reduce(std::span<const Rational> poly, unsigned long m) {
  if (m == 0) throw DomainError("cyclotomic order must be positive");
  std::vector<Rational> c(poly.begin(), poly.end());
  reduce_in_place(c, m);
  return Cyclo(m, std::move(c));
}

Cyclo Cyclo::zeta(unsigned long m, long k) {
  if (m == 0) throw DomainError("cyclotomic order must be positive");
  long e = k % static_cast<long>(m);
  if (e < 0) e += static_cast<long>(m);
  std::vector<Rational> poly(static_cast<std::size_t>(e) + 1, Rational(0));
  poly[static_cast<std::size_t>(e)] = 1;
  return cyclo_reduce(poly, m);
}

bool Cyclo::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational Cyclo::rational_value() const {
  if (!is_rational()) throw DomainError("cyclotomic element " + to_string() + " is not rational");
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

Cyclo Cyclo::lift(unsigned long M) const {
  if (M == 0 || M % order_ != 0)
    throw DomainError("cannot lift Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                      std::to_string(M) + ")");
  if (M == order_) return *this;
  if (is_rational()) {
    std::vector<Rational> c(euler_phi(M), Rational(0));
    c[0] = coeffs_[0];
    return Cyclo(M, std::move(c));
  }
  const std::size_t step = M / order_;
  std::vector<Rational> poly((coeffs_.size() - 1) * step + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i * step] = coeffs_[i];
  reduce_in_place(poly, M);
  return Cyclo(M, std::move(poly));
}

Cyclo Cyclo::project(unsigned long m) const {
  if (m == 0) throw DomainError("cyclotomic order must be positive");
  if (m == order_) return *this;
  if (is_rational()) return Cyclo(rational_value()).lift(m);
  const unsigned long L = std::lcm(m, order_);
  Cyclo self = lift(L);
  std::vector<std::vector<Rational>> basis;
  const unsigned long phi_m = euler_phi(m);
  basis.reserve(phi_m);
  for (unsigned long i = 0; i < phi_m; ++i) basis.push_back(zeta(m, static_cast<long>(i)).lift(L).coeffs_);
  std::vector<Rational> sol;
  if (!solve_rational(std::move(basis), self.coeffs_, sol))
    throw DomainError("element " + to_string() + " does not lie in Q(zeta_" + std::to_string(m) + ")");
  return Cyclo(m, std::move(sol));
}

Cyclo Cyclo::simplified() const {
  if (is_rational()) return Cyclo(rational_value());
  for (unsigned long d = 2; d < order_; ++d) {
    if (order_ % d != 0 || euler_phi(d) >= coeffs_.size()) continue;
    try {
      return project(d);
    } catch (const DomainError&) {
    }
  }
  return *this;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(zeta_" + std::to_string(order_) + ")");
  if (is_rational()) return Cyclo(1 / coeffs_[0]).lift(order_);
  // Columns of the multiplication-by-this matrix; solve M s = e_0.
  const std::size_t n = coeffs_.size();
  std::vector<std::vector<Rational>> columns;
  columns.reserve(n);
  Cyclo col = *this;
  const Cyclo z = zeta(order_, 1);
  for (std::size_t i = 0; i < n; ++i) {
    columns.push_back(col.coeffs_);
    col *= z;
  }
  std::vector<Rational> rhs(n, Rational(0));
  rhs[0] = 1;
  std::vector<Rational> sol;
  solve_rational(std::move(columns), std::move(rhs), sol);
  return Cyclo(order_, std::move(sol));
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& rhs) {
  if (rhs.order_ == order_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }
  if (rhs.is_rational()) {
    coeffs_[0] += rhs.coeffs_[0];
    return *this;
  }
  const unsigned long L = std::lcm(order_, rhs.order_);
  *this = lift(L);
  Cyclo b = rhs.lift(L);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& rhs) { return *this += -rhs; }

Cyclo& Cyclo::operator*=(const Cyclo& rhs) {
  if (&rhs == this) {
    const Cyclo copy = rhs;
    return *this *= copy;
  }
  if (rhs.is_rational()) {
    const Rational& s = rhs.coeffs_[0];
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  if (is_rational()) {
    Rational s = coeffs_[0];
    Cyclo r = rhs;
    for (auto& c : r.coeffs_) c *= s;
    return *this = std::move(r);
  }
  const unsigned long L = std::lcm(order_, rhs.order_);
  Cyclo a = order_ == L ? std::move(*this) : lift(L);
  Cyclo b = rhs.order_ == L ? rhs : rhs.lift(L);
  std::vector<Rational> prod(2 * a.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  reduce_in_place(prod, L);
  order_ = L;
  coeffs_ = std::move(prod);
  return *this;
}

Cyclo& Cyclo::operator/=(const Cyclo& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  const unsigned long L = std::lcm(a.order_, b.order_);
  return a.lift(L).coeffs_ == b.lift(L).coeffs_;
}

std::string Cyclo::to_string() const {
  if (is_rational()) return qeuler::to_string(rational_value());
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ',';
    os << coeffs_[i].get_str();
  }
  os << "]@" << order_;
  return os.str();
}

Cyclo pow(const Cyclo& x, long k) {
  if (k < 0) return pow(x.inverse(), -k);
  Cyclo result = Cyclo(1).lift(x.order());
  Cyclo base = x;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Cyclo rational_power(const Cyclo& x, const Rational& e) {
  if (e.get_den() != 1)
    throw DomainError("exact mode needs an integral exponent, got " + to_string(e) +
                      " (re-parameterize q as a power of a base)");
  return pow(x, e.get_num().get_si());
}

unsigned long root_of_unity_order(const Cyclo& x) {
  // Roots of unity in Q(zeta_m) have order dividing lcm(2, m).
  const unsigned long bound = x.order() % 2 ? 2 * x.order() : x.order();
  Cyclo power = x;
  for (unsigned long k = 1; k <= bound; ++k) {
    if (power == Cyclo(1)) return k;
    power *= x;
  }
  throw DomainError(x.to_string() + " is not a root of unity");
}

}  // namespace qeuler
