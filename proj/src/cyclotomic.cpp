#include "ss4/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ss4 {

namespace {

// Exact division of integer polynomials, quotient only. Divisor is monic.
std::vector<mpz_class> divide_exact(const std::vector<mpz_class>& num,
                                    const std::vector<mpz_class>& den) {
  std::vector<mpz_class> rem = num;
  std::vector<mpz_class> quot(num.size() - den.size() + 1, mpz_class(0));
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    const mpz_class c = rem[k + den.size() - 1];
    quot[k] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < den.size(); ++j) rem[k + j] -= c * den[j];
  }
  return quot;
}

std::map<int, std::vector<mpz_class>>& phi_cache() {
  static std::map<int, std::vector<mpz_class>> cache;
  return cache;
}
std::mutex phi_mutex;

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: N must be >= 1");
  std::lock_guard<std::mutex> lock(phi_mutex);
  auto it = phi_cache().find(n);
  if (it != phi_cache().end()) return it->second;
  // Divisors are strictly smaller, so fill the cache ascending.
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0 || phi_cache().count(d)) continue;
    std::vector<mpz_class> acc(d + 1, mpz_class(0));  // x^d - 1
    acc[0] = -1;
    acc[d] = 1;
    if (d > 1) {
      for (int e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        acc = divide_exact(acc, phi_cache().at(e));
      }
    }
    phi_cache()[d] = std::move(acc);
  }
  return phi_cache().at(n);
}

int totient(int n) {
  return static_cast<int>(cyclotomic_polynomial(n).size()) - 1;
}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  check_order();
  for (auto& c : coeffs_) c.canonicalize();
  reduce();
}

void Cyclotomic::check_order() const {
  if (order_ < 1) throw std::invalid_argument("Cyclotomic: N must be >= 1");
}

Cyclotomic Cyclotomic::from_rational(const Rational& q, int order) {
  Cyclotomic c(order);
  if (q != 0) c.coeffs_ = {q};
  if (!c.coeffs_.empty()) c.coeffs_[0].canonicalize();
  c.reduce();
  return c;
}

Cyclotomic Cyclotomic::integer(long v, int order) {
  return from_rational(Rational(v), order);
}

Cyclotomic Cyclotomic::zeta_pow(int order, long e) {
  long r = e % order;
  if (r < 0) r += order;
  std::vector<Rational> coeffs(static_cast<size_t>(r) + 1, Rational(0));
  coeffs[static_cast<size_t>(r)] = 1;
  return Cyclotomic(order, std::move(coeffs));
}

Rational Cyclotomic::rational_part() const {
  if (coeffs_.empty()) return Rational(0);
  return coeffs_[0];
}

void Cyclotomic::reduce() {
  const std::vector<mpz_class>& phi = cyclotomic_polynomial(order_);
  const size_t deg = phi.size() - 1;  // phi(N)
  // Polynomial remainder mod the monic Phi_N.
  while (coeffs_.size() > deg) {
    const Rational lead = coeffs_.back();
    const size_t k = coeffs_.size() - 1 - deg;
    if (lead != 0) {
      for (size_t j = 0; j < deg; ++j) {
        coeffs_[k + j] -= lead * Rational(phi[j]);
        coeffs_[k + j].canonicalize();
      }
    }
    coeffs_.pop_back();
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Cyclotomic Cyclotomic::embedded(int new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0)
    throw std::invalid_argument("Cyclotomic::embedded: target order not a multiple");
  const int stride = new_order / order_;
  std::vector<Rational> coeffs;
  if (!coeffs_.empty()) {
    coeffs.assign((coeffs_.size() - 1) * stride + 1, Rational(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) coeffs[k * stride] = coeffs_[k];
  }
  return Cyclotomic(new_order, std::move(coeffs));
}

namespace {
long lcm_order(int a, int b) { return std::lcm<long>(a, b); }
}  // namespace

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
  const long n = lcm_order(order_, rhs.order_);
  Cyclotomic a = embedded(static_cast<int>(n));
  Cyclotomic b = rhs.embedded(static_cast<int>(n));
  if (a.coeffs_.size() < b.coeffs_.size()) a.coeffs_.resize(b.coeffs_.size(), Rational(0));
  for (size_t k = 0; k < b.coeffs_.size(); ++k) {
    a.coeffs_[k] += b.coeffs_[k];
    a.coeffs_[k].canonicalize();
  }
  a.reduce();
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const { return *this + (-rhs); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
  const long n = lcm_order(order_, rhs.order_);
  Cyclotomic a = embedded(static_cast<int>(n));
  Cyclotomic b = rhs.embedded(static_cast<int>(n));
  if (a.coeffs_.empty() || b.coeffs_.empty()) return Cyclotomic(static_cast<int>(n));
  std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Cyclotomic(static_cast<int>(n), std::move(prod));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) { return *this = *this + rhs; }
Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this = *this - rhs; }
Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

namespace {

using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder and quotient of a by b over Q, b nonzero.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  Poly quot;
  if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, Rational(0));
  const Rational lead = b.back();
  while (a.size() >= b.size()) {
    const Rational c = a.back() / lead;
    const size_t k = a.size() - b.size();
    quot[k] = c;
    for (size_t j = 0; j + 1 < b.size(); ++j) {
      a[k + j] -= c * b[j];
      a[k + j].canonicalize();
    }
    a.pop_back();  // leading term cancels exactly
    poly_trim(a);
  }
  return {quot, a};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  poly_trim(out);
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
  poly_trim(a);
  return a;
}

}  // namespace

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("Cyclotomic::inverse: division by zero");
  // Extended Euclid: u*a + w*Phi_N = g with g a nonzero constant.
  Poly r0;
  for (const mpz_class& c : cyclotomic_polynomial(order_)) r0.emplace_back(Rational(c));
  Poly r1 = coeffs_;
  Poly u0 = {}, u1 = {Rational(1)};  // coefficients of `a` in r0, r1
  while (true) {
    auto [q, r2] = poly_divmod(r0, r1);
    if (r2.empty()) break;
    Poly u2 = poly_sub(u0, poly_mul(q, u1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  // r1 is the gcd, constant since Phi_N is irreducible and a != 0 mod Phi_N.
  if (r1.size() != 1)
    throw std::logic_error("Cyclotomic::inverse: non-constant gcd with Phi_N");
  const Rational g = r1[0];
  for (auto& c : u1) {
    c /= g;
    c.canonicalize();
  }
  return Cyclotomic(order_, std::move(u1));
}

bool Cyclotomic::operator==(const Cyclotomic& rhs) const {
  if (order_ == rhs.order_) return coeffs_ == rhs.coeffs_;
  const long n = lcm_order(order_, rhs.order_);
  return embedded(static_cast<int>(n)).coeffs_ == rhs.embedded(static_cast<int>(n)).coeffs_;
}

namespace {
std::string rat_str(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}
}  // namespace

std::string Cyclotomic::str() const {
  std::ostringstream os;
  if (coeffs_.empty()) {
    os << "0";
  } else if (coeffs_.size() == 1) {
    os << rat_str(coeffs_[0]);
  } else {
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      if (!first) os << " + ";
      os << "(" << rat_str(coeffs_[k]) << ")";
      if (k > 0) os << "*z^" << k;
      first = false;
    }
  }
  os << " [N=" << order_ << "]";
  return os.str();
}

std::string Cyclotomic::literal() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << "+";
    os << rat_str(coeffs_[k]);
    if (k > 0) os << "*z^" << k;
    first = false;
  }
  return os.str();
}

Cyclotomic Cyclotomic::parse(const std::string& text, int order) {
  std::string s;
  for (char c : text) {
    if (c == ' ' || c == '(' || c == ')') continue;
    s += c;
  }
  if (s.empty()) throw std::invalid_argument("Cyclotomic::parse: empty literal");
  std::vector<Rational> coeffs;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find('+', pos + 1);  // sign at pos belongs to the term
    if (next == std::string::npos) next = s.size();
    std::string term = s.substr(pos, next - pos);
    if (!term.empty() && term[0] == '+') term = term.substr(1);
    long power = 0;
    if (size_t star = term.find("*z^"); star != std::string::npos) {
      power = std::stol(term.substr(star + 3));
      term = term.substr(0, star);
    } else if (term == "z" || term.rfind("z^", 0) == 0) {
      power = term == "z" ? 1 : std::stol(term.substr(2));
      term = "1";
    }
    if (term.empty()) throw std::invalid_argument("Cyclotomic::parse: bad term in " + text);
    Rational q;
    try {
      q = Rational(term);
    } catch (const std::exception&) {
      throw std::invalid_argument("Cyclotomic::parse: bad rational '" + term + "'");
    }
    q.canonicalize();
    if (power < 0) throw std::invalid_argument("Cyclotomic::parse: negative power");
    if (coeffs.size() <= static_cast<size_t>(power)) coeffs.resize(power + 1, Rational(0));
    coeffs[static_cast<size_t>(power)] += q;
    pos = next;
  }
  return Cyclotomic(order, std::move(coeffs));
}

Cyclotomic operator*(const Rational& q, const Cyclotomic& c) {
  return Cyclotomic::from_rational(q, c.order()) * c;
}

}  // namespace ss4
