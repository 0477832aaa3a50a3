#include "coxgrowth/ratfunc.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace coxgrowth {

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) {
  return IntPolynomial(std::vector<mpz_class>{c});
}

IntPolynomial IntPolynomial::monomial(const mpz_class& c, int degree) {
  std::vector<mpz_class> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

int IntPolynomial::valuation() const noexcept {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return static_cast<int>(k);
  }
  return -1;
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  IntPolynomial p = divided_exactly(content());
  if (p.leading() < 0) p = -p;
  return p;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  IntPolynomial r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

IntPolynomial IntPolynomial::divided_exactly(const mpz_class& c) const {
  if (c == 0) throw std::domain_error("division of polynomial by zero");
  IntPolynomial r = *this;
  for (auto& x : r.coeffs_) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) {
      throw std::domain_error("inexact coefficient division");
    }
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

IntPolynomial IntPolynomial::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<mpz_class> v(static_cast<std::size_t>(k));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::reversed() const {
  std::vector<mpz_class> v(coeffs_.rbegin(), coeffs_.rend());
  return IntPolynomial(std::move(v));
}

mpq_class IntPolynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + mpq_class(*it);
  }
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "t";
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<mpz_class> r = a.coefficients();
  const auto& bc = b.coefficients();
  const mpz_class& lb = b.leading();
  const int db = b.degree();
  int dr = a.degree();
  int steps = a.degree() - db + 1;
  while (dr >= db && dr >= 0) {
    mpz_class lr = r[static_cast<std::size_t>(dr)];
    for (auto& x : r) x *= lb;
    const int shift = dr - db;
    for (int k = 0; k <= db; ++k) {
      r[static_cast<std::size_t>(k + shift)] -= lr * bc[static_cast<std::size_t>(k)];
    }
    --steps;
    while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
  }
  // Skipped steps (when the degree fell by more than one) still owe a factor.
  if (steps > 0) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
    for (auto& x : r) x *= f;
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<mpz_class> r = a.coefficients();
  std::vector<mpz_class> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const auto& bc = b.coefficients();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    mpz_class& top = r[static_cast<std::size_t>(k + db)];
    if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t())) {
      throw std::domain_error("inexact polynomial division");
    }
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= c * bc[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(k)] = c;
  }
  if (!IntPolynomial(std::move(r)).is_zero()) throw std::domain_error("inexact polynomial division");
  return IntPolynomial(std::move(q));
}

IntPolynomial primitive_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) return IntPolynomial::constant(1);
    IntPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::string SeriesTruncation::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (k) s += ", ";
    s += coefficients[k].get_str();
  }
  return s + "]";
}

SeriesTruncation cauchy_product(const SeriesTruncation& a, const SeriesTruncation& b) {
  const std::size_t n = std::min(a.coefficients.size(), b.coefficients.size());
  SeriesTruncation out{std::vector<mpz_class>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i <= k; ++i) {
      out.coefficients[k] += a.coefficients[i] * b.coefficients[k - i];
    }
  }
  return out;
}

RationalFunction::RationalFunction() : den_(IntPolynomial::constant(1)) {}

RationalFunction::RationalFunction(const IntPolynomial& p)
    : num_(p), den_(IntPolynomial::constant(1)) {
  canonicalize();
}

RationalFunction::RationalFunction(IntPolynomial numerator, IntPolynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  canonicalize();
}

RationalFunction RationalFunction::constant(long c) {
  return RationalFunction(IntPolynomial{c});
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = IntPolynomial::constant(1);
    return;
  }
  if (den_.degree() > 0 && num_.degree() > 0) {
    IntPolynomial g = primitive_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
  }
  mpz_class c;
  mpz_class nc = num_.content();
  mpz_class dc = den_.content();
  mpz_gcd(c.get_mpz_t(), nc.get_mpz_t(), dc.get_mpz_t());
  if (c != 1) {
    num_ = num_.divided_exactly(c);
    den_ = den_.divided_exactly(c);
  }
  if (den_.coeff(den_.valuation()) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

bool RationalFunction::is_polynomial() const { return den_.degree() == 0; }

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::reciprocal() const {
  return RationalFunction::constant(1) / *this;
}

mpq_class RationalFunction::evaluate(const mpq_class& x) const {
  mpq_class d = den_.evaluate(x);
  if (d == 0) throw std::domain_error("evaluation at a pole");
  mpq_class r = num_.evaluate(x) / d;
  r.canonicalize();
  return r;
}

std::string RationalFunction::to_string() const {
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

SeriesTruncation series_expand(const RationalFunction& r, int n) {
  if (n < 0) throw std::invalid_argument("series_expand: negative truncation order");
  const IntPolynomial& p = r.numerator();
  const IntPolynomial& q = r.denominator();
  const mpz_class q0 = q.coeff(0);
  if (q0 == 0) throw std::domain_error("not a power series at 0");
  SeriesTruncation out{std::vector<mpz_class>(static_cast<std::size_t>(n) + 1)};
  for (int k = 0; k <= n; ++k) {
    mpz_class acc = p.coeff(k);
    const int top = std::min(k, q.degree());
    for (int j = 1; j <= top; ++j) acc -= q.coeff(j) * out.coefficients[static_cast<std::size_t>(k - j)];
    if (!mpz_divisible_p(acc.get_mpz_t(), q0.get_mpz_t())) {
      throw std::domain_error("series coefficient is not an integer");
    }
    mpz_divexact(out.coefficients[static_cast<std::size_t>(k)].get_mpz_t(), acc.get_mpz_t(),
                 q0.get_mpz_t());
  }
  return out;
}

RationalFunction substitute_t_inverse(const RationalFunction& r) {
  if (r.is_zero()) return r;
  const int a = r.numerator().degree();
  const int b = r.denominator().degree();
  IntPolynomial num = r.numerator().reversed();
  IntPolynomial den = r.denominator().reversed();
  if (b > a) num = num.shifted(b - a);
  if (a > b) den = den.shifted(a - b);
  return RationalFunction(std::move(num), std::move(den));
}

}  // namespace coxgrowth
