#include "lgn/cyclo.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>

namespace lgn {

int euler_phi(int n) {
  int r = n;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      r -= r / d;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

namespace {

using IntPoly = std::vector<long>;

IntPoly exact_div(IntPoly num, const IntPoly& den) {
  // den is monic
  IntPoly q(num.size() - den.size() + 1, 0);
  for (int i = static_cast<int>(num.size()) - 1; i >= static_cast<int>(den.size()) - 1; --i) {
    long c = num[i];
    int s = i - static_cast<int>(den.size()) + 1;
    q[s] = c;
    for (size_t j = 0; j < den.size(); ++j) num[s + j] -= c * den[j];
  }
  return q;
}

}  // namespace

namespace {

const IntPoly& cyclotomic_locked(int n, std::map<int, IntPoly>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  IntPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) num = exact_div(num, cyclotomic_locked(d, cache));
  return cache[n] = num;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  return cyclotomic_locked(n, cache);
}

namespace {

const IntPoly& modulus(int p) { return cyclotomic_polynomial(8 * p); }

void reduce(std::vector<mpq_class>& v, const IntPoly& phi) {
  int deg = static_cast<int>(phi.size()) - 1;
  for (int i = static_cast<int>(v.size()) - 1; i >= deg; --i) {
    if (v[i] == 0) continue;
    mpq_class c = v[i];
    int s = i - deg;
    for (int j = 0; j <= deg; ++j) v[s + j] -= c * phi[j];
  }
  v.resize(deg);
}

}  // namespace

Cyclo Cyclo::zero(int p) {
  if (p < 1) throw std::invalid_argument("cyclotomic ring needs p >= 1");
  return Cyclo(p, std::vector<mpq_class>(euler_phi(8 * p)));
}

Cyclo Cyclo::from_int(int p, long v) {
  Cyclo r = zero(p);
  r.c_[0] = v;
  return r;
}

Cyclo Cyclo::from_rational(int p, const mpq_class& v) {
  Cyclo r = zero(p);
  r.c_[0] = v;
  return r;
}

Cyclo Cyclo::zeta_pow(int p, long k) {
  long n = 8L * p;
  k %= n;
  if (k < 0) k += n;
  std::vector<mpq_class> v(k + 1);
  v[k] = 1;
  const IntPoly& phi = modulus(p);
  if (v.size() < phi.size() - 1) v.resize(phi.size() - 1);
  reduce(v, phi);
  return Cyclo(p, std::move(v));
}

bool Cyclo::is_zero() const {
  for (auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclo::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

void Cyclo::check(const Cyclo& o) const {
  if (p_ != o.p_) throw std::invalid_argument("ring mismatch: cyclotomic scalars with different p");
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  check(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  check(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  a.check(b);
  size_t n = a.c_.size();
  std::vector<mpq_class> v(2 * n - 1);
  for (size_t i = 0; i < n; ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < n; ++j)
      if (b.c_[j] != 0) v[i + j] += a.c_[i] * b.c_[j];
  }
  reduce(v, modulus(a.p_));
  return Cyclo(a.p_, std::move(v));
}

Cyclo Cyclo::scaled(const mpq_class& f) const {
  Cyclo r = *this;
  for (auto& x : r.c_) x *= f;
  return r;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
  // solve (multiplication-by-this) x = 1
  size_t n = c_.size();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1));
  for (size_t j = 0; j < n; ++j) {
    Cyclo col = *this * zeta_pow(p_, static_cast<long>(j));
    for (size_t i = 0; i < n; ++i) m[i][j] = col.c_[i];
  }
  m[0][n] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular multiplication matrix");
    std::swap(m[piv], m[col]);
    mpq_class inv = 1 / m[col][col];
    for (size_t k = col; k <= n; ++k) m[col][k] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      mpq_class f = m[r][col];
      for (size_t k = col; k <= n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  std::vector<mpq_class> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = m[i][n];
  return Cyclo(p_, std::move(x));
}

std::string Cyclo::str() const {
  std::string s;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    const mpq_class& c = c_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    mpq_class a = neg ? mpq_class(-c) : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    std::string mon = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
    if (i == 0)
      s += a.get_str();
    else if (a == 1)
      s += mon;
    else
      s += a.get_str() + "*" + mon;
  }
  return s.empty() ? "0" : s;
}

Cyclo Cyclo::parse(std::string_view text, int p) {
  Cyclo out = zero(p);
  size_t i = 0;
  auto ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const char* what) {
    throw std::invalid_argument("cyclotomic parse error at column " + std::to_string(i + 1) +
                                ": " + what);
  };
  auto integer = [&]() -> std::string {
    ws();
    size_t b = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (b == i) fail("expected integer");
    return std::string(text.substr(b, i - b));
  };
  bool first = true;
  ws();
  if (i == text.size()) fail("empty scalar");
  while (true) {
    ws();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '-') {
      sign = -1;
      ++i;
    } else if (text[i] == '+') {
      ++i;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    ws();
    mpq_class coef = 1;
    bool have = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::string num = integer();
      std::string den = "1";
      ws();
      if (i < text.size() && text[i] == '/') {
        ++i;
        den = integer();
      }
      coef = mpq_class(num + "/" + den);
      coef.canonicalize();
      have = true;
      ws();
      if (i < text.size() && text[i] == '*') ++i;
    }
    ws();
    long k = 0;
    if (i < text.size() && text[i] == 'z') {
      ++i;
      k = 1;
      ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        k = std::stol(integer());
      }
    } else if (!have) {
      fail("expected term");
    }
    out += zeta_pow(p, k).scaled(coef * sign);
  }
  return out;
}

Cyclo specialize(const Laurent& x, int p) {
  Cyclo r = Cyclo::zero(p);
  for (auto& [e, c] : x.terms()) {
    r += Cyclo::zeta_pow(p, e).scaled(mpq_class(static_cast<long>(c)));
  }
  return r;
}

Cyclo quantum_integer_cyclo(int k, int p) { return specialize(quantum_integer_laurent(k), p); }

}  // namespace lgn
