#include "lgn/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace lgn {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

Laurent::Laurent(std::int64_t c) {
  if (c != 0) t_.emplace_back(0, c);
}

Laurent Laurent::monomial(std::int64_t c, int half) {
  Laurent r;
  if (c != 0) r.t_.emplace_back(half, c);
  return r;
}

bool Laurent::is_unit() const {
  return t_.size() == 1 && (t_[0].second == 1 || t_[0].second == -1);
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

static std::vector<Laurent::Term> merge(const std::vector<Laurent::Term>& a,
                                        const std::vector<Laurent::Term>& b, int sign) {
  std::vector<Laurent::Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, sign * b[j].second);
      ++j;
    } else {
      std::int64_t c = checked_add(a[i].second, sign * b[j].second);
      if (c != 0) out.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.t_.empty()) return *this;
  if (t_.empty()) return *this = o;
  t_ = merge(t_, o.t_, 1);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  if (o.t_.empty()) return *this;
  t_ = merge(t_, o.t_, -1);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.t_.empty() || b.t_.empty()) return {};
  if (a.t_.size() == 1) {
    Laurent r = b;
    for (auto& [e, c] : r.t_) {
      e += a.t_[0].first;
      c = checked_mul(c, a.t_[0].second);
    }
    return r;
  }
  if (b.t_.size() == 1) return b * a;
  std::vector<Laurent::Term> raw;
  raw.reserve(a.t_.size() * b.t_.size());
  for (auto& [ea, ca] : a.t_)
    for (auto& [eb, cb] : b.t_) raw.emplace_back(ea + eb, checked_mul(ca, cb));
  std::sort(raw.begin(), raw.end(), [](auto& x, auto& y) { return x.first < y.first; });
  std::vector<Laurent::Term> out;
  for (auto& t : raw) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second = checked_add(out.back().second, t.second);
    else
      out.push_back(t);
  }
  std::erase_if(out, [](auto& t) { return t.second == 0; });
  return Laurent(std::move(out));
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent Laurent::unit_inverse() const {
  if (!is_unit()) throw std::domain_error("not a unit in Z[q^{1/2},q^{-1/2}]: " + str());
  return monomial(t_[0].second, -t_[0].first);
}

std::optional<Laurent> Laurent::divide_exact(const Laurent& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero");
  if (is_zero()) return Laurent{};
  if (d.is_unit()) return *this * d.unit_inverse();
  // long division from the top exponent down
  std::vector<Term> quot;
  Laurent rem = *this;
  const auto& lead = d.t_.back();
  while (!rem.is_zero()) {
    const auto& top = rem.t_.back();
    if (top.first - lead.first < rem.min_half() - d.min_half()) return std::nullopt;
    if (top.second % lead.second != 0) return std::nullopt;
    Laurent m = monomial(top.second / lead.second, top.first - lead.first);
    quot.push_back(m.t_[0]);
    rem -= m * d;
    if (quot.size() > 100000) return std::nullopt;
  }
  std::reverse(quot.begin(), quot.end());
  return Laurent(std::move(quot));
}

Laurent Laurent::substitute(int k) const {
  Laurent r = *this;
  for (auto& [e, c] : r.t_) e *= k;
  if (k < 0) std::reverse(r.t_.begin(), r.t_.end());
  return r;
}

static std::string exp_str(int half) {
  if (half % 2 == 0) {
    int e = half / 2;
    return e == 1 ? "q" : "q^" + std::to_string(e);
  }
  return "q^{" + std::to_string(half) + "/2}";
}

std::string Laurent::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    auto [e, c] = *it;
    bool neg = c < 0;
    std::int64_t a = neg ? -c : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (e == 0)
      s += std::to_string(a);
    else if (a == 1)
      s += exp_str(e);
    else
      s += std::to_string(a) + "*" + exp_str(e);
  }
  return s;
}

namespace {

struct Cursor {
  std::string_view s;
  size_t i = 0;
  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool peek_digit() {
    ws();
    return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
  }
  std::int64_t integer() {
    ws();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      fail("expected integer");
    std::int64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      v = checked_add(checked_mul(v, 10), s[i++] - '0');
    return neg ? -v : v;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("scalar parse error at column " + std::to_string(i + 1) + ": " +
                                what + " in '" + std::string(s) + "'");
  }
};

int parse_exponent(Cursor& c) {
  if (!c.eat('^')) return 2;
  if (c.eat('{')) {
    std::int64_t num = c.integer();
    int half;
    if (c.eat('/')) {
      if (c.integer() != 2) c.fail("only halves allowed in exponents");
      half = static_cast<int>(num);
    } else {
      half = static_cast<int>(2 * num);
    }
    if (!c.eat('}')) c.fail("expected '}'");
    return half;
  }
  return static_cast<int>(2 * c.integer());
}

}  // namespace

Laurent Laurent::parse(std::string_view s) {
  Cursor c{s};
  Laurent out;
  c.ws();
  if (c.i == s.size()) c.fail("empty scalar");
  bool first = true;
  while (true) {
    c.ws();
    if (c.i == s.size()) break;
    int sign = 1;
    if (c.eat('-'))
      sign = -1;
    else if (!c.eat('+') && !first)
      c.fail("expected '+' or '-'");
    first = false;
    std::int64_t coef = 1;
    bool have_coef = false;
    if (c.peek_digit()) {
      coef = c.integer();
      have_coef = true;
      c.eat('*');
    }
    int half = 0;
    if (c.eat('q')) {
      half = parse_exponent(c);
    } else if (!have_coef) {
      c.fail("expected term");
    }
    out += monomial(sign * coef, half);
  }
  return out;
}

Laurent quantum_integer_laurent(int k) {
  if (k < 0) throw std::invalid_argument("quantum integer needs k >= 0");
  Laurent r;
  for (int j = 0; j < k; ++j) r += Laurent::q(4 * (k - 1) - 8 * j);
  return r;
}

}  // namespace lgn
