#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lgn {

// Element of Z[q^{1/2}, q^{-1/2}]. Exponents are stored in units of 1/2,
// terms sorted by increasing exponent, no zero coefficients.
class Laurent {
 public:
  using Term = std::pair<int, std::int64_t>;

  Laurent() = default;
  Laurent(std::int64_t c);  // NOLINT: integers embed implicitly

  // c * q^{half/2}
  static Laurent monomial(std::int64_t c, int half);
  static Laurent q(int half) { return monomial(1, half); }

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_one() const { return t_.size() == 1 && t_[0].first == 0 && t_[0].second == 1; }
  bool is_unit() const;  // ±q^{k/2}
  int min_half() const { return t_.front().first; }
  int max_half() const { return t_.back().first; }

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.t_ == b.t_; }

  Laurent unit_inverse() const;  // throws unless is_unit()
  std::optional<Laurent> divide_exact(const Laurent& d) const;
  // q^{1/2} -> q^{k/2}
  Laurent substitute(int k) const;

  std::string str() const;
  static Laurent parse(std::string_view s);

 private:
  explicit Laurent(std::vector<Term> t) : t_(std::move(t)) {}
  std::vector<Term> t_;
};

Laurent quantum_integer_laurent(int k);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace lgn
