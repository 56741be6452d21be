#pragma once

#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lgn/poly.hpp"

namespace lgn {

struct NonTermination : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// String rewriting with leftmost-first rule application and memoized normal
// forms. Thread-safe: the memo table is guarded by a shared mutex.
class Rewriter {
 public:
  Rewriter(std::vector<std::pair<Word, Poly>> rules, Ring ring, size_t step_bound = 50'000'000);

  Ring ring() const { return ring_; }
  const std::vector<std::pair<Word, Poly>>& rules() const { return rules_; }
  Poly reduce(const Word& w) const;
  Poly reduce(const Poly& p) const;
  bool is_normal(const Word& w) const;
  size_t cache_size() const;

 private:
  Poly reduce_impl(const Word& w, size_t& steps) const;
  // position and rule index of the leftmost match, or (npos, 0)
  std::pair<size_t, size_t> find_match(const Word& w) const;

  std::vector<std::pair<Word, Poly>> rules_;
  Ring ring_;
  size_t step_bound_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<Word, Poly> memo_;
};

}  // namespace lgn
