#include "lgn/rewriter.hpp"

#include <mutex>

namespace lgn {

Rewriter::Rewriter(std::vector<std::pair<Word, Poly>> rules, Ring ring, size_t step_bound)
    : rules_(std::move(rules)), ring_(ring), step_bound_(step_bound) {}

std::pair<size_t, size_t> Rewriter::find_match(const Word& w) const {
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t k = 0; k < rules_.size(); ++k) {
      const Word& lhs = rules_[k].first;
      if (lhs.size() <= w.size() - i && w.compare(i, lhs.size(), lhs) == 0) return {i, k};
    }
  return {Word::npos, 0};
}

bool Rewriter::is_normal(const Word& w) const { return find_match(w).first == Word::npos; }

Poly Rewriter::reduce(const Word& w) const {
  size_t steps = 0;
  return reduce_impl(w, steps);
}

Poly Rewriter::reduce(const Poly& p) const {
  Poly out(ring_);
  for (auto& [w, c] : p.terms()) out += reduce(w) * c;
  return out;
}

size_t Rewriter::cache_size() const {
  std::shared_lock lock(mu_);
  return memo_.size();
}

Poly Rewriter::reduce_impl(const Word& w, size_t& steps) const {
  {
    std::shared_lock lock(mu_);
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
  }
  if (++steps > step_bound_)
    throw NonTermination("normal form exceeded the rewriting step bound");
  auto [pos, k] = find_match(w);
  Poly out(ring_);
  if (pos == Word::npos) {
    out.add(w, Scalar::one(ring_));
  } else {
    const auto& [lhs, rhs] = rules_[k];
    Word head = w.substr(0, pos), tail = w.substr(pos + lhs.size());
    for (auto& [rw, c] : rhs.terms()) out += reduce_impl(head + rw + tail, steps) * c;
  }
  std::unique_lock lock(mu_);
  memo_.emplace(w, out);
  return out;
}

}  // namespace lgn
