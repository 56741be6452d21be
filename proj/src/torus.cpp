#include "lgn/torus.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "lgn/linsolve.hpp"

namespace lgn {

namespace {

void check_p(int p) {
  if (p < 2) throw std::invalid_argument("torus representation needs p >= 2");
}

Scalar eps_pow(int p, long k) { return Scalar(Cyclo::zeta_pow(p, 2 * k)); }

Scalar a_eigenvalue(int p, int s, int alpha) {
  Scalar v = eps_pow(p, 2 * s) + eps_pow(p, -2 * s);
  return alpha > 0 ? -v : v;
}

void axpy(std::vector<Scalar>& out, size_t i, const Scalar& c) { out[i] += c; }

CycloMatrix matmul(const CycloMatrix& x, const CycloMatrix& y, Ring r) {
  size_t n = x.size(), m = y[0].size(), k = y.size();
  CycloMatrix z(n, std::vector<Scalar>(m, Scalar::zero(r)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (x[i][l].is_zero()) continue;
      for (size_t j = 0; j < m; ++j)
        if (!y[l][j].is_zero()) z[i][j] += x[i][l] * y[l][j];
    }
  return z;
}

std::vector<Scalar> flatten(const CycloMatrix& m) {
  std::vector<Scalar> v;
  for (auto& row : m) v.insert(v.end(), row.begin(), row.end());
  return v;
}

}  // namespace

size_t slf_dim(int p) { return static_cast<size_t>(3 * p - 1); }

size_t chi_index(int p, int s, int alpha) {
  if (s < 1 || s > p || (alpha != 1 && alpha != -1)) throw std::out_of_range("bad character index");
  return static_cast<size_t>(2 * (s - 1) + (alpha < 0 ? 1 : 0));
}

size_t g_index(int p, int s) {
  if (s < 1 || s > p - 1) throw std::out_of_range("bad pseudo-character index");
  return static_cast<size_t>(2 * p + s - 1);
}

std::string slf_basis_name(int p, size_t index) {
  if (index < static_cast<size_t>(2 * p))
    return std::string("chi") + (index % 2 ? "-" : "+") + "_" + std::to_string(index / 2 + 1);
  return "G_" + std::to_string(index - 2 * p + 1);
}

SLFVector SLFVector::zero(int p) {
  check_p(p);
  return SLFVector{p, std::vector<Scalar>(slf_dim(p), Scalar::zero(Ring{p}))};
}

SLFVector SLFVector::basis(int p, size_t index) {
  SLFVector v = zero(p);
  v.coords.at(index) = Scalar::one(Ring{p});
  return v;
}

bool SLFVector::is_zero() const {
  for (auto& c : coords)
    if (!c.is_zero()) return false;
  return true;
}

std::string SLFVector::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (coords[i].is_one())
      os << slf_basis_name(p, i);
    else
      os << "(" << coords[i].str() << ")*" << slf_basis_name(p, i);
  }
  return first ? "0" : os.str();
}

SLFVector act_generator(char gen, const SLFVector& v) {
  int p = v.p;
  check_p(p);
  if (v.coords.size() != slf_dim(p)) throw std::invalid_argument("SLF vector has wrong length");
  Ring r{p};
  SLFVector out = SLFVector::zero(p);
  auto& o = out.coords;
  if (gen == 'a') {
    Scalar d = eps_pow(p, 1) - eps_pow(p, -1);
    Scalar d2 = d * d;
    for (int s = 1; s <= p; ++s)
      for (int alpha : {1, -1}) {
        const Scalar& c = v.coords[chi_index(p, s, alpha)];
        if (!c.is_zero()) axpy(o, chi_index(p, s, alpha), a_eigenvalue(p, s, alpha) * c);
      }
    for (int s = 1; s < p; ++s) {
      const Scalar& c = v.coords[g_index(p, s)];
      if (c.is_zero()) continue;
      axpy(o, g_index(p, s), a_eigenvalue(p, s, 1) * c);
      axpy(o, chi_index(p, s, 1), -(d2 * c));
      axpy(o, chi_index(p, p - s, -1), -(d2 * c));
    }
  } else if (gen == 'b') {
    Scalar two = Scalar::from_int(2, r);
    for (int s = 1; s <= p; ++s)
      for (int alpha : {1, -1}) {
        const Scalar& c = v.coords[chi_index(p, s, alpha)];
        if (c.is_zero()) continue;
        if (s == p) {
          axpy(o, chi_index(p, p - 1, alpha), two * c);
          axpy(o, chi_index(p, 1, -alpha), two * c);
          continue;
        }
        if (s > 1) axpy(o, chi_index(p, s - 1, alpha), c);
        axpy(o, chi_index(p, s + 1, alpha), c);
      }
    for (int s = 1; s < p; ++s) {
      const Scalar& c = v.coords[g_index(p, s)];
      if (c.is_zero() || p == 2) continue;  // [2] = 0
      if (s == 1) {
        axpy(o, g_index(p, 2), quantum_integer(2, r) * c);
      } else if (s == p - 1) {
        axpy(o, g_index(p, p - 2), quantum_integer(2, r) * c);
      } else {
        Scalar inv = quantum_integer(s, r).inverse();
        axpy(o, g_index(p, s - 1), quantum_integer(s - 1, r) * inv * c);
        axpy(o, g_index(p, s + 1), quantum_integer(s + 1, r) * inv * c);
      }
    }
  } else {
    throw std::invalid_argument(std::string("unknown torus generator '") + gen + "'");
  }
  return out;
}

SLFVector act_word(const std::string& word, SLFVector v) {
  for (char c : word) v = act_generator(c, v);
  return v;
}

CycloMatrix action_matrix(char gen, int p) {
  size_t n = slf_dim(p);
  CycloMatrix m(n, std::vector<Scalar>(n, Scalar::zero(Ring{p})));
  for (size_t j = 0; j < n; ++j) {
    SLFVector img = act_generator(gen, SLFVector::basis(p, j));
    for (size_t i = 0; i < n; ++i) m[i][j] = img.coords[i];
  }
  return m;
}

std::string factor_label_name(FactorLabel l) {
  switch (l) {
    case FactorLabel::J1: return "J1";
    case FactorLabel::J2modJ1: return "J2modJ1";
    case FactorLabel::J3modJ2: return "J3modJ2";
  }
  return "?";
}

std::vector<FactorSpec> factor_specs(int p) {
  check_p(p);
  FactorSpec v1{FactorLabel::J1, {}}, v2{FactorLabel::J2modJ1, {}}, v3{FactorLabel::J3modJ2, {}};
  for (int s = 1; s < p; ++s) {
    SLFVector w = SLFVector::basis(p, chi_index(p, s, 1));
    w.coords[chi_index(p, p - s, -1)] += Scalar::one(Ring{p});
    v1.basis.push_back(w);
  }
  v1.basis.push_back(SLFVector::basis(p, chi_index(p, p, 1)));
  v1.basis.push_back(SLFVector::basis(p, chi_index(p, p, -1)));
  for (int s = 1; s < p; ++s) v2.basis.push_back(SLFVector::basis(p, chi_index(p, s, 1)));
  for (int s = 1; s < p; ++s) v3.basis.push_back(SLFVector::basis(p, g_index(p, s)));
  return {v1, v2, v3};
}

BurnsideResult burnside_span(const std::vector<CycloMatrix>& gens, size_t d, Ring r) {
  CycloMatrix id(d, std::vector<Scalar>(d, Scalar::zero(r)));
  for (size_t i = 0; i < d; ++i) id[i][i] = Scalar::one(r);
  std::vector<std::vector<Scalar>> span{flatten(id)};
  std::vector<CycloMatrix> frontier{id};
  BurnsideResult res{1, 0};
  while (!frontier.empty() && res.rank < d * d) {
    std::vector<CycloMatrix> next;
    for (auto& w : frontier)
      for (auto& g : gens) {
        CycloMatrix m = matmul(w, g, r);
        span.push_back(flatten(m));
        size_t rk = rank_of(span);
        if (rk > res.rank) {
          res.rank = rk;
          next.push_back(std::move(m));
        } else {
          span.pop_back();
        }
      }
    if (!next.empty()) ++res.length;
    frontier = std::move(next);
  }
  return res;
}

TorusReport composition_series_report(int p) {
  check_p(p);
  Ring r{p};
  size_t n = slf_dim(p);
  TorusReport rep;
  rep.p = p;

  auto specs = factor_specs(p);
  std::vector<SLFVector> adapted;
  std::vector<size_t> offset;
  for (auto& f : specs) {
    offset.push_back(adapted.size());
    adapted.insert(adapted.end(), f.basis.begin(), f.basis.end());
  }
  offset.push_back(adapted.size());
  if (adapted.size() != n) throw std::logic_error("factor bases do not span the SLF space");

  // coordinates of every image in the adapted basis
  auto coords_in_adapted = [&](const SLFVector& w) {
    LinearSystem sys(n, r);
    for (size_t i = 0; i < n; ++i) {
      std::vector<Scalar> row(n);
      for (size_t j = 0; j < n; ++j) row[j] = adapted[j].coords[i];
      sys.add_equation(std::move(row), w.coords[i]);
    }
    return sys.solve();
  };

  std::vector<CycloMatrix> adapted_action;
  for (char gen : {'a', 'b'}) {
    CycloMatrix m(n, std::vector<Scalar>(n));
    for (size_t j = 0; j < n; ++j) {
      auto c = coords_in_adapted(act_generator(gen, adapted[j]));
      for (size_t i = 0; i < n; ++i) m[i][j] = c[i];
    }
    adapted_action.push_back(std::move(m));
  }

  auto block_vanishes = [&](size_t row_from, size_t col_to) {
    for (auto& m : adapted_action)
      for (size_t i = row_from; i < n; ++i)
        for (size_t j = 0; j < col_to; ++j)
          if (!m[i][j].is_zero()) return false;
    return true;
  };
  rep.j1_invariant = block_vanishes(offset[1], offset[1]);
  rep.j2_invariant = block_vanishes(offset[2], offset[2]);

  for (size_t f = 0; f < specs.size(); ++f) {
    size_t lo = offset[f], d = offset[f + 1] - lo;
    std::vector<CycloMatrix> gens;
    for (auto& m : adapted_action) {
      CycloMatrix blk(d, std::vector<Scalar>(d));
      for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) blk[i][j] = m[lo + i][lo + j];
      gens.push_back(std::move(blk));
    }
    FactorReport fr;
    fr.label = specs[f].label;
    fr.dim = d;
    auto b = burnside_span(gens, d, r);
    fr.burnside_dim = b.rank;
    fr.word_length = b.length;
    fr.absolutely_irreducible = b.rank == d * d;
    if (!fr.absolutely_irreducible)
      fr.diagnostic = "not absolutely irreducible over the computed field: word span " + std::to_string(b.rank) +
                      " < " + std::to_string(d * d);
    rep.factors.push_back(std::move(fr));
  }

  CycloMatrix am = action_matrix('a', p);
  rep.eigenvalues_match = true;
  for (int s = 1; s <= p; ++s)
    for (int alpha : {1, -1}) {
      size_t i = chi_index(p, s, alpha);
      EigenRow row{s, alpha, a_eigenvalue(p, s, alpha), am[i][i]};
      for (size_t k = 0; k < n; ++k)
        if (k != i && !am[k][i].is_zero()) rep.eigenvalues_match = false;
      if (!(row.expected == row.actual)) rep.eigenvalues_match = false;
      rep.eigenvalues.push_back(std::move(row));
    }
  return rep;
}

bool TorusReport::ok() const {
  if (!j1_invariant || !j2_invariant || !eigenvalues_match) return false;
  size_t total = 0;
  for (auto& f : factors) total += f.dim;
  return total == slf_dim(p);
}

std::string TorusReport::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = p;
  j["dimension"] = slf_dim(p);
  j["j1_invariant"] = j1_invariant;
  j["descends_to_quotients"] = j2_invariant;
  j["eigenvalues_match"] = eigenvalues_match;
  auto& fs = j["factors"] = nlohmann::ordered_json::array();
  for (auto& f : factors) {
    nlohmann::ordered_json x;
    x["label"] = factor_label_name(f.label);
    x["dim"] = f.dim;
    x["burnside_dim"] = f.burnside_dim;
    x["word_length"] = f.word_length;
    x["absolutely_irreducible"] = f.absolutely_irreducible;
    if (!f.diagnostic.empty()) x["diagnostic"] = f.diagnostic;
    fs.push_back(x);
  }
  auto& ev = j["a_eigenvalues"] = nlohmann::ordered_json::array();
  for (auto& e : eigenvalues)
    ev.push_back({{"s", e.s}, {"alpha", e.alpha > 0 ? "+" : "-"}, {"value", e.actual.str()},
                  {"expected", e.expected.str()}});
  return j.dump(2);
}

std::string TorusReport::to_text() const {
  std::ostringstream os;
  os << "p = " << p << ", dim = " << slf_dim(p) << "\n";
  os << "J1 invariant: " << (j1_invariant ? "yes" : "no") << "\n";
  os << "descends to quotients: " << (j2_invariant ? "yes" : "no") << "\n";
  for (auto& f : factors) {
    os << factor_label_name(f.label) << ": dim " << f.dim << ", word span " << f.burnside_dim << " (length "
       << f.word_length << ")";
    if (!f.diagnostic.empty()) os << ", " << f.diagnostic;
    os << "\n";
  }
  os << "a eigenvalues" << (eigenvalues_match ? "" : " (MISMATCH)") << ":\n";
  for (auto& e : eigenvalues)
    os << "  chi" << (e.alpha > 0 ? "+" : "-") << "_" << e.s << ": " << e.actual.str() << "\n";
  return os.str();
}

}  // namespace lgn
