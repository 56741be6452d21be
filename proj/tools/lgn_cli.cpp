#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lgn/holonomy.hpp"
#include "lgn/lgn.hpp"
#include "lgn/lgn_ops.hpp"
#include "lgn/torus.hpp"
#include "lgn/verify.hpp"

using namespace lgn;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int g = -1, n = -1;
  std::string mode = "generic";
  int p = 2;
  std::string states;
  bool json = false;
  size_t budget = 0;
  std::uint64_t seed = 1;
  size_t count = 0;
  bool list = false;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Ring ring_of(const Config& c) {
  if (c.mode == "generic") return Ring{};
  if (c.mode == "restricted") {
    if (c.p < 2) throw UsageError("--p must be >= 2");
    return Ring{c.p};
  }
  throw UsageError("--mode must be generic or restricted");
}

Surface surface_of(const Config& c, Surface fallback) {
  Surface s = fallback;
  if (c.g >= 0) s.g = c.g;
  if (c.n >= 0) s.n = c.n;
  return s;
}

std::string render_elem(const LgnAlgebra& alg, const Poly& p) {
  return render(p, [&](char ch) { return alg.gen_name(ch); });
}

int cmd_eval(const Config& c, const std::string& file) {
  DiagramIR d = parse_diagram(slurp(file));
  Ring r = ring_of(c);
  auto alg = LgnAlgebra::get(d.surface, r);
  std::optional<std::vector<int>> states = d.states;
  if (!c.states.empty()) states = parse_states(c.states);
  if (states) {
    Poly v = hol_stated(d, *states, r);
    if (c.json)
      std::cout << json{{"surface", {{"g", d.surface.g}, {"n", d.surface.n}}}, {"element", render_elem(*alg, v)}}.dump(2)
                << "\n";
    else
      std::cout << render_elem(*alg, v) << "\n";
    return 0;
  }
  HolTensor h = eval_diagram(d, r);
  if (c.json) {
    json j{{"surface", {{"g", d.surface.g}, {"n", d.surface.n}}}, {"k", h.k}};
    json comp = json::object();
    for (size_t i = 0; i < h.v.size(); ++i)
      if (!h.v[i].is_zero()) comp[state_string(i, h.k)] = render_elem(*alg, h.v[i]);
    j["components"] = comp;
    std::cout << j.dump(2) << "\n";
  } else if (h.k == 0) {
    std::cout << render_elem(*alg, h.v[0]) << "\n";
  } else {
    for (size_t i = 0; i < h.v.size(); ++i)
      if (!h.v[i].is_zero()) std::cout << state_string(i, h.k) << ": " << render_elem(*alg, h.v[i]) << "\n";
  }
  return 0;
}

struct ElementFile {
  Surface surface;
  Ring ring;
  std::string text;
};

ElementFile read_element(const Config& c, const std::string& path) {
  std::string raw = slurp(path);
  size_t first = raw.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && raw[first] == '{') {
    json j;
    try {
      j = json::parse(raw);
    } catch (const json::parse_error& e) {
      throw UsageError(path + ": " + e.what());
    }
    Surface s{j.at("surface").at("g").get<int>(), j.at("surface").at("n").get<int>()};
    Config cc = c;
    if (j.contains("mode")) cc.mode = j["mode"].get<std::string>();
    if (j.contains("p")) cc.p = j["p"].get<int>();
    return {s, ring_of(cc), j.at("element").get<std::string>()};
  }
  if (c.g < 0 && c.n < 0) throw UsageError(path + ": plain-text element needs --g and --n");
  return {surface_of(c, {0, 0}), ring_of(c), raw};
}

int cmd_mul(const Config& c, const std::string& f1, const std::string& f2) {
  ElementFile a = read_element(c, f1), b = read_element(c, f2);
  if (!(a.surface == b.surface)) throw UsageError("surface mismatch: " + a.surface.str() + " vs " + b.surface.str());
  if (!(a.ring == b.ring)) throw UsageError("ring mismatch: " + a.ring.str() + " vs " + b.ring.str());
  auto alg = LgnAlgebra::get(a.surface, a.ring);
  LgnElement x = parse_element(a.text, alg), y = parse_element(b.text, alg);
  LgnElement z = x * y;
  if (c.json)
    std::cout << json{{"surface", {{"g", a.surface.g}, {"n", a.surface.n}}}, {"element", z.str()}}.dump(2) << "\n";
  else
    std::cout << z.str() << "\n";
  return 0;
}

int cmd_verify(const Config& c, const std::string& suite) {
  const auto& names = verify_suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite '" + suite + "'");
  VerifyOptions o;
  o.surface = surface_of(c, {0, 1});
  o.ring = ring_of(c);
  if (suite == "torus") o.ring = Ring{c.p};
  o.seed = c.seed;
  o.count = c.count;
  o.budget = c.budget;
  VerifyReport rep = run_suite(suite, o);
  std::cout << (c.json ? rep.to_json() + "\n" : rep.to_text());
  return rep.ok() ? 0 : 1;
}

int cmd_basis(const Config& c) {
  Config cc = c;
  cc.mode = "restricted";
  Surface s = surface_of(c, {0, 1});
  auto alg = LgnAlgebra::get(s, ring_of(cc));
  auto basis = basis_enumerate(*alg, c.budget ? c.budget : 1'000'000);
  double expected = std::pow(2.0 * c.p * c.p * c.p, s.blocks());
  if (c.json) {
    json j{{"surface", {{"g", s.g}, {"n", s.n}}}, {"p", c.p}, {"count", basis.size()},
           {"expected", static_cast<long long>(expected)}};
    if (c.list) {
      json words = json::array();
      for (auto& w : basis) words.push_back(render_elem(*alg, Poly::word(w, alg->ring())));
      j["basis"] = words;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << basis.size() << "\n";
    if (c.list)
      for (auto& w : basis) std::cout << render_elem(*alg, Poly::word(w, alg->ring())) << "\n";
  }
  return basis.size() == static_cast<size_t>(expected) ? 0 : 1;
}

int cmd_torus(const Config& c) {
  TorusReport t = composition_series_report(c.p);
  std::cout << (c.json ? t.to_json() + "\n" : t.to_text());
  return t.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the algebras L_{g,n} for U_{q^2}(sl2)"};
  app.require_subcommand(1);
  Config c;
  auto common = [&](CLI::App* s) {
    s->add_option("--g", c.g, "genus");
    s->add_option("--n", c.n, "number of punctures");
    s->add_option("--mode", c.mode, "generic or restricted");
    s->add_option("--p", c.p, "root of unity order (restricted mode)");
    s->add_flag("--json", c.json, "structured output");
    s->add_option("--budget", c.budget, "cap on random word length or enumeration size");
  };
  std::string file, file2, suite;
  auto* eval = app.add_subcommand("eval", "evaluate a diagram file");
  common(eval);
  eval->add_option("file", file)->required();
  eval->add_option("--states", c.states, "boundary states, e.g. -+");
  auto* mul = app.add_subcommand("mul", "multiply two element files");
  common(mul);
  mul->add_option("left", file)->required();
  mul->add_option("right", file2)->required();
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  common(verify);
  verify->add_option("suite", suite)->required();
  verify->add_option("--seed", c.seed, "random seed");
  verify->add_option("--count", c.count, "number of random cases");
  auto* basis = app.add_subcommand("basis", "enumerate the restricted monomial basis");
  common(basis);
  basis->add_flag("--list", c.list, "print the monomials");
  auto* torus = app.add_subcommand("torus", "torus representation report");
  common(torus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*eval) return cmd_eval(c, file);
    if (*mul) return cmd_mul(c, file, file2);
    if (*verify) return cmd_verify(c, suite);
    if (*basis) return cmd_basis(c);
    if (*torus) return cmd_torus(c);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
