#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lgn/lgn.hpp"

namespace lgn {

struct VerifyOptions {
  Surface surface{0, 1};
  Ring ring{};
  std::uint64_t seed = 1;
  size_t count = 0;   // 0: suite default
  size_t budget = 0;  // max random word length; 0: suite default
};

struct VerifyReport {
  VerifyReport() = default;
  VerifyReport(std::string suite_name, std::string scope_text)
      : suite(std::move(suite_name)), scope(std::move(scope_text)) {}

  std::string suite;
  std::string scope;
  size_t cases = 0;
  std::vector<std::string> failures;
  std::vector<std::pair<std::string, std::string>> info;

  bool ok() const { return failures.empty(); }
  void check(bool passed, const std::string& id, const std::string& what = {});
  void merge(const VerifyReport& o);
  std::string to_json() const;
  std::string to_text() const;
};

VerifyReport verify_relations(const VerifyOptions& o);
VerifyReport verify_rewriting(const VerifyOptions& o);
VerifyReport verify_isotopy(const VerifyOptions& o);
VerifyReport verify_skein(const VerifyOptions& o);
VerifyReport verify_iso(const VerifyOptions& o);
VerifyReport verify_stack(const VerifyOptions& o);
VerifyReport verify_invariance(const VerifyOptions& o);
VerifyReport verify_vacuum(const VerifyOptions& o);
VerifyReport verify_torus(const VerifyOptions& o);

const std::vector<std::string>& verify_suite_names();
// throws std::invalid_argument on an unknown name
VerifyReport run_suite(const std::string& name, const VerifyOptions& o);

}  // namespace lgn
