#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

namespace censym {

/// `unknown` means no witness was found where only a sufficient condition is
/// known; `undetermined` means exact elimination could not decide freeness.
/// Neither is a failure.
enum class Verdict { pass, fail, unknown, undetermined };

std::string to_string(Verdict v);

/// The more severe of two verdicts: fail > undetermined > unknown > pass.
Verdict worst(Verdict a, Verdict b);

struct Clause {
  std::string name;
  Verdict verdict = Verdict::pass;
  std::size_t cases = 0;
  nlohmann::json counterexample;
  std::string note;
};

/// Accumulates one clause over many cases, keeping the first failure.
class ClauseCheck {
 public:
  explicit ClauseCheck(std::string name) { clause_.name = std::move(name); }

  /// Records a case; `describe` is only invoked for the first failing case.
  template <class Describe>
  bool expect(bool ok, Describe&& describe) {
    ++clause_.cases;
    if (!ok && clause_.verdict != Verdict::fail) {
      clause_.verdict = Verdict::fail;
      clause_.counterexample = describe();
    }
    return ok;
  }

  void undetermined(std::string note) {
    if (clause_.verdict == Verdict::pass) clause_.verdict = Verdict::undetermined;
    clause_.note = std::move(note);
  }
  void note(std::string text) { clause_.note = std::move(text); }

  bool ok() const { return clause_.verdict == Verdict::pass; }
  Clause finish() && { return std::move(clause_); }

 private:
  Clause clause_;
};

struct Report {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  Verdict verdict = Verdict::pass;
  std::vector<Clause> clauses;
  nlohmann::json witness;
  nlohmann::json counterexample;

  /// Appends a clause and folds its verdict into the report's.
  void add(Clause clause);
  /// Appends every clause of `other`, prefixing names.
  void absorb(const Report& other, const std::string& prefix);

  bool passed() const { return verdict == Verdict::pass; }

  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace censym
