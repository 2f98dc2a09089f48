#include "censym/report.hpp"

#include <sstream>

namespace censym {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::unknown:
      return "unknown";
    case Verdict::undetermined:
      return "undetermined";
  }
  return "fail";
}

namespace {
int severity(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return 0;
    case Verdict::unknown:
      return 1;
    case Verdict::undetermined:
      return 2;
    case Verdict::fail:
      return 3;
  }
  return 3;
}
}  // namespace

Verdict worst(Verdict a, Verdict b) { return severity(a) >= severity(b) ? a : b; }

void Report::add(Clause clause) {
  if (clause.verdict == Verdict::fail && counterexample.is_null()) {
    counterexample = {{"clause", clause.name}, {"detail", clause.counterexample}};
  }
  verdict = worst(verdict, clause.verdict);
  clauses.push_back(std::move(clause));
}

void Report::absorb(const Report& other, const std::string& prefix) {
  for (Clause c : other.clauses) {
    c.name = prefix + c.name;
    add(std::move(c));
  }
}

nlohmann::json Report::to_json() const {
  nlohmann::json out;
  out["check"] = check;
  out["params"] = params;
  out["verdict"] = to_string(verdict);
  auto& list = out["clauses"] = nlohmann::json::array();
  for (const auto& c : clauses) {
    nlohmann::json jc{{"name", c.name}, {"verdict", to_string(c.verdict)}, {"cases", c.cases}};
    if (!c.counterexample.is_null()) jc["counterexample"] = c.counterexample;
    if (!c.note.empty()) jc["note"] = c.note;
    list.push_back(std::move(jc));
  }
  out["witness"] = witness;
  out["counterexample"] = counterexample;
  return out;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << check;
  if (!params.empty()) out << " " << params.dump();
  out << ": " << to_string(verdict) << '\n';
  for (const auto& c : clauses) {
    out << "  [" << to_string(c.verdict) << "] " << c.name << " (" << c.cases << " cases)";
    if (!c.note.empty()) out << " - " << c.note;
    out << '\n';
    if (!c.counterexample.is_null()) out << "    counterexample: " << c.counterexample.dump() << '\n';
  }
  if (!witness.is_null()) out << "  witness: " << witness.dump() << '\n';
  return out.str();
}

}  // namespace censym
