#include "claimproof/proof.hpp"

#include <sstream>

namespace claimproof {

std::string_view to_string(StepKind kind) {
  switch (kind) {
  case StepKind::Claim: return "claim";
  case StepKind::Model: return "model";
  case StepKind::Count: return "count";
  case StepKind::Lemma: return "lemma";
  case StepKind::Observation: return "observation";
  case StepKind::Contradiction: return "contradiction";
  case StepKind::Qed: return "qed";
  }
  return "unknown";
}

std::vector<StepKind> ProofDocument::kinds() const {
  std::vector<StepKind> out;
  out.reserve(steps.size());
  for (const auto &s : steps)
    out.push_back(s.kind);
  return out;
}

std::string ProofDocument::render_text() const {
  std::ostringstream out;
  if (!title.empty())
    out << title << "\n\n";
  bool in_proof = false;
  int number = 0;
  for (const auto &step : steps) {
    switch (step.kind) {
    case StepKind::Claim:
      out << "Claim. " << step.text << "\n";
      break;
    case StepKind::Qed:
      out << step.text << "\n";
      break;
    default:
      if (!in_proof) {
        out << "\nProof.\n";
        in_proof = true;
      }
      out << "  " << ++number << ". " << step.text << "\n";
    }
  }
  return out.str();
}

std::string ProofDocument::render_steps() const {
  std::ostringstream out;
  for (const auto &step : steps)
    out << to_string(step.kind) << ": " << step.text << "\n";
  return out.str();
}

} // namespace claimproof
