#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace claimproof {

enum class StepKind { Claim, Model, Count, Lemma, Observation, Contradiction, Qed };

std::string_view to_string(StepKind kind);

struct ProofStep {
  StepKind kind;
  std::string text;
};

/// A Claim-Proof write-up: a claim followed by justified steps and a QED marker.
struct ProofDocument {
  std::string title;
  std::vector<ProofStep> steps;

  void add(StepKind kind, std::string text) { steps.push_back({kind, std::move(text)}); }
  std::vector<StepKind> kinds() const;

  /// Prose form: "Claim." paragraph, then "Proof." and the numbered steps.
  std::string render_text() const;
  /// One `kind: text` line per step.
  std::string render_steps() const;
};

} // namespace claimproof
