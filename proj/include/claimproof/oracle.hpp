#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "claimproof/deck.hpp"
#include "claimproof/hands.hpp"

namespace claimproof {

/// Thrown when enumeration would exceed the configured cap.
class EnumerationLimitExceeded : public std::runtime_error {
public:
  EnumerationLimitExceeded(BigInt required, std::uint64_t cap);

  const BigInt &required() const { return required_; }
  std::uint64_t cap() const { return cap_; }

private:
  BigInt required_;
  std::uint64_t cap_;
};

struct OracleOptions {
  std::uint64_t cap = 100'000'000;
  /// Worker threads; 0 picks the hardware concurrency. Results do not depend on it.
  unsigned threads = 1;
};

struct Tally {
  std::array<BigInt, 10> counts{};
  /// Hands whose best reading is five of one value (folded into FourOfAKind).
  BigInt five_of_a_kind = 0;

  const BigInt &operator[](HandCategory c) const { return counts[index_of(c)]; }
  BigInt total() const;

  bool operator==(const Tally &) const = default;
};

/// Exhaustive count over every 5-card subset of the deck.
Tally tally_all(const DeckSpec &spec, const OracleOptions &options = {});

struct VerificationRow {
  HandCategory category;
  BigInt closed_form;
  BigInt oracle;
  bool pass() const { return closed_form == oracle; }
};

struct VerificationReport {
  DeckSpec spec;
  std::array<VerificationRow, 10> rows;
  BigInt oracle_total;
  BigInt expected_total;

  bool pass() const;
  /// `category,closed_form,oracle,status` rows plus a total row.
  std::string render_csv() const;
  std::string render_text() const;
};

/// Requires a wild-free deck.
VerificationReport verify_closed_forms(const DeckSpec &spec, const OracleOptions &options = {});

} // namespace claimproof
