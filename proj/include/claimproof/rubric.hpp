#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace claimproof {

class RubricError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Score quantity stored as a count of half points, so 0.5 awards stay exact.
class HalfPoints {
public:
  constexpr HalfPoints() = default;
  static constexpr HalfPoints from_halves(std::int64_t halves) { return HalfPoints(halves); }
  static constexpr HalfPoints whole(std::int64_t points) { return HalfPoints(points * 2); }
  /// Accepts "3", "3.0" and "3.5"; throws RubricError otherwise.
  static HalfPoints parse(std::string_view text);

  constexpr std::int64_t halves() const { return halves_; }
  std::string str() const;

  constexpr HalfPoints operator+(HalfPoints o) const { return HalfPoints(halves_ + o.halves_); }
  constexpr HalfPoints operator-(HalfPoints o) const { return HalfPoints(halves_ - o.halves_); }
  constexpr HalfPoints operator*(std::int64_t k) const { return HalfPoints(halves_ * k); }
  constexpr HalfPoints &operator+=(HalfPoints o) {
    halves_ += o.halves_;
    return *this;
  }
  constexpr auto operator<=>(const HalfPoints &) const = default;

private:
  constexpr explicit HalfPoints(std::int64_t halves) : halves_(halves) {}
  std::int64_t halves_ = 0;
};

struct Criterion {
  std::string description;
  HalfPoints points;
  int multiplier = 1;

  HalfPoints weight() const { return points * multiplier; }
  bool operator==(const Criterion &) const = default;
};

struct RubricSection {
  std::string name;
  std::vector<Criterion> criteria;
  bool operator==(const RubricSection &) const = default;
};

struct PointRubric {
  std::string name;
  std::int64_t maximum = 0;
  std::vector<RubricSection> sections;

  HalfPoints weighted_sum() const;
  bool operator==(const PointRubric &) const = default;
};

inline constexpr std::array<std::string_view, 5> kLevelLabels = {
    "Does not meet (1)", "Attempted (2)", "Approaches (3)", "Meets (4)", "Exceeds (5)"};

struct Trait {
  std::string name;
  std::array<std::string, 5> levels; // descriptor for level k at index k-1
  bool operator==(const Trait &) const = default;
};

struct TraitRubric {
  std::string name;
  std::vector<Trait> traits;

  int maximum() const { return 5 * static_cast<int>(traits.size()); }
  bool operator==(const TraitRubric &) const = default;
};

using Rubric = std::variant<PointRubric, TraitRubric>;

Rubric load_rubric(std::string_view text);
Rubric load_rubric_file(const std::string &path);
std::string serialize_rubric(const Rubric &rubric);

struct MarkSheet {
  struct Award {
    std::string criterion;
    HalfPoints value;
  };
  struct Level {
    std::string trait;
    int level;
  };
  std::vector<Award> awards;
  std::vector<Level> levels;
};

MarkSheet parse_marks(std::string_view text);
MarkSheet load_marks_file(const std::string &path);

struct ScoreReport {
  struct Line {
    std::string name;
    HalfPoints subtotal;
    HalfPoints maximum;
  };
  std::string rubric_name;
  std::vector<Line> lines; // sections (point rubric) or traits (trait rubric)
  HalfPoints total;
  HalfPoints maximum;

  std::string render() const;
};

/// Marks must cover each criterion or trait exactly once.
ScoreReport score(const Rubric &rubric, const MarkSheet &marks);

} // namespace claimproof
