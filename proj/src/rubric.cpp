#include "claimproof/rubric.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace claimproof {

namespace {

struct Token {
  std::string text;
  bool quoted = false;
};

std::string at_line(std::size_t line, const std::string &message) {
  return "line " + std::to_string(line) + ": " + message;
}

std::vector<Token> tokenize(const std::string &line, std::size_t line_no) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    Token tok;
    if (line[i] == '"') {
      tok.quoted = true;
      ++i;
      bool closed = false;
      while (i < line.size()) {
        const char c = line[i++];
        if (c == '\\' && i < line.size()) {
          tok.text += line[i++];
        } else if (c == '"') {
          closed = true;
          break;
        } else {
          tok.text += c;
        }
      }
      if (!closed)
        throw RubricError(at_line(line_no, "unterminated quoted string"));
    } else {
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
        tok.text += line[i++];
    }
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

std::string quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out + "\"";
}

// A name is one quoted token or the bare words joined by single spaces.
std::string join_name(const std::vector<Token> &tokens, std::size_t first, std::size_t last,
                      std::size_t line_no) {
  if (first >= last)
    throw RubricError(at_line(line_no, "missing name"));
  if (last - first == 1)
    return tokens[first].text;
  std::string out;
  for (std::size_t i = first; i < last; ++i) {
    if (tokens[i].quoted)
      throw RubricError(at_line(line_no, "a quoted name must be the only name token"));
    out += (out.empty() ? "" : " ") + tokens[i].text;
  }
  return out;
}

std::int64_t parse_int(std::string_view text, std::size_t line_no, std::string_view what) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw RubricError(at_line(line_no, "invalid " + std::string(what) + " '" + std::string(text) +
                                           "'"));
  return value;
}

std::string_view after_prefix(const std::string &text, std::string_view prefix) {
  if (!text.starts_with(prefix))
    return {};
  return std::string_view(text).substr(prefix.size());
}

template <class F> void for_each_line(std::string_view text, F &&f) {
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    f(tokenize(line, line_no), line_no);
  }
}

std::string read_file(const std::string &path) {
  std::ifstream file(path);
  if (!file)
    throw RubricError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

PointRubric load_point(std::string_view text) {
  PointRubric rubric;
  bool header = false;
  std::set<std::string> seen;
  for_each_line(text, [&](const std::vector<Token> &t, std::size_t line_no) {
    const std::string &kw = t[0].text;
    if (!header) {
      if (t.size() < 4 || kw != "rubric" || t[1].text != "point")
        throw RubricError(at_line(line_no, "expected 'rubric point <name> max=<int>'"));
      const auto max_text = after_prefix(t.back().text, "max=");
      if (max_text.empty())
        throw RubricError(at_line(line_no, "missing max=<int>"));
      rubric.name = join_name(t, 2, t.size() - 1, line_no);
      rubric.maximum = parse_int(max_text, line_no, "maximum");
      header = true;
    } else if (kw == "section") {
      rubric.sections.push_back({join_name(t, 1, t.size(), line_no), {}});
    } else if (kw == "criterion") {
      if (rubric.sections.empty())
        throw RubricError(at_line(line_no, "criterion before any section"));
      if (t.size() < 3 || t.size() > 4 || !t[1].quoted)
        throw RubricError(
            at_line(line_no, "expected 'criterion \"<description>\" points=<n> [x<multiplier>]'"));
      const auto points_text = after_prefix(t[2].text, "points=");
      if (points_text.empty())
        throw RubricError(at_line(line_no, "missing points=<n>"));
      Criterion c{t[1].text, HalfPoints::parse(points_text), 1};
      if (c.points <= HalfPoints{})
        throw RubricError(at_line(line_no, "criterion points must be positive"));
      if (t.size() == 4) {
        const auto mult = after_prefix(t[3].text, "x");
        c.multiplier = static_cast<int>(parse_int(mult, line_no, "multiplier"));
        if (c.multiplier < 1)
          throw RubricError(at_line(line_no, "multiplier must be at least 1"));
      }
      if (!seen.insert(c.description).second)
        throw RubricError(at_line(line_no, "duplicate criterion \"" + c.description + "\""));
      rubric.sections.back().criteria.push_back(std::move(c));
    } else {
      throw RubricError(at_line(line_no, "unknown directive '" + kw + "'"));
    }
  });
  if (rubric.weighted_sum() != HalfPoints::whole(rubric.maximum))
    throw RubricError("criteria sum to " + rubric.weighted_sum().str() +
                      " but the rubric declares max=" + std::to_string(rubric.maximum));
  return rubric;
}

TraitRubric load_trait(std::string_view text) {
  TraitRubric rubric;
  bool header = false;
  int next_level = 6; // 6 means "no trait open"
  std::set<std::string> seen;
  for_each_line(text, [&](const std::vector<Token> &t, std::size_t line_no) {
    const std::string &kw = t[0].text;
    if (!header) {
      if (t.size() < 3 || kw != "rubric" || t[1].text != "trait")
        throw RubricError(at_line(line_no, "expected 'rubric trait <name>'"));
      rubric.name = join_name(t, 2, t.size(), line_no);
      header = true;
    } else if (kw == "trait") {
      if (next_level != 6)
        throw RubricError(at_line(line_no, "previous trait has fewer than five levels"));
      if (t.size() != 2 || !t[1].quoted)
        throw RubricError(at_line(line_no, "expected 'trait \"<name>\"'"));
      if (!seen.insert(t[1].text).second)
        throw RubricError(at_line(line_no, "duplicate trait \"" + t[1].text + "\""));
      rubric.traits.push_back({t[1].text, {}});
      next_level = 1;
    } else if (kw == "level") {
      if (next_level == 6)
        throw RubricError(at_line(line_no, "level outside a trait"));
      if (t.size() != 3 || !t[2].quoted)
        throw RubricError(at_line(line_no, "expected 'level <k> \"<description>\"'"));
      if (parse_int(t[1].text, line_no, "level") != next_level)
        throw RubricError(at_line(line_no, "expected level " + std::to_string(next_level)));
      rubric.traits.back().levels[static_cast<std::size_t>(next_level - 1)] = t[2].text;
      ++next_level;
    } else {
      throw RubricError(at_line(line_no, "unknown directive '" + kw + "'"));
    }
  });
  if (next_level != 6)
    throw RubricError("last trait has fewer than five levels");
  return rubric;
}

} // namespace

HalfPoints HalfPoints::parse(std::string_view text) {
  const auto dot = text.find('.');
  const std::string_view integral = text.substr(0, dot);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(integral.data(), integral.data() + integral.size(), value);
  if (integral.empty() || ec != std::errc{} || ptr != integral.data() + integral.size() ||
      value < 0)
    throw RubricError("invalid score '" + std::string(text) + "'");
  if (dot == std::string_view::npos)
    return whole(value);
  const std::string_view frac = text.substr(dot + 1);
  if (frac == "0")
    return whole(value);
  if (frac == "5")
    return from_halves(value * 2 + 1);
  throw RubricError("score '" + std::string(text) + "' is not a multiple of 0.5");
}

std::string HalfPoints::str() const {
  const std::int64_t magnitude = halves_ < 0 ? -halves_ : halves_;
  std::string out = (halves_ < 0 ? "-" : "") + std::to_string(magnitude / 2);
  if (magnitude % 2)
    out += ".5";
  return out;
}

HalfPoints PointRubric::weighted_sum() const {
  HalfPoints sum;
  for (const auto &s : sections)
    for (const auto &c : s.criteria)
      sum += c.weight();
  return sum;
}

Rubric load_rubric(std::string_view text) {
  std::optional<std::vector<Token>> first;
  for_each_line(text, [&](const std::vector<Token> &t, std::size_t) {
    if (!first)
      first = t;
  });
  if (!first || first->size() < 2 || (*first)[0].text != "rubric")
    throw RubricError("rubric file must start with 'rubric point ...' or 'rubric trait ...'");
  if ((*first)[1].text == "point")
    return load_point(text);
  if ((*first)[1].text == "trait")
    return load_trait(text);
  throw RubricError("unknown rubric kind '" + (*first)[1].text + "'");
}

Rubric load_rubric_file(const std::string &path) { return load_rubric(read_file(path)); }

std::string serialize_rubric(const Rubric &rubric) {
  std::ostringstream out;
  if (const auto *p = std::get_if<PointRubric>(&rubric)) {
    out << "rubric point " << quote(p->name) << " max=" << p->maximum << '\n';
    for (const auto &s : p->sections) {
      out << "section " << quote(s.name) << '\n';
      for (const auto &c : s.criteria) {
        out << "criterion " << quote(c.description) << " points=" << c.points.str();
        if (c.multiplier != 1)
          out << " x" << c.multiplier;
        out << '\n';
      }
    }
  } else {
    const auto &t = std::get<TraitRubric>(rubric);
    out << "rubric trait " << quote(t.name) << '\n';
    for (const auto &trait : t.traits) {
      out << "trait " << quote(trait.name) << '\n';
      for (std::size_t k = 0; k < 5; ++k)
        out << "level " << k + 1 << ' ' << quote(trait.levels[k]) << '\n';
    }
  }
  return out.str();
}

MarkSheet parse_marks(std::string_view text) {
  MarkSheet marks;
  for_each_line(text, [&](const std::vector<Token> &t, std::size_t line_no) {
    if (t.size() != 3 || !t[1].quoted)
      throw RubricError(
          at_line(line_no, "expected 'award \"<criterion>\" <value>' or 'level \"<trait>\" <k>'"));
    if (t[0].text == "award") {
      try {
        marks.awards.push_back({t[1].text, HalfPoints::parse(t[2].text)});
      } catch (const RubricError &e) {
        throw RubricError(at_line(line_no, e.what()));
      }
    } else if (t[0].text == "level") {
      marks.levels.push_back({t[1].text, static_cast<int>(parse_int(t[2].text, line_no, "level"))});
    } else {
      throw RubricError(at_line(line_no, "unknown directive '" + t[0].text + "'"));
    }
  });
  return marks;
}

MarkSheet load_marks_file(const std::string &path) { return parse_marks(read_file(path)); }

ScoreReport score(const Rubric &rubric, const MarkSheet &marks) {
  ScoreReport report;
  if (const auto *p = std::get_if<PointRubric>(&rubric)) {
    if (!marks.levels.empty())
      throw RubricError("trait levels given for a point rubric");
    std::map<std::string, HalfPoints, std::less<>> awarded;
    for (const auto &a : marks.awards)
      if (!awarded.emplace(a.criterion, a.value).second)
        throw RubricError("criterion \"" + a.criterion + "\" awarded twice");

    report.rubric_name = p->name;
    std::size_t matched = 0;
    for (const auto &section : p->sections) {
      ScoreReport::Line line{section.name, {}, {}};
      for (const auto &c : section.criteria) {
        const auto it = awarded.find(c.description);
        if (it == awarded.end())
          throw RubricError("no award for criterion \"" + c.description + "\"");
        if (it->second > c.points)
          throw RubricError("award " + it->second.str() + " for \"" + c.description +
                            "\" exceeds its " + c.points.str() + " points");
        ++matched;
        line.subtotal += it->second * c.multiplier;
        line.maximum += c.weight();
      }
      report.total += line.subtotal;
      report.maximum += line.maximum;
      report.lines.push_back(std::move(line));
    }
    if (matched != awarded.size()) {
      for (const auto &[name, value] : awarded) {
        const bool known = std::any_of(p->sections.begin(), p->sections.end(), [&](const auto &s) {
          return std::any_of(s.criteria.begin(), s.criteria.end(),
                             [&](const Criterion &c) { return c.description == name; });
        });
        if (!known)
          throw RubricError("award for unknown criterion \"" + name + "\"");
      }
    }
    return report;
  }

  const auto &t = std::get<TraitRubric>(rubric);
  if (!marks.awards.empty())
    throw RubricError("point awards given for a trait rubric");
  std::map<std::string, int, std::less<>> levels;
  for (const auto &l : marks.levels) {
    if (l.level < 1 || l.level > 5)
      throw RubricError("level " + std::to_string(l.level) + " for \"" + l.trait +
                        "\" is outside 1..5");
    if (!levels.emplace(l.trait, l.level).second)
      throw RubricError("trait \"" + l.trait + "\" scored twice");
  }
  report.rubric_name = t.name;
  for (const auto &trait : t.traits) {
    const auto it = levels.find(trait.name);
    if (it == levels.end())
      throw RubricError("no level for trait \"" + trait.name + "\"");
    report.lines.push_back({trait.name, HalfPoints::whole(it->second), HalfPoints::whole(5)});
    report.total += HalfPoints::whole(it->second);
    levels.erase(it);
  }
  if (!levels.empty())
    throw RubricError("level for unknown trait \"" + levels.begin()->first + "\"");
  report.maximum = HalfPoints::whole(t.maximum());
  return report;
}

std::string ScoreReport::render() const {
  std::ostringstream out;
  out << rubric_name << '\n';
  for (const auto &line : lines)
    out << "  " << line.name << ": " << line.subtotal.str() << " / " << line.maximum.str() << '\n';
  out << "Total: " << total.str() << " / " << maximum.str() << '\n';
  return out.str();
}

} // namespace claimproof
