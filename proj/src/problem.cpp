#include "macaulay/problem.hpp"

#include <cctype>
#include <charconv>

#include "macaulay/error.hpp"

namespace macaulay {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_words(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back(Token{std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
  return line;
}

std::optional<std::int64_t> to_int(std::string_view s) {
  std::int64_t v = 0;
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

// Parses nested "[[a,b],[c,d]]" into rows of entry strings.
std::vector<std::vector<std::string>> parse_nested(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.size() < 4 || compact.front() != '[' || compact.back() != ']') {
    throw UsageError("expected a matrix like [[1,0],[0,1]]");
  }
  std::vector<std::vector<std::string>> rows;
  std::size_t i = 1;
  while (i < compact.size() - 1) {
    if (compact[i] != '[') throw UsageError("expected '[' starting a matrix row");
    auto close = compact.find(']', i);
    if (close == std::string::npos) throw UsageError("unterminated matrix row");
    std::vector<std::string> row;
    std::string body = compact.substr(i + 1, close - i - 1);
    std::size_t start = 0;
    while (true) {
      auto comma = body.find(',', start);
      row.push_back(body.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    for (const auto& e : row) {
      if (e.empty()) throw UsageError("empty matrix entry");
    }
    rows.push_back(std::move(row));
    i = close + 1;
    if (i < compact.size() - 1) {
      if (compact[i] != ',') throw UsageError("expected ',' between matrix rows");
      ++i;
    }
  }
  return rows;
}

std::vector<std::string> split_names(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

ShiftSpec parse_shift(std::string_view text) {
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw UsageError("malformed shift '" + std::string(text) + "'");
    DegreeVector v;
    for (const auto& part : split_names(text.substr(1, text.size() - 2))) {
      auto x = to_int(part);
      if (!x) throw UsageError("malformed shift entry '" + part + "'");
      v.push_back(*x);
    }
    if (v.empty()) throw UsageError("empty shift vector");
    return v;
  }
  auto x = to_int(text);
  if (!x) throw UsageError("malformed shift '" + std::string(text) + "'");
  return *x;
}

// Splits "[a, (1,0), b]" at top-level commas.
std::vector<std::string> split_list(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.size() < 2 || compact.front() != '[' || compact.back() != ']') {
    throw UsageError("expected a bracketed list");
  }
  std::vector<std::string> out;
  std::string body = compact.substr(1, compact.size() - 2);
  if (body.empty()) return out;
  int depth = 0;
  std::string cur;
  for (char c : body) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

std::string format_shift(const ShiftSpec& s) {
  if (auto* v = std::get_if<std::int64_t>(&s)) return std::to_string(*v);
  const auto& vec = std::get<DegreeVector>(s);
  std::string out = "(";
  for (std::size_t i = 0; i < vec.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vec[i]);
  }
  return out + ")";
}

std::size_t rest_column(const std::vector<Token>& words, std::size_t index) {
  return index < words.size() ? words[index].column : (words.empty() ? 1 : words.back().column);
}

std::string rest_of(std::string_view line, std::size_t column) {
  return std::string(line.substr(std::min(line.size(), column - 1)));
}

}  // namespace

RingGrading parse_grading(std::string_view text, const std::vector<std::string>& variables) {
  auto words = split_words(text);
  std::size_t d = variables.size();
  if (d == 0) throw UsageError("declare variables before choosing a grading");
  if (words.empty()) throw UsageError("missing grading keyword");
  const auto& kind = words[0].text;
  RingGrading grading = RingGrading::total_degree(d);
  if (kind == "total") {
    if (words.size() != 1) throw UsageError("unexpected text after 'total'");
  } else if (kind == "order") {
    if (words.size() < 2) throw UsageError("expected degrevlex, lex or matrix after 'order'");
    if (words[1].text == "degrevlex" && words.size() == 2) {
      grading = RingGrading::degrevlex(d);
    } else if (words[1].text == "lex" && words.size() == 2) {
      grading = RingGrading::lex(d);
    } else if (words[1].text == "matrix") {
      if (words.size() < 3) throw UsageError("expected a weight matrix");
      IntMatrix w;
      for (const auto& row : parse_nested(rest_of(text, words[2].column))) {
        std::vector<std::int64_t> r;
        for (const auto& e : row) {
          auto x = to_int(e);
          if (!x) throw UsageError("weight matrix entries must be integers");
          r.push_back(*x);
        }
        w.push_back(std::move(r));
      }
      if (w.size() != d) throw UsageError("weight matrix must be " + std::to_string(d) + " x " + std::to_string(d));
      grading = RingGrading::matrix_order(std::move(w));
    } else {
      throw UsageError("unknown order '" + words[1].text + "'");
    }
  } else if (kind == "elim") {
    if (words.size() < 2) throw UsageError("expected a count or 'keep' after 'elim'");
    std::vector<bool> kept(d, false);
    if (words[1].text == "keep") {
      auto names = split_names(rest_of(text, rest_column(words, 2)));
      if (words.size() < 3 || names.empty()) throw UsageError("expected variables after 'keep'");
      for (const auto& n : names) {
        std::size_t i = 0;
        while (i < d && variables[i] != n) ++i;
        if (i == d) throw UsageError("unknown variable " + n);
        kept[i] = true;
      }
    } else {
      auto k = to_int(words[1].text);
      if (!k || *k < 0 || static_cast<std::size_t>(*k) > d || words.size() != 2) {
        throw UsageError("elim expects a count between 0 and " + std::to_string(d));
      }
      for (std::int64_t i = 0; i < *k; ++i) kept[static_cast<std::size_t>(i)] = true;
    }
    grading = RingGrading::elimination(kept);
  } else {
    throw UsageError("unknown grading '" + kind + "'");
  }
  auto report = verify_monoid_order(grading, 200);
  if (!report.passed()) throw UsageError("invalid grading: " + report.failures.front());
  return grading;
}

std::vector<DegreeVector> resolve_shifts(const std::vector<ShiftSpec>& shifts, std::size_t rank,
                                         const RingGrading& ring) {
  std::vector<DegreeVector> out;
  if (shifts.empty()) {
    out.assign(rank, ring.zero());
    return out;
  }
  if (shifts.size() != rank) throw UsageError("number of shifts does not match the module rank");
  for (const auto& s : shifts) {
    if (auto* a = std::get_if<std::int64_t>(&s)) {
      DegreeVector v = ring.zero();
      v[0] = *a;
      out.push_back(std::move(v));
    } else {
      const auto& v = std::get<DegreeVector>(s);
      if (v.size() != ring.dimension()) {
        throw UsageError("shift " + format_shift(s) + " does not match the grading dimension " +
                         std::to_string(ring.dimension()));
      }
      out.push_back(v);
    }
  }
  return out;
}

RingGrading ProblemFile::ring_grading() const { return parse_grading(grading, variables); }

ModuleGrading ProblemFile::module_grading() const {
  auto ring = ring_grading();
  auto resolved = resolve_shifts(shifts, rank, ring);
  return ModuleGrading::free_module(ring, rank, resolved, tie);
}

ProblemFile parse_problem(std::string_view text, const ProblemOverrides& overrides) {
  ProblemFile p;
  if (overrides.field) p.field = *overrides.field;
  bool have_vars = false, in_generators = false;
  std::size_t grading_line = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    auto line = strip_comment(raw);
    auto words = split_words(line);
    if (words.empty()) {
      if (end == text.size()) break;
      continue;
    }
    auto fail = [&](const std::string& message, std::size_t column) -> void {
      throw SyntaxError(message, line_no, column);
    };
    if (in_generators) {
      p.generators.push_back(p.ring().parse_element(line, p.rank, line_no, 0));
      continue;
    }
    const auto& key = words[0].text;
    if (key == "field") {
      Field f = Field::rationals();
      try {
        if (words.size() == 2) f = Field::from_spec(words[1].text);
        else if (words.size() == 3 && words[1].text == "fp") f = Field::from_spec("fp:" + words[2].text);
        else fail("expected 'field q' or 'field fp <p>'", rest_column(words, 1));
      } catch (const UsageError& e) {
        fail(e.what(), rest_column(words, 1));
      }
      if (!overrides.field) p.field = f;
    } else if (key == "vars") {
      if (words.size() < 2) fail("expected variable names", rest_column(words, 1));
      std::vector<std::string> names;
      for (std::size_t i = 1; i < words.size(); ++i) {
        for (auto& n : split_names(words[i].text)) names.push_back(std::move(n));
      }
      try {
        RingContext check(p.field, names);
      } catch (const UsageError& e) {
        fail(e.what(), words[1].column);
      }
      p.variables = std::move(names);
      have_vars = true;
    } else if (key == "grading") {
      if (words.size() < 2) fail("expected a grading keyword", rest_column(words, 1));
      p.grading = rest_of(line, words[1].column);
      grading_line = line_no;
      if (have_vars && !overrides.grading) {
        try {
          parse_grading(p.grading, p.variables);
        } catch (const UsageError& e) {
          fail(e.what(), words[1].column);
        }
      }
    } else if (key == "module") {
      std::size_t i = 1;
      while (i < words.size()) {
        const auto& w = words[i].text;
        if (w == "rank" && i + 1 < words.size()) {
          auto r = to_int(words[i + 1].text);
          if (!r || *r < 1) fail("rank must be a positive integer", words[i + 1].column);
          p.rank = static_cast<std::size_t>(*r);
          i += 2;
        } else if (w == "shifts" && i + 1 < words.size()) {
          // The list may contain spaces; it runs until the closing bracket.
          auto start = words[i + 1].column;
          auto close = line.find(']', start - 1);
          if (close == std::string_view::npos) fail("unterminated shift list", start);
          try {
            p.shifts.clear();
            for (const auto& s : split_list(line.substr(start - 1, close - start + 2))) p.shifts.push_back(parse_shift(s));
          } catch (const UsageError& e) {
            fail(e.what(), start);
          }
          i += 2;
          while (i < words.size() && words[i].column <= close + 1) ++i;
        } else if (w == "tie" && i + 1 < words.size()) {
          const auto& t = words[i + 1].text;
          if (t == "pot") p.tie = TieOrder::PositionOverTerm;
          else if (t == "top") p.tie = TieOrder::TermOverPosition;
          else if (t == "none") p.tie = TieOrder::None;
          else fail("tie order must be pot, top or none", words[i + 1].column);
          i += 2;
        } else {
          fail("unexpected '" + w + "' in module declaration", words[i].column);
        }
      }
      if (!p.shifts.empty() && p.shifts.size() != p.rank) {
        fail("number of shifts does not match the module rank", words[0].column);
      }
    } else if (key == "group") {
      if (words.size() != 2) fail("expected a group file name", rest_column(words, 1));
      p.group = words[1].text;
    } else if (key == "generators") {
      if (words.size() != 1) fail("generators start on the next line", words[1].column);
      if (!have_vars) fail("declare vars before generators", words[0].column);
      in_generators = true;
    } else {
      fail("unknown declaration '" + key + "'", words[0].column);
    }
    if (end == text.size()) break;
  }
  if (!have_vars) throw SyntaxError("missing vars declaration", line_no == 0 ? 1 : line_no, 1);
  if (overrides.grading) p.grading = *overrides.grading;
  try {
    p.module_grading();
  } catch (const UsageError& e) {
    if (overrides.grading) throw;
    throw SyntaxError(e.what(), grading_line == 0 ? 1 : grading_line, 1);
  }
  return p;
}

std::string print_problem(const ProblemFile& p) {
  std::string out = "field " + p.field.to_string() + "\n";
  out += "vars";
  for (const auto& v : p.variables) out += " " + v;
  out += "\ngrading " + p.grading + "\n";
  out += "module rank " + std::to_string(p.rank);
  if (!p.shifts.empty()) {
    out += " shifts [";
    for (std::size_t i = 0; i < p.shifts.size(); ++i) {
      if (i) out += ", ";
      out += format_shift(p.shifts[i]);
    }
    out += "]";
  }
  if (p.tie == TieOrder::PositionOverTerm) out += " tie pot";
  if (p.tie == TieOrder::TermOverPosition) out += " tie top";
  out += "\n";
  if (p.group) out += "group " + *p.group + "\n";
  out += "generators\n";
  auto ring = p.ring();
  for (const auto& g : p.generators) out += ring.format(g) + "\n";
  return out;
}

std::vector<Substitution> parse_group(std::string_view text, std::size_t nvars, const Field& field) {
  std::vector<Substitution> gens;
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = strip_comment(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    auto words = split_words(line);
    if (!words.empty()) {
      const auto& key = words[0].text;
      std::size_t col = rest_column(words, 1);
      auto body = rest_of(line, col);
      try {
        if (key == "group" || key == "generators:") {
          // Header line.
        } else if (key == "perm") {
          std::vector<std::size_t> target(nvars);
          for (std::size_t i = 0; i < nvars; ++i) target[i] = i;
          std::size_t i = 0;
          while (i < body.size()) {
            if (std::isspace(static_cast<unsigned char>(body[i]))) {
              ++i;
              continue;
            }
            if (body[i] != '(') throw UsageError("expected '(' starting a cycle");
            auto close = body.find(')', i);
            if (close == std::string::npos) throw UsageError("unterminated cycle");
            std::vector<std::size_t> cycle;
            for (const auto& n : split_names(body.substr(i + 1, close - i - 1))) {
              auto v = to_int(n);
              if (!v || *v < 1 || static_cast<std::size_t>(*v) > nvars) throw UsageError("bad variable index " + n);
              cycle.push_back(static_cast<std::size_t>(*v - 1));
            }
            for (std::size_t k = 0; k < cycle.size(); ++k) target[cycle[k]] = cycle[(k + 1) % cycle.size()];
            i = close + 1;
          }
          std::vector<Polynomial> images;
          for (std::size_t j = 0; j < nvars; ++j) images.push_back(Polynomial::variable(nvars, target[j], field));
          Substitution g(std::move(images));
          if (!g.is_invertible()) throw UsageError("cycles must be disjoint");
          gens.push_back(std::move(g));
        } else if (key == "signed-perm") {
          auto open = body.find('('), close = body.find(')');
          if (open == std::string::npos || close == std::string::npos) throw UsageError("expected (images)");
          auto entries = split_names(body.substr(open + 1, close - open - 1));
          if (entries.size() != nvars) throw UsageError("signed-perm needs one entry per variable");
          std::vector<Polynomial> images;
          for (const auto& e : entries) {
            auto v = to_int(e);
            if (!v || *v == 0 || static_cast<std::size_t>(std::abs(*v)) > nvars) throw UsageError("bad entry " + e);
            auto x = Polynomial::variable(nvars, static_cast<std::size_t>(std::abs(*v) - 1), field);
            images.push_back(*v < 0 ? -x : x);
          }
          Substitution g(std::move(images));
          if (!g.is_invertible()) throw UsageError("signed-perm entries must form a permutation");
          gens.push_back(std::move(g));
        } else if (key == "matrix") {
          std::vector<std::vector<Scalar>> m;
          for (const auto& row : parse_nested(body)) {
            std::vector<Scalar> r;
            for (const auto& e : row) r.push_back(field.parse(e));
            m.push_back(std::move(r));
          }
          if (m.size() != nvars) throw UsageError("group matrix must be " + std::to_string(nvars) + " x " + std::to_string(nvars));
          gens.push_back(Substitution::from_matrix(m));
        } else {
          throw SyntaxError("unknown group generator '" + key + "'", line_no, words[0].column);
        }
      } catch (const UsageError& e) {
        throw SyntaxError(e.what(), line_no, col);
      } catch (const ArithmeticError& e) {
        throw SyntaxError(e.what(), line_no, col);
      }
    }
    if (end == text.size()) break;
  }
  if (gens.empty()) throw SyntaxError("group file lists no generators", line_no == 0 ? 1 : line_no, 1);
  return gens;
}

}  // namespace macaulay
