#include "macaulay/polymod.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "macaulay/error.hpp"

namespace macaulay {

namespace {

bool poly_before(const Polynomial::Term& a, const Polynomial::Term& b) {
  return compare_degrevlex(a.first, b.first) > 0;
}

bool module_before(const ModuleElement::Term& a, const ModuleElement::Term& b) {
  return compare_storage(a.first, b.first) < 0;
}

// Merges two sorted term lists, combining equal keys. cmp returns <0 when a comes first.
template <typename Term, typename Cmp>
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b, Cmp cmp) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? 1 : j == b.size() ? -1 : cmp(a[i].first, b[j].first);
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      out.push_back(b[j++]);
      if (negate_b) out.back().second = -out.back().second;
    } else {
      Scalar s = negate_b ? a[i].second - b[j].second : a[i].second + b[j].second;
      if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

template <typename Term, typename Less>
void canonicalize(std::vector<Term>& terms, Less less) {
  std::sort(terms.begin(), terms.end(), less);
  std::vector<Term> out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  terms = std::move(out);
}

int poly_cmp(const Monomial& a, const Monomial& b) { return -compare_degrevlex(a, b); }

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, const Scalar& c) {
  return term(Monomial(nvars), c);
}

Polynomial Polynomial::term(const Monomial& m, const Scalar& c) {
  Polynomial p(m.nvars(), c.field());
  if (!c.is_zero()) p.terms_.emplace_back(m, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index, Field field) {
  return term(Monomial::variable(nvars, index), field.one());
}

Polynomial Polynomial::from_terms(std::size_t nvars, Field field, std::vector<Term> terms) {
  Polynomial p(nvars, field);
  for (const auto& t : terms) {
    if (t.first.nvars() != nvars) throw UsageError("monomial has the wrong number of variables");
  }
  canonicalize(terms, poly_before);
  p.terms_ = std::move(terms);
  return p;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, Scalar()}, poly_before);
  if (it != terms_.end() && it->first == m) return it->second;
  return field_.zero();
}

std::int64_t Polynomial::total_degree() const {
  std::int64_t d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<std::int64_t>(t.first.total_degree()));
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (nvars_ != other.nvars_) throw UsageError("adding polynomials over different rings");
  terms_ = merge_terms(terms_, other.terms_, false, poly_cmp);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (nvars_ != other.nvars_) throw UsageError("subtracting polynomials over different rings");
  terms_ = merge_terms(terms_, other.terms_, true, poly_cmp);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw UsageError("multiplying polynomials over different rings");
  std::vector<Polynomial::Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) terms.emplace_back(ma * mb, ca * cb);
  }
  return Polynomial::from_terms(a.nvars_, a.field_, std::move(terms));
}

Polynomial operator*(const Scalar& c, const Polynomial& p) {
  if (c.is_zero()) return Polynomial(p.nvars_, p.field_);
  Polynomial out(p);
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

Polynomial Polynomial::times(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return Polynomial(nvars_, field_);
  Polynomial out(*this);
  // Multiplying by a monomial preserves degrevlex order.
  for (auto& t : out.terms_) {
    t.first = t.first * m;
    t.second *= c;
  }
  return out;
}

Polynomial Polynomial::pow(std::uint32_t k) const {
  Polynomial result = constant(nvars_, field_.one());
  Polynomial base(*this);
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

ModuleElement ModuleElement::from_terms(std::size_t rank, std::size_t nvars, Field field, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.first.component >= rank) throw UsageError("module term outside the free module rank");
    if (t.first.monomial.nvars() != nvars) throw UsageError("monomial has the wrong number of variables");
  }
  canonicalize(terms, module_before);
  ModuleElement m(rank, nvars, field);
  m.terms_ = std::move(terms);
  return m;
}

ModuleElement ModuleElement::from_components(const std::vector<Polynomial>& components) {
  if (components.empty()) throw UsageError("a module element needs at least one component");
  ModuleElement m(components.size(), components[0].nvars(), components[0].field());
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].nvars() != m.nvars_) throw UsageError("components over different rings");
    for (const auto& [mono, c] : components[i].terms()) m.terms_.emplace_back(ModuleMonomial{mono, i}, c);
  }
  return m;
}

ModuleElement ModuleElement::from_polynomial(const Polynomial& p) { return from_components({p}); }

ModuleElement ModuleElement::basis_vector(std::size_t rank, std::size_t nvars, Field field, std::size_t i) {
  ModuleElement m(rank, nvars, field);
  m.terms_.emplace_back(ModuleMonomial{Monomial(nvars), i}, field.one());
  return m;
}

Scalar ModuleElement::coefficient(const ModuleMonomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, Scalar()}, module_before);
  if (it != terms_.end() && it->first == m) return it->second;
  return field_.zero();
}

Polynomial ModuleElement::component(std::size_t i) const {
  Polynomial p(nvars_, field_);
  std::vector<Polynomial::Term> terms;
  for (const auto& [mm, c] : terms_) {
    if (mm.component == i) terms.emplace_back(mm.monomial, c);
  }
  return Polynomial::from_terms(nvars_, field_, std::move(terms));
}

std::vector<Polynomial> ModuleElement::components() const {
  std::vector<std::vector<Polynomial::Term>> parts(rank_);
  for (const auto& [mm, c] : terms_) parts[mm.component].emplace_back(mm.monomial, c);
  std::vector<Polynomial> out;
  for (auto& p : parts) out.push_back(Polynomial::from_terms(nvars_, field_, std::move(p)));
  return out;
}

void ModuleElement::check_compatible(const ModuleElement& other) const {
  if (rank_ != other.rank_ || nvars_ != other.nvars_) throw UsageError("module elements of different shape");
}

ModuleElement ModuleElement::operator-() const {
  ModuleElement m(*this);
  for (auto& t : m.terms_) t.second = -t.second;
  return m;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& other) {
  check_compatible(other);
  terms_ = merge_terms(terms_, other.terms_, false, compare_storage);
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& other) {
  check_compatible(other);
  terms_ = merge_terms(terms_, other.terms_, true, compare_storage);
  return *this;
}

ModuleElement operator*(const Scalar& c, const ModuleElement& m) {
  if (c.is_zero()) return ModuleElement(m.rank_, m.nvars_, m.field_);
  ModuleElement out(m);
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

ModuleElement operator*(const Polynomial& r, const ModuleElement& m) {
  if (r.nvars() != m.nvars_) throw UsageError("ring element and module element over different rings");
  std::vector<ModuleElement::Term> terms;
  terms.reserve(r.size() * m.size());
  for (const auto& [mr, cr] : r.terms()) {
    for (const auto& [mm, cm] : m.terms_) terms.emplace_back(ModuleMonomial{mr * mm.monomial, mm.component}, cr * cm);
  }
  return ModuleElement::from_terms(m.rank_, m.nvars_, m.field_, std::move(terms));
}

ModuleElement ModuleElement::times(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return ModuleElement(rank_, nvars_, field_);
  ModuleElement out(*this);
  for (auto& t : out.terms_) {
    t.first.monomial = t.first.monomial * m;
    t.second *= c;
  }
  return out;
}

ModuleElement ModuleElement::normalized(const ModuleGrading& grading) const {
  if (is_zero()) return *this;
  auto lf = leading_form(*this, grading);
  return lf.element.terms_.front().second.inverse() * *this;
}

bool operator==(const ModuleElement& a, const ModuleElement& b) {
  return a.rank_ == b.rank_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

std::uint64_t ModuleElement::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (const auto& [mm, c] : terms_) {
    mix(mm.component);
    for (auto e : mm.monomial.exponents()) mix(e);
    mix(c.hash());
  }
  return h;
}

int compare_terms(const ModuleElement& a, const ModuleElement& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = compare_storage(a.terms()[i].first, b.terms()[i].first);
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = a.terms()[i].second;
    const auto& y = b.terms()[i].second;
    if (x == y) continue;
    if (x.is_rational()) return x.rational() < y.rational() ? -1 : 1;
    return x.residue() < y.residue() ? -1 : 1;
  }
  return 0;
}

ModuleElement combine(const std::vector<Polynomial>& coords, const std::vector<ModuleElement>& elements) {
  if (coords.size() != elements.size()) throw UsageError("coordinate vector has the wrong length");
  if (elements.empty()) throw UsageError("cannot combine an empty list");
  ModuleElement out(elements[0].rank(), elements[0].nvars(), elements[0].field());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].is_zero()) out += coords[i] * elements[i];
  }
  return out;
}

std::vector<HomogeneousPart> homogeneous_components(const ModuleElement& m, const ModuleGrading& grading) {
  if (m.nvars() != grading.nvars() || m.rank() != grading.rank()) {
    throw UsageError("element does not live in the graded module");
  }
  std::map<Degree, std::vector<ModuleElement::Term>> buckets;
  for (const auto& t : m.terms()) buckets[grading.degree(t.first)].push_back(t);
  std::vector<HomogeneousPart> parts;
  for (auto& [deg, terms] : buckets) {
    // Terms arrive in storage order already.
    parts.push_back(HomogeneousPart{deg, ModuleElement::from_terms(m.rank(), m.nvars(), m.field(), std::move(terms))});
  }
  std::sort(parts.begin(), parts.end(),
            [&](const HomogeneousPart& a, const HomogeneousPart& b) { return grading.compare(a.degree, b.degree) > 0; });
  return parts;
}

HomogeneousPart leading_form(const ModuleElement& m, const ModuleGrading& grading) {
  if (m.is_zero()) throw UsageError("the leading form of zero is undefined");
  if (m.nvars() != grading.nvars() || m.rank() != grading.rank()) {
    throw UsageError("element does not live in the graded module");
  }
  Degree best = grading.degree(m.terms().front().first);
  for (const auto& t : m.terms()) {
    Degree d = grading.degree(t.first);
    if (grading.compare(d, best) > 0) best = std::move(d);
  }
  std::vector<ModuleElement::Term> terms;
  for (const auto& t : m.terms()) {
    if (grading.degree(t.first) == best) terms.push_back(t);
  }
  return HomogeneousPart{best, ModuleElement::from_terms(m.rank(), m.nvars(), m.field(), std::move(terms))};
}

Degree degree(const ModuleElement& m, const ModuleGrading& grading) { return leading_form(m, grading).degree; }

bool is_homogeneous(const ModuleElement& m, const ModuleGrading& grading) {
  if (m.is_zero()) return true;
  Degree d = grading.degree(m.terms().front().first);
  return std::all_of(m.terms().begin(), m.terms().end(),
                     [&](const ModuleElement::Term& t) { return grading.degree(t.first) == d; });
}

RingContext::RingContext(Field field, std::vector<std::string> variables)
    : field_(field), variables_(std::move(variables)) {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    const auto& v = variables_[i];
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_')) {
      throw UsageError("invalid variable name '" + v + "'");
    }
    for (char ch : v) {
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') throw UsageError("invalid variable name '" + v + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (variables_[j] == v) throw UsageError("duplicate variable " + v);
    }
  }
}

int RingContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

namespace {

class ExpressionParser {
 public:
  ExpressionParser(const RingContext& ring, std::string_view text, std::size_t line, std::size_t offset)
      : ring_(ring), text_(text), line_(line), offset_(offset) {}

  Polynomial parse_all() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t pos) const {
    throw SyntaxError(message, line_, offset_ + pos + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial result(ring_.nvars(), ring_.field());
    skip_space();
    if (pos_ == text_.size()) fail("expected an expression");
    bool first = true;
    while (true) {
      bool negate = false;
      if (accept('+')) {
      } else if (accept('-')) {
        negate = true;
      } else if (!first) {
        break;
      }
      Polynomial t = product();
      if (negate) result -= t;
      else result += t;
      first = false;
    }
    return result;
  }

  Polynomial product() {
    Polynomial result = power();
    while (true) {
      if (accept('*')) {
        result = result * power();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Polynomial d = power();
        if (d.is_zero()) fail_at("division by zero", at);
        if (d.size() != 1 || !d.terms()[0].first.is_one()) fail_at("division by a non-constant", at);
        result = d.terms()[0].second.inverse() * result;
      } else {
        return result;
      }
    }
  }

  Polynomial power() {
    if (accept('-')) return -power();
    Polynomial base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail_at("malformed exponent", start);
      if (pos_ - start > 6) fail_at("exponent too large", start);
      auto k = static_cast<std::uint32_t>(std::stoul(std::string(text_.substr(start, pos_ - start))));
      return base.pow(k);
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Scalar value = ring_.field().parse(text_.substr(start, pos_ - start));
      return Polynomial::constant(ring_.nvars(), value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      auto name = text_.substr(start, pos_ - start);
      int idx = ring_.index_of(name);
      if (idx < 0) fail_at("unknown variable " + std::string(name), start);
      return Polynomial::variable(ring_.nvars(), static_cast<std::size_t>(idx), ring_.field());
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const RingContext& ring_;
  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial RingContext::parse_polynomial(std::string_view text, std::size_t line, std::size_t column_offset) const {
  return ExpressionParser(*this, text, line, column_offset).parse_all();
}

ModuleElement RingContext::parse_element(std::string_view text, std::size_t rank, std::size_t line,
                                         std::size_t column_offset) const {
  std::size_t start = text.find_first_not_of(" \t\r");
  if (start == std::string_view::npos) throw SyntaxError("expected an element", line, column_offset + 1);
  if (text[start] != '[') {
    if (rank != 1) throw SyntaxError("expected '[' for an element of rank " + std::to_string(rank), line, column_offset + start + 1);
    return ModuleElement::from_polynomial(parse_polynomial(text, line, column_offset));
  }
  std::size_t end = text.find_last_not_of(" \t\r");
  if (text[end] != ']') throw SyntaxError("expected ']'", line, column_offset + end + 1);
  std::vector<Polynomial> parts;
  std::size_t depth = 0, piece = start + 1;
  for (std::size_t i = start + 1; i <= end; ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    else if (c == ')') {
      if (depth == 0) throw SyntaxError("unbalanced ')'", line, column_offset + i + 1);
      --depth;
    } else if ((c == ',' && depth == 0) || i == end) {
      parts.push_back(parse_polynomial(text.substr(piece, i - piece), line, column_offset + piece));
      piece = i + 1;
    }
  }
  if (parts.size() != rank) {
    throw SyntaxError("element has " + std::to_string(parts.size()) + " components, expected " + std::to_string(rank),
                      line, column_offset + start + 1);
  }
  return ModuleElement::from_components(parts);
}

std::string RingContext::format(const Monomial& m) const {
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += variables_.at(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string RingContext::format(const Polynomial& p) const {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool negative = c.is_negative();
    Scalar magnitude = negative ? -c : c;
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      s += magnitude.to_string();
    } else if (magnitude.is_one()) {
      s += format(m);
    } else {
      s += magnitude.to_string() + "*" + format(m);
    }
  }
  return s;
}

std::string RingContext::format(const ModuleElement& m) const {
  if (m.rank() == 1) return format(m.component(0));
  std::string s = "[";
  auto parts = m.components();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ", ";
    s += format(parts[i]);
  }
  return s + "]";
}

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t nvars, const Field& field,
                             const RandomElementOptions& options) {
  std::uniform_int_distribution<std::size_t> nterms(0, options.max_terms);
  std::uniform_int_distribution<std::size_t> deg(0, options.max_degree);
  std::uniform_int_distribution<std::size_t> var(0, nvars == 0 ? 0 : nvars - 1);
  std::uniform_int_distribution<std::int64_t> coeff(-options.coefficient_bound, options.coefficient_bound);
  std::vector<Polynomial::Term> terms;
  std::size_t n = nterms(rng);
  for (std::size_t k = 0; k < n; ++k) {
    Monomial m(nvars);
    std::size_t d = deg(rng);
    for (std::size_t e = 0; e < d && nvars > 0; ++e) m[var(rng)] += 1;
    terms.emplace_back(std::move(m), field.from_int(coeff(rng)));
  }
  return Polynomial::from_terms(nvars, field, std::move(terms));
}

ModuleElement random_element(std::mt19937_64& rng, std::size_t rank, std::size_t nvars, const Field& field,
                             const RandomElementOptions& options) {
  std::vector<Polynomial> parts;
  for (std::size_t i = 0; i < rank; ++i) parts.push_back(random_polynomial(rng, nvars, field, options));
  return ModuleElement::from_components(parts);
}

}  // namespace macaulay
