#include "macaulay/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "macaulay/apps.hpp"
#include "macaulay/error.hpp"
#include "macaulay/macbasis.hpp"
#include "macaulay/reduce.hpp"
#include "macaulay/symmetry.hpp"

namespace macaulay::cli {

namespace {

using json = nlohmann::ordered_json;

struct Session {
  const ProblemFile& problem;
  const CommandOptions& options;
  RingContext ring;
  ModuleGrading grading;
  Field field;

  Session(const ProblemFile& p, const CommandOptions& o)
      : problem(p), options(o), ring(p.ring()), grading(p.module_grading()), field(p.field) {}

  ComplementPolicy policy(ComplementPolicy fallback) const {
    auto policy = options.complement ? parse_complement_policy(*options.complement) : fallback;
    check_policy(policy, field);
    return policy;
  }

  BuchbergerConfig config() const {
    BuchbergerConfig c;
    c.max_iterations = options.max_iterations;
    c.degree_cap = options.degree_cap;
    c.policy = policy(ComplementPolicy::Pivot);
    if (options.reduction == "span") c.reduction = ReductionMode::Span;
    return c;
  }

  std::vector<ModuleElement> generators() const {
    std::vector<ModuleElement> out;
    for (const auto& g : problem.generators) {
      if (!g.is_zero()) out.push_back(g);
    }
    return out;
  }
};

json entry(const RingContext& ring, const ModuleElement& e, const ModuleGrading& grading) {
  json j;
  j["degree"] = e.is_zero() ? std::string("-") : to_string(degree(e, grading));
  j["element"] = ring.format(e);
  return j;
}

json entries(const RingContext& ring, const std::vector<ModuleElement>& xs, const ModuleGrading& grading) {
  json arr = json::array();
  for (const auto& x : xs) arr.push_back(entry(ring, x, grading));
  return arr;
}

json profile(const std::vector<ModuleElement>& xs, const ModuleGrading& grading) {
  json j = json::object();
  for (const auto& [d, n] : degree_profile(xs, grading)) j[to_string(d)] = std::to_string(n);
  return j;
}

json certificate(const RingContext& ring, const CriterionResult& r, const ModuleGrading& grading) {
  json j;
  j["passed"] = r.passed;
  j["syzygies_checked"] = std::to_string(r.syzygies_checked);
  if (r.witness) {
    RingContext plain(ring.field(), ring.variables());
    j["witness"] = plain.format(*r.witness);
  }
  if (r.remainder) {
    j["remainder"] = ring.format(*r.remainder);
    j["remainder_degree"] = to_string(degree(*r.remainder, grading));
    j["remainder_leading_form"] = ring.format(leading_form(*r.remainder, grading).element);
  }
  return j;
}

ModuleElement drop_variable(const ModuleElement& m, std::size_t index) {
  std::vector<ModuleElement::Term> terms;
  for (const auto& [mm, c] : m.terms()) {
    std::vector<std::uint32_t> e;
    for (std::size_t i = 0; i < mm.monomial.nvars(); ++i) {
      if (i != index) e.push_back(mm.monomial[i]);
    }
    terms.emplace_back(ModuleMonomial{Monomial(std::move(e)), mm.component}, c);
  }
  return ModuleElement::from_terms(m.rank(), m.nvars() - 1, m.field(), std::move(terms));
}

std::vector<std::int64_t> integer_shifts(const ProblemFile& p) {
  std::vector<std::int64_t> out(p.rank, 0);
  for (std::size_t i = 0; i < p.shifts.size(); ++i) {
    auto* a = std::get_if<std::int64_t>(&p.shifts[i]);
    if (!a) throw UsageError("homogenization needs integer shifts");
    out[i] = *a;
  }
  return out;
}

std::size_t variable_index(const ProblemFile& p, const std::string& name) {
  for (std::size_t i = 0; i < p.variables.size(); ++i) {
    if (p.variables[i] == name) return i;
  }
  throw UsageError("unknown variable " + name);
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      auto v = std::stoll(text);
      return {v, v};
    }
    std::size_t used = 0;
    auto a = std::stoll(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(text);
    auto rest = text.substr(dots + 2);
    auto b = std::stoll(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    if (a < 0 || b < a) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("degree range must look like a..b with 0 <= a <= b");
  }
}

json run_basis(const Session& s) {
  auto config = s.config();
  auto basis = buchberger_algorithm(s.generators(), s.grading, s.field, config);
  if (s.options.reduced) basis = interreduce(basis, config.policy);
  sort_canonical(basis.elements, s.grading);
  json body;
  body["field"] = s.field.to_string();
  body["grading"] = s.problem.grading;
  body["reduced"] = basis.reduced;
  body["iterations"] = std::to_string(basis.iterations);
  body["elements"] = entries(s.ring, basis.elements, s.grading);
  body["profile"] = profile(basis.elements, s.grading);
  if (s.options.certify) body["certificate"] = certificate(s.ring, buchberger_criterion(basis.elements, s.grading, s.field), s.grading);
  return body;
}

json run_reduce(const Session& s) {
  if (!s.options.element) throw UsageError("reduce needs --element");
  auto m = s.ring.parse_element(*s.options.element, s.problem.rank, 1, 0);
  auto policy = s.policy(default_policy(s.field));
  auto gens = s.generators();
  json body;
  body["element"] = s.ring.format(m);
  body["complement"] = to_string(policy);
  if (gens.empty()) {
    body["normal_form"] = s.ring.format(m);
    if (s.options.trace) body["trace"] = json::array();
    return body;
  }
  Reducer reducer(s.grading, s.field, gens, policy);
  auto trace = reducer.reduce(m, ReductionMode::Complement);
  body["normal_form"] = s.ring.format(trace.final);
  if (s.options.trace) {
    RingContext plain(s.field, s.problem.variables);
    json steps = json::array();
    for (const auto& step : trace.steps) {
      json st;
      st["degree"] = to_string(step.degree);
      json terms = json::array();
      for (const auto& t : step.terms) {
        json tj;
        tj["generator"] = std::to_string(t.index + 1);
        tj["multiplier"] = plain.format(Polynomial::term(t.multiplier, s.field.one()));
        tj["coefficient"] = t.coefficient.to_string();
        terms.push_back(std::move(tj));
      }
      st["terms"] = std::move(terms);
      steps.push_back(std::move(st));
    }
    body["trace"] = std::move(steps);
  }
  return body;
}

json run_syzygy(const Session& s) {
  auto config = s.config();
  auto basis = buchberger_algorithm(s.generators(), s.grading, s.field, config);
  if (s.options.reduced) basis = interreduce(basis, config.policy);
  sort_canonical(basis.elements, s.grading);
  json body;
  body["basis"] = entries(s.ring, basis.elements, s.grading);
  if (basis.elements.empty()) {
    body["syzygies"] = json::array();
    return body;
  }
  auto syz = schreyer_syzygy_basis(basis);
  sort_canonical(syz.elements, syz.grading);
  body["syzygies"] = entries(s.ring, syz.elements, syz.grading);
  if (s.options.certify) {
    body["certificate"] = certificate(s.ring, buchberger_criterion(syz.elements, syz.grading, s.field), syz.grading);
  }
  return body;
}

json run_eliminate(const Session& s) {
  if (!s.options.keep) throw UsageError("eliminate needs --keep");
  std::vector<bool> kept(s.problem.variables.size(), false);
  std::string names = *s.options.keep;
  for (auto& c : names) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(names);
  std::string name;
  json kept_names = json::array();
  while (in >> name) {
    kept[variable_index(s.problem, name)] = true;
    kept_names.push_back(name);
  }
  if (kept_names.empty()) throw UsageError("--keep lists no variables");
  auto result = eliminate(s.generators(), kept, s.field, s.config());
  sort_canonical(result.kept, result.basis.grading);
  json body;
  body["keep"] = std::move(kept_names);
  body["elements"] = entries(s.ring, result.kept, result.basis.grading);
  body["basis_size"] = std::to_string(result.basis.elements.size());
  return body;
}

json run_hilbert(const Session& s) {
  if (!s.options.degrees) throw UsageError("hilbert needs --degrees a..b");
  if (s.grading.ring().kind() != RingGradingKind::TotalDegree || s.grading.tie() != TieOrder::None) {
    throw UsageError("hilbert needs the total degree grading without a tie order");
  }
  auto [lo, hi] = parse_range(*s.options.degrees);
  std::vector<Degree> degrees;
  for (auto k = lo; k <= hi; ++k) degrees.push_back(Degree{{k}, -1});
  auto fine = degrevlex_refinement(s.grading);
  auto table = hilbert_function(s.generators(), s.grading, fine, s.field, degrees, s.config());
  json rows = json::array();
  for (std::size_t i = 0; i < table.degrees.size(); ++i) {
    json r;
    r["degree"] = to_string(table.degrees[i]);
    r["value"] = std::to_string(table.values[i]);
    rows.push_back(std::move(r));
  }
  json body;
  body["hilbert"] = std::move(rows);
  return body;
}

json run_homogenize(const Session& s) {
  if (!s.options.var) throw UsageError("homogenize needs --var");
  const auto& t = *s.options.var;
  for (const auto& v : s.problem.variables) {
    if (v == t) throw UsageError("variable " + t + " already exists");
  }
  auto vars = s.problem.variables;
  vars.push_back(t);
  RingContext ext(s.field, vars);
  HomogenizationContext ctx(vars.size(), vars.size() - 1, integer_shifts(s.problem));
  std::vector<ModuleElement> lifted, homogenized;
  for (const auto& g : s.generators()) {
    lifted.push_back(append_variable(g));
    homogenized.push_back(ctx.homogenize(lifted.back()));
  }
  auto report = verify_homogenization_equivalence(lifted, ctx, s.field);
  json body;
  body["vars"] = vars;
  body["elements"] = entries(ext, homogenized, ctx.grading());
  body["h_basis"] = report.h_basis;
  body["certificate"] = certificate(ext, report.criterion, ctx.grading());
  return body;
}

json run_dehomogenize(const Session& s) {
  if (!s.options.var) throw UsageError("dehomogenize needs --var");
  auto t = variable_index(s.problem, *s.options.var);
  HomogenizationContext ctx(s.problem.variables.size(), t, integer_shifts(s.problem));
  auto vars = s.problem.variables;
  vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(t));
  RingContext smaller(s.field, vars);
  json arr = json::array();
  for (const auto& g : s.generators()) arr.push_back(smaller.format(drop_variable(ctx.dehomogenize(g), t)));
  json body;
  body["vars"] = vars;
  body["elements"] = std::move(arr);
  return body;
}

json invariance(const RingContext& ring, const std::vector<ModuleElement>& xs, const GroupAction& action) {
  auto report = span_is_invariant(xs, action);
  json j;
  j["invariant"] = report.invariant;
  for (const auto& w : report.witnesses) {
    if (w.solved) continue;
    j["generator"] = std::to_string(w.generator + 1);
    j["element"] = ring.format(xs[w.element]);
    j["residual"] = ring.format(*w.residual);
    break;
  }
  return j;
}

json run_check_invariant(const Session& s, const std::optional<std::string>& group_text) {
  if (!group_text) throw UsageError("check-invariant needs a group (--group or a group line in the problem)");
  GroupAction action(parse_group(*group_text, s.problem.variables.size(), s.field));
  auto policy = s.policy(default_policy(s.field));
  auto config = s.config();
  auto basis = buchberger_algorithm(s.generators(), s.grading, s.field, config);
  sort_canonical(basis.elements, s.grading);
  auto reduced = interreduce(basis, policy);

  json body;
  body["group_order"] = std::to_string(action.order());
  body["homogeneous_action"] = is_homogeneous_action(action, s.grading.ring());
  body["generators"] = invariance(s.ring, s.generators(), action);
  body["basis"] = entries(s.ring, basis.elements, s.grading);
  body["basis_span"] = invariance(s.ring, basis.elements, action);
  body["reduced_basis"] = entries(s.ring, reduced.elements, s.grading);
  body["reduced_span"] = invariance(s.ring, reduced.elements, action);

  json eq;
  eq["complement"] = to_string(policy);
  std::mt19937_64 rng(s.options.seed);
  RandomElementOptions ro;
  ro.max_degree = 6;
  std::vector<ModuleElement> samples;
  for (std::size_t i = 0; i < s.options.samples; ++i) {
    samples.push_back(random_element(rng, s.problem.rank, s.problem.variables.size(), s.field, ro));
  }
  try {
    if (reduced.elements.empty()) throw UsageError("hypothesis failed: the module is zero");
    auto report = check_equivariant_normal_form(reduced.elements, s.grading, s.field, action, samples, policy);
    eq["status"] = report.equivariant ? "equivariant" : "not equivariant";
    eq["checked"] = std::to_string(report.checked);
    if (report.counterexample) {
      const auto& c = *report.counterexample;
      eq["sample"] = s.ring.format(c.sample);
      eq["generator"] = std::to_string(c.generator + 1);
      eq["nf_of_image"] = s.ring.format(c.nf_of_image);
      eq["image_of_nf"] = s.ring.format(c.image_of_nf);
    }
  } catch (const UsageError& e) {
    eq["status"] = "skipped";
    eq["reason"] = e.what();
  }
  body["equivariance"] = std::move(eq);
  return body;
}

json run_verify(const Session& s) {
  auto result = buchberger_criterion(s.generators(), s.grading, s.field);
  json body;
  body["grading"] = s.problem.grading;
  body["criterion"] = certificate(s.ring, result, s.grading);
  return body;
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

// YAML-like rendering. `lead` is written in place of the indentation before the key, so
// the first key of a list item can carry the "- " bullet.
void render_text(std::ostream& out, const std::string& lead, const std::string& key, const json& value,
                 std::size_t indent) {
  if (value.is_object()) {
    out << lead << key << ":" << (value.empty() ? " {}" : "") << "\n";
    for (const auto& [k, v] : value.items()) render_text(out, std::string(indent + 2, ' '), k, v, indent + 2);
  } else if (value.is_array()) {
    if (value.empty()) {
      out << lead << key << ": []\n";
      return;
    }
    out << lead << key << ":\n";
    std::string item_pad(indent + 2, ' ');
    for (const auto& item : value) {
      if (!item.is_object() || item.empty()) {
        out << item_pad << "- " << scalar_text(item) << "\n";
        continue;
      }
      bool first = true;
      for (const auto& [k, v] : item.items()) {
        render_text(out, item_pad + (first ? "- " : "  "), k, v, indent + 4);
        first = false;
      }
    }
  } else {
    out << lead << key << ": " << scalar_text(value) << "\n";
  }
}

std::string read_file(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Command parse_command(std::string_view name) {
  if (name == "basis") return Command::Basis;
  if (name == "reduce") return Command::Reduce;
  if (name == "syzygy") return Command::Syzygy;
  if (name == "eliminate") return Command::Eliminate;
  if (name == "hilbert") return Command::Hilbert;
  if (name == "homogenize") return Command::Homogenize;
  if (name == "dehomogenize") return Command::Dehomogenize;
  if (name == "check-invariant") return Command::CheckInvariant;
  if (name == "verify") return Command::Verify;
  throw UsageError("unknown command '" + std::string(name) + "'");
}

std::string to_string(Command command) {
  switch (command) {
    case Command::Basis: return "basis";
    case Command::Reduce: return "reduce";
    case Command::Syzygy: return "syzygy";
    case Command::Eliminate: return "eliminate";
    case Command::Hilbert: return "hilbert";
    case Command::Homogenize: return "homogenize";
    case Command::Dehomogenize: return "dehomogenize";
    case Command::CheckInvariant: return "check-invariant";
    case Command::Verify: return "verify";
  }
  return "?";
}

std::string input_hash(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ResultDocument run_command(Command command, const ProblemFile& problem, const CommandOptions& options,
                           std::string_view input_text, const std::optional<std::string>& group_text) {
  Session s(problem, options);
  ResultDocument doc{to_string(command), input_hash(input_text), json::object(), std::nullopt};
  switch (command) {
    case Command::Basis: doc.body = run_basis(s); break;
    case Command::Reduce: doc.body = run_reduce(s); break;
    case Command::Syzygy: doc.body = run_syzygy(s); break;
    case Command::Eliminate: doc.body = run_eliminate(s); break;
    case Command::Hilbert: doc.body = run_hilbert(s); break;
    case Command::Homogenize: doc.body = run_homogenize(s); break;
    case Command::Dehomogenize: doc.body = run_dehomogenize(s); break;
    case Command::CheckInvariant: doc.body = run_check_invariant(s, group_text); break;
    case Command::Verify: doc.body = run_verify(s); break;
  }
  return doc;
}

std::string format_result(const ResultDocument& doc, std::string_view format) {
  json full;
  full["command"] = doc.command;
  full["input_hash"] = doc.input_hash;
  for (const auto& [k, v] : doc.body.items()) full[k] = v;
  if (doc.seconds) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", *doc.seconds);
    full["seconds"] = std::string(buf);
  }
  if (format == "json") return full.dump(2) + "\n";
  if (format != "text") throw UsageError("unknown format '" + std::string(format) + "'");
  std::ostringstream out;
  for (const auto& [k, v] : full.items()) render_text(out, "", k, v, 0);
  return out.str();
}

int exit_code(const std::exception& error) {
  if (dynamic_cast<const SyntaxError*>(&error)) return Syntax;
  if (dynamic_cast<const ResourceError*>(&error)) return Resource;
  if (dynamic_cast<const UsageError*>(&error) || dynamic_cast<const MembershipError*>(&error) ||
      dynamic_cast<const ArithmeticError*>(&error)) {
    return Precondition;
  }
  return Failure;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Macaulay bases of graded submodules"};
  std::string command_name, problem_path;
  CommandOptions o;
  std::optional<std::int64_t> degree_cap;
  app.add_option("command", command_name,
                 "basis | reduce | syzygy | eliminate | hilbert | homogenize | dehomogenize | check-invariant | verify")
      ->required();
  app.add_option("problem", problem_path, "problem file, or - for stdin")->required();
  app.add_option("--coeff", o.coeff, "q or fp:<p>");
  app.add_option("--grading", o.grading, "grading keyword, overrides the problem file");
  app.add_flag("--reduced", o.reduced, "interreduce the computed basis");
  app.add_flag("--certify", o.certify, "re-run the Buchberger criterion on the output");
  app.add_flag("--trace", o.trace, "print reduction steps");
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-iterations", o.max_iterations, "Buchberger iteration limit")->check(CLI::PositiveNumber);
  app.add_option("--degree-cap", degree_cap, "largest total degree allowed in new basis elements");
  app.add_option("--keep", o.keep, "variables kept by eliminate");
  app.add_option("--var", o.var, "homogenizing variable");
  app.add_option("--group", o.group, "group file for check-invariant");
  app.add_option("--degrees", o.degrees, "degree range a..b for hilbert");
  app.add_option("--complement", o.complement, "pivot or orthogonal")->check(CLI::IsMember({"pivot", "orthogonal"}));
  app.add_option("--reduction", o.reduction, "how basis completion reduces new elements: complement or span")
      ->check(CLI::IsMember({"complement", "span"}));
  app.add_option("--element", o.element, "element to reduce");
  app.add_option("--samples", o.samples, "random samples for the equivariance check");
  app.add_option("--seed", o.seed, "random seed");
  app.add_flag("--timing", o.timing, "report wall time");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return Ok;
    }
    err << "error: " << e.what() << "\n";
    return Syntax;
  }
  o.degree_cap = degree_cap;

  Command command;
  ProblemOverrides overrides;
  std::string text;
  ProblemFile problem;
  try {
    command = parse_command(command_name);
    if (o.coeff) overrides.field = Field::from_spec(*o.coeff);
    overrides.grading = o.grading;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return Syntax;
  }
  try {
    text = read_file(problem_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Failure;
  }
  try {
    problem = parse_problem(text, overrides);
  } catch (const Error& e) {
    err << problem_path << ":" << e.what() << "\n";
    return Syntax;
  }
  std::optional<std::string> group_text;
  if (command == Command::CheckInvariant) {
    std::optional<std::string> path = o.group;
    if (!path && problem.group) {
      auto base = problem_path == "-" ? std::filesystem::path(".") : std::filesystem::path(problem_path).parent_path();
      path = (base / *problem.group).string();
    }
    if (path) {
      try {
        group_text = read_file(*path);
      } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return Failure;
      }
    }
  }
  try {
    auto start = std::chrono::steady_clock::now();
    auto doc = run_command(command, problem, o, text, group_text);
    if (o.timing) doc.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << format_result(doc, o.format);
    return Ok;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e);
  }
}

}  // namespace macaulay::cli
