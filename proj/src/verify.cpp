#include "gmloci/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <numeric>

#include "gmloci/corpus.hpp"
#include "gmloci/error.hpp"

namespace gmloci {

namespace {

using json = nlohmann::ordered_json;

struct PropertyName {
  PropertyId id;
  std::string_view name;
};

constexpr PropertyName kNames[] = {
    {PropertyId::P1FiberOneDiagonal, "P1-fiber1-diagonal"},
    {PropertyId::P2FiberZeroProduct, "P2-fiber0-product"},
    {PropertyId::P3GenericGraph, "P3-generic-graph"},
    {PropertyId::P4AffineJIso, "P4-affine-j-iso"},
    {PropertyId::P5OpenEmbeddings, "P5-open-embeddings"},
    {PropertyId::P6ContractingCriterion, "P6-contracting-criterion"},
    {PropertyId::P7ContractingInterp, "P7-contracting-interp"},
    {PropertyId::P8ClosureComparison, "P8-closure-comparison"},
    {PropertyId::P9ClosedFunctoriality, "P9-closed-functoriality"},
    {PropertyId::P10LocalizationLemma, "P10-localization-lemma"},
    {PropertyId::P11ContractiveCorollary, "P11-contractive-corollary"},
    {PropertyId::P12StructureIdentities, "P12-structure-identities"},
    {PropertyId::P13DeformedEquivalence, "P13-deformed-equivalence"},
    {PropertyId::O1PointsetConsistency, "O1-pointset-consistency"},
    {PropertyId::O2FiberCounts, "O2-fiber-counts"},
};

Scalar rational(long n) { return Scalar::from_int(Field::rationals(), n); }

bool has_flag(const VerifyOptions& o, std::string_view flag) {
  return std::find(o.flags.begin(), o.flags.end(), flag) != o.flags.end();
}

struct Check {
  std::string name;
  IdealComparison comparison;
};

// Pass unless some comparison fails; the first failure supplies the witness.
void judge(ReportEntry& e, const std::vector<Check>& checks) {
  json names = json::array();
  for (const auto& c : checks) {
    names.push_back(c.name);
    if (!c.comparison.holds() && e.status == Status::Pass) {
      e.status = Status::Fail;
      e.detail["failed"] = c.name;
      e.detail["witness"] = c.comparison.witness->to_string();
    }
  }
  e.detail["checks"] = std::move(names);
}

void fail(ReportEntry& e, const std::string& what) {
  if (e.status != Status::Pass) return;
  e.status = Status::Fail;
  e.detail["failed"] = what;
}

void skip(ReportEntry& e, const std::string& reason) {
  e.status = Status::Skipped;
  e.detail["reason"] = reason;
}

std::map<std::string, std::string> suffix_renaming(const RingSpec& ring, const std::string& suffix) {
  std::map<std::string, std::string> out;
  for (const auto& v : ring.variables()) out[v.name] = v.name + suffix;
  return out;
}

// p+ has an inverse exactly when the coordinate map A+ -> A is well defined.
bool p_map_invertible(const GradedAlgebra& a, bool plus) {
  GradedAlgebra side = plus ? attractor(a) : repeller(a);
  try {
    return mutually_inverse(coordinate_map(a, side), coordinate_map(side, a));
  } catch (const ValidationError&) {
    return false;
  }
}

// Weight-zero element touching every weight-zero variable and every pair of
// opposite-sign variables.
Polynomial weight_zero_probe(const GradedAlgebra& a) {
  const auto& r = *a.ring();
  Polynomial f = Polynomial::constant(a.ring(), 1);
  for (std::size_t i = 0; i < r.size(); ++i) {
    auto wi = r.var(i).weight;
    if (wi == 0) f = f + Polynomial::variable(a.ring(), i);
    for (std::size_t j = 0; j < r.size(); ++j) {
      auto wj = r.var(j).weight;
      if (wi > 0 && wj < 0) {
        auto g = std::gcd(wi, -wj);
        f = f + Polynomial::variable(a.ring(), i).pow(static_cast<unsigned>(-wj / g)) *
                    Polynomial::variable(a.ring(), j).pow(static_cast<unsigned>(wi / g));
      }
    }
  }
  return f;
}

std::vector<Check> fiber_checks(const GradedAlgebra& a, const InterpolationFamily& f) {
  return {{"fiber(1) = diagonal", compare_ideals(fiber(f, rational(1)), diagonal_presentation(a))},
          {"fiber(0) = Z+ x_Z0 Z-", compare_ideals(fiber(f, rational(0)), fiber_product_presentation(a))}};
}

std::vector<Check> generic_graph_checks(const GradedAlgebra& a, const VerifyOptions& o, json& notes) {
  InterpolationFamily f = interpolation(a, o.family);
  std::vector<Check> out;
  Field field = a.ring()->field();
  if (!field.is_rational()) {
    // Over F_p every nonzero residue is a sample (capped for large p).
    for (std::uint32_t c = 1; c < field.modulus && c <= 4; ++c) {
      Scalar s = Scalar::residue(c, field.modulus);
      out.push_back({"fiber(" + std::to_string(c) + ") = graph",
                     compare_ideals(fiber(f, s), action_graph_presentation(a, s))});
    }
    return out;
  }
  for (long c : {2L, 3L}) {
    out.push_back({"fiber(" + std::to_string(c) + ") = graph",
                   compare_ideals(fiber(f, rational(c)), action_graph_presentation(a, rational(c)))});
  }
  try {
    GradedAlgebra a5 = change_field(a, Field::prime(5));
    InterpolationFamily f5 = interpolation(a5, o.family);
    for (std::uint32_t c = 1; c < 5; ++c) {
      Scalar s = Scalar::residue(c, 5);
      out.push_back({"F5 fiber(" + std::to_string(c) + ") = graph",
                     compare_ideals(fiber(f5, s), action_graph_presentation(a5, s))});
    }
  } catch (const StructuralError&) {
    notes.push_back("coefficients do not reduce mod 5; F5 samples skipped");
  }
  return out;
}

Check pushout_check(const GradedAlgebra& a) {
  GradedAlgebra po = pushout(structure_map(a, StructureMapKind::PPlus), structure_map(a, StructureMapKind::PMinus));
  // A0 on the first copy, glued to the second copy along the diagonal.
  Ideal expected = transfer(fixed_points(a).ideal(), po.ring(), suffix_renaming(*a.ring(), "#1"));
  std::vector<Polynomial> diagonal;
  for (const auto& v : a.ring()->variables()) {
    diagonal.push_back(Polynomial::variable(po.ring(), v.name + "#1") - Polynomial::variable(po.ring(), v.name + "#2"));
  }
  return {"A+ (x)_A A- = A0", compare_ideals(po.ideal(), expected.with(diagonal))};
}

std::vector<Check> open_embedding_checks(const GradedAlgebra& a) {
  return {{"plus side", check_open_embedding_iso(a, Side::Plus)},
          {"minus side", check_open_embedding_iso(a, Side::Minus)}};
}

std::vector<std::pair<std::string, std::vector<Polynomial>>> functoriality_extras(const GradedAlgebra& a) {
  std::vector<std::pair<std::string, std::vector<Polynomial>>> out;
  if (a.ring()->size() == 0) return out;
  out.emplace_back("first variable", std::vector<Polynomial>{Polynomial::variable(a.ring(), 0)});
  Polynomial product = Polynomial::constant(a.ring(), 1);
  for (std::size_t i = 0; i < a.ring()->size(); ++i) product = product * Polynomial::variable(a.ring(), i);
  out.emplace_back("product of all variables", std::vector<Polynomial>{product});
  return out;
}

std::vector<Check> functoriality_checks(const GradedAlgebra& a) {
  std::vector<Check> out;
  for (const auto& [name, extra] : functoriality_extras(a)) {
    out.push_back({"extra = " + name, check_closed_functoriality(a, extra)});
  }
  return out;
}

std::vector<Check> localization_checks(const GradedAlgebra& a) {
  const auto& r = *a.ring();
  Polynomial f = weight_zero_probe(a);
  std::vector<Polynomial> zero_moving;
  for (std::size_t i = 0; i < r.size(); ++i) {
    zero_moving.push_back(r.var(i).weight == 0 ? Polynomial::variable(a.ring(), i) : Polynomial(a.ring()));
  }
  Polynomial f0 = substitute(f, zero_moving, a.ring());
  std::vector<Check> out;
  out.push_back({"attractor(D(f)) = D(f0) in A+", compare_ideals(attractor(localize(a, f)).ideal(),
                                                                   localize(attractor(a), f0).ideal())});
  out.push_back({"repeller(D(f)) = D(f0) in A-", compare_ideals(repeller(localize(a, f)).ideal(),
                                                                  localize(repeller(a), f0).ideal())});
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r.var(i).weight == 0) continue;
    GradedAlgebra l = localize(a, Polynomial::variable(a.ring(), i));
    out.push_back({"fixed points of D(" + r.var(i).name + ") empty",
                   compare_ideals(fixed_points(l).ideal(), Ideal(l.ring(), {Polynomial::constant(l.ring(), 1)}))});
    break;
  }
  return out;
}

std::vector<Check> corollary_checks(const GradedAlgebra& a) {
  std::vector<Check> out;
  if (is_contracting(negate_weights(a))) {
    out.push_back({"p- iso: attractor = fixed points", compare_ideals(attractor(a).ideal(), fixed_points(a).ideal())});
  }
  if (is_contracting(a)) {
    out.push_back({"p+ iso: repeller = fixed points", compare_ideals(repeller(a).ideal(), fixed_points(a).ideal())});
  }
  return out;
}

// ---- individual properties ------------------------------------------------

void p1(ReportEntry& e, const GradedAlgebra& a, const VerifyOptions& o) {
  auto f = interpolation(a, o.family);
  judge(e, {fiber_checks(a, f)[0]});
}

void p2(ReportEntry& e, const GradedAlgebra& a, const VerifyOptions& o) {
  auto f = interpolation(a, o.family);
  judge(e, {fiber_checks(a, f)[1]});
}

void p3(ReportEntry& e, const GradedAlgebra& a, const VerifyOptions& o) {
  json notes = json::array();
  judge(e, generic_graph_checks(a, o, notes));
  auto closure = graph_closure(interpolation(a, o.family));
  e.detail["checks"].push_back("saturation equals saturated raw graph");
  if (!closure.raw_graph_agrees) fail(e, "saturation equals saturated raw graph");
  if (!notes.empty()) e.detail["notes"] = notes;
}

void p4(ReportEntry& e, const GradedAlgebra& a, const VerifyOptions&) { judge(e, {pushout_check(a)}); }

void p5(ReportEntry& e, const GradedAlgebra& a, const VerifyOptions&) { judge(e, open_embedding_checks(a)); }

void p6(ReportEntry& e, const GradedAlgebra& a, const VerifyOptions&) {
  for (bool plus : {true, false}) {
    GradedAlgebra b = plus ? a : negate_weights(a);
    bool criterion = is_contracting(b);
    bool by_equality = ideal_eq(b.ideal(), b.ideal() + negative_ideal(b.ring()));
    bool by_map = p_map_invertible(a, plus);
    e.detail[plus ? "contracting" : "dilating"] = criterion;
    if (criterion != by_equality || criterion != by_map) {
      fail(e, plus ? "contracting criteria disagree" : "dilating criteria disagree");
    }
  }
}

void p7(ReportEntry& e, const GradedAlgebra& a, const VerifyOptions&) {
  try {
    auto c = check_contracting_interp(a);
    e.detail["form"] = std::string(to_string(c.form));
    judge(e, {{std::string(to_string(c.form)) + " form", c.comparison}});
  } catch (const ContractError&) {
    skip(e, "action is neither contracting nor dilating");
  }
}

void p8(ReportEntry& e, const GradedAlgebra& a, const VerifyOptions& o) {
  auto f = interpolation(a, o.family);
  auto r = graph_closure(f);
  e.detail["verdict"] = std::string(to_string(r.verdict));
  if (r.witness) e.detail["witness"] = r.witness->to_string();
  if (!r.raw_graph_agrees) {
    fail(e, "saturation differs from the saturated raw graph");
    return;
  }
  bool expect_equal = has_flag(o, kFlagSmoothAffine) || has_flag(o, kFlagExpectEqualClosure);
  bool expect_strict = has_flag(o, kFlagExpectStrictClosure);
  if (expect_equal && expect_strict) {
    skip(e, "contradictory closure flags");
  } else if (expect_equal) {
    e.detail["expected"] = "equal";
    if (r.verdict != ClosureVerdict::Equal) fail(e, "closure is strictly larger than expected");
  } else if (expect_strict) {
    e.detail["expected"] = "strict";
    if (r.verdict != ClosureVerdict::Strict) fail(e, "closure equals the family, strict containment expected");
  } else {
    skip(e, "no closure expectation flag; verdict recorded only");
  }
}

void p9(ReportEntry& e, const GradedAlgebra& a, const VerifyOptions&) {
  auto checks = functoriality_checks(a);
  if (checks.empty()) return skip(e, "ring has no variables");
  judge(e, checks);
}

void p10(ReportEntry& e, const GradedAlgebra& a, const VerifyOptions&) { judge(e, localization_checks(a)); }

void p11(ReportEntry& e, const GradedAlgebra& a, const VerifyOptions&) {
  auto checks = corollary_checks(a);
  if (checks.empty()) return skip(e, "neither p+ nor p- is an isomorphism");
  judge(e, checks);
  if (is_contracting(negate_weights(a)) &&
      !mutually_inverse(structure_map(a, StructureMapKind::QPlus), structure_map(a, StructureMapKind::IPlus))) {
    fail(e, "q+ and i+ are not mutually inverse");
  }
  if (is_contracting(a) &&
      !mutually_inverse(structure_map(a, StructureMapKind::QMinus), structure_map(a, StructureMapKind::IMinus))) {
    fail(e, "q- and i- are not mutually inverse");
  }
}

void p12(ReportEntry& e, const GradedAlgebra& a, const VerifyOptions&) {
  json checked = json::array();
  for (auto kind : {StructureMapKind::PPlus, StructureMapKind::QPlus, StructureMapKind::IPlus,
                    StructureMapKind::PMinus, StructureMapKind::QMinus, StructureMapKind::IMinus}) {
    // Construction validates well-definedness and weights.
    structure_map(a, kind);
    checked.push_back(std::string(to_string(kind)) + " well defined");
  }
  GradedAlgebra a0 = fixed_points(a);
  AlgebraMap to_fixed = coordinate_map(a, a0);
  for (bool plus : {true, false}) {
    std::string s = plus ? "+" : "-";
    auto p = structure_map(a, plus ? StructureMapKind::PPlus : StructureMapKind::PMinus);
    auto q = structure_map(a, plus ? StructureMapKind::QPlus : StructureMapKind::QMinus);
    auto i = structure_map(a, plus ? StructureMapKind::IPlus : StructureMapKind::IMinus);
    checked.push_back("i" + s + " after q" + s + " = id");
    if (!q.then(i).equals(identity_map(a0))) fail(e, "i" + s + " after q" + s + " is not the identity");
    checked.push_back("i" + s + " after p" + s + " = A -> A0");
    if (!p.then(i).equals(to_fixed)) fail(e, "i" + s + " after p" + s + " differs from A -> A0");
  }
  e.detail["checks"] = std::move(checked);
}

void p13(ReportEntry& e, const GradedAlgebra& a, const VerifyOptions& o) {
  judge(e, {{"interpolation = deformed presentation",
             compare_ideals(interpolation(a, o.family).ideal(), deformed_presentation(a))}});
}

std::string format_point(const PointSet& ps, const std::vector<std::uint32_t>& pt) {
  std::string out = "(";
  for (std::size_t i = 0; i < pt.size(); ++i) {
    if (i) out += ", ";
    out += display_name(ps.variables[i]) + "=" + std::to_string(pt[i]);
  }
  return out + ")";
}

void o1(ReportEntry& e, const GradedAlgebra& a, const VerifyOptions& o) {
  auto f = interpolation(a, o.family);
  json notes = json::array();
  std::vector<Check> pairs = fiber_checks(a, f);
  for (auto& c : generic_graph_checks(a, o, notes)) {
    // F5-sampled fibers are already over a finite field; keep the rational ones.
    if (c.name.rfind("F5 ", 0) != 0) pairs.push_back(std::move(c));
  }
  pairs.push_back(pushout_check(a));
  for (auto& c : open_embedding_checks(a)) pairs.push_back(std::move(c));
  pairs.push_back({"interpolation = deformed presentation",
                   compare_ideals(f.ideal(), deformed_presentation(a))});
  pairs.push_back({"repeller = attractor of negated weights",
                   compare_ideals(repeller(a).ideal(), transfer(attractor(negate_weights(a)).ideal(), a.ring()))});
  try {
    pairs.push_back({"contracting form", check_contracting_interp(a).comparison});
  } catch (const ContractError&) {
  }
  for (auto& c : functoriality_checks(a)) pairs.push_back(std::move(c));
  for (auto& c : localization_checks(a)) pairs.push_back(std::move(c));
  for (auto& c : corollary_checks(a)) pairs.push_back(std::move(c));

  std::size_t compared = 0;
  std::size_t skipped = 0;
  for (auto p : o.primes) {
    for (const auto& c : pairs) {
      PointSet lhs;
      PointSet rhs;
      try {
        lhs = enumerate_points(c.comparison.lhs, p, o.oracle);
        rhs = enumerate_points(c.comparison.rhs, p, o.oracle);
      } catch (const ResourceLimitError&) {
        ++skipped;
        continue;
      }
      ++compared;
      if (lhs == rhs || e.status != Status::Pass) continue;
      std::vector<std::vector<std::uint32_t>> diff;
      std::set_symmetric_difference(lhs.points.begin(), lhs.points.end(), rhs.points.begin(), rhs.points.end(),
                                    std::back_inserter(diff));
      fail(e, c.name + " over F" + std::to_string(p));
      e.detail["witness"] = format_point(lhs, diff.front());
    }
    PointSet scheme = enumerate_points(fixed_points(a).ideal(), p, o.oracle);
    PointSet group = group_fixed_points(a, p, o.oracle);
    if (!std::includes(group.points.begin(), group.points.end(), scheme.points.begin(), scheme.points.end())) {
      fail(e, "scheme fixed points not group-fixed over F" + std::to_string(p));
    }
    if (group_fixed_points_weakened(*a.ring(), p)) {
      notes.push_back("some |weight| >= " + std::to_string(p - 1) + ": group fixed points over F" +
                      std::to_string(p) + " may exceed scheme fixed points");
    }
  }
  e.detail["pairs_compared"] = compared;
  e.detail["pairs_skipped"] = skipped;
  if (!notes.empty()) e.detail["notes"] = notes;
  if (compared == 0 && e.status == Status::Pass) skip(e, "every point set exceeds the enumeration bound");
}

void o2(ReportEntry& e, const GradedAlgebra& a, const VerifyOptions& o) {
  auto f = interpolation(a, o.family);
  json counts = json::object();
  for (auto p : o.primes) {
    auto c = fiber_counts(f, p, o.oracle);
    auto z = enumerate_points(change_field(a.ideal(), Field::prime(p)), p, o.oracle).size();
    counts[std::to_string(p)] = c;
    for (std::size_t k = 1; k < c.size(); ++k) {
      if (c[k] != z) {
        fail(e, "fiber over t=" + std::to_string(k) + " in F" + std::to_string(p) + " has " + std::to_string(c[k]) +
                    " points, Z has " + std::to_string(z));
      }
    }
  }
  e.detail["counts"] = std::move(counts);
}

using Runner = void (*)(ReportEntry&, const GradedAlgebra&, const VerifyOptions&);

Runner runner(PropertyId id) {
  switch (id) {
    case PropertyId::P1FiberOneDiagonal: return p1;
    case PropertyId::P2FiberZeroProduct: return p2;
    case PropertyId::P3GenericGraph: return p3;
    case PropertyId::P4AffineJIso: return p4;
    case PropertyId::P5OpenEmbeddings: return p5;
    case PropertyId::P6ContractingCriterion: return p6;
    case PropertyId::P7ContractingInterp: return p7;
    case PropertyId::P8ClosureComparison: return p8;
    case PropertyId::P9ClosedFunctoriality: return p9;
    case PropertyId::P10LocalizationLemma: return p10;
    case PropertyId::P11ContractiveCorollary: return p11;
    case PropertyId::P12StructureIdentities: return p12;
    case PropertyId::P13DeformedEquivalence: return p13;
    case PropertyId::O1PointsetConsistency: return o1;
    case PropertyId::O2FiberCounts: return o2;
  }
  throw StructuralError("unknown property");
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

const std::vector<PropertyId>& all_properties() {
  static const std::vector<PropertyId> ids = [] {
    std::vector<PropertyId> out;
    for (const auto& n : kNames) out.push_back(n.id);
    return out;
  }();
  return ids;
}

std::string_view to_string(PropertyId id) {
  for (const auto& n : kNames) {
    if (n.id == id) return n.name;
  }
  return "?";
}

std::optional<PropertyId> parse_property(std::string_view text) {
  for (const auto& n : kNames) {
    if (text == n.name || text == n.name.substr(0, n.name.find('-'))) return n.id;
  }
  return std::nullopt;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    case Status::ResourceLimit: return "resource-limit";
    case Status::Error: return "error";
  }
  return "?";
}

int VerificationReport::exit_code() const {
  auto any = [&](Status s) {
    return std::any_of(results.begin(), results.end(), [&](const ReportEntry& e) { return e.status == s; });
  };
  if (any(Status::Error)) return 2;
  if (any(Status::Fail)) return 1;
  if (any(Status::ResourceLimit)) return 3;
  return 0;
}

ReportEntry run_property(PropertyId id, const GradedAlgebra& a, const VerifyOptions& options) {
  ReportEntry e;
  e.op = std::string(to_string(id));
  auto start = std::chrono::steady_clock::now();
  try {
    runner(id)(e, a, options);
  } catch (const ResourceLimitError& err) {
    e.status = Status::ResourceLimit;
    e.detail = json{{"reason", err.what()}};
  } catch (const Error& err) {
    e.status = Status::Error;
    e.detail = json{{"message", err.what()}};
  }
  e.elapsed_ms = elapsed_ms(start);
  return e;
}

VerificationReport run_all(const GradedAlgebra& a, const VerifyOptions& requested,
                           const std::vector<PropertyId>& ids) {
  VerifyOptions options = requested;
  // Over F_p the point-set checks can only use p itself.
  if (!a.ring()->field().is_rational()) options.primes = {a.ring()->field().modulus};
  VerificationReport report;
  auto start = std::chrono::steady_clock::now();
  std::vector<PropertyId> order = ids;
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  if (options.parallel) {
    std::vector<std::future<ReportEntry>> jobs;
    for (auto id : order) {
      jobs.push_back(std::async(std::launch::async, [&a, &options, id] { return run_property(id, a, options); }));
    }
    for (auto& j : jobs) report.results.push_back(j.get());
  } else {
    for (auto id : order) report.results.push_back(run_property(id, a, options));
  }
  report.total_ms = elapsed_ms(start);
  return report;
}

ReportEntry validation_entry(const Error& err) {
  json detail{{"message", err.what()}};
  if (const auto* parse = dynamic_cast<const ParseError*>(&err)) {
    json expected = json::array();
    for (const auto& x : parse->expected()) expected.push_back(x);
    detail["line"] = parse->line();
    detail["column"] = parse->column();
    detail["expected"] = expected;
  }
  return ReportEntry{"validation", Status::Error, 0, detail};
}

VerificationReport verify_problem(std::string_view text, const std::string& input_name, VerifyOptions options,
                                  const std::vector<PropertyId>& ids) {
  ProblemFile problem;
  try {
    problem = parse_problem(text);
  } catch (const Error& err) {
    VerificationReport r;
    r.input = input_name;
    r.results.push_back(validation_entry(err));
    return r;
  }
  for (const auto& f : problem.flags) options.flags.push_back(f);
  VerificationReport r = run_all(GradedAlgebra(problem.ring, problem.generators), options, ids);
  r.input = input_name;
  return r;
}

VerificationReport verify_corpus(const VerifyOptions& options, const std::vector<PropertyId>& ids) {
  VerificationReport out;
  out.input = "corpus";
  auto start = std::chrono::steady_clock::now();
  for (const auto& entry : corpus()) {
    VerifyOptions o = options;
    for (const auto& f : entry.problem.flags) o.flags.push_back(f);
    VerificationReport r = run_all(entry.algebra(), o, ids);
    for (auto& e : r.results) {
      e.op = entry.name + "/" + e.op;
      out.results.push_back(std::move(e));
    }
  }
  out.total_ms = elapsed_ms(start);
  return out;
}

}  // namespace gmloci
