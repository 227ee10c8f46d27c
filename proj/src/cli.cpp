#include "gmloci/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "gmloci/report.hpp"
#include "gmloci/verify.hpp"

namespace gmloci {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string ring_text(const RingSpec& ring) {
  std::string out;
  for (const auto& v : ring.variables()) {
    if (!out.empty()) out += ", ";
    out += display_name(v.name) + ":" + std::to_string(v.weight);
  }
  return out;
}

json strings(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

std::string bracketed(const json& list) {
  std::string out = "[";
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out += ", ";
    out += list[i].get<std::string>();
  }
  return out + "]";
}

json presentation(const Ideal& ideal) {
  return json{{"ring", ring_text(*ideal.ring())}, {"basis", strings(ideal.groebner_basis())}};
}

struct Common {
  bool json = false;
  bool timings = true;
};

// Runs one non-verification command, turning library errors into report
// entries. `body` fills the detail of a passing entry.
int run_single(const std::string& input, const std::string& op, const Common& common,
               const std::function<json()>& body, const std::function<std::string(const json&)>& text,
               std::ostream& out, std::ostream& err) {
  VerificationReport report;
  report.input = input;
  auto start = std::chrono::steady_clock::now();
  ReportEntry entry{op, Status::Pass, 0, json::object()};
  int code = 0;
  try {
    entry.detail = body();
  } catch (const ResourceLimitError& e) {
    entry.status = Status::ResourceLimit;
    entry.detail = json{{"reason", e.what()}};
    code = kExitResource;
  } catch (const Error& e) {
    entry = validation_entry(e);
    code = kExitInput;
  }
  entry.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report.total_ms = entry.elapsed_ms;
  report.results.push_back(entry);

  if (common.json) {
    out << render(report, {Format::Json, common.timings});
  } else if (code == 0) {
    out << text(entry.detail);
  } else {
    err << "error: " << (entry.detail.contains("reason") ? entry.detail["reason"] : entry.detail["message"]).get<std::string>();
    if (entry.detail.contains("line")) {
      err << " (line " << entry.detail["line"].get<std::size_t>() << ", column "
          << entry.detail["column"].get<std::size_t>() << ")";
    }
    err << "\n";
  }
  return code;
}

std::string presentation_text(const json& d) {
  std::string out = "ring " + d["ring"].get<std::string>() + "\n";
  out += "basis " + bracketed(d["basis"]) + "\n";
  return out;
}

ProblemFile load(const std::string& path) { return parse_problem(read_file(path)); }

GradedAlgebra algebra_of(const ProblemFile& p) { return GradedAlgebra(p.ring, p.generators); }

json compute(const std::string& what, const GradedAlgebra& a) {
  if (what == "fixed") return presentation(fixed_points(a).ideal());
  if (what == "attractor") return presentation(attractor(a).ideal());
  if (what == "repeller") return presentation(repeller(a).ideal());
  if (what == "product") return presentation(fiber_product_presentation(a));
  InterpolationFamily f = interpolation(a);
  if (what == "interp") {
    json d = presentation(f.ideal());
    d["relations"] = strings(f.linear_relations());
    return d;
  }
  ClosureReport c = graph_closure(f);
  json d = presentation(c.saturated);
  d["verdict"] = std::string(to_string(c.verdict));
  if (c.witness) d["witness"] = c.witness->to_string();
  d["raw_graph_agrees"] = c.raw_graph_agrees;
  return d;
}

std::string compute_text(const json& d) {
  std::string out = presentation_text(d);
  if (d.contains("verdict")) out += "verdict " + d["verdict"].get<std::string>() + "\n";
  if (d.contains("witness")) out += "witness " + d["witness"].get<std::string>() + "\n";
  return out;
}

std::vector<PropertyId> parse_props(const std::vector<std::string>& names) {
  if (names.empty()) return all_properties();
  std::vector<PropertyId> out;
  for (const auto& n : names) {
    auto id = parse_property(n);
    if (!id) throw ValidationError("unknown property '" + n + "'");
    out.push_back(*id);
  }
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed points, attractors and the interpolation family of G_m-actions on affine schemes", "gmloci"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("gmloci 1.0.0"));

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", common.json, "Emit the JSON report");
    sub->add_flag("!--no-timings", common.timings, "Omit timings (byte-stable output)");
  };

  std::string file;
  std::string what;
  auto* compute_cmd = app.add_subcommand("compute", "Print the reduced presentation of a derived scheme");
  compute_cmd->add_option("object", what, "fixed, attractor, repeller, interp, closure or product")
      ->required()
      ->check(CLI::IsMember({"fixed", "attractor", "repeller", "interp", "closure", "product"}));
  compute_cmd->add_option("file", file, "Problem file")->required();
  add_common(compute_cmd);

  bool use_corpus = false;
  bool corrupt = false;
  bool sequential = false;
  std::vector<std::string> props;
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
  verify_cmd->add_option("file", file, "Problem file");
  verify_cmd->add_flag("--corpus", use_corpus, "Run on the built-in corpus");
  verify_cmd->add_option("--props", props, "Comma separated property ids (P1, ..., O2)")->delimiter(',');
  verify_cmd->add_flag("--corrupt-family", corrupt, "Negative control: drop the first family relation");
  verify_cmd->add_flag("--sequential", sequential, "Run properties one at a time");
  add_common(verify_cmd);

  std::uint32_t prime = 0;
  bool fibers = false;
  auto* count_cmd = app.add_subcommand("count", "Count F_p points by exhaustive enumeration");
  count_cmd->add_option("file", file, "Problem file")->required();
  count_cmd->add_option("--prime", prime, "Prime p (defaults to the file's field)");
  count_cmd->add_flag("--fibers", fibers, "Count the points of every fiber of the interpolation family");
  add_common(count_cmd);

  std::string order_name = "grevlex";
  auto* gb_cmd = app.add_subcommand("gb", "Reduced Groebner basis of the input ideal");
  gb_cmd->add_option("file", file, "Problem file")->required();
  gb_cmd->add_option("--order", order_name, "Monomial order")->check(CLI::IsMember({"grevlex", "lex"}));
  add_common(gb_cmd);

  auto* print_cmd = app.add_subcommand("print", "Print the problem file in canonical form");
  print_cmd->add_option("file", file, "Problem file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitInput;
  }

  if (*verify_cmd) {
    if (use_corpus == !file.empty()) {
      err << "error: verify needs exactly one of FILE or --corpus\n";
      return kExitInput;
    }
    VerifyOptions options;
    options.family.drop_first_relation = corrupt;
    options.parallel = !sequential;
    VerificationReport report;
    try {
      std::vector<PropertyId> ids = parse_props(props);
      report = use_corpus ? verify_corpus(options, ids) : verify_problem(read_file(file), file, options, ids);
    } catch (const Error& e) {
      report.input = use_corpus ? "corpus" : file;
      report.results.push_back(validation_entry(e));
    }
    out << render(report, {common.json ? Format::Json : Format::Text, common.timings});
    return report.exit_code();
  }

  if (*print_cmd) {
    try {
      out << print_problem(load(file));
      return 0;
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kExitInput;
    }
  }

  if (*compute_cmd) {
    return run_single(
        file, what, common, [&] { return compute(what, algebra_of(load(file))); }, compute_text, out, err);
  }

  if (*gb_cmd) {
    auto body = [&] {
      ProblemFile p = load(file);
      Ideal i(p.ring, p.generators);
      json d{{"order", order_name}, {"ring", ring_text(*p.ring)}};
      d["basis"] = strings(i.groebner_basis(order_name == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex()));
      return d;
    };
    auto text = [](const json& d) {
      std::string s;
      for (const auto& g : d["basis"]) s += g.get<std::string>() + "\n";
      return s;
    };
    return run_single(file, "gb", common, body, text, out, err);
  }

  auto body = [&] {
    ProblemFile p = load(file);
    std::uint32_t q = prime;
    if (!p.field.is_rational()) {
      if (q != 0 && q != p.field.modulus) {
        throw ValidationError("--prime " + std::to_string(q) + " does not match field F" +
                              std::to_string(p.field.modulus));
      }
      q = p.field.modulus;
    }
    if (q == 0) throw ValidationError("count needs --prime for an input over Q");
    GradedAlgebra a = algebra_of(p);
    json d{{"prime", q}};
    if (fibers) {
      d["fibers"] = fiber_counts(interpolation(a), q);
    } else {
      d["points"] = enumerate_points(a.ideal(), q).size();
    }
    return d;
  };
  auto text = [](const json& d) {
    const std::string field = "F" + std::to_string(d["prime"].get<std::uint32_t>());
    if (d.contains("points")) return field + " points: " + std::to_string(d["points"].get<std::size_t>()) + "\n";
    std::string s;
    const json& f = d["fibers"];
    for (std::size_t c = 0; c < f.size(); ++c) {
      s += field + " fiber t=" + std::to_string(c) + ": " + std::to_string(f[c].get<std::uint64_t>()) + "\n";
    }
    return s;
  };
  return run_single(file, "count", common, body, text, out, err);
}

}  // namespace gmloci
