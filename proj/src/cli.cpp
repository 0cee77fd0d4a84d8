#include "assoc/cli.hpp"

#include "assoc/json_io.hpp"
#include "assoc/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace assoc::cli {

std::pair<int, int> parse_degree_range(const std::string& text) {
  auto whole_int = [&](const std::string& part) {
    std::size_t used = 0;
    const int v = std::stoi(part, &used);
    if (used != part.size()) throw ConfigError("");
    return v;
  };
  std::pair<int, int> range;
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      range.first = range.second = whole_int(text);
    } else {
      range = {whole_int(text.substr(0, dots)), whole_int(text.substr(dots + 2))};
    }
  } catch (const std::exception&) {
    throw ConfigError("bad degree range '" + text + "', expected A..B");
  }
  if (range.first > range.second) throw ConfigError("empty degree range '" + text + "'");
  return range;
}

Config validate(Config c) {
  auto require = [](bool ok, const std::string& msg) {
    if (!ok) throw ConfigError(msg);
  };
  if (c.command == "build") {
    require(c.degree >= 2 && c.degree <= kMaxA4Degree, "build --degree must be in [2, 7]");
    if (c.a4_truncation == 0) c.a4_truncation = std::min(c.degree + 1, kMaxA4Degree);
    require(c.a4_truncation >= c.degree && c.a4_truncation <= kMaxA4Degree, "--a4-truncation must be in [degree, 7]");
  } else if (c.command == "verify") {
    require(!c.in.empty(), "verify needs --in");
    if (c.degree != 0) require(c.degree >= 1 && c.degree <= kMaxA4Degree, "verify --degree must be in [1, 7]");
  } else if (c.command == "dims") {
    if (c.strands == 0) c.strands = 4;
    require(c.strands >= 2 && c.strands <= kMaxStrands, "--strands must be in [2, 5]");
    if (c.degree == 0) c.degree = 4;
    const int cap = c.strands == 4 ? kMaxA4Degree : c.strands == 5 ? 5 : kMaxA3Degree;
    require(c.degree >= 0 && c.degree <= cap, "--degree exceeds the cap for this strand count");
  } else if (c.command == "suites" || c.command == "identities") {
    if (c.command == "identities") c.identities = true;
    if (!(c.lemma || c.dims || c.identities || c.welldef || c.projections || c.theorem))
      c.lemma = c.dims = c.identities = c.welldef = c.projections = c.theorem = true;
    if (c.from == 0 && c.to == 0) c.from = 2, c.to = 5;
    require(c.from >= 1 && c.from <= c.to && c.to <= kMaxA4Degree, "--degrees must satisfy 1 <= A <= B <= 7");
    if (c.strands == 0) c.strands = 4;
    require(c.strands >= 2 && c.strands <= kMaxStrands, "--strands must be in [2, 5]");
    if (c.degree == 0) c.degree = c.dims ? 4 : 5;
    require(c.degree >= 1 && c.degree <= kMaxA4Degree, "--degree must be in [1, 7]");
    const int need = std::max(c.to, (c.theorem || c.welldef) ? c.degree : 0);
    if (c.a4_truncation == 0) c.a4_truncation = need;
    require(c.a4_truncation >= need && c.a4_truncation <= kMaxA4Degree, "--a4-truncation too small or above 7");
  } else {
    throw ConfigError("unknown command '" + c.command + "'");
  }
  return c;
}

void print_series_table(const Series& s, std::size_t max_terms, std::ostream& out) {
  out << "alphabet:";
  for (const auto& n : s.alphabet()->names()) out << ' ' << n;
  out << "\ntruncation: " << s.truncation() << "\nterms: " << s.terms().size() << '\n';
  auto it = s.terms().begin();
  while (it != s.terms().end()) {
    const auto d = it->first.degree();
    std::size_t count = 0;
    auto jt = it;
    for (; jt != s.terms().end() && jt->first.degree() == d; ++jt) ++count;
    out << "degree " << d << " (" << count << " terms)\n";
    std::size_t shown = 0;
    for (; it != jt && shown < max_terms; ++it, ++shown)
      out << "  " << (it->first.empty() ? "1" : word_to_string(*s.alphabet(), it->first)) << "  " << to_string(it->second) << '\n';
    if (count > shown) out << "  ... " << (count - shown) << " more\n";
    it = jt;
  }
}

namespace {

std::string manifest_path(const std::string& out) {
  const std::string ext = ".json";
  if (out.size() > ext.size() && out.compare(out.size() - ext.size(), ext.size(), ext) == 0)
    return out.substr(0, out.size() - ext.size()) + ".manifest.json";
  return out + ".manifest.json";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
  if (!f) throw std::runtime_error("failed writing " + path);
}

void print_report_table(const AssociatorReport& r, std::ostream& out) {
  out << "c2 = " << to_string(r.c2) << '\n';
  out << "group-like: " << (r.grouplike ? "yes" : "no") << '\n';
  out << "abelianization trivial: " << (r.abelianization_trivial ? "yes" : "no") << '\n';
  for (const auto& v : r.equations.violations) out << "violation: " << v << '\n';
  for (const auto& [name, res] : r.equations.residuals) {
    out << name << ": satisfied through degree " << satisfied_through(res);
    auto bad = nonzero_degrees(res);
    if (!bad.empty()) {
      out << ", nonzero at";
      for (int d : bad) out << ' ' << d;
    }
    out << '\n';
  }
}

int print_checks(const std::vector<CheckResult>& checks, Format format, std::ostream& out) {
  bool all = true;
  for (const auto& c : checks) all = all && c.passed;
  if (format == Format::json) {
    Json list = Json::array();
    for (const auto& c : checks) list.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out << Json{{"passed", all}, {"checks", std::move(list)}}.dump(2) << '\n';
  } else {
    for (const auto& c : checks)
      out << (c.passed ? "PASS  " : "FAIL  ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]") << '\n';
    out << (all ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return all ? kOk : kCheckFailed;
}

}  // namespace

int run_build(const Config& config, std::ostream& out, std::ostream& err) {
  const Config c = validate(config);
  const ChordAlgebras algebras(c.a4_truncation, c.a4_truncation);
  const auto built = build_associator(c.degree, c.mode, algebras);
  const auto report = verify_associator(built.phi, c.degree, algebras);

  Json gauge = Json::array();
  for (const auto& g : built.state.gauge_log) gauge.push_back(gauge_record_to_json(g));
  Json manifest{{"mode", std::string(to_string(c.mode))},
                {"degree", c.degree},
                {"a3_truncation", algebras.a3().truncation()},
                {"a4_truncation", algebras.a4().truncation()},
                {"c2", to_string(report.c2)},
                {"gauge_log", std::move(gauge)},
                {"report", associator_report_to_json(report)}};

  const std::string series_text = series_to_json(built.phi).dump(2) + "\n";
  std::ostream& summary = c.out.empty() ? err : out;
  if (c.out.empty()) {
    out << series_text;
  } else {
    write_file(c.out, series_text);
    write_file(manifest_path(c.out), manifest.dump(2) + "\n");
  }

  bool ok = report.grouplike && report.c2 == Rational(1, 24);
  for (const auto& [name, res] : report.equations.residuals) ok = ok && satisfied_through(res) >= c.degree;

  if (c.format == Format::json) {
    summary << manifest.dump(2) << '\n';
  } else {
    summary << "mode " << to_string(c.mode) << ", degree " << c.degree << ", A_4 truncation " << c.a4_truncation << '\n';
    print_report_table(report, summary);
    for (const auto& g : built.state.gauge_log)
      summary << "degree " << g.degree << ": " << g.unknowns << " unknowns, " << g.equations << " equations, rank " << g.rank
              << ", gauge freedom " << g.nullity << '\n';
    if (!c.out.empty()) {
      print_series_table(built.phi, c.max_terms, summary);
      summary << "wrote " << c.out << " and " << manifest_path(c.out) << '\n';
    }
  }
  return ok ? kOk : kCheckFailed;
}

int run_verify(const Config& config, std::ostream& out, std::ostream&) {
  Config c = validate(config);
  std::ifstream f(c.in, std::ios::binary);
  if (!f) throw ConfigError("cannot read " + c.in);
  std::stringstream buffer;
  buffer << f.rdbuf();
  const Series phi = series_from_text(buffer.str());
  if (!same_alphabet(phi.alphabet(), uf2_alphabet())) throw ConfigError("verify expects a series over X, Y");
  if (c.degree == 0) c.degree = phi.truncation();
  if (c.degree < 1 || c.degree > kMaxA4Degree) throw ConfigError("degree out of range [1, 7]");
  const ChordAlgebras algebras(c.degree, c.degree);
  const auto report = verify_associator(phi, c.degree, algebras);
  const bool holds = report.holds();
  int first_failure = -1;
  if (!holds && report.equations.violations.empty()) first_failure = report.equations.satisfied_through + 1;
  if (c.format == Format::json) {
    Json j = associator_report_to_json(report);
    j["degree"] = c.degree;
    if (first_failure > 0 && first_failure <= c.degree) j["first_failing_degree"] = first_failure;
    out << j.dump(2) << '\n';
  } else {
    out << "verifying through degree " << c.degree << '\n';
    print_report_table(report, out);
    if (first_failure > 0 && first_failure <= c.degree) out << "first failing degree: " << first_failure << '\n';
    out << (holds ? "associator through degree " + std::to_string(c.degree) : std::string("NOT an associator")) << '\n';
  }
  return holds ? kOk : kCheckFailed;
}

int run_dims(const Config& config, std::ostream& out, std::ostream&) {
  const Config c = validate(config);
  const ChordAlgebra algebra(c.strands, c.degree);
  const auto dims = algebra.dims();
  if (c.format == Format::json) {
    out << dims_to_json(c.strands, dims).dump() << '\n';
  } else {
    out << "A_" << c.strands << " through degree " << c.degree << '\n';
    for (std::size_t d = 0; d < dims.size(); ++d) out << "  degree " << d << ": " << dims[d] << '\n';
  }
  return kOk;
}

int run_suites(const Config& config, std::ostream& out, std::ostream&) {
  const Config c = validate(config);
  std::vector<CheckResult> checks;
  auto append = [&](std::vector<CheckResult> more) {
    for (auto& m : more) checks.push_back(std::move(m));
  };
  if (c.dims) append(dims_suite(c.strands, c.degree));
  const bool need_algebras = c.lemma || c.identities || c.welldef || c.projections || c.theorem;
  if (need_algebras) {
    const ChordAlgebras algebras(c.a4_truncation, c.a4_truncation);
    if (c.lemma) append(lemma_suite(c.from, c.to, algebras.a4()));
    if (c.identities) append(identities_suite(c.from, c.to, algebras));
    if (c.welldef) append(welldefined_suite(c.degree, algebras));
    if (c.projections) append(projections_suite(c.from, c.to, algebras.a4()));
    if (c.theorem) append(theorem_suite(c.degree, algebras));
  }
  return print_checks(checks, c.format, out);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact associator and chord-diagram algebra toolkit"};
  app.require_subcommand(1);
  Config c;
  std::string mode = "full", format = "table", degrees;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  };
  auto* build = app.add_subcommand("build", "Build a rational associator degree by degree");
  build->add_option("--degree", c.degree, "Target degree N")->required();
  build->add_option("--mode", mode, "full or pentagon-only")->check(CLI::IsMember({"full", "pentagon-only"}));
  build->add_option("--out", c.out, "Series JSON output path (manifest written alongside)");
  build->add_option("--a4-truncation", c.a4_truncation, "Truncation of A_4 and A_3 used for the residual report");
  build->add_option("--max-terms", c.max_terms, "Terms per degree in table output");
  add_format(build);

  auto* verify = app.add_subcommand("verify", "Check pentagon, hexagons and group-likeness of a series");
  verify->add_option("--in", c.in, "Series JSON input")->required();
  verify->add_option("--degree", c.degree, "Verify through this degree (default: the file's truncation)");
  add_format(verify);

  auto* dims = app.add_subcommand("dims", "Graded dimensions of A_n");
  dims->add_option("--strands", c.strands, "Strand count n");
  dims->add_option("--degree", c.degree, "Highest degree");
  add_format(dims);

  auto* suites = app.add_subcommand("suites", "Run verification suites");
  suites->add_flag("--lemma", c.lemma, "Kernel of dP inside kernel of dH2");
  suites->add_flag("--dims", c.dims, "Quotient dimensions against the naive span rank");
  suites->add_flag("--identities", c.identities, "Four-permutation, permuto-associahedron, q/pi/i identities");
  suites->add_flag("--welldef", c.welldef, "Maps out of quotients kill the relations");
  suites->add_flag("--projections", c.projections, "p1/p2 consequences on the kernel of dP");
  suites->add_flag("--theorem", c.theorem, "Pentagon-only build has vanishing hexagon residuals");
  suites->add_option("--degrees", degrees, "Degree range A..B");
  suites->add_option("--strands", c.strands, "Strand count for --dims");
  suites->add_option("--degree", c.degree, "Degree for --dims, --welldef and --theorem");
  suites->add_option("--a4-truncation", c.a4_truncation, "Truncation of A_4");
  add_format(suites);

  auto* identities = app.add_subcommand("identities", "Run the identity suite");
  identities->add_option("--degrees", degrees, "Degree range A..B");
  identities->add_option("--a4-truncation", c.a4_truncation, "Truncation of A_4");
  add_format(identities);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    c.command = app.get_subcommands().front()->get_name();
    c.mode = parse_build_mode(mode);
    c.format = format == "json" ? Format::json : Format::table;
    if (!degrees.empty()) std::tie(c.from, c.to) = parse_degree_range(degrees);
    if (c.command == "build") return run_build(c, out, err);
    if (c.command == "verify") return run_verify(c, out, err);
    if (c.command == "dims") return run_dims(c, out, err);
    return run_suites(c, out, err);
  } catch (const InconsistentExtension& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::logic_error& e) {
    // invalid_argument derives from logic_error; keep usage errors at 2.
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::domain_error*>(&e)) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    }
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace assoc::cli
