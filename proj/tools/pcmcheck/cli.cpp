#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "pcm/catalog.hpp"
#include "pcm/classify.hpp"
#include "pcm/curvature.hpp"
#include "pcm/deform.hpp"
#include "pcm/exact/linalg.hpp"
#include "pcm/exact/poly_text.hpp"
#include "pcm/io/structure_file.hpp"
#include "pcm/structure.hpp"

namespace pcm::cli {

namespace {

using nlohmann::json;

constexpr std::string_view kCatalogPrefix = "catalog:";

// Anything the user got wrong: unreadable file, bad syntax, bad option value.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg, json detail = json::object())
      : std::runtime_error(msg), detail_(std::move(detail)) {}
  const json& detail() const { return detail_; }

 private:
  json detail_;
};

struct Session {
  bool json_mode = false;
  std::string command;
  std::string input;
  std::ostringstream text;
  json checks = json::array();
  json result = json::object();
};

const char* kind_name(io::ParseError::Kind k) {
  switch (k) {
    case io::ParseError::Kind::kLexical: return "lexical";
    case io::ParseError::Kind::kSyntax: return "syntax";
    case io::ParseError::Kind::kSemantic: return "semantic";
  }
  return "syntax";
}

ParacontactData load_input(const std::string& arg) {
  if (arg.rfind(kCatalogPrefix, 0) == 0) {
    try {
      return catalog::lookup(std::string_view(arg).substr(kCatalogPrefix.size()));
    } catch (const catalog::CatalogError& e) {
      throw InputError(e.what());
    }
  }
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw InputError("cannot open '" + arg + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return io::load_structure(buf.str());
  } catch (const io::ParseError& e) {
    throw InputError(arg + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                         ": " + kind_name(e.kind()) + " error: " + e.message(),
                     json{{"kind", kind_name(e.kind())},
                          {"line", e.line()},
                          {"column", e.column()},
                          {"message", e.message()}});
  }
}

Scalar parse_value(const std::string& option, const std::string& text) {
  try {
    return exact::parse_scalar(text);
  } catch (const std::exception& e) {
    throw InputError("invalid value for " + option + " '" + text + "': " + e.what());
  }
}

Point parse_point(const std::string& text) {
  Point p;
  if (text.find_first_not_of(" \t") == std::string::npos) return p;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
    const Scalar v = parse_value("--point", item);
    if (!v.is_rational()) throw InputError("point coordinates must be rational, got '" + item + "'");
    p.push_back(v.rational_part());
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return p;
}

std::string point_str(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? ", " : "") + p[i].get_str();
  return out + ")";
}

std::string vector_str(const Eigen::VectorXd& v) {
  std::string out = "(";
  char buf[32];
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.12g", std::abs(v(i)) < 1e-15 ? 0.0 : v(i));
    out += (i ? ", " : "") + std::string(buf);
  }
  return out + ")";
}

json vector_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

// Returns true when every check passed.
bool add_report(Session& s, const std::string& group, const AxiomReport& report) {
  if (!group.empty()) s.text << group << "\n";
  for (const Check& c : report.checks) {
    s.text << "  " << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.pass) {
      s.text << ": " << c.witness;
      if (!c.location.empty()) s.text << " at " << c.location;
    }
    s.text << "\n";
    json j{{"group", group}, {"name", c.name}, {"pass", c.pass}};
    if (!c.pass) {
      j["witness"] = c.witness;
      j["location"] = c.location;
    }
    s.checks.push_back(std::move(j));
  }
  return report.passed();
}

std::string stratum_str(const Stratum& st) {
  if (st.empty) return "empty";
  std::string out;
  for (std::size_t i = 0; i < st.generators.size(); ++i)
    out += (i ? ", " : "") + st.generators[i].str() + "=0";
  return out;
}

json stratum_json(const Stratum& st) {
  json gens = json::array();
  for (const Poly& g : st.generators) gens.push_back(g.str());
  return {{"max_rank", st.max_rank}, {"empty", st.empty}, {"generators", gens}};
}

// Commands. Each returns an exit code and writes into the session.

int cmd_validate(Session& s, const ParacontactData& d) {
  bool ok = add_report(s, "almost paracontact", validate_almost_paracontact(d));
  ok = add_report(s, "metric", validate_metric(d)) && ok;
  const AxiomReport normality = nijenhuis_normality(d);
  const bool k_para = is_k_paracontact(d);
  const bool normal = normality.find("normal")->pass;
  const bool para_sasakian = normality.find("paraSasakian")->pass;
  s.text << "K-paracontact: " << (k_para ? "yes" : "no") << "\n"
         << "normal: " << (normal ? "yes" : "no") << "\n"
         << "paraSasakian: " << (para_sasakian ? "yes" : "no") << "\n";
  s.result = {{"k_paracontact", k_para}, {"normal", normal}, {"parasasakian", para_sasakian}};
  if (!normal) {
    const Check* c = normality.find("normal");
    s.result["normality_witness"] = c->witness;
    s.result["normality_location"] = c->location;
  }
  return ok ? kPass : kFail;
}

int cmd_h(Session& s, const ParacontactData& d) {
  const PolyMatrix h = compute_h(d);
  const auto& names = d.frame().names();
  json columns = json::object();
  for (std::size_t j = 0; j < d.dim(); ++j) {
    const std::string img = render(FieldVec(h.column(j)), names);
    s.text << "h " << names[j] << " = " << img << "\n";
    columns[names[j]] = img;
  }
  const std::size_t r = exact::poly_rank(h);
  s.text << "generic rank " << r << "\n";
  s.result = {{"h", columns}, {"generic_rank", r}, {"k_paracontact", h.is_zero()}};
  return add_report(s, "h properties", h_properties(d, h)) ? kPass : kFail;
}

int cmd_nullity(Session& s, const ParacontactData& d, const std::string& kappa_text,
                const std::string& mu_text) {
  const Scalar kappa = parse_value("--kappa", kappa_text);
  const Scalar mu = parse_value("--mu", mu_text);
  const CurvatureBundle b = compute_curvature(d);
  s.result = {{"kappa", kappa.str()}, {"mu", mu.str()}};
  return add_report(s, "(kappa, mu) = (" + kappa.str() + ", " + mu.str() + ")",
                    nullity_verify(d, b.r, b.h, kappa, mu))
             ? kPass
             : kFail;
}

int cmd_infer(Session& s, const ParacontactData& d) {
  const CurvatureBundle b = compute_curvature(d);
  const NullityVerdict v = nullity_infer(d, b.r, b.h);
  const auto value = [](const std::optional<Scalar>& x) { return x ? x->str() : "free"; };
  switch (v.kind) {
    case NullityVerdict::Kind::kConstants:
      s.text << "(kappa, mu) = (" << v.kappa->str() << ", " << v.mu->str() << ")\n";
      s.result = {{"kind", "constants"}, {"kappa", v.kappa->str()}, {"mu", v.mu->str()}};
      return kPass;
    case NullityVerdict::Kind::kFamily:
      s.text << "(kappa, mu) = (" << value(v.kappa) << ", " << value(v.mu) << ")\n";
      s.result = {{"kind", "family"},
                  {"kappa", v.kappa ? json(v.kappa->str()) : json(nullptr)},
                  {"mu", v.mu ? json(v.mu->str()) : json(nullptr)}};
      return kPass;
    case NullityVerdict::Kind::kNone:
      break;
  }
  s.text << "not a (kappa, mu)-space: " << v.witness;
  if (!v.location.empty()) s.text << " at " << v.location;
  s.text << "\n";
  s.result = {{"kind", "none"}, {"witness", v.witness}, {"location", v.location}};
  return kFail;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
}

int cmd_deform(Session& s, const ParacontactData& d, const std::string& c_text, bool verify,
               const std::string& emit_path) {
  const Scalar c = parse_value("--c", c_text);
  if (c.is_zero()) throw InputError("c must be nonzero");
  std::optional<ParacontactData> deformed;
  try {
    deformed.emplace(dc_deform(d, c));
  } catch (const DeformError& e) {
    throw InputError(e.what());
  }
  const std::string text = io::emit(*deformed);
  s.result = {{"c", c.str()}, {"structure", text}};
  if (!emit_path.empty()) {
    write_file(emit_path, text);
    s.text << "wrote deformed structure to " << emit_path << "\n";
  } else if (!verify) {
    s.text << text;
  }
  if (!verify) return kPass;
  return add_report(s, "deformation c = " + c.str(), deform_roundtrip_check(d, c)) ? kPass
                                                                                    : kFail;
}

int cmd_rank(Session& s, const ParacontactData& d, const std::string& point_text) {
  const PolyMatrix h = compute_h(d);
  std::vector<Point> points;
  const bool has_point = !point_text.empty();
  const bool lie = !d.frame().coordinates();
  if (has_point && !lie) {
    points.push_back(parse_point(point_text));
    const std::size_t want = d.frame().coordinates()->size();
    if (points[0].size() != want) {
      throw InputError("--point has " + std::to_string(points[0].size()) +
                       " coordinates, chart has " + std::to_string(want));
    }
  }
  const RankReport report = rank_stratification(h, points);
  json strata = json::array();
  for (const Stratum& st : report.strata) strata.push_back(stratum_json(st));
  s.result = {{"generic_rank", report.generic_rank}, {"strata", strata}};

  if (has_point) {
    const std::size_t r = lie ? report.generic_rank : report.samples[0].rank;
    s.text << "rank " << r;
    if (r < report.generic_rank) {
      s.text << " (stratum " << stratum_str(report.strata[r]) << ")\n";
    } else {
      s.text << " (generic)\n";
    }
    s.result["point"] = {{"coordinates", lie ? json::array() : json(point_str(points[0]))},
                         {"rank", r}};
    return kPass;
  }
  s.text << "generic rank " << report.generic_rank << "\n";
  for (const Stratum& st : report.strata)
    s.text << "rank <= " << st.max_rank << " on " << stratum_str(st) << "\n";
  return kPass;
}

int cmd_canonical(Session& s, const ParacontactData& d, const std::string& point_text,
                  double tol) {
  const bool lie = !d.frame().coordinates();
  if (!lie && point_text.empty()) throw InputError("--point is required for coordinate frames");
  const Point p = lie ? Point{} : parse_point(point_text);
  CanonicalBasis cb;
  try {
    cb = canonical_basis_at_point(d, p, tol);
  } catch (const CanonicalError& e) {
    throw InputError(e.what());
  }
  const CanonicalVerification v = verify_canonical(d, cb, tol);

  s.text << "point " << (lie ? std::string("identity") : point_str(p)) << "\n"
         << "nonzero h blocks: " << cb.nonzero_blocks << "\n"
         << "xi = " << vector_str(cb.xi) << "\n";
  json blocks = json::array();
  for (std::size_t i = 0; i < cb.x.size(); ++i) {
    const std::string k = std::to_string(i + 1);
    s.text << "X" << k << " = " << vector_str(cb.x[i]) << "\n"
           << "Y" << k << " = " << vector_str(cb.y[i]) << "\n"
           << "eps" << k << " = " << (cb.eps[i] > 0 ? "+1" : "-1") << "\n";
    blocks.push_back({{"x", vector_json(cb.x[i])},
                      {"y", vector_json(cb.y[i])},
                      {"eps", cb.eps[i]},
                      {"h_nonzero", i < cb.nonzero_blocks}});
  }
  const bool ok = add_report(s, "canonical form", v.report);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v.max_residual);
  s.text << "residual " << buf << "\n";
  s.result = {{"point", lie ? json(nullptr) : json(point_str(p))},
              {"nonzero_blocks", cb.nonzero_blocks},
              {"xi", vector_json(cb.xi)},
              {"blocks", blocks},
              {"residual", v.max_residual},
              {"tolerance", tol}};
  return ok ? kPass : kFail;
}

int cmd_catalog(Session& s, const std::string& name, const std::string& emit_path) {
  if (name.empty()) {
    json names = json::array();
    for (const std::string& n : catalog::standard_names()) {
      const catalog::Entry e = catalog::describe(n);
      s.text << n << (e.extension ? " [extension]" : "") << "  " << e.description << "\n";
      names.push_back({{"name", n}, {"description", e.description}, {"extension", e.extension}});
    }
    s.result = {{"entries", names}};
    return kPass;
  }
  catalog::Entry entry;
  std::string text;
  try {
    entry = catalog::describe(name);
    text = io::emit(catalog::lookup(name));
  } catch (const catalog::CatalogError& e) {
    throw InputError(e.what());
  }
  s.result = {{"name", entry.name},
              {"description", entry.description},
              {"extension", entry.extension},
              {"structure", text}};
  if (!emit_path.empty()) {
    write_file(emit_path, text);
    s.text << "wrote " << entry.name << " to " << emit_path << "\n";
  } else {
    s.text << "# " << entry.name << ": " << entry.description << "\n" << text;
  }
  return kPass;
}

const char* status_name(int code) {
  switch (code) {
    case kPass: return "pass";
    case kFail: return "fail";
    default: return "error";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for paracontact metric structures given in a frame", "pcmcheck"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json_mode = false;
  app.add_flag("--json", json_mode, "Machine-readable output");

  std::string file;
  std::string kappa, mu, c, point, emit_path, name;
  bool verify = false;
  double tol = 1e-9;

  auto* validate = app.add_subcommand("validate", "Check the paracontact metric axioms");
  validate->add_option("file", file, "Structure file or catalog:<name>")->required();
  auto* h = app.add_subcommand("h", "Compute h = 1/2 L_xi phi and its identities");
  h->add_option("file", file, "Structure file or catalog:<name>")->required();
  auto* nullity = app.add_subcommand("nullity", "Verify the (kappa, mu)-nullity condition");
  nullity->add_option("file", file, "Structure file or catalog:<name>")->required();
  nullity->add_option("--kappa", kappa, "kappa, e.g. -1 or 1/2 + sqrt2")->required();
  nullity->add_option("--mu", mu, "mu")->required();
  auto* infer = app.add_subcommand("infer", "Infer constant (kappa, mu)");
  infer->add_option("file", file, "Structure file or catalog:<name>")->required();
  auto* deform = app.add_subcommand("deform", "D_c-homothetic deformation");
  deform->add_option("file", file, "Structure file or catalog:<name>")->required();
  deform->add_option("--c", c, "Nonzero deformation constant")->required();
  deform->add_flag("--verify", verify, "Recompute curvature and check the mu law");
  deform->add_option("--emit", emit_path, "Write the deformed structure to a file");
  auto* rank = app.add_subcommand("rank", "Generic rank of h and its stratification");
  rank->add_option("file", file, "Structure file or catalog:<name>")->required();
  rank->add_option("--point", point, "Comma-separated rational coordinates");
  auto* canonical = app.add_subcommand("canonical", "Canonical basis at a point");
  canonical->add_option("file", file, "Structure file or catalog:<name>")->required();
  canonical->add_option("--point", point, "Comma-separated rational coordinates; ignored for Lie algebras");
  canonical->add_option("--tol", tol, "Pivot tolerance (default 1e-9)")->check(CLI::PositiveNumber);
  auto* cat = app.add_subcommand("catalog", "Print a catalog structure, or list entries");
  cat->add_option("name", name, "Entry name; omit to list entries");
  cat->add_option("--emit", emit_path, "Write the structure to a file");

  std::vector<std::string> argv_store{"pcmcheck"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  Session s;
  s.json_mode = json_mode;
  s.command = app.get_subcommands().front()->get_name();
  s.input = s.command == "catalog" ? name : file;

  const auto start = std::chrono::steady_clock::now();
  int code = kInputError;
  json error;
  try {
    if (s.command == "catalog") {
      code = cmd_catalog(s, name, emit_path);
    } else {
      const ParacontactData d = load_input(file);
      if (s.command == "validate") code = cmd_validate(s, d);
      else if (s.command == "h") code = cmd_h(s, d);
      else if (s.command == "nullity") code = cmd_nullity(s, d, kappa, mu);
      else if (s.command == "infer") code = cmd_infer(s, d);
      else if (s.command == "deform") code = cmd_deform(s, d, c, verify, emit_path);
      else if (s.command == "rank") code = cmd_rank(s, d, point);
      else if (s.command == "canonical") code = cmd_canonical(s, d, point, tol);
    }
  } catch (const InputError& e) {
    code = kInputError;
    error = e.detail();
    error["message"] = e.what();
  }
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (s.json_mode) {
    json doc{{"command", s.command},
             {"input", s.input},
             {"status", status_name(code)},
             {"exit_code", code},
             {"elapsed_ms", elapsed},
             {"checks", s.checks},
             {"result", s.result}};
    if (code == kInputError) doc["error"] = error;
    out << doc.dump(2) << "\n";
  } else if (code == kInputError) {
    err << "error: " << error.value("message", std::string("unknown error")) << "\n";
  } else {
    out << s.text.str();
  }
  return code;
}

}  // namespace pcm::cli
