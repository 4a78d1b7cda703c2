#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "legendrian/compare.hpp"
#include "legendrian/corpus.hpp"
#include "legendrian/dga_json.hpp"
#include "legendrian/errors.hpp"
#include "legendrian/moves.hpp"
#include "selftest.hpp"

using namespace legendrian;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitBound = 3;

struct Input {
  std::string name;
  std::optional<FrontDiagram> front;
  std::optional<std::string> dga_json;
  std::vector<std::string> probes;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_json(const std::string& text) {
  const auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && text[p] == '{';
}

Input load_input(const std::string& arg) {
  Input in;
  in.name = arg;
  if (arg.rfind("corpus:", 0) == 0) {
    const CorpusEntry* e = find_corpus(arg);
    if (!e) throw std::invalid_argument("unknown corpus entry " + arg);
    if (e->kind == CorpusEntry::Kind::Front) in.front = corpus_front(*e);
    else in.dga_json = e->payload;
    in.probes = e->probes;
    return in;
  }
  const std::string text = read_file(arg);
  if (looks_like_json(text)) in.dga_json = text;
  else in.front = load_front(text);
  return in;
}

const FrontDiagram& need_front(const Input& in) {
  if (!in.front) throw std::invalid_argument(in.name + " is a DGA; this command needs a front");
  return *in.front;
}

std::vector<int> to_rho2(const std::vector<double>& rho) {
  std::vector<int> out;
  for (double r : rho) {
    const double twice = 2 * r;
    if (std::abs(twice - std::round(twice)) > 1e-9) throw std::invalid_argument("rho must be a multiple of 1/2");
    out.push_back(static_cast<int>(std::lround(twice)));
  }
  return out;
}

DGA input_dga(const Input& in, const std::vector<int>& rho2 = {}) {
  if (in.dga_json) return parse_dga(*in.dga_json);
  DgaOptions opt;
  opt.rho2 = rho2;
  return compute_dga(*in.front, opt);
}

std::string aug_string(const Augmentation& e) {
  std::string s;
  for (auto v : e.values) s += v ? '1' : '0';
  return s;
}

Json poly_json(const LaurentPoly& p) {
  Json j = Json::object();
  j["text"] = to_string(p);
  j["coefficients"] = Json::object();
  for (const auto& [e, c] : p.coefficients()) j["coefficients"][std::to_string(e)] = c;
  return j;
}

Json presentation_json(const CharPresentation& c) {
  Json j;
  j["format"] = 1;
  j["generators"] = Json::array();
  for (int g : c.generators()) j["generators"].push_back({{"name", c.names[g]}, {"degree", c.degrees[g]}});
  j["modulus"] = c.modulus;
  j["trivial"] = c.trivial;
  j["relations"] = Json::array();
  for (const auto& r : c.relations) j["relations"].push_back(to_string(r, c.names));
  j["eliminated"] = Json::object();
  for (int i = 0; i < c.size(); ++i)
    if (!c.present[i] && c.values[i]) j["eliminated"][c.names[i]] = to_string(*c.values[i], c.names);
  j["log"] = c.log;
  return j;
}

struct Output {
  bool json = false;
  Json doc = Json::object();
  std::ostringstream text;

  void flush() {
    if (json) {
      Json out;
      out["format"] = 1;
      for (auto it = doc.begin(); it != doc.end(); ++it) out[it.key()] = it.value();
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << text.str();
    }
  }
};

int cmd_validate(const std::string& arg, Output& out) {
  if (arg.rfind("corpus:", 0) != 0) {
    const std::string text = read_file(arg);
    if (!looks_like_json(text)) {
      const FrontDiagram d = parse_front(text);
      const auto diags = validate(d);
      out.doc["valid"] = diags.empty();
      out.doc["events"] = d.size();
      out.doc["diagnostics"] = Json::array();
      for (const auto& g : diags) {
        out.doc["diagnostics"].push_back({{"position", g.position}, {"message", g.message}});
        std::cerr << arg << ": event " << g.position << ": " << g.message << "\n";
      }
      if (!diags.empty()) {
        out.text << "invalid: " << diags.size() << " problem(s)\n";
        return kExitInvalid;
      }
      const ComponentMap cm = trace_components(d);
      out.doc["components"] = cm.num_components();
      out.text << "valid: " << d.size() << " events, " << cm.num_components() << " component(s)\n";
      return 0;
    }
  }
  const Input in = load_input(arg);
  const DGA p = input_dga(in);
  std::string why1, why2;
  const bool lowers = lowers_degree_by_one(p, &why1), squares = d_squared_zero(p, &why2);
  out.doc["valid"] = lowers && squares;
  out.doc["generators"] = p.size();
  out.doc["lowers_degree_by_one"] = lowers;
  out.doc["d_squared_zero"] = squares;
  if (!lowers) std::cerr << arg << ": " << why1 << "\n";
  if (!squares) std::cerr << arg << ": " << why2 << "\n";
  out.text << (lowers && squares ? "valid" : "invalid") << ": " << p.size() << " generators\n";
  return lowers && squares ? 0 : kExitInvalid;
}

int cmd_invariants(const std::string& arg, Output& out) {
  const Input in = load_input(arg);
  const FrontDiagram& d = need_front(in);
  const ComponentMap cm = trace_components(d);
  const int tb = thurston_bennequin(d, cm);
  out.doc["tb"] = tb;
  out.doc["components"] = cm.num_components();
  out.doc["r"] = Json::array();
  out.text << "components: " << cm.num_components() << "\ntb: " << tb << "\n";
  for (int j = 0; j < cm.num_components(); ++j) {
    const int r = rotation_number(cm, j);
    out.doc["r"].push_back(r);
    out.text << "r" << (cm.num_components() > 1 ? std::to_string(j + 1) : std::string()) << ": " << r << "\n";
  }
  return 0;
}

int cmd_dga(const std::string& arg, const std::vector<double>& rho, Output& out) {
  const DGA p = input_dga(load_input(arg), to_rho2(rho));
  out.doc["dga"] = to_json(p);
  out.text << format_dga(p);
  return 0;
}

int cmd_normalize(const std::string& arg, Output& out) {
  const FrontDiagram s = make_simple(need_front(load_input(arg)));
  out.doc["front"] = format_front(s);
  out.text << format_front(s);
  return 0;
}

int cmd_perturb(const std::string& arg, std::uint64_t seed, int steps, Output& out) {
  const FrontDiagram d = random_isotopy(need_front(load_input(arg)), seed, steps);
  out.doc["seed"] = seed;
  out.doc["steps"] = steps;
  out.doc["front"] = format_front(d);
  out.text << "# seed " << seed << ", " << steps << " moves\n" << format_front(d);
  return 0;
}

int cmd_ncopy(const std::string& arg, int n, Output& out) {
  const FrontDiagram d = n_copy(need_front(load_input(arg)), n);
  out.doc["n"] = n;
  out.doc["front"] = format_front(d);
  out.text << format_front(d);
  return 0;
}

int cmd_augs(const std::string& arg, bool ungraded, Output& out) {
  const DGA p = input_dga(load_input(arg));
  AugmentationSearch opt;
  opt.graded = !ungraded;
  const auto augs = find_augmentations(p, opt);
  out.doc["graded"] = opt.graded;
  out.doc["generators"] = p.names();
  out.doc["augmentations"] = Json::array();
  for (const auto& e : augs) out.doc["augmentations"].push_back(aug_string(e));
  out.text << augs.size() << (opt.graded ? " graded" : "") << " augmentation(s)\n";
  for (const auto& e : augs) out.text << "  " << aug_string(e) << "\n";
  return 0;
}

int cmd_poly(const std::string& arg, int order, bool split, const std::vector<double>& rho, Output& out) {
  const Input in = load_input(arg);
  const std::vector<int> rho2 = to_rho2(rho);
  const DGA p = input_dga(in);
  if (!split) {
    if (order != 1 && order != 2) throw std::invalid_argument("--order must be 1 or 2");
    const auto augs = find_augmentations(p);
    out.doc["order"] = order;
    out.doc["polynomials"] = Json::array();
    for (const auto& e : augs) {
      const LaurentPoly q = poincare_polynomial(p, e, order);
      Json j = poly_json(q);
      j["augmentation"] = aug_string(e);
      out.doc["polynomials"].push_back(j);
      out.text << aug_string(e) << "  " << to_string(q) << "\n";
    }
    if (augs.empty()) out.text << "no graded augmentations\n";
    return 0;
  }
  if (order != 1) throw std::invalid_argument("split polynomials are first order");
  const auto augs = link_augmentations(p);
  out.doc["rho"] = rho;
  out.doc["matrices"] = Json::array();
  for (const auto& e : augs) {
    const SplitMatrix m = split_polynomials(p, e, rho2);
    Json jm = Json::array();
    out.text << "augmentation " << aug_string(e) << "\n";
    for (std::size_t a = 0; a < m.size(); ++a) {
      Json row = Json::array();
      for (std::size_t b = 0; b < m.size(); ++b) {
        row.push_back(poly_json(m[a][b]));
        out.text << "  P" << a + 1 << b + 1 << " = " << to_string(m[a][b]) << "\n";
      }
      jm.push_back(row);
    }
    out.doc["matrices"].push_back({{"augmentation", aug_string(e)}, {"matrix", jm}});
  }
  return 0;
}

std::vector<Probe> probes_from(const Input& in, const std::string& extra, const std::vector<std::string>& names) {
  std::vector<Probe> out;
  for (const auto& s : in.probes) out.push_back(parse_probe(s, names));
  if (!extra.empty()) {
    std::ifstream f(extra);
    out.push_back(parse_probe(f ? read_file(extra) : extra, names));
  }
  return out;
}

int cmd_charalg(const std::string& arg, bool simplify, const std::string& probe, Output& out) {
  const Input in = load_input(arg);
  CharPresentation c = characteristic_presentation(input_dga(in));
  if (simplify) c = tietze_simplify(c);
  if (!probe.empty()) {
    std::ifstream f(probe);
    c = probe_quotient(c, parse_probe(f ? read_file(probe) : probe, c.names));
  }
  out.doc["presentation"] = presentation_json(c);
  out.text << format_presentation(c);
  return 0;
}

int cmd_compare(const std::string& a, const std::string& b, const std::string& probe_a, const std::string& probe_b,
                Output& out) {
  const Input ia = load_input(a), ib = load_input(b);
  const DGA pa = input_dga(ia), pb = input_dga(ib);
  CompareOptions opt;
  opt.probes_a = probes_from(ia, probe_a, pa.names());
  opt.probes_b = probes_from(ib, probe_b, pb.names());
  const CompareResult r = compare_knots(pa, pb, opt);
  out.doc["verdict"] = to_string(r.verdict);
  out.text << to_string(r.verdict) << "\n";
  if (r.certificate) {
    Json c;
    c["property"] = r.certificate->property;
    c["summary"] = r.certificate->summary;
    c["data"] = Json::object();
    for (const auto& [k, v] : r.certificate->data) c["data"][k] = v;
    out.doc["certificate"] = c;
    out.text << "property: " << r.certificate->property << "\n" << r.certificate->summary << "\n";
    for (const auto& [k, v] : r.certificate->data) out.text << "  " << k << ": " << v << "\n";
  }
  out.doc["notes"] = r.notes;
  out.text << "checks:\n";
  for (const auto& n : r.notes) out.text << "  " << n << "\n";
  return 0;
}

int cmd_selftest(Output& out) {
  const SelftestReport rep = run_selftest();
  out.doc["passed"] = rep.passed();
  out.doc["checks"] = Json::array();
  for (const auto& c : rep.checks) {
    out.doc["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    out.text << (c.ok ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  }
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendrian knot invariants from front diagrams"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.json, "JSON output");

  std::string input, other, probe, probe_b;
  std::vector<double> rho;
  int order = 1, n = 2, steps = 25;
  std::uint64_t seed = 1;
  bool split = false, simplify = false, ungraded = false;

  auto* validate_cmd = app.add_subcommand("validate", "check a front or DGA file");
  validate_cmd->add_option("input", input, "file or corpus:NAME")->required();
  auto* invariants_cmd = app.add_subcommand("invariants", "tb, r and component count");
  invariants_cmd->add_option("input", input)->required();
  auto* dga_cmd = app.add_subcommand("dga", "print the DGA");
  dga_cmd->add_option("input", input)->required();
  dga_cmd->add_option("--rho", rho, "grading shifts per component (half-integers allowed)");
  auto* normalize_cmd = app.add_subcommand("normalize", "isotope to a simple front");
  normalize_cmd->add_option("input", input)->required();
  auto* perturb_cmd = app.add_subcommand("perturb", "apply seeded random Reidemeister moves");
  perturb_cmd->add_option("input", input)->required();
  perturb_cmd->add_option("--seed", seed);
  perturb_cmd->add_option("--steps", steps);
  auto* augs_cmd = app.add_subcommand("augs", "list augmentations");
  augs_cmd->add_option("input", input)->required();
  augs_cmd->add_flag("--ungraded", ungraded, "allow nonzero values in every degree");
  auto* poly_cmd = app.add_subcommand("poly", "linearized Poincare polynomials");
  poly_cmd->add_option("input", input)->required();
  poly_cmd->add_option("--order", order)->check(CLI::Range(1, 2));
  poly_cmd->add_flag("--split", split, "split polynomial matrices of a link");
  poly_cmd->add_option("--rho", rho, "grading shifts per component (half-integers allowed)");
  auto* charalg_cmd = app.add_subcommand("charalg", "characteristic algebra presentation");
  charalg_cmd->add_option("input", input)->required();
  charalg_cmd->add_flag("--simplify", simplify, "Tietze simplification");
  charalg_cmd->add_option("--probe", probe, "probe file, or substitution text such as \"a3=1, rest=0\"");
  auto* compare_cmd = app.add_subcommand("compare", "try to distinguish two knots");
  compare_cmd->add_option("a", input)->required();
  compare_cmd->add_option("b", other)->required();
  compare_cmd->add_option("--probe-a", probe, "extra probe for A");
  compare_cmd->add_option("--probe-b", probe_b, "extra probe for B");
  auto* ncopy_cmd = app.add_subcommand("ncopy", "n parallel copies of a knot");
  ncopy_cmd->add_option("input", input)->required();
  ncopy_cmd->add_option("--n", n)->check(CLI::Range(1, 8));
  auto* selftest_cmd = app.add_subcommand("selftest", "run the invariance suite on the corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  int code = 0;
  try {
    if (*validate_cmd) code = cmd_validate(input, out);
    else if (*invariants_cmd) code = cmd_invariants(input, out);
    else if (*dga_cmd) code = cmd_dga(input, rho, out);
    else if (*normalize_cmd) code = cmd_normalize(input, out);
    else if (*perturb_cmd) code = cmd_perturb(input, seed, steps, out);
    else if (*augs_cmd) code = cmd_augs(input, ungraded, out);
    else if (*poly_cmd) code = cmd_poly(input, order, split, rho, out);
    else if (*charalg_cmd) code = cmd_charalg(input, simplify, probe, out);
    else if (*compare_cmd) code = cmd_compare(input, other, probe, probe_b, out);
    else if (*ncopy_cmd) code = cmd_ncopy(input, n, out);
    else if (*selftest_cmd) code = cmd_selftest(out);
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kExitBound;
  } catch (const InvalidFront& e) {
    for (const auto& d : e.diagnostics()) std::cerr << input << ": event " << d.position << ": " << d.message << "\n";
    return kExitInvalid;
  } catch (const ParseError& e) {
    std::cerr << input << ": " << e.what() << "\n";
    return kExitInvalid;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid JSON: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  }
  out.flush();
  return code;
}
