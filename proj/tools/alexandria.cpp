// Command-line front end: parses inputs, dispatches to the library and emits
// text or canonical JSON reports. Exit codes: 0 success, 2 invalid input,
// 3 violated mathematical precondition.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "alexandria/certify.hpp"
#include "alexandria/json_io.hpp"
#include "alexandria/pencil.hpp"
#include "alexandria/singularities.hpp"

namespace fs = std::filesystem;
using namespace alexandria;

namespace {

std::vector<long> parse_exponents(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      long v = std::stol(item, &pos);
      while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos])))
        ++pos;
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ValidationError("cannot parse exponent list \"" + text + "\"");
    }
  }
  if (out.empty()) throw ValidationError("empty exponent list");
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read file: " + path);
  json j;
  in >> j;
  return j;
}

void write_file_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw ValidationError("cannot write file: " + path.string());
    out << content;
  }
  fs::rename(tmp, path);
}

std::string module_text(const CycModule& m) {
  if (m.is_zero()) return "0";
  std::string out;
  if (m.free_rank() > 0)
    out += "free rank " + std::to_string(m.free_rank());
  for (const auto& c : m.primaries()) {
    if (!out.empty()) out += " \xE2\x8A\x95 ";  // direct sum sign
    out += "(" + c.p.str() + ")";
    if (c.power != 1) out += "^" + std::to_string(c.power);
  }
  return out;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

// "(t^2-t+1)^6" when the cyclotomic factorization is informative
std::string factored_str(const LaurentPoly& p) {
  if (p.is_zero() || p.span() < 1) return p.str();
  CyclotomicFactorization f = factor_cyclotomic(p);
  if (f.factors.empty()) return p.str();
  std::string out;
  for (const auto& [q, m] : f.factors) {
    if (!out.empty()) out += " * ";
    out += "(" + cyclotomic(q).str() + ")";
    if (m != 1) out += "^" + std::to_string(m);
  }
  if (!f.residual.is_one()) out += " * (" + f.residual.str() + ")";
  return out;
}

// ---- subcommand payloads ----------------------------------------------

struct Options {
  std::string format = "text";
  bool json_mode() const { return format == "json"; }
};

std::string run_charpoly(const std::string& exponents, const Options& opt) {
  std::vector<long> exps = parse_exponents(exponents);
  LaurentPoly p = brieskorn_charpoly(exps);
  if (opt.json_mode()) {
    json out{{"exponents", exps},
             {"charpoly", p.str()},
             {"module", module_to_json(brieskorn_module(exps))}};
    return dump_json(out);
  }
  return p.str() + "\n";
}

std::string run_family(const std::string& exponents, long n_flag, bool n_set,
                       const Options& opt) {
  std::vector<long> exps = parse_exponents(exponents);
  FamilyDescription f = power_sum_family(exps);
  if (n_set && n_flag != f.n)
    throw ValidationError("--n must equal the number of exponents minus one");
  if (opt.json_mode()) return dump_json(family_to_json(f));
  std::ostringstream out;
  out << "degree: " << f.degree << "\n";
  out << "singular points: " << f.singular_count.get_str() << "\n";
  out << "local type: brieskorn (";
  for (std::size_t i = 0; i < f.exponents.size(); ++i)
    out << (i ? "," : "") << f.exponents[i];
  out << ")\n";
  out << "equation shape: " << f.equation_shape << "\n";
  out << "module: " << module_text(f.module) << "\n";
  return out.str();
}

std::string run_join(const std::string& a_path, const std::string& b_path,
                     long deg_a, bool deg_a_set, long deg_b, bool deg_b_set,
                     const Options& opt) {
  CycModule a = module_from_json(read_json_file(a_path));
  CycModule b = module_from_json(read_json_file(b_path));
  JoinResult r = thom_sebastiani_join(
      a, b, deg_a_set ? std::optional<long>(deg_a) : std::nullopt,
      deg_b_set ? std::optional<long>(deg_b) : std::nullopt);
  if (opt.json_mode()) {
    json out{{"module", module_to_json(r.module)},
             {"order", r.module.order().str()},
             {"notes", r.notes}};
    return dump_json(out);
  }
  std::ostringstream out;
  out << "module: " << module_text(r.module) << "\n";
  out << "order: " << r.module.order().str() << "\n";
  for (const auto& n : r.notes) out << n << "\n";
  return out.str();
}

std::string run_pencil(const std::string& path, bool force_generic,
                       const Options& opt) {
  PencilInput in = pencil_input_from_json(read_json_file(path));
  if (force_generic && !in.generic)
    throw ValidationError(
        "--generic requires gammas/degenerations in the input file");
  CycModule m;
  std::optional<bool> factorization_ok;
  if (in.generic) {
    m = assemble_generic(in.monodromies, in.degenerations, in.fiber_rank);
  } else {
    m = assemble_pencil(in.strands, in.fibers, in.fiber_rank);
    if (!in.fibers.empty()) {
      std::vector<BraidWord> words;
      for (const auto& f : in.fibers) words.push_back(f.word);
      factorization_ok = validate_factorization(words);
    }
  }
  if (opt.json_mode()) {
    json out{{"module", module_to_json(m)}, {"order", json(nullptr)}};
    if (m.is_torsion()) out["order"] = m.order().str();
    if (factorization_ok)
      out["factorization_matches_full_twist"] = *factorization_ok;
    return dump_json(out);
  }
  std::ostringstream out;
  out << "module: " << module_text(m) << "\n";
  if (m.is_torsion()) out << "order: " << m.order().str() << "\n";
  if (factorization_ok)
    out << "factorization matches full twist: "
        << (*factorization_ok ? "yes" : "no") << "\n";
  return out.str();
}

json criteria_json(const GlobalHypersurface& h) {
  json out = json::object();
  if (h.n != 1) return out;
  long delta = 0, kappa = 0;
  bool only_nodes_cusps = h.infinity_singularities.empty();
  for (const auto& s : h.singularities) {
    if (const auto* nc = std::get_if<NodalCuspidalSing>(&s)) {
      delta += nc->delta;
      kappa += nc->kappa;
    } else if (const auto* br = std::get_if<BrieskornSing>(&s)) {
      std::vector<long> e = br->exponents;
      std::sort(e.begin(), e.end());
      if (e == std::vector<long>{2, 2})
        ++delta;
      else if (e == std::vector<long>{2, 3})
        ++kappa;
      else
        only_nodes_cusps = false;
    } else if (const auto* cp = std::get_if<CharPairSing>(&s)) {
      if (cp->m == 3 && cp->k == 2)
        ++kappa;
      else
        only_nodes_cusps = false;
    } else {
      only_nodes_cusps = false;
    }
  }
  if (only_nodes_cusps) {
    out["nodal_cuspidal"] =
        json{{"delta", delta},
             {"kappa", kappa},
             {"abelian", nodal_cuspidal_abelian(h.degree, delta, kappa)}};
  }
  if (h.singularities.size() == 1 && h.infinity_singularities.empty()) {
    if (const auto* cp = std::get_if<CharPairSing>(&h.singularities.front())) {
      CharPairCriterion c = char_pair_abelian(h.degree, cp->m, cp->k);
      out["char_pair"] = json{{"abelian", c.abelian},
                              {"total_drop", c.chain.total_drop},
                              {"caveat", c.caveat},
                              {"caveat_text", c.caveat_text}};
    }
  }
  return out;
}

std::string certify_output(const GlobalHypersurface& h, const Options& opt) {
  DivisibilityReport rep = divisibility_report(h);
  CertStatus status = vanishing_certificate(h);
  json crit = criteria_json(h);
  if (opt.json_mode()) {
    json out{{"input", hypersurface_to_json(h)},
             {"report", report_to_json(rep)},
             {"vanishing", to_string(status)}};
    if (!crit.empty()) out["criteria"] = crit;
    return dump_json(out);
  }
  std::ostringstream out;
  out << "product bound: " << factored_str(rep.product_bound) << "\n";
  out << "slack (t-1)^k: "
      << (rep.slack_stripped ? "stripped" : "unspecified exponent") << "\n";
  if (rep.infinity_bound)
    out << "bound at infinity: " << rep.infinity_bound->str() << "\n";
  out << "combined bound: " << factored_str(rep.combined_bound);
  if (rep.combined_bound.is_one()) out << "; pi_n \xE2\x8A\x97 Q = 0";
  out << "\n";
  out << "vanishing: " << to_string(status) << "\n";
  for (const auto& n : rep.notes) out << "  - " << n << "\n";
  if (crit.contains("nodal_cuspidal")) {
    const json& nc = crit["nodal_cuspidal"];
    out << "nodal-cuspidal criterion (4*delta + 6*kappa < d^2): "
        << (nc["abelian"].get<bool>() ? "abelian" : "inconclusive") << "\n";
  }
  if (crit.contains("char_pair")) {
    const json& cp = crit["char_pair"];
    out << "characteristic-pair criterion (d^2 > m*k): "
        << (cp["abelian"].get<bool>() ? "abelian (caveat noted)"
                                      : "inconclusive")
        << "\n";
  }
  return out.str();
}

std::string run_certify(const std::string& path, bool assert_ample,
                        bool assert_h, const std::string& p_inf,
                        const Options& opt) {
  GlobalHypersurface h = hypersurface_from_json(read_json_file(path));
  if (assert_ample) h.asserts_ample_resolution = true;
  if (assert_h) h.asserts_h_vanishing = true;
  if (!p_inf.empty()) h.infinity_poly = LaurentPoly::parse(p_inf);
  return certify_output(h, opt);
}

int run_certify_batch(const std::string& dir, bool assert_ample, bool assert_h,
                      const std::string& p_inf, const Options& opt) {
  if (!fs::is_directory(dir))
    throw ValidationError("--batch expects a directory: " + dir);
  std::vector<fs::path> inputs;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    fs::path p = entry.path();
    if (p.extension() != ".json") continue;
    if (p.stem().string().ends_with(".report")) continue;
    inputs.push_back(p);
  }
  std::sort(inputs.begin(), inputs.end());
  int failures = 0;
  for (const fs::path& p : inputs) {
    try {
      Options json_opt;
      json_opt.format = "json";
      std::string content =
          run_certify(p.string(), assert_ample, assert_h, p_inf,
                      opt.json_mode() ? opt : json_opt);
      fs::path out = p;
      out.replace_extension();
      out += ".report.json";
      write_file_atomic(out, content);
      std::cout << "ok " << p.string() << " -> " << out.string() << "\n";
    } catch (const std::exception& e) {
      std::cout << "error " << p.string() << ": " << e.what() << "\n";
      ++failures;
    }
  }
  return failures == 0 ? 0 : 2;
}

std::string run_covariants(const std::string& path, long degree,
                           const Options& opt) {
  CycModule m = module_from_json(read_json_file(path));
  CycModule q = projective_from_affine(m, degree);
  if (opt.json_mode()) return dump_json(module_to_json(q));
  return "module: " + module_text(q) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Alexander-type invariants of singular hypersurface "
               "complements"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string exponents, input_path, second_path, p_inf;
  long n_flag = 0, deg_a = 0, deg_b = 0, degree = 1;
  bool generic = false, assert_ample = false, assert_h = false, batch = false;

  CLI::App* charpoly =
      app.add_subcommand("charpoly", "monodromy polynomial of a Brieskorn point");
  charpoly->add_option("exponents", exponents, "comma-separated, e.g. 2,3")
      ->required();

  CLI::App* family = app.add_subcommand(
      "family", "hypersurface family from a sum of powers of generic forms");
  family->add_option("exponents", exponents, "comma-separated, e.g. 2,3")
      ->required();
  CLI::Option* n_opt =
      family->add_option("--n", n_flag, "expected ambient dimension minus one");

  CLI::App* join = app.add_subcommand("join", "join of two module files");
  join->add_option("a", input_path, "first module JSON file")->required();
  join->add_option("b", second_path, "second module JSON file")->required();
  CLI::Option* da_opt = join->add_option("--degree-a", deg_a, "degree of the first input");
  CLI::Option* db_opt = join->add_option("--degree-b", deg_b, "degree of the second input");

  CLI::App* pencil = app.add_subcommand("pencil", "assemble a pencil input file");
  pencil->add_option("input", input_path, "pencil JSON file")->required();
  pencil->add_flag("--generic", generic, "require matrix-mode input");

  CLI::App* certify = app.add_subcommand("certify", "divisibility and vanishing certificates");
  certify->add_option("input", input_path, "hypersurface JSON file or directory with --batch")
      ->required();
  certify->add_flag("--assert-ample", assert_ample,
                    "assert an ample resolution with normal crossings");
  certify->add_flag("--assert-h-vanishing", assert_h,
                    "assert vanishing relative cohomology at infinity");
  certify->add_option("--p-infinity", p_inf, "polynomial bound at infinity");
  certify->add_flag("--batch", batch, "process every .json file in a directory");

  CLI::App* covariants =
      app.add_subcommand("covariants", "projective module from the affine one");
  covariants->add_option("module", input_path, "module JSON file")->required();
  covariants->add_option("--degree", degree, "degree d of t^d - 1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    std::string out;
    if (charpoly->parsed()) {
      out = run_charpoly(exponents, opt);
    } else if (family->parsed()) {
      out = run_family(exponents, n_flag, n_opt->count() > 0, opt);
    } else if (join->parsed()) {
      out = run_join(input_path, second_path, deg_a, da_opt->count() > 0,
                     deg_b, db_opt->count() > 0, opt);
    } else if (pencil->parsed()) {
      out = run_pencil(input_path, generic, opt);
    } else if (certify->parsed()) {
      if (batch)
        return run_certify_batch(input_path, assert_ample, assert_h, p_inf, opt);
      out = run_certify(input_path, assert_ample, assert_h, p_inf, opt);
    } else if (covariants->parsed()) {
      out = run_covariants(input_path, degree, opt);
    }
    std::cout << out;
    return 0;
  } catch (const ValidationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
