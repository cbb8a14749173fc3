// vglab: validate, enumerate and verify quantale-enriched group structures.
//
// Exit codes: 0 success, 1 validation or suite failure, 2 usage/parse error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vglab/error.hpp"
#include "vglab/json_io.hpp"
#include "vglab/laws.hpp"
#include "vglab/quantale.hpp"
#include "vglab/vgroup.hpp"

namespace {

using namespace vglab;

struct Options {
  std::vector<std::string> files;
  std::string format = "text";
  std::string quantale;
  std::string group;
  std::string mode = "all";
  std::vector<std::string> suites;
  std::size_t bound = 100000;
  unsigned jobs = 1;
};

Quantale quantale_from_flag_or(const Options& opt, const json& j) {
  if (j.contains("quantale"))
    return make_quantale(quantale_spec_from_json(j["quantale"]));
  if (!opt.quantale.empty())
    return make_quantale(QuantaleSpec::parse(opt.quantale));
  throw ParseError("no quantale: pass --quantale or embed a \"quantale\" field");
}

int cmd_check(const Options& opt) {
  bool all_ok = true;
  for (const std::string& path : opt.files) {
    json j = parse_json_file(path);
    json out;
    out["file"] = path;
    bool ok = true;
    std::string verdict;
    try {
      if (j.contains("delta")) {
        VGroup x = vgroup_from_json(j);
        verdict = "valid V-group, " +
                  std::string(is_symmetric_vgroup(x) ? "symmetric"
                                                     : "non-symmetric");
        out["object"] = "vgroup";
        out["symmetric"] = is_symmetric_vgroup(x);
        out["normalized"] = vgroup_to_json(x);
      } else if (j.contains("matrix")) {
        Quantale q = quantale_from_flag_or(opt, j);
        VRel rel = vrel_from_json(j, q);
        VCatReport rep = check_vcategory(rel);
        out["object"] = "vcategory";
        out["reflexive"] = rep.reflexive;
        out["transitive"] = rep.transitive;
        ok = rep.ok();
        verdict = ok ? "valid V-category"
                     : "not a V-category: " + (rep.reflexive
                                                   ? rep.transitivity_witness
                                                   : rep.reflexivity_witness);
        if (ok) out["normalized"] = vcategory_to_json(VCategory::make(rel));
      } else if (j.contains("map")) {
        VGroupHom h = vgroup_hom_from_json(j);
        out["object"] = "vgroup_hom";
        EpiMonoReport r = epi_mono_report(h);
        out["mono"] = r.mono;
        out["epi"] = r.epi;
        out["regular_mono"] = r.regular_mono;
        out["regular_epi"] = r.regular_epi;
        out["proper"] = r.proper;
        out["open"] = r.open;
        verdict = "valid V-group homomorphism";
      } else if (j.contains("kind")) {
        Quantale q = make_quantale(quantale_spec_from_json(j));
        LawReport rep = check_quantale_laws(q);
        out["object"] = "quantale";
        out["is_frame"] = q.is_frame();
        out["is_integral"] = q.is_integral();
        out["is_optimistic"] = q.is_optimistic();
        ok = rep.ok();
        verdict = ok ? "valid quantale (" + q.name() + ")"
                     : "quantale law failure: " + rep.witness;
      } else {
        throw ParseError("unrecognized input shape in '" + path + "'");
      }
    } catch (const ValidationError& e) {
      ok = false;
      verdict = e.what();
    }
    out["ok"] = ok;
    out["verdict"] = verdict;
    all_ok = all_ok && ok;
    if (opt.format == "json")
      std::cout << out.dump() << "\n";
    else
      std::cout << path << ": " << verdict << "\n";
  }
  return all_ok ? 0 : 1;
}

int cmd_enumerate(const Options& opt) {
  if (opt.group.empty() || opt.quantale.empty())
    throw ParseError("enumerate needs --group and --quantale");
  FiniteGroup g = parse_group_spec(opt.group);
  Quantale q = make_quantale(QuantaleSpec::parse(opt.quantale));
  if (!q.is_finite())
    throw ValidationError("enumerate needs a finite quantale, got " + q.name());
  std::vector<VGroup> all = enumerate_vgroup_structures(g, q, opt.bound);
  std::size_t symmetric = 0;
  for (const VGroup& x : all)
    if (is_symmetric_vgroup(x)) ++symmetric;
  if (opt.format == "json") {
    json out;
    out["group"] = opt.group;
    out["quantale"] = q.name();
    out["count"] = all.size();
    out["symmetric"] = symmetric;
    out["asymmetric"] = all.size() - symmetric;
    json profiles = json::array();
    for (const VGroup& x : all) {
      json d = json::array();
      for (int u = 0; u < x.size(); ++u) d.push_back(q.format_elem(x.delta(u)));
      profiles.push_back(std::move(d));
    }
    out["profiles"] = std::move(profiles);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << all.size() << " compatible structures on " << opt.group
              << " over " << q.name() << " (" << symmetric << " symmetric, "
              << (all.size() - symmetric) << " asymmetric)\n";
    for (const VGroup& x : all) {
      std::cout << "  delta = (";
      for (int u = 0; u < x.size(); ++u) {
        if (u) std::cout << ", ";
        std::cout << q.format_elem(x.delta(u));
      }
      std::cout << ")" << (is_symmetric_vgroup(x) ? "" : "  [asymmetric]")
                << "\n";
    }
  }
  return 0;
}

json split_to_json(const SplitExtensionStructure& s, const Quantale& q) {
  json out;
  out["valid"] = s.valid;
  out["lemma_ok"] = s.lemma_ok;
  out["is_tensor"] = s.is_tensor;
  out["is_lex"] = s.is_lex;
  if (!s.witness.empty()) out["witness"] = s.witness;
  json d = json::array();
  for (const QElem& e : s.delta) d.push_back(q.format_elem(e));
  out["delta"] = std::move(d);
  return out;
}

void print_split(const SplitExtensionStructure& s, const Quantale& q,
                 const std::string& name) {
  std::cout << name << ": " << (s.valid ? "valid" : "invalid");
  if (!s.valid && !s.witness.empty()) std::cout << " (" << s.witness << ")";
  std::cout << "\n  delta = (";
  for (std::size_t i = 0; i < s.delta.size(); ++i) {
    if (i) std::cout << ", ";
    std::cout << q.format_elem(s.delta[i]);
  }
  std::cout << ")\n";
}

int cmd_semidirect(const Options& opt) {
  if (opt.files.size() != 1)
    throw ParseError("semidirect needs exactly one input file");
  SplitExtensionInput in = split_input_from_json(parse_json_file(opt.files[0]));
  const Quantale& q = in.kernel.quantale();
  bool ok = true;
  json out;
  if (opt.mode == "tensor" || opt.mode == "all") {
    auto s = semidirect_tensor(in.action, in.kernel, in.quotient);
    ok = ok && s.valid;
    if (opt.format == "json")
      out["tensor"] = split_to_json(s, q);
    else
      print_split(s, q, "tensor structure");
  }
  if (opt.mode == "lex" || opt.mode == "all") {
    auto s = semidirect_lex(in.action, in.kernel, in.quotient);
    ok = ok && s.valid;
    if (opt.format == "json")
      out["lex"] = split_to_json(s, q);
    else
      print_split(s, q, "lex structure");
  }
  if (opt.mode == "all") {
    auto all = enumerate_split_structures(in.action, in.kernel, in.quotient,
                                          opt.bound);
    if (opt.format == "json") {
      json list = json::array();
      for (const auto& s : all) list.push_back(split_to_json(s, q));
      out["structures"] = std::move(list);
    } else {
      std::cout << all.size() << " compatible split-extension structures\n";
      for (const auto& s : all)
        print_split(s, q,
                    std::string("  structure") +
                        (s.is_tensor ? " [tensor]" : "") +
                        (s.is_lex ? " [lex]" : ""));
    }
  }
  if (opt.format == "json") std::cout << out.dump() << "\n";
  return ok ? 0 : 1;
}

int cmd_verify(const Options& opt) {
  LawConfig config;
  if (!opt.quantale.empty()) config.quantales = {opt.quantale};
  config.jobs = opt.jobs;
  config.split_bound = opt.bound;
  config.structure_bound = opt.bound;
  if (const char* seed = std::getenv("VGLAB_SEED"))
    config.seed = std::strtoull(seed, nullptr, 10);
  std::vector<LawReport> reports;
  if (opt.suites.empty() ||
      (opt.suites.size() == 1 && opt.suites[0] == "all")) {
    reports = run_all(config);
  } else {
    for (const std::string& id : opt.suites)
      reports.push_back(run_suite(id, config));
  }
  bool ok = true;
  for (const LawReport& r : reports) {
    ok = ok && r.ok();
    if (opt.format == "json") {
      std::cout << law_report_to_json(r).dump() << "\n";
    } else {
      std::cout << (r.ok() ? "PASS" : "FAIL") << " " << r.id << " ("
                << r.passed << "/" << r.attempted << ", "
                << static_cast<long long>(r.duration_ms) << " ms): " << r.claim;
      if (!r.ok()) std::cout << "\n     witness: " << r.witness;
      std::cout << "\n";
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with quantale-enriched categories and "
               "groups on finite carriers"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* check = app.add_subcommand(
      "check", "validate quantale / V-category / V-group / hom files");
  check->add_option("files", opt.files, "input JSON files")->required();
  check->add_option("--quantale", opt.quantale, "quantale spec override");
  check->add_option("--format", opt.format, "text|json");

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "list all compatible profiles on a group");
  enumerate->add_option("--group", opt.group, "group spec, e.g. cyclic:3")
      ->required();
  enumerate->add_option("--quantale", opt.quantale, "finite quantale spec")
      ->required();
  enumerate->add_option("--bound", opt.bound, "search-space bound");
  enumerate->add_option("--format", opt.format, "text|json");

  CLI::App* semidirect = app.add_subcommand(
      "semidirect", "build and validate split-extension structures");
  semidirect->add_option("files", opt.files, "split-extension JSON file")
      ->required();
  semidirect->add_option("--mode", opt.mode, "tensor|lex|all");
  semidirect->add_option("--bound", opt.bound, "enumeration bound");
  semidirect->add_option("--format", opt.format, "text|json");

  CLI::App* verify = app.add_subcommand("verify", "run law suites");
  verify->add_option("suites", opt.suites, "suite ids (default: all)");
  verify->add_option("--quantale", opt.quantale, "restrict to one quantale");
  verify->add_option("--bound", opt.bound, "enumeration bound");
  verify->add_option("--jobs", opt.jobs, "parallelism degree");
  verify->add_option("--format", opt.format, "text|json");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(opt);
    if (enumerate->parsed()) return cmd_enumerate(opt);
    if (semidirect->parsed()) return cmd_semidirect(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const vglab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const vglab::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
