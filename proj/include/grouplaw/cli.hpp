#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grouplaw/detect.hpp"
#include "grouplaw/groupspec.hpp"
#include "grouplaw/pipeline.hpp"
#include "grouplaw/presentation.hpp"

namespace grouplaw {
namespace cli {

using json = nlohmann::ordered_json;

namespace detail {

// Input problems (bad file, bad token) exit 2; failed checks exit 1.
struct UsageError : Error {
  using Error::Error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Strategy parse_strategy(const std::string& text) {
  if (text == "auto") return Auto{};
  if (text == "structural") return Structural{};
  if (text.rfind("exhaustive:", 0) == 0) {
    const std::string num = text.substr(11);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("bad exhaustive budget '" + num + "'");
    return Exhaustive{std::stoull(num)};
  }
  throw UsageError("unknown strategy '" + text +
                   "' (want auto, structural, or exhaustive:<budget>)");
}

inline std::string orders_line(const std::vector<Subgroup>& series) {
  std::string s;
  for (const Subgroup& part : series) {
    if (!s.empty()) s += " ";
    s += std::to_string(part.order());
  }
  return s;
}

inline json orders_json(const std::vector<Subgroup>& series) {
  json arr = json::array();
  for (const Subgroup& part : series) arr.push_back(part.order());
  return arr;
}

inline std::string witness_line(const std::vector<Elem>& tuple) {
  std::string s;
  for (const Elem& e : tuple) {
    if (!s.empty()) s += " ";
    s += elem_str(e);
  }
  return s;
}

// ------------------------------------------------------------- subcommands

inline int cmd_construct(const std::string& spec, bool as_json,
                         std::ostream& out) {
  Group g = parse_group_spec(spec);
  std::vector<Subgroup> ds = derived_series(g);
  std::vector<Subgroup> lcs = lower_central_series(g);
  bool abelian = ds.size() == 1 || ds[1].order() == 1;
  bool solvable = ds.back().order() == 1;
  bool nilpotent = lcs.back().order() == 1;
  if (as_json) {
    json j;
    j["command"] = "construct";
    j["group"] = g.descriptor();
    j["order"] = g.order();
    j["abelian"] = abelian;
    j["solvable"] = solvable;
    j["derived_length"] =
        solvable ? json(ds.size() - 1) : json(nullptr);
    j["derived_series_orders"] = orders_json(ds);
    j["nilpotent"] = nilpotent;
    j["nilpotency_class"] =
        nilpotent ? json(lcs.size() - 1) : json(nullptr);
    j["lower_central_series_orders"] = orders_json(lcs);
    j["exponent"] = exponent(g);
    j["center_order"] = center(g).order();
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "group: " << g.descriptor() << "\n";
  out << "order: " << g.order() << "\n";
  out << "abelian: " << (abelian ? "yes" : "no") << "\n";
  out << "solvable: " << (solvable ? "yes" : "no") << "\n";
  if (solvable) out << "derived length: " << ds.size() - 1 << "\n";
  out << "derived series orders: " << orders_line(ds) << "\n";
  out << "nilpotent: " << (nilpotent ? "yes" : "no") << "\n";
  if (nilpotent) out << "nilpotency class: " << lcs.size() - 1 << "\n";
  out << "lower central series orders: " << orders_line(lcs) << "\n";
  out << "exponent: " << exponent(g) << "\n";
  out << "center order: " << center(g).order() << "\n";
  return 0;
}

inline int cmd_power(const std::string& spec, int64_t m, bool as_json,
                     std::ostream& out) {
  Group g = parse_group_spec(spec);
  Subgroup p = power_subgroup(g, m);
  Group pg = p.as_group();
  std::vector<Subgroup> ds = derived_series(pg);
  bool solvable = ds.back().order() == 1;
  if (as_json) {
    json j;
    j["command"] = "power";
    j["group"] = g.descriptor();
    j["order"] = g.order();
    j["m"] = m;
    j["power_subgroup_order"] = p.order();
    j["index"] = g.order() / p.order();
    j["normal"] = is_normal(g, p);
    j["derived_length"] = solvable ? json(ds.size() - 1) : json(nullptr);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "group: " << g.descriptor() << "\n";
  out << "order: " << g.order() << "\n";
  out << "m: " << m << "\n";
  out << "power subgroup order: " << p.order() << "\n";
  out << "index: " << g.order() / p.order() << "\n";
  out << "normal: " << (is_normal(g, p) ? "yes" : "no") << "\n";
  if (solvable) out << "derived length: " << ds.size() - 1 << "\n";
  return 0;
}

inline int cmd_law_check(const std::string& spec, const std::string& law_text,
                         const std::string& strategy_text, bool as_json,
                         std::ostream& out) {
  Group g = parse_group_spec(spec);
  Law law = parse_law(law_text);
  SatisfactionResult r = satisfies(g, law, parse_strategy(strategy_text));
  if (as_json) {
    json j;
    j["command"] = "law-check";
    j["group"] = g.descriptor();
    j["law"] = print_law(law);
    j["strategy"] = r.strategy;
    j["verdict"] = verdict_str(r.verdict);
    j["witness"] = json::array();
    for (const Elem& e : r.witness) j["witness"].push_back(elem_str(e));
    j["tuples_examined"] = r.tuples_examined;
    out << j.dump(2) << "\n";
  } else {
    out << "group: " << g.descriptor() << "\n";
    out << "law: " << print_law(law) << "\n";
    out << "strategy: " << r.strategy << "\n";
    out << "verdict: " << verdict_str(r.verdict) << "\n";
    if (!r.witness.empty())
      out << "witness: " << witness_line(r.witness) << "\n";
    out << "tuples examined: " << r.tuples_examined << "\n";
  }
  return r.verdict == Verdict::Holds ? 0 : 1;
}

inline int cmd_detect(const std::string& spec, const std::string& law_text,
                      int64_t m, int64_t n, bool as_json, std::ostream& out) {
  Group g = parse_group_spec(spec);
  Law law = parse_law(law_text);
  DetectReport r = detect_report(g, law, m, n);
  bool agree = (r.in_g.verdict == Verdict::Holds) ==
               (r.in_m.verdict == Verdict::Holds &&
                r.in_n.verdict == Verdict::Holds);
  if (as_json) {
    json j;
    j["command"] = "detect";
    j["group"] = r.group;
    j["law"] = r.law;
    j["m"] = r.m;
    j["n"] = r.n;
    j["order_G"] = r.order_g;
    j["order_m"] = r.order_m;
    j["order_n"] = r.order_n;
    j["in_m"] = verdict_str(r.in_m.verdict);
    j["in_n"] = verdict_str(r.in_n.verdict);
    j["in_G"] = verdict_str(r.in_g.verdict);
    j["whole_matches_power_subgroups"] = agree;
    j["warning"] = r.warning;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "group: " << r.group << "\n";
  out << "law: " << r.law << "\n";
  out << "m: " << r.m << "  n: " << r.n << "\n";
  if (!r.warning.empty()) out << "warning: " << r.warning << "\n";
  out << "|G|: " << r.order_g << "  |G^*" << r.m << "|: " << r.order_m
      << "  |G^*" << r.n << "|: " << r.order_n << "\n";
  out << "in G^*" << r.m << ": " << verdict_str(r.in_m.verdict) << "\n";
  out << "in G^*" << r.n << ": " << verdict_str(r.in_n.verdict) << "\n";
  out << "in G: " << verdict_str(r.in_g.verdict) << "\n";
  out << "whole-group verdict equals power-subgroup conjunction: "
      << (agree ? "yes" : "no") << "\n";
  return 0;
}

inline int cmd_certify(const std::string& pres_path,
                       const std::string& cert_path, bool as_json,
                       std::ostream& out) {
  Presentation pres = parse_presentation_text(read_file(pres_path));
  auto [target, cert] = parse_certificate_text(read_file(cert_path),
                                               pres.alphabet);
  CheckResult r = check_certificate(pres, target, cert);
  if (as_json) {
    json j;
    j["command"] = "certify";
    j["letters"] = pres.alphabet.size();
    j["relators"] = pres.relators.size();
    j["target"] = free_word_str(target, pres.alphabet);
    j["steps"] = cert.steps.size();
    j["valid"] = r.valid;
    j["failed_step"] = r.valid ? json(nullptr) : json(r.step);
    j["reason"] = r.reason;
    out << j.dump(2) << "\n";
  } else {
    out << "presentation: " << pres.alphabet.size() << " letters, "
        << pres.relators.size() << " relators\n";
    out << "target: " << free_word_str(target, pres.alphabet) << "\n";
    out << "steps: " << cert.steps.size() << "\n";
    if (r.valid)
      out << "valid\n";
    else
      out << "invalid at step " << r.step << ": " << r.reason << "\n";
  }
  return r.valid ? 0 : 1;
}

inline int cmd_trace_check(const std::string& trace_path, bool as_json,
                           std::ostream& out) {
  ParsedTrace pt = parse_trace_text(read_file(trace_path));
  CheckResult r = check_trace(pt.pres, pt.trace);
  if (as_json) {
    json j;
    j["command"] = "trace-check";
    j["letters"] = pt.pres.alphabet.size();
    j["relators"] = pt.pres.relators.size();
    j["start"] = free_word_str(pt.trace.start, pt.pres.alphabet);
    j["end"] = free_word_str(pt.trace.end, pt.pres.alphabet);
    j["steps"] = pt.trace.steps.size();
    j["valid"] = r.valid;
    j["failed_step"] = r.valid ? json(nullptr) : json(r.step);
    j["reason"] = r.reason;
    out << j.dump(2) << "\n";
  } else {
    out << "presentation: " << pt.pres.alphabet.size() << " letters, "
        << pt.pres.relators.size() << " relators\n";
    out << "start: " << free_word_str(pt.trace.start, pt.pres.alphabet) << "\n";
    out << "end: " << free_word_str(pt.trace.end, pt.pres.alphabet) << "\n";
    out << "steps: " << pt.trace.steps.size() << "\n";
    if (r.valid)
      out << "valid\n";
    else
      out << "invalid at step " << r.step << ": " << r.reason << "\n";
  }
  return r.valid ? 0 : 1;
}

inline int cmd_its_abelian(int64_t m, int64_t n, bool as_json,
                           std::ostream& out) {
  PipelineReport rep = its_abelian_pipeline(m, n);
  if (as_json) {
    json j;
    j["command"] = "its-abelian";
    j["m"] = rep.m;
    j["n"] = rep.n;
    j["stages"] = json::array();
    for (const StageReport& s : rep.stages) {
      json stage;
      stage["name"] = s.name;
      stage["passed"] = s.passed;
      stage["detail"] = s.detail;
      j["stages"].push_back(stage);
    }
    j["all_passed"] = rep.all_passed;
    out << j.dump(2) << "\n";
  } else {
    out << "m: " << rep.m << "  n: " << rep.n << "\n";
    for (const StageReport& s : rep.stages)
      out << "stage " << s.name << ": " << (s.passed ? "pass" : "FAIL") << " ("
          << s.detail << ")\n";
    out << "result: " << (rep.all_passed ? "pass" : "FAIL") << "\n";
  }
  return rep.all_passed ? 0 : 1;
}

inline int cmd_search_1458(const std::string& mode, unsigned threads,
                           bool as_json, std::ostream& out) {
  SearchMode sm =
      mode == "descended" ? SearchMode::Descended : SearchMode::Full;
  std::optional<Group> found = search_counterexample_1458(sm, threads);
  if (!found) {
    if (as_json) {
      json j;
      j["command"] = "search-1458";
      j["mode"] = mode;
      j["found"] = false;
      out << j.dump(2) << "\n";
    } else {
      out << "mode: " << mode << "\n";
      out << "no group found\n";
    }
    return 1;
  }
  Group g = *found;
  Group p2 = power_subgroup(g, 2).as_group();
  Group p3 = power_subgroup(g, 3).as_group();
  if (as_json) {
    json j;
    j["command"] = "search-1458";
    j["mode"] = mode;
    j["found"] = true;
    j["order"] = g.order();
    j["derived_length"] = derived_length(g);
    j["power2_order"] = p2.order();
    j["power2_derived_length"] = derived_length(p2);
    j["power3_order"] = p3.order();
    j["power3_derived_length"] = derived_length(p3);
    out << j.dump(2) << "\n";
  } else {
    out << "mode: " << mode << "\n";
    out << "found group of order " << g.order() << "\n";
    out << "derived length: " << derived_length(g) << "\n";
    out << "|G^*2|: " << p2.order() << " (derived length "
        << derived_length(p2) << ")\n";
    out << "|G^*3|: " << p3.order() << " (derived length "
        << derived_length(p3) << ")\n";
  }
  return 0;
}

inline int cmd_truncation_witness(int64_t m, int64_t n, int bound,
                                  bool as_json, std::ostream& out) {
  try {
    TruncationWitness w = truncation_witness(m, n, bound);
    bool abelian =
        satisfies(w.group, parse_law("[x,y]")).verdict == Verdict::Holds;
    if (as_json) {
      json j;
      j["command"] = "truncation-witness";
      j["m"] = m;
      j["n"] = n;
      j["degree_bound"] = bound;
      j["found"] = true;
      j["order"] = w.group.order();
      j["a"] = elem_str(w.a);
      j["b"] = elem_str(w.b);
      j["order_a"] = order_of(w.group, w.a);
      j["order_b"] = order_of(w.group, w.b);
      j["order_ab"] = order_of(w.group, w.group.mul(w.a, w.b));
      j["abelian"] = abelian;
      out << j.dump(2) << "\n";
    } else {
      out << "m: " << m << "  n: " << n << "  degree bound: " << bound << "\n";
      out << "witness group order: " << w.group.order() << "\n";
      out << "a: " << elem_str(w.a) << " (order " << order_of(w.group, w.a)
          << ")\n";
      out << "b: " << elem_str(w.b) << " (order " << order_of(w.group, w.b)
          << ")\n";
      out << "ab order: " << order_of(w.group, w.group.mul(w.a, w.b)) << "\n";
      out << "abelian: " << (abelian ? "yes" : "no") << "\n";
    }
    return 0;
  } catch (const SearchExhaustedError& e) {
    if (as_json) {
      json j;
      j["command"] = "truncation-witness";
      j["m"] = m;
      j["n"] = n;
      j["degree_bound"] = bound;
      j["found"] = false;
      out << j.dump(2) << "\n";
    } else {
      out << "search exhausted: " << e.what() << "\n";
    }
    return 1;
  }
}

inline int cmd_verify_paper(std::vector<std::string> only, bool as_json,
                            std::ostream& out) {
  const auto& names = paper_check_names();
  if (only.empty()) only = names;
  for (const std::string& s : only)
    if (std::find(names.begin(), names.end(), s) == names.end())
      throw UsageError("unknown check '" + s + "'");
  ReportTable table = verify_paper(only);
  if (as_json) {
    json arr = json::array();
    for (const ReportRow& r : table.rows) {
      json row;
      row["name"] = r.name;
      row["status"] = r.passed ? "pass" : "fail";
      row["expected"] = r.expected;
      row["actual"] = r.actual;
      row["millis"] = r.millis;
      arr.push_back(row);
    }
    out << arr.dump(2) << "\n";
  } else {
    for (const ReportRow& r : table.rows) {
      out << (r.passed ? "pass" : "FAIL") << "  " << r.name << " ("
          << r.millis << " ms)\n";
      out << "      expected: " << r.expected << "\n";
      out << "      actual:   " << r.actual << "\n";
    }
    out << (table.all_passed() ? "all checks passed" : "some checks FAILED")
        << " (" << table.rows.size() << " run)\n";
  }
  return table.all_passed() ? 0 : 1;
}

inline unsigned default_parallelism() {
  if (const char* env = std::getenv("GROUPLAW_PARALLEL")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

}  // namespace detail

// Full command surface; returns the process exit code (0 pass, 1 a check
// failed, 2 usage or parse problem).
inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"finite-group law and power-subgroup toolkit"};
  app.name("grouplaw");
  app.require_subcommand(1);

  std::string spec, law_text, strategy_text = "auto";
  std::string pres_path, cert_path, trace_path;
  std::string mode = "full";
  std::vector<std::string> only;
  int64_t m = 0, n = 0;
  int bound = 0;
  unsigned threads = detail::default_parallelism();
  bool as_json = false;

  auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", as_json, "emit JSON instead of text");
  };

  CLI::App* construct = app.add_subcommand("construct", "build a group and summarize it");
  construct->add_option("spec", spec, "group spec, e.g. Z(9) or hol(7)")->required();
  add_json(construct);

  CLI::App* power = app.add_subcommand("power", "compute the power subgroup G^*m");
  power->add_option("spec", spec)->required();
  power->add_option("--m", m, "power exponent")->required()->check(CLI::PositiveNumber);
  add_json(power);

  CLI::App* law_check = app.add_subcommand("law-check", "decide whether a law holds");
  law_check->add_option("spec", spec)->required();
  law_check->add_option("--law", law_text, "law text, e.g. [x,y]")->required();
  law_check->add_option("--strategy", strategy_text,
                        "auto, structural, or exhaustive:<budget>");
  add_json(law_check);

  CLI::App* detect = app.add_subcommand("detect", "law verdicts on G and two power subgroups");
  detect->add_option("spec", spec)->required();
  detect->add_option("--law", law_text)->required();
  detect->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  detect->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  add_json(detect);

  CLI::App* certify = app.add_subcommand("certify", "check a normal-closure certificate");
  certify->add_option("presentation", pres_path, "presentation file")->required();
  certify->add_option("certificate", cert_path, "certificate file")->required();
  add_json(certify);

  CLI::App* trace_check = app.add_subcommand("trace-check", "replay a derivation trace");
  trace_check->add_option("trace", trace_path, "trace file")->required();
  add_json(trace_check);

  CLI::App* its_abelian = app.add_subcommand(
      "its-abelian", "machine check that the six-relator group is Z x Z");
  its_abelian->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  its_abelian->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  add_json(its_abelian);

  CLI::App* search = app.add_subcommand(
      "search-1458", "find the order-1458 group with metabelian power subgroups");
  search->add_option("--mode", mode)->check(CLI::IsMember({"full", "descended"}));
  search->add_option("--parallel", threads, "worker count")->check(CLI::PositiveNumber);
  add_json(search);

  CLI::App* trunc = app.add_subcommand(
      "truncation-witness", "search symmetric groups for the order witness");
  trunc->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  trunc->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  trunc->add_option("--bound", bound, "max symmetric-group degree")
      ->required()
      ->check(CLI::PositiveNumber);
  add_json(trunc);

  CLI::App* verify = app.add_subcommand("verify-paper", "run the named check suite");
  verify->add_option("--only", only, "comma-separated check names")->delimiter(',');
  add_json(verify);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::RequiredError& e) {
    std::vector<std::string> extra = app.remaining();
    if (!extra.empty())
      err << "error: unknown subcommand '" << extra.front() << "'\n";
    else
      err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (construct->parsed()) return detail::cmd_construct(spec, as_json, out);
    if (power->parsed()) return detail::cmd_power(spec, m, as_json, out);
    if (law_check->parsed())
      return detail::cmd_law_check(spec, law_text, strategy_text, as_json, out);
    if (detect->parsed())
      return detail::cmd_detect(spec, law_text, m, n, as_json, out);
    if (certify->parsed())
      return detail::cmd_certify(pres_path, cert_path, as_json, out);
    if (trace_check->parsed())
      return detail::cmd_trace_check(trace_path, as_json, out);
    if (its_abelian->parsed()) return detail::cmd_its_abelian(m, n, as_json, out);
    if (search->parsed())
      return detail::cmd_search_1458(mode, threads, as_json, out);
    if (trunc->parsed())
      return detail::cmd_truncation_witness(m, n, bound, as_json, out);
    if (verify->parsed()) return detail::cmd_verify_paper(only, as_json, out);
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotCoprimeError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace cli
}  // namespace grouplaw
