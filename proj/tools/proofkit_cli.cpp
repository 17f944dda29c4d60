/* Copyright 2026 The proofkit Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Batch front end over the proof toolkit: rule checking, translations
// between the calculi, cut elimination, and normalization, driven by the
// textual derivation formats. Exit status: 0 on success, 1 when a check or
// transformation fails, 2 on usage or parse errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "proofkit/errors.hpp"
#include "proofkit/proof_io.hpp"
#include "proofkit/reduce.hpp"
#include "proofkit/seq_check.hpp"
#include "proofkit/trace.hpp"
#include "proofkit/transform.hpp"

namespace {

using nlohmann::json;
using namespace proofkit;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct Output {
  bool as_json = false;
  json object = json::object();

  void put(const std::string& key, const std::string& value) {
    object[key] = value;
    if (!as_json) std::cout << key << ": " << value << "\n";
  }
  void put(const std::string& key, bool value) {
    object[key] = value;
    if (!as_json) std::cout << key << ": " << (value ? "true" : "false") << "\n";
  }
  void put(const std::string& key, std::uint64_t value) {
    object[key] = value;
    if (!as_json) std::cout << key << ": " << value << "\n";
  }
  void violations(const CheckReport& report) {
    json list = json::array();
    for (const auto& [path, msg] : report.violations) {
      list.push_back({{"path", path.empty() ? "root" : path}, {"message", msg}});
      if (!as_json)
        std::cout << "violation: [" << (path.empty() ? "root" : path) << "] " << msg << "\n";
    }
    object["violations"] = list;
  }
  void flush() {
    if (as_json) std::cout << object.dump(2) << "\n";
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SyntaxError("cannot open file '" + path + "'", 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ProofError("cannot write file '" + out_path + "'");
  out << text;
}

std::size_t default_fuel() {
  if (const char* env = std::getenv("PROOFKIT_FUEL")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultFuel;
}

CheckReport run_check(const std::string& calculus, const std::string& text) {
  if (calculus == "nd") return check_nd(parse_nd_derivation(text));
  SeqDerivation d = parse_seq_derivation(text);
  return calculus == "lt" ? check_lt(d) : check_slt(d);
}

json reduction_trace_json(const ReductionTrace& trace) {
  json steps = json::array();
  std::size_t n = 0;
  for (const auto& step : trace.steps) {
    steps.push_back({{"step", ++n},
                     {"case_id", step.redex.case_id},
                     {"path", nd_path_str(step.redex.path)},
                     {"derivation", print_nd_derivation(step.after)}});
  }
  return steps;
}

json cutelim_trace_json(const CutElimTrace& trace) {
  json steps = json::array();
  for (const auto& step : trace.steps)
    steps.push_back({{"step", step.step}, {"kind", step.kind}, {"detail", step.detail}});
  return steps;
}

int cmd_check(const std::string& calculus, const std::string& file, bool as_json) {
  Output out;
  out.as_json = as_json;
  CheckReport report = run_check(calculus, read_file(file));
  out.put("ok", report.ok());
  out.put("cuts", static_cast<std::uint64_t>(report.cut_count));
  out.put("omega", report.uses_omega);
  out.violations(report);
  out.flush();
  return report.ok() ? kOk : kFailure;
}

int cmd_translate(const std::string& from, const std::string& to, const std::string& file,
                  const std::string& out_path, bool as_json) {
  Output out;
  out.as_json = as_json;
  std::string text = read_file(file);
  std::string rendered;
  std::string end_desc;
  if (from == "nd" && to == "slt") {
    SeqDerivation result = nlt_to_slt(parse_nd_derivation(text));
    if (!check_slt(result).ok()) throw ProofError("translated derivation fails its checker");
    rendered = print_seq_derivation(result);
    end_desc = result.conclusion().str();
  } else if (from == "slt" && to == "nd") {
    NdDerivation result = slt_cutfree_to_nd_normal(parse_seq_derivation(text));
    if (!check_nd(result).ok()) throw ProofError("translated derivation fails its checker");
    rendered = print_nd_derivation(result);
    end_desc = end_formula(result).debug_str();
  } else if (from == "lt" && to == "slt") {
    SeqDerivation result = lt_cutfree_to_slt_cutfree(parse_seq_derivation(text));
    if (!check_slt(result).ok()) throw ProofError("translated derivation fails its checker");
    rendered = print_seq_derivation(result);
    end_desc = result.conclusion().str();
  } else if (from == "slt" && to == "lt") {
    SeqDerivation result = slt_to_lt(parse_seq_derivation(text));
    if (!check_lt(result).ok()) throw ProofError("translated derivation fails its checker");
    rendered = print_seq_derivation(result);
    end_desc = result.conclusion().str();
  } else {
    std::cerr << "error: unsupported direction " << from << " -> " << to << "\n";
    return kUsage;
  }
  out.put("ok", true);
  out.put("end", end_desc);
  out.object["derivation"] = rendered;
  out.flush();
  write_output(out_path, as_json ? "" : rendered);
  return kOk;
}

int cmd_cutelim(const std::string& calculus, const std::string& file, std::size_t fuel,
                const std::string& out_path, const std::string& trace_path, bool as_json) {
  Output out;
  out.as_json = as_json;
  SeqDerivation d = parse_seq_derivation(read_file(file));
  CutElimTrace trace;
  SeqDerivation result = calculus == "lt" ? cut_eliminate_lt(d, fuel, &trace)
                                          : cut_eliminate_slt(d, fuel, &trace);
  CheckReport report = calculus == "lt" ? check_lt(result) : check_slt(result);
  if (!report.ok()) throw ProofError("cut elimination produced an unchecked derivation");
  out.put("ok", true);
  out.put("cuts-before", static_cast<std::uint64_t>(d.cut_count()));
  out.put("cuts-after", static_cast<std::uint64_t>(result.cut_count()));
  out.put("steps", static_cast<std::uint64_t>(trace.steps.size()));
  std::string rendered = print_seq_derivation(result);
  out.object["derivation"] = rendered;
  out.flush();
  if (!trace_path.empty()) write_output(trace_path, cutelim_trace_json(trace).dump(2) + "\n");
  write_output(out_path, as_json ? "" : rendered);
  return kOk;
}

int cmd_normalize(const std::string& mode, const std::string& file, std::size_t fuel,
                  const std::string& out_path, const std::string& trace_path, bool as_json) {
  Output out;
  out.as_json = as_json;
  NdDerivation d = parse_nd_derivation(read_file(file));
  NdDerivation result;
  if (mode == "indirect") {
    result = normalize_indirect(d, fuel);
    if (!trace_path.empty()) write_output(trace_path, "[]\n");
  } else {
    ReductionTrace trace = reduce_to_normal(d, fuel);
    if (!trace_path.empty())
      write_output(trace_path, reduction_trace_json(trace).dump(2) + "\n");
    if (!trace.terminated_normal) {
      out.put("ok", false);
      out.put("normal", false);
      out.put("steps", static_cast<std::uint64_t>(trace.steps.size()));
      out.flush();
      return kFailure;
    }
    result = trace.steps.empty() ? d : trace.steps.back().after;
    out.put("steps", static_cast<std::uint64_t>(trace.steps.size()));
  }
  if (!check_nd(result).ok() || !is_normal(result))
    throw ProofError("normalization produced a non-normal or unchecked derivation");
  out.put("ok", true);
  out.put("normal", true);
  out.put("end", end_formula(result).debug_str());
  std::string rendered = print_nd_derivation(result);
  out.object["derivation"] = rendered;
  out.flush();
  write_output(out_path, as_json ? "" : rendered);
  return kOk;
}

int cmd_reduce(const std::string& file, std::size_t steps, const std::string& out_path,
               const std::string& trace_path, bool as_json) {
  Output out;
  out.as_json = as_json;
  NdDerivation d = parse_nd_derivation(read_file(file));
  ReductionTrace trace = reduce_to_normal(d, steps);
  NdDerivation result = trace.steps.empty() ? d : trace.steps.back().after;
  out.put("ok", true);
  out.put("steps", static_cast<std::uint64_t>(trace.steps.size()));
  out.put("normal", trace.terminated_normal);
  std::string rendered = print_nd_derivation(result);
  out.object["derivation"] = rendered;
  out.flush();
  if (!trace_path.empty())
    write_output(trace_path, reduction_trace_json(trace).dump(2) + "\n");
  write_output(out_path, as_json ? "" : rendered);
  return kOk;
}

int cmd_identity(const std::string& formula_text, const std::string& index_text,
                 const std::string& calculus, const std::string& out_path, bool as_json) {
  Output out;
  out.as_json = as_json;
  Formula alpha = parse_formula(formula_text);
  IndexExpr index = IndexExpr::parse(index_text);
  Calculus calc = calculus == "lt" ? Calculus::Lt : Calculus::Slt;
  SeqDerivation d = derive_identity(alpha, index, {}, calc);
  CheckReport report = calc == Calculus::Lt ? check_lt(d) : check_slt(d);
  if (!report.ok()) throw ProofError("identity derivation fails its checker");
  out.put("ok", true);
  out.put("conclusion", d.conclusion().str());
  std::string rendered = print_seq_derivation(d);
  out.object["derivation"] = rendered;
  out.flush();
  write_output(out_path, as_json ? "" : rendered);
  return kOk;
}

int cmd_oracle(const std::string& formula_text, std::size_t max_lasso, bool as_json) {
  Output out;
  out.as_json = as_json;
  Formula f = parse_formula(formula_text);
  std::set<std::string> vars;
  f.collect_prop_vars(vars);
  std::vector<std::string> var_list(vars.begin(), vars.end());
  if (var_list.empty()) var_list.push_back("p");
  auto witness = find_falsifying_trace(f, var_list, max_lasso);
  out.put("formula", print_formula(f));
  out.put("max-lasso", static_cast<std::uint64_t>(max_lasso));
  out.put("valid", !witness.has_value());
  if (witness) out.put("counterexample", witness->str());
  out.flush();
  return witness ? kFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"proof toolkit for until-free temporal logic derivations"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit the report as JSON");

  std::string calculus, file, out_path, trace_path, from, to, mode, formula;
  std::string index = "0";
  std::size_t fuel = default_fuel();
  std::size_t steps = default_fuel();
  std::size_t max_lasso = 6;

  auto* check = app.add_subcommand("check", "check a derivation file against its calculus");
  check->add_option("--calculus", calculus, "lt, slt, or nd")
      ->required()
      ->check(CLI::IsMember({"lt", "slt", "nd"}));
  check->add_option("file", file, "derivation file")->required();

  auto* translate = app.add_subcommand("translate", "translate between the calculi");
  translate->add_option("--from", from)->required()->check(CLI::IsMember({"nd", "slt", "lt"}));
  translate->add_option("--to", to)->required()->check(CLI::IsMember({"nd", "slt", "lt"}));
  translate->add_option("file", file)->required();
  translate->add_option("--out", out_path, "write the result here instead of stdout");

  auto* cutelim = app.add_subcommand("cutelim", "eliminate cuts from a sequent derivation");
  cutelim->add_option("--calculus", calculus)->required()->check(CLI::IsMember({"lt", "slt"}));
  cutelim->add_option("--fuel", fuel, "rewrite step budget");
  cutelim->add_option("file", file)->required();
  cutelim->add_option("--out", out_path);
  cutelim->add_option("--emit-trace", trace_path, "write the step log as JSON");

  auto* normalize = app.add_subcommand("normalize", "normalize a natural deduction derivation");
  normalize->add_option("--mode", mode)->required()->check(CLI::IsMember({"direct", "indirect"}));
  normalize->add_option("--fuel", fuel);
  normalize->add_option("file", file)->required();
  normalize->add_option("--out", out_path);
  normalize->add_option("--emit-trace", trace_path);

  auto* reduce = app.add_subcommand("reduce", "apply reduction steps to a derivation");
  reduce->add_option("--steps", steps, "maximum number of steps");
  reduce->add_option("file", file)->required();
  reduce->add_option("--out", out_path);
  reduce->add_option("--emit-trace", trace_path);

  auto* identity = app.add_subcommand("identity", "derive X^i a, Gamma => X^i a");
  identity->add_option("--formula", formula)->required();
  identity->add_option("--index", index);
  identity->add_option("--calculus", calculus)->default_val("slt")
      ->check(CLI::IsMember({"lt", "slt"}));
  identity->add_option("--out", out_path);

  auto* oracle = app.add_subcommand("oracle", "evaluate a formula on all small lasso traces");
  oracle->add_option("--formula", formula)->required();
  oracle->add_option("--max-lasso", max_lasso, "bound on prefix+loop states");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(calculus, file, as_json);
    if (translate->parsed()) return cmd_translate(from, to, file, out_path, as_json);
    if (cutelim->parsed())
      return cmd_cutelim(calculus, file, fuel, out_path, trace_path, as_json);
    if (normalize->parsed())
      return cmd_normalize(mode, file, fuel, out_path, trace_path, as_json);
    if (reduce->parsed()) return cmd_reduce(file, steps, out_path, trace_path, as_json);
    if (identity->parsed()) return cmd_identity(formula, index, calculus, out_path, as_json);
    if (oracle->parsed()) return cmd_oracle(formula, max_lasso, as_json);
  } catch (const SyntaxError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const FuelExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const ProofError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
