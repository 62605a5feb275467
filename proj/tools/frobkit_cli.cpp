// frobkit — command-line front end.
//
// Subcommands: check, verify-claims, eval, split, embed, family, gb.
// Exit codes: 0 = verified/true, 1 = mathematically false, 2 = input or
// usage error, 3 = resource limit.  FROBKIT_BUDGET_SECONDS supplies the
// default wall-clock budget for Groebner-backed commands.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "frobkit.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kUsageError = 2;

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { frob_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct OwnedEndo {
  frob_endo* p = nullptr;
  OwnedEndo() = default;
  OwnedEndo(OwnedEndo&& o) noexcept : p(o.p) { o.p = nullptr; }
  OwnedEndo& operator=(OwnedEndo&& o) noexcept {
    if (this != &o) {
      frob_endo_free(p);
      p = o.p;
      o.p = nullptr;
    }
    return *this;
  }
  OwnedEndo(const OwnedEndo&) = delete;
  OwnedEndo& operator=(const OwnedEndo&) = delete;
  ~OwnedEndo() { frob_endo_free(p); }
};

int fail(const std::string& message, int code) {
  std::cerr << "frobkit: " << message << "\n";
  return code;
}

int fail_api(frob_status status, const std::string& context = "") {
  std::string message = frob_last_error();
  if (message.empty()) message = "unspecified error";
  if (!context.empty()) message = context + ": " + message;
  return fail(message, static_cast<int>(status));
}

std::optional<std::string> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << text;
  if (!out) return fail(out_path + ": cannot write output file", kUsageError);
  return 0;
}

/// --budget-seconds beats FROBKIT_BUDGET_SECONDS beats the library default.
/// Returns a usage error via `err` when the environment value is not a
/// positive number.
std::optional<double> resolve_budget(const std::optional<double>& flag,
                                     std::string& err) {
  if (flag) return *flag;
  if (const char* env = std::getenv("FROBKIT_BUDGET_SECONDS")) {
    try {
      std::size_t used = 0;
      double v = std::stod(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (...) {
    }
    err = std::string("FROBKIT_BUDGET_SECONDS must be a positive number, got \"") +
          env + "\"";
    return std::nullopt;
  }
  return 0;  // library default
}

// --- check ------------------------------------------------------------------

int run_check(const std::string& endo_path, const std::string& predicate,
              const std::string& lambda, bool json_mode,
              const std::string& out_path) {
  OwnedEndo endo;
  frob_status st = frob_endo_from_file(endo_path.c_str(), &endo.p);
  if (st != FROB_OK) return fail_api(st);

  OwnedString report;
  st = frob_endo_check(endo.p, predicate.c_str(),
                       lambda.empty() ? nullptr : lambda.c_str(), &report.p);
  if (st != FROB_OK && st != FROB_FALSE) return fail_api(st);

  std::ostringstream text;
  if (json_mode) {
    text << report.str();
  } else {
    Json rep = Json::parse(report.str());
    if (st == FROB_OK) {
      text << rep["predicate"].get<std::string>() << " holds";
      if (!rep["lambda"].is_null())
        text << " (lambda = " << rep["lambda"].get<std::string>() << ")";
      text << "\n";
    } else {
      text << rep["predicate"].get<std::string>() << " fails";
      std::string why;
      if (!rep["witness"].is_null())
        why = rep["witness"]["detail"].get<std::string>();
      else if (!rep["note"].get<std::string>().empty())
        why = rep["note"].get<std::string>();
      if (!why.empty()) text << ": " << why;
      text << "\n";
    }
  }
  if (int w = write_output(out_path, text.str())) return w;
  return static_cast<int>(st);
}

// --- verify-claims ----------------------------------------------------------

int run_verify_claims(int n, const std::string& claim,
                      const std::optional<double>& budget_flag, bool json_mode,
                      const std::string& out_path) {
  std::string err;
  auto budget = resolve_budget(budget_flag, err);
  if (!budget) return fail(err, kUsageError);

  OwnedString reports;
  frob_status st =
      frob_verify_claims(n, claim.c_str(), *budget, &reports.p);
  if (st == FROB_EINVAL || st == FROB_EINTERNAL) return fail_api(st);

  std::ostringstream text;
  if (json_mode) {
    text << reports.str();
  } else {
    Json arr = Json::parse(reports.str());
    for (const auto& rep : arr) {
      text << rep["claim"].get<std::string>() << ": "
           << rep["status"].get<std::string>() << " ("
           << rep["seconds"].get<double>() << "s)\n";
    }
  }
  if (int w = write_output(out_path, text.str())) return w;
  return static_cast<int>(st);
}

// --- eval -------------------------------------------------------------------

int run_eval(int n, const std::string& expr, const std::string& expect,
             const std::vector<std::string>& bind_args, bool json_mode,
             const std::string& out_path) {
  std::vector<std::string> names;
  std::vector<OwnedEndo> endos;
  for (const std::string& arg : bind_args) {
    std::size_t eq = arg.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == arg.size())
      return fail("--bind expects name=endo-file, got \"" + arg + "\"",
                  kUsageError);
    names.push_back(arg.substr(0, eq));
    OwnedEndo endo;
    frob_status st =
        frob_endo_from_file(arg.substr(eq + 1).c_str(), &endo.p);
    if (st != FROB_OK) return fail_api(st);
    endos.push_back(std::move(endo));
  }
  std::vector<const char*> name_ptrs;
  std::vector<const frob_endo*> endo_ptrs;
  for (std::size_t i = 0; i < names.size(); ++i) {
    name_ptrs.push_back(names[i].c_str());
    endo_ptrs.push_back(endos[i].p);
  }

  OwnedString out;
  frob_status st = frob_eval(n, expr.c_str(),
                             expect.empty() ? nullptr : expect.c_str(),
                             name_ptrs.data(), endo_ptrs.data(), names.size(),
                             &out.p);
  if (st != FROB_OK && st != FROB_FALSE) return fail_api(st);

  std::ostringstream text;
  if (json_mode) {
    text << out.str();
  } else {
    Json j = Json::parse(out.str());
    if (!expect.empty()) {
      if (st == FROB_OK)
        text << "equal (" << j["in_arity"].get<int>() << " -> "
             << j["out_arity"].get<int>() << ")\n";
      else
        text << "not equal: " << j["detail"].get<std::string>() << "\n";
    } else {
      text << "in_arity: " << j["in_arity"].get<int>()
           << "\nout_arity: " << j["out_arity"].get<int>() << "\nmatrix:\n";
      for (const auto& row : j["matrix"]) {
        bool first = true;
        for (const auto& entry : row) {
          if (!first) text << " ";
          text << entry.get<std::string>();
          first = false;
        }
        text << "\n";
      }
    }
  }
  if (int w = write_output(out_path, text.str())) return w;
  return static_cast<int>(st);
}

// --- split ------------------------------------------------------------------

int run_split(const std::string& endo_path, const std::string& out_path) {
  OwnedEndo endo;
  frob_status st = frob_endo_from_file(endo_path.c_str(), &endo.p);
  if (st != FROB_OK) return fail_api(st);

  OwnedString bundle;
  st = frob_endo_split(endo.p, &bundle.p);
  if (!bundle.p) return fail_api(st);  // e.g. not idempotent: no bundle
  if (int rc = write_output(out_path, bundle.str())) return rc;
  if (st != FROB_OK) return fail_api(st);
  return 0;
}

// --- embed ------------------------------------------------------------------

int run_embed(const std::string& span_path, const std::string& out_path) {
  auto text = slurp(span_path);
  if (!text) return fail(span_path + ": cannot open file", kUsageError);

  OwnedEndo endo;
  frob_status st = frob_embed_span(text->c_str(), &endo.p);
  if (st != FROB_OK) return fail_api(st, span_path);

  OwnedString doc;
  st = frob_endo_to_json(endo.p, &doc.p);
  if (st != FROB_OK) return fail_api(st);
  return write_output(out_path, doc.str());
}

// --- family -----------------------------------------------------------------

int run_family(const std::string& name, int n,
               const std::vector<std::string>& param_args, bool symbolic,
               const std::string& out_path) {
  static const std::map<std::string, std::vector<std::string>> kParamNames = {
      {"identity", {}},      {"diagonal", {}}, {"trace", {}},
      {"bipro3-1", {"s"}},   {"bipro3-2", {"u"}},
      {"bipro3-3", {"k", "t"}},
  };
  auto it = kParamNames.find(name);
  if (it == kParamNames.end())
    return fail("unknown family \"" + name + "\"", kUsageError);

  OwnedEndo endo;
  if (symbolic) {
    if (!param_args.empty())
      return fail("--symbolic leaves the parameter free; drop --param",
                  kUsageError);
    frob_status st = frob_endo_from_family_symbolic(name.c_str(), &endo.p);
    if (st != FROB_OK) return fail_api(st);
  } else {
    std::map<std::string, std::string> given;
    for (const std::string& arg : param_args) {
      std::size_t eq = arg.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == arg.size())
        return fail("--param expects name=value, got \"" + arg + "\"",
                    kUsageError);
      if (!given.emplace(arg.substr(0, eq), arg.substr(eq + 1)).second)
        return fail("parameter \"" + arg.substr(0, eq) + "\" given twice",
                    kUsageError);
    }
    std::vector<std::string> values;
    for (const std::string& expected : it->second) {
      auto g = given.find(expected);
      if (g == given.end())
        return fail("family " + name + " needs parameter \"" + expected + "\"",
                    kUsageError);
      values.push_back(g->second);
      given.erase(g);
    }
    if (!given.empty())
      return fail("family " + name + " does not take parameter \"" +
                      given.begin()->first + "\"",
                  kUsageError);
    std::vector<const char*> ptrs;
    for (const std::string& v : values) ptrs.push_back(v.c_str());
    frob_status st = frob_endo_from_family(name.c_str(), n, ptrs.data(),
                                           ptrs.size(), &endo.p);
    if (st != FROB_OK) return fail_api(st);
  }

  OwnedString doc;
  frob_status st = frob_endo_to_json(endo.p, &doc.p);
  if (st != FROB_OK) return fail_api(st);
  return write_output(out_path, doc.str());
}

// --- gb ---------------------------------------------------------------------

int run_gb(const std::string& ideal_path, const std::optional<double>& budget_flag,
           bool shuffle, long seed, const std::string& out_path) {
  auto text = slurp(ideal_path);
  if (!text) return fail(ideal_path + ": cannot open file", kUsageError);
  std::string err;
  auto budget = resolve_budget(budget_flag, err);
  if (!budget) return fail(err, kUsageError);

  OwnedString out;
  frob_status st = frob_groebner(text->c_str(), *budget, shuffle ? seed : -1,
                                 &out.p);
  if (st != FROB_OK) return fail_api(st, ideal_path);
  return write_output(out_path, out.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation with Frobenius-algebra endomorphisms"};
  app.set_version_flag("--version", frob_version());
  app.require_subcommand(1);

  int rc = 0;

  // check
  std::string check_endo, check_predicate, check_lambda, check_out;
  bool check_json = false;
  CLI::App* check = app.add_subcommand(
      "check", "evaluate one predicate of an endomorphism file");
  check->add_option("--endo", check_endo, "endomorphism JSON file")->required();
  check
      ->add_option("--predicate", check_predicate,
                   "selfdual | unital | idempotent | conv-stable | er | "
                   "normal | biprojection")
      ->required();
  check->add_option("--lambda", check_lambda,
                    "pin the stability scalar (rational)");
  check->add_flag("--json", check_json, "emit the full JSON report");
  check->add_option("--out", check_out, "write output here (default stdout)");
  check->callback([&] {
    rc = run_check(check_endo, check_predicate, check_lambda, check_json,
                   check_out);
  });

  // verify-claims
  int vc_n = 0;
  std::string vc_claim = "all";
  std::optional<double> vc_budget;
  bool vc_json = false;
  CLI::App* vc = app.add_subcommand("verify-claims",
                                    "run the Groebner-certified claim suite");
  vc->add_option("--n", vc_n, "matrix size")->required();
  vc->add_option("--claim", vc_claim,
                 "bipro-implies-er | dimensions | lambda-spectrum | "
                 "unital-er-implies-idempotent | all");
  vc->add_option("--budget-seconds", vc_budget, "wall-clock budget")
      ->check(CLI::PositiveNumber);
  vc->add_flag("--json", vc_json, "emit the JSON report array");
  std::string vc_out;
  vc->add_option("--out", vc_out, "write output here (default stdout)");
  vc->callback([&] {
    rc = run_verify_claims(vc_n, vc_claim, vc_budget, vc_json, vc_out);
  });

  // eval
  int eval_n = 0;
  std::string eval_expr, eval_expect;
  std::vector<std::string> eval_binds;
  bool eval_json = false;
  CLI::App* eval = app.add_subcommand(
      "eval", "evaluate a diagram expression over M_n");
  eval->add_option("--n", eval_n, "matrix size")->required();
  eval->add_option("--expr", eval_expr, "expression")->required();
  eval->add_option("--assert-equal", eval_expect,
                   "expression to compare against");
  eval->add_option("--bind", eval_binds,
                   "name=endo-file binding for #name references");
  eval->add_flag("--json", eval_json, "emit JSON output");
  std::string eval_out;
  eval->add_option("--out", eval_out, "write output here (default stdout)");
  eval->callback([&] {
    rc = run_eval(eval_n, eval_expr, eval_expect, eval_binds, eval_json,
                  eval_out);
  });

  // split
  std::string split_endo, split_out;
  CLI::App* split = app.add_subcommand(
      "split", "split an idempotent and transport the Frobenius structure");
  split->add_option("--endo", split_endo, "endomorphism JSON file")->required();
  split->add_option("--out", split_out, "write the bundle here (default stdout)");
  split->callback([&] { rc = run_split(split_endo, split_out); });

  // embed
  std::string embed_span, embed_out;
  CLI::App* embed = app.add_subcommand(
      "embed", "turn a subalgebra span into its exchange-relation idempotent");
  embed->add_option("--span", embed_span, "span JSON file")->required();
  embed->add_option("--out", embed_out, "write the endo here (default stdout)");
  embed->callback([&] { rc = run_embed(embed_span, embed_out); });

  // family
  std::string family_name, family_out;
  int family_n = 2;
  std::vector<std::string> family_params;
  bool family_symbolic = false;
  CLI::App* family =
      app.add_subcommand("family", "construct a named endomorphism family");
  family
      ->add_option("--name", family_name,
                   "identity | diagonal | trace | bipro3-1 | bipro3-2 | "
                   "bipro3-3")
      ->required();
  family->add_option("--n", family_n, "matrix size (default 2)");
  family->add_option("--param", family_params, "name=value (rational)");
  family->add_flag("--symbolic", family_symbolic,
                   "keep the parameter symbolic (bipro3-1 only)");
  family->add_option("--out", family_out, "write the endo here (default stdout)");
  family->callback([&] {
    rc = run_family(family_name, family_n, family_params, family_symbolic,
                    family_out);
  });

  // gb
  std::string gb_ideal, gb_out;
  std::optional<double> gb_budget;
  bool gb_shuffle = false;
  long gb_seed = 0;
  CLI::App* gb = app.add_subcommand(
      "gb", "reduced Groebner basis and dimensions of an ideal file");
  gb->add_option("--ideal", gb_ideal, "ideal JSON file")->required();
  gb->add_option("--budget-seconds", gb_budget, "wall-clock budget")
      ->check(CLI::PositiveNumber);
  gb->add_flag("--shuffle", gb_shuffle,
               "permute the generators before computing (reduced basis is "
               "permutation-independent)");
  gb->add_option("--seed", gb_seed, "seed for --shuffle (default 0)");
  gb->add_option("--out", gb_out, "write the result here (default stdout)");
  gb->callback(
      [&] { rc = run_gb(gb_ideal, gb_budget, gb_shuffle, gb_seed, gb_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }
  return rc;
}
