#include "frobkit.h"

#include <algorithm>
#include <cstring>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "claims.hpp"
#include "dsl.hpp"
#include "endo.hpp"
#include "families.hpp"
#include "frobalg.hpp"
#include "groebner.hpp"
#include "jsonio.hpp"
#include "subalg.hpp"
#include "tensor.hpp"

using namespace frobkit;

struct frob_endo {
  std::variant<Endo, PolyEndo> value;

  int n() const {
    return std::visit([](const auto& e) { return e.n; }, value);
  }
};

namespace {

thread_local std::string g_last_error;

constexpr double kDefaultBudgetSeconds = 600;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_out(char** out, const std::string& s) {
  if (out) *out = dup_string(s);
}

frob_status invalid(const std::string& msg) {
  g_last_error = msg;
  return FROB_EINVAL;
}

/// Runs `fn`, translating the library's exceptions onto status codes:
/// budget exhaustion is FROB_ERESOURCE; malformed documents, expression
/// errors and bad arguments are FROB_EINVAL; a span rejected as "not a
/// Frobenius subalgebra" is FROB_FALSE (the input was well-formed, the
/// mathematical claim failed).
template <class Fn>
frob_status guard(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const ResourceLimitError& e) {
    g_last_error = e.what();
    return FROB_ERESOURCE;
  } catch (const JsonFormatError& e) {
    g_last_error = e.what();
    return FROB_EINVAL;
  } catch (const DslError& e) {
    g_last_error = e.what();
    return FROB_EINVAL;
  } catch (const SubalgebraRejection& e) {
    g_last_error = e.kind() + std::string(": ") + e.what();
    return FROB_FALSE;
  } catch (const FrobValidationError& e) {
    g_last_error = e.what();
    return FROB_FALSE;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return FROB_EINVAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FROB_EINTERNAL;
  } catch (...) {
    g_last_error = "unknown internal error";
    return FROB_EINTERNAL;
  }
}

Rat parse_rat_arg(const char* text, const char* what) {
  auto r = rat_parse(text);
  if (!r)
    throw std::invalid_argument(std::string(what) + " is not a rational: \"" +
                                text + "\"");
  return *r;
}

RingPtr ring_of(const PolyEndo& t) {
  for (const auto& entry : t.a)
    if (entry.ring()) return entry.ring();
  throw std::invalid_argument("polynomial endomorphism carries no ring");
}

frob_status finish_endo(AnyEndo any, frob_endo** out) {
  if (!out) return invalid("output handle pointer is NULL");
  *out = new frob_endo{std::move(any)};
  return FROB_OK;
}

}  // namespace

extern "C" {

const char* frob_version(void) { return "1.0.0"; }

const char* frob_last_error(void) { return g_last_error.c_str(); }

void frob_string_free(char* s) { delete[] s; }

// --- Endomorphism handles ---------------------------------------------------

frob_status frob_endo_from_json(const char* json_text, frob_endo** out) {
  if (out) *out = nullptr;
  return guard([&]() -> frob_status {
    if (!json_text) return invalid("json_text is NULL");
    Json doc;
    try {
      doc = Json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
      return invalid(e.what());
    }
    return finish_endo(endo_from_json(doc), out);
  });
}

frob_status frob_endo_from_file(const char* path, frob_endo** out) {
  if (out) *out = nullptr;
  return guard([&]() -> frob_status {
    if (!path) return invalid("path is NULL");
    return finish_endo(endo_from_json(load_json_file(path)), out);
  });
}

frob_status frob_endo_from_family(const char* name, int n,
                                  const char* const* params, size_t nparams,
                                  frob_endo** out) {
  if (out) *out = nullptr;
  return guard([&]() -> frob_status {
    if (!name) return invalid("family name is NULL");
    std::vector<Rat> values;
    for (size_t i = 0; i < nparams; ++i) {
      if (!params || !params[i]) return invalid("parameter value is NULL");
      values.push_back(parse_rat_arg(params[i], "family parameter"));
    }
    return finish_endo(family_endo(name, n, values), out);
  });
}

frob_status frob_endo_from_family_symbolic(const char* name, frob_endo** out) {
  if (out) *out = nullptr;
  return guard([&]() -> frob_status {
    if (!name) return invalid("family name is NULL");
    if (std::string(name) != "bipro3-1")
      return invalid("only the one-parameter family \"bipro3-1\" has a "
                     "symbolic form");
    return finish_endo(family_bipro3_1_poly(), out);
  });
}

frob_status frob_endo_to_json(const frob_endo* endo, char** out_json) {
  if (out_json) *out_json = nullptr;
  return guard([&]() -> frob_status {
    if (!endo) return invalid("endo handle is NULL");
    Json doc = std::visit([](const auto& e) { return endo_to_json(e); },
                          endo->value);
    set_out(out_json, dump_json(doc));
    return FROB_OK;
  });
}

void frob_endo_free(frob_endo* endo) { delete endo; }

int frob_endo_n(const frob_endo* endo) { return endo ? endo->n() : 0; }

int frob_endo_is_symbolic(const frob_endo* endo) {
  return endo && std::holds_alternative<PolyEndo>(endo->value) ? 1 : 0;
}

// --- Predicates -------------------------------------------------------------

frob_status frob_endo_check(const frob_endo* endo, const char* predicate,
                            const char* lambda, char** out_report) {
  if (out_report) *out_report = nullptr;
  return guard([&]() -> frob_status {
    if (!endo) return invalid("endo handle is NULL");
    if (!predicate) return invalid("predicate name is NULL");
    auto which = predicate_from_name(predicate);
    if (!which)
      return invalid(std::string("unknown predicate \"") + predicate + "\"");
    std::optional<Rat> hint;
    if (lambda) hint = parse_rat_arg(lambda, "lambda");

    bool holds = false;
    Json report;
    if (const Endo* e = std::get_if<Endo>(&endo->value)) {
      auto rep = check_predicate(*e, *which, hint);
      holds = rep.holds;
      report = report_to_json(rep);
      if (!holds)
        g_last_error = rep.witness ? rep.witness->detail : rep.note;
    } else {
      const PolyEndo& pe = std::get<PolyEndo>(endo->value);
      std::optional<MPoly> poly_hint;
      if (hint) poly_hint = MPoly::constant(ring_of(pe), *hint);
      auto rep = check_predicate(pe, *which, poly_hint);
      holds = rep.holds;
      report = report_to_json(rep);
      if (!holds)
        g_last_error = rep.witness ? rep.witness->detail : rep.note;
    }
    set_out(out_report, dump_json(report));
    return holds ? FROB_OK : FROB_FALSE;
  });
}

// --- Splitting and embedding ------------------------------------------------

frob_status frob_endo_split(const frob_endo* endo, char** out_bundle) {
  if (out_bundle) *out_bundle = nullptr;
  return guard([&]() -> frob_status {
    if (!endo) return invalid("endo handle is NULL");
    const Endo* e = std::get_if<Endo>(&endo->value);
    if (!e)
      return invalid("symbolic endomorphisms cannot be split; bind the "
                     "parameters to rationals first");
    SplitData split;
    try {
      split = split_idempotent(*e);
    } catch (const std::invalid_argument& ex) {
      g_last_error = ex.what();  // carries the idempotency witness
      return FROB_FALSE;
    }
    InducedAlgebra induced = induce_structure_lenient(split);
    EmbeddingReport embedding = verify_embedding(split, induced);
    set_out(out_bundle,
            dump_json(split_bundle_to_json(split, induced, embedding)));
    if (!induced.valid()) {
      g_last_error = "induced structure failed validation: " +
                     induced.issues.front().axiom + " — " +
                     induced.issues.front().message;
      return FROB_FALSE;
    }
    if (!embedding.all_pass()) {
      for (const auto& check : embedding.checks)
        if (!check.holds) {
          g_last_error = "embedding check failed: " + check.name +
                         (check.detail.empty() ? "" : " — " + check.detail);
          break;
        }
      return FROB_FALSE;
    }
    return FROB_OK;
  });
}

frob_status frob_embed_span(const char* span_json, frob_endo** out) {
  if (out) *out = nullptr;
  return guard([&]() -> frob_status {
    if (!span_json) return invalid("span_json is NULL");
    Json doc;
    try {
      doc = Json::parse(span_json);
    } catch (const nlohmann::json::parse_error& e) {
      return invalid(e.what());
    }
    SpanFile span = span_from_json(doc);
    Endo b = subalgebra_to_idempotent(span.span, span.n);
    return finish_endo(std::move(b), out);
  });
}

// --- Diagram evaluation -----------------------------------------------------

frob_status frob_eval(int n, const char* expr, const char* expect,
                      const char* const* bind_names,
                      const frob_endo* const* bind_endos, size_t nbinds,
                      char** out_json) {
  if (out_json) *out_json = nullptr;
  return guard([&]() -> frob_status {
    if (!expr) return invalid("expression is NULL");
    if (n < 1 || n > 16)
      return invalid("matrix size n must be between 1 and 16, got " +
                     std::to_string(n));
    std::map<std::string, RatMat> bindings;
    for (size_t i = 0; i < nbinds; ++i) {
      if (!bind_names || !bind_names[i] || !bind_endos || !bind_endos[i])
        return invalid("binding " + std::to_string(i) + " is NULL");
      const frob_endo* handle = bind_endos[i];
      const Endo* e = std::get_if<Endo>(&handle->value);
      if (!e)
        return invalid(std::string("binding \"") + bind_names[i] +
                       "\" is symbolic; diagram evaluation needs rational "
                       "coefficients");
      if (e->n != n)
        return invalid(std::string("binding \"") + bind_names[i] +
                       "\" lives on M_" + std::to_string(e->n) +
                       " but the model is M_" + std::to_string(n));
      if (!bindings.emplace(bind_names[i], matrix_of(*e)).second)
        return invalid(std::string("duplicate binding \"") + bind_names[i] +
                       "\"");
    }
    FrobModel model = matrix_model(n);

    if (expect) {
      EqualityReport rep = assert_equal(expr, expect, model, bindings);
      Json j = Json::object();
      j["equal"] = rep.equal;
      j["in_arity"] = rep.p;
      j["out_arity"] = rep.q;
      j["out_index"] = rep.out_index;
      j["in_index"] = rep.in_index;
      j["lhs"] = rep.lhs_value;
      j["rhs"] = rep.rhs_value;
      j["detail"] = rep.detail;
      set_out(out_json, dump_json(j));
      if (!rep.equal) g_last_error = rep.detail;
      return rep.equal ? FROB_OK : FROB_FALSE;
    }

    MorphExpr tree = parse_expr(expr);
    typecheck_expr(tree);
    TensorMap value = evaluate_expr(tree, model, bindings);
    set_out(out_json, dump_json(tensor_to_json(value)));
    return FROB_OK;
  });
}

// --- Claims -----------------------------------------------------------------

frob_status frob_verify_claims(int n, const char* claim, double budget_seconds,
                               char** out_reports) {
  if (out_reports) *out_reports = nullptr;
  return guard([&]() -> frob_status {
    if (!claim) return invalid("claim id is NULL");
    if (n < 1)
      return invalid("matrix size n must be positive, got " +
                     std::to_string(n));
    ClaimBudget budget;
    budget.seconds =
        budget_seconds > 0 ? budget_seconds : kDefaultBudgetSeconds;
    ClaimRunner runner(n, budget);
    std::vector<ClaimReport> reports;
    if (std::string(claim) == "all")
      reports = runner.run_all();
    else
      reports.push_back(runner.run(claim));

    Json arr = Json::array();
    for (const ClaimReport& r : reports) arr.push_back(claim_report_to_json(r));
    set_out(out_reports, dump_json(arr));

    for (const ClaimReport& r : reports)
      if (r.status == ClaimStatus::kFail) {
        g_last_error = "claim failed: " + r.claim;
        return FROB_FALSE;
      }
    for (const ClaimReport& r : reports)
      if (r.status == ClaimStatus::kResourceLimited) {
        g_last_error = "claim hit the resource budget: " + r.claim;
        return FROB_ERESOURCE;
      }
    return FROB_OK;
  });
}

// --- Groebner bases ---------------------------------------------------------

frob_status frob_groebner(const char* ideal_json, double budget_seconds,
                          long shuffle_seed, char** out_json) {
  if (out_json) *out_json = nullptr;
  return guard([&]() -> frob_status {
    if (!ideal_json) return invalid("ideal_json is NULL");
    Json doc;
    try {
      doc = Json::parse(ideal_json);
    } catch (const nlohmann::json::parse_error& e) {
      return invalid(e.what());
    }
    const Ideal ideal = ideal_from_json(doc);
    Ideal input = ideal;
    if (shuffle_seed >= 0) {
      std::mt19937_64 rng(static_cast<std::uint64_t>(shuffle_seed));
      std::shuffle(input.gens.begin(), input.gens.end(), rng);
    }
    GBOptions opts;
    opts.budget_seconds =
        budget_seconds > 0 ? budget_seconds : kDefaultBudgetSeconds;
    GroebnerBasis gb = groebner(input, opts);
    // The reduced basis is canonical, so the output document does not
    // depend on the generator permutation: echo the generators as given.
    gb.ideal = ideal;
    Json out = groebner_to_json(gb);
    out["dimension"] = ideal_dimension(gb);
    auto vs = vector_space_dimension(gb);
    out["vector_space_dimension"] = vs ? Json(*vs) : Json(nullptr);
    set_out(out_json, dump_json(out));
    return FROB_OK;
  });
}

}  // extern "C"
