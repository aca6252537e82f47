#include "symfin.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "lab.hpp"

using namespace symfin;

struct symfin_pair {
  RigidPair value;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& msg) {
  if (err) *err = dup_string(msg);
}

Config parse_options(const char* options) {
  if (!options || !*options) return Config{};
  return config_from_json(nlohmann::json::parse(options));
}

SignRule rule_of(const Config& cfg) { return cfg.sign_rule.value_or(elected_sign_rule()); }

// Shared wrapper: translate exceptions into status codes.
template <typename Fn>
symfin_status guarded(char** err, Fn&& fn) {
  try {
    return fn();
  } catch (const invalid_input& e) {
    set_err(err, e.what());
    return SYMFIN_EINVAL;
  } catch (const nlohmann::json::exception& e) {
    set_err(err, e.what());
    return SYMFIN_EINVAL;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return SYMFIN_EINTERNAL;
  }
}

symfin_status check_family(char family, Family* out, char** err) {
  const auto f = family_from_letter(family);
  if (!f) {
    set_err(err, "family must be one of B, C, D");
    return SYMFIN_EINVAL;
  }
  *out = *f;
  return SYMFIN_OK;
}

}  // namespace

extern "C" {

const char* symfin_version(void) { return "1.0.0"; }

void symfin_string_free(char* s) { std::free(s); }

symfin_status symfin_pair_parse(const char* json, symfin_pair** out, char** err) {
  if (!json || !out) {
    set_err(err, "null argument");
    return SYMFIN_EINVAL;
  }
  *out = nullptr;
  return guarded(err, [&]() {
    RigidPair p = pair_from_json(nlohmann::json::parse(json));
    *out = new symfin_pair{std::move(p)};
    return SYMFIN_OK;
  });
}

void symfin_pair_free(symfin_pair* p) { delete p; }

symfin_status symfin_pair_record(const symfin_pair* p, const char* options, char** out,
                                 char** err) {
  if (!p || !out) return SYMFIN_EINVAL;
  return guarded(err, [&]() {
    const Config cfg = parse_options(options);
    *out = dup_string(record_to_json(make_record(p->value, rule_of(cfg))).dump());
    return SYMFIN_OK;
  });
}

symfin_status symfin_pair_trace_csv(const symfin_pair* p, const char* options, char** out,
                                    char** err) {
  if (!p || !out) return SYMFIN_EINVAL;
  return guarded(err, [&]() {
    const Config cfg = parse_options(options);
    MuTrace t = mu_formula(add(p->value.first, p->value.second), rule_of(cfg));
    fill_condition_flags(t, p->value);
    *out = dup_string(trace_csv(t));
    return SYMFIN_OK;
  });
}

symfin_status symfin_pair_pretty(const symfin_pair* p, const char* options, char** out,
                                 char** err) {
  if (!p || !out) return SYMFIN_EINVAL;
  return guarded(err, [&]() {
    const Config cfg = parse_options(options);
    const SignRule rule = rule_of(cfg);
    MuTrace t = mu_formula(add(p->value.first, p->value.second), rule);
    fill_condition_flags(t, p->value);
    const Fingerprint fp = assemble(t, p->value);
    std::string s;
    s += "pair: (" + to_string(p->value.first) + ", " + to_string(p->value.second) + ")  " +
         family_letter(p->value.theory.family) + "_" + std::to_string(p->value.theory.rank) +
         "\n";
    s += "symbol:\n" + symbol_pretty(pair_symbol(p->value)) + "\n";
    s += "trace (sign rule " + std::string(1, sign_rule_letter(rule)) + "):\n";
    s += trace_pretty(t) + "\n";
    s += "fingerprint: [" + to_string(fp.alpha) + "; " + to_string(fp.beta) + "]\n";
    *out = dup_string(s);
    return SYMFIN_OK;
  });
}

symfin_status symfin_enumerate(char family, int max_rank, char** out, char** err) {
  if (!out) return SYMFIN_EINVAL;
  Family f;
  if (auto st = check_family(family, &f, err); st != SYMFIN_OK) return st;
  return guarded(err, [&]() {
    *out = dup_string(enumerate_jsonl(f, max_rank));
    return SYMFIN_OK;
  });
}

symfin_status symfin_catalog(char family, int max_rank, const char* options, char** out,
                             char** err) {
  if (!out) return SYMFIN_EINVAL;
  Family f;
  if (auto st = check_family(family, &f, err); st != SYMFIN_OK) return st;
  return guarded(err, [&]() {
    const Config cfg = parse_options(options);
    *out = dup_string(catalog_jsonl(f, max_rank, rule_of(cfg)));
    return SYMFIN_OK;
  });
}

symfin_status symfin_verify_forward(char family, int max_rank, const char* options,
                                    char** report, char** err) {
  if (!report) return SYMFIN_EINVAL;
  Family f;
  if (auto st = check_family(family, &f, err); st != SYMFIN_OK) return st;
  return guarded(err, [&]() {
    const Config cfg = parse_options(options);
    const ForwardReport rep = verify_forward(f, max_rank, rule_of(cfg));
    *report = dup_string(rep.jsonl);
    return rep.violations == 0 ? SYMFIN_OK : SYMFIN_EVIOLATION;
  });
}

symfin_status symfin_verify_converse(char family, int max_rank, const char* options,
                                     char** report, char** err) {
  if (!report) return SYMFIN_EINVAL;
  Family f;
  if (auto st = check_family(family, &f, err); st != SYMFIN_OK) return st;
  return guarded(err, [&]() {
    const Config cfg = parse_options(options);
    *report = dup_string(verify_converse(f, max_rank, rule_of(cfg)).jsonl);
    return SYMFIN_OK;
  });
}

symfin_status symfin_duality_match(int rank, const char* options, char** report, char** err) {
  if (!report) return SYMFIN_EINVAL;
  return guarded(err, [&]() {
    const Config cfg = parse_options(options);
    bool include_d = false;
    if (options && *options) {
      const auto j = nlohmann::json::parse(options);
      if (j.contains("include_d_self")) include_d = j.at("include_d_self").get<bool>();
    }
    *report = dup_string(duality_match(rank, rule_of(cfg), include_d).jsonl);
    return SYMFIN_OK;
  });
}

symfin_status symfin_move_sweep(char family, int max_rank, const char* options, char** out,
                                char** err) {
  if (!out) return SYMFIN_EINVAL;
  Family f;
  if (auto st = check_family(family, &f, err); st != SYMFIN_OK) return st;
  return guarded(err, [&]() {
    const Config cfg = parse_options(options);
    *out = dup_string(move_sweep_jsonl(f, max_rank, rule_of(cfg), cfg.enable_teto));
    return SYMFIN_OK;
  });
}

symfin_status symfin_selftest(const char* options, char** report, char** err) {
  if (!report) return SYMFIN_EINVAL;
  return guarded(err, [&]() {
    const Config cfg = parse_options(options);
    const SelftestResult res = run_selftest(cfg);
    std::string text = res.report;
    if (!res.pass) text += "first failure: " + res.first_failure + "\n";
    *report = dup_string(text);
    return res.pass ? SYMFIN_OK : SYMFIN_EVIOLATION;
  });
}

}  // extern "C"
