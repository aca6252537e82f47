// Command-line front end; all work goes through the shared-library C API.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "symfin.h"

namespace {

// Exit codes: 0 verified/ok, 1 property violation, 2 input error.
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

struct CommonOpts {
  std::string theory = "B";
  int max_rank = 6;
  std::string sign_rule;
  std::string orientation;
  bool enable_teto = false;
  bool include_d_self = false;
  std::string format = "pretty";
  std::string out_path;
  std::string config_path;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_theory = true) {
  if (with_theory)
    cmd->add_option("--theory", o.theory, "Theory family")->check(CLI::IsMember({"B", "C", "D"}));
  cmd->add_option("--max-rank", o.max_rank, "Largest rank to sweep");
  cmd->add_option("--sign-rule", o.sign_rule, "Force a sign-rule candidate")
      ->check(CLI::IsMember({"a", "b", "c"}));
  cmd->add_option("--orientation", o.orientation, "Force the structural-check orientation")
      ->check(CLI::IsMember({"rows", "columns"}));
  cmd->add_flag("--enable-teto", o.enable_teto, "Include the extreme TE/TO insertions");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"jsonl", "csv", "pretty"}));
  cmd->add_option("--out", o.out_path, "Write output to a file instead of stdout");
  cmd->add_option("--config", o.config_path, "JSON config file; flags override its fields");
}

// Config file first, then flag overrides.
std::string build_options(const CommonOpts& o, const CLI::App* cmd) {
  nlohmann::json j = nlohmann::json::object();
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) {
      std::cerr << "error: cannot open config file: " << o.config_path << "\n";
      std::exit(kExitInput);
    }
    try {
      in >> j;
    } catch (const std::exception& e) {
      std::cerr << "error: bad config file: " << e.what() << "\n";
      std::exit(kExitInput);
    }
  }
  if (cmd->count("--max-rank") || !j.contains("max_rank")) j["max_rank"] = o.max_rank;
  if (!o.sign_rule.empty()) j["sign_rule"] = o.sign_rule;
  if (!o.orientation.empty()) j["orientation"] = o.orientation;
  if (cmd->count("--enable-teto")) j["enable_teto"] = o.enable_teto;
  if (o.include_d_self) j["include_d_self"] = true;
  return j.dump();
}

int effective_max_rank(const CommonOpts& o, const std::string& options) {
  const auto j = nlohmann::json::parse(options);
  return j.contains("max_rank") ? j.at("max_rank").get<int>() : o.max_rank;
}

void emit(const CommonOpts& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file: " << o.out_path << "\n";
    std::exit(kExitInput);
  }
  out << text;
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  symfin_string_free(s);
  return out;
}

[[noreturn]] void fail_input(char* err) {
  std::cerr << "error: " << take_string(err) << "\n";
  std::exit(kExitInput);
}

std::string read_pair_input(const std::string& arg) {
  if (arg.empty() || arg == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  if (!arg.empty() && arg.front() == '{') return arg;
  std::ifstream in(arg);
  if (!in) {
    std::cerr << "error: cannot open pair file: " << arg << "\n";
    std::exit(kExitInput);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbol/fingerprint invariants of rigid operator pairs"};
  app.require_subcommand(1);

  CommonOpts inv_o, enum_o, fwd_o, con_o, dual_o, self_o, mov_o;
  std::string pair_arg;

  auto* inv = app.add_subcommand("invariants", "Invariants of one pair");
  inv->add_option("pair", pair_arg, "Pair JSON, a file path, or - for stdin");
  add_common(inv, inv_o, false);

  auto* enu = app.add_subcommand("enumerate", "List the valid pairs per rank");
  add_common(enu, enum_o);
  bool enum_catalog = false;
  enu->add_flag("--records", enum_catalog, "Emit full invariant records instead of bare pairs");

  auto* fwd = app.add_subcommand("verify-forward",
                                 "Group pairs by symbol; fail on fingerprint mixtures");
  add_common(fwd, fwd_o);

  auto* con = app.add_subcommand("verify-converse",
                                 "Group pairs by fingerprint; report symbol mixtures");
  add_common(con, con_o);

  auto* dual = app.add_subcommand("duality-match", "Join the B and C catalogs on symbols");
  int dual_rank = 1;
  dual->add_option("--rank", dual_rank, "Rank to match")->required();
  dual->add_flag("--include-d-self", dual_o.include_d_self,
                 "Also report the self-dual D-side classes");
  add_common(dual, dual_o, false);

  auto* mov = app.add_subcommand("moves", "Sweep the symbol-preserving moves");
  add_common(mov, mov_o);

  auto* self = app.add_subcommand("selftest", "Run every oracle and property suite");
  add_common(self, self_o);

  CLI11_PARSE(app, argc, argv);

  char* err = nullptr;
  char* out = nullptr;

  if (inv->parsed()) {
    const std::string options = build_options(inv_o, inv);
    const std::string text = read_pair_input(pair_arg);
    symfin_pair* pair = nullptr;
    if (symfin_pair_parse(text.c_str(), &pair, &err) != SYMFIN_OK) fail_input(err);
    symfin_status st;
    if (inv_o.format == "jsonl")
      st = symfin_pair_record(pair, options.c_str(), &out, &err);
    else if (inv_o.format == "csv")
      st = symfin_pair_trace_csv(pair, options.c_str(), &out, &err);
    else
      st = symfin_pair_pretty(pair, options.c_str(), &out, &err);
    symfin_pair_free(pair);
    if (st != SYMFIN_OK) fail_input(err);
    std::string text_out = take_string(out);
    if (!text_out.empty() && text_out.back() != '\n') text_out += '\n';
    emit(inv_o, text_out);
    return kExitOk;
  }

  if (enu->parsed()) {
    const std::string options = build_options(enum_o, enu);
    const int rank = effective_max_rank(enum_o, options);
    const symfin_status st =
        enum_catalog ? symfin_catalog(enum_o.theory[0], rank, options.c_str(), &out, &err)
                     : symfin_enumerate(enum_o.theory[0], rank, &out, &err);
    if (st != SYMFIN_OK) fail_input(err);
    emit(enum_o, take_string(out));
    return kExitOk;
  }

  if (fwd->parsed()) {
    const std::string options = build_options(fwd_o, fwd);
    const symfin_status st = symfin_verify_forward(
        fwd_o.theory[0], effective_max_rank(fwd_o, options), options.c_str(), &out, &err);
    if (st == SYMFIN_EINVAL || st == SYMFIN_EINTERNAL) fail_input(err);
    emit(fwd_o, take_string(out));
    return st == SYMFIN_OK ? kExitOk : kExitViolation;
  }

  if (con->parsed()) {
    const std::string options = build_options(con_o, con);
    const symfin_status st = symfin_verify_converse(
        con_o.theory[0], effective_max_rank(con_o, options), options.c_str(), &out, &err);
    if (st != SYMFIN_OK) fail_input(err);
    emit(con_o, take_string(out));
    return kExitOk;
  }

  if (dual->parsed()) {
    const std::string options = build_options(dual_o, dual);
    const symfin_status st = symfin_duality_match(dual_rank, options.c_str(), &out, &err);
    if (st != SYMFIN_OK) fail_input(err);
    emit(dual_o, take_string(out));
    return kExitOk;
  }

  if (mov->parsed()) {
    const std::string options = build_options(mov_o, mov);
    const symfin_status st = symfin_move_sweep(
        mov_o.theory[0], effective_max_rank(mov_o, options), options.c_str(), &out, &err);
    if (st != SYMFIN_OK) fail_input(err);
    emit(mov_o, take_string(out));
    return kExitOk;
  }

  if (self->parsed()) {
    const std::string options = build_options(self_o, self);
    const symfin_status st = symfin_selftest(options.c_str(), &out, &err);
    if (st == SYMFIN_EINVAL || st == SYMFIN_EINTERNAL) fail_input(err);
    emit(self_o, take_string(out));
    return st == SYMFIN_OK ? kExitOk : kExitViolation;
  }

  return kExitInput;
}
