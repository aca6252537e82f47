#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "moves.hpp"

namespace symfin {

struct Config {
  int max_rank = 6;
  std::optional<SignRule> sign_rule;            // forced candidate; default elected
  std::optional<Orientation> orientation;       // forced reading; default adjudicated
  bool enable_teto = false;
  GapRule gap_rule = GapRule::VirtualZero;
};

Config config_from_json(const nlohmann::json& j);

nlohmann::json pair_to_json(const RigidPair& p);
RigidPair pair_from_json(const nlohmann::json& j);  // throws invalid_input
nlohmann::json symbol_to_json(const Symbol& s);
nlohmann::json fingerprint_to_json(const Fingerprint& f);
nlohmann::json partition_to_json(const Partition& p);

std::uint64_t fnv1a64(const std::string& data);
std::string hex64(std::uint64_t v);

struct CatalogRecord {
  RigidPair pair;
  Symbol symbol;
  Fingerprint fingerprint;
  std::string trace_digest;
};

CatalogRecord make_record(const RigidPair& pair, SignRule rule);
nlohmann::json record_to_json(const CatalogRecord& r);

// One JSONL line per pair, ranks 1..max_rank.
std::string enumerate_jsonl(Family f, int max_rank);
std::string catalog_jsonl(Family f, int max_rank, SignRule rule);

struct ForwardReport {
  int pairs = 0;
  int classes = 0;
  int violations = 0;
  std::string jsonl;  // one class per line, violations flagged
};
ForwardReport verify_forward(Family f, int max_rank, SignRule rule);

struct ConverseReport {
  int pairs = 0;
  int classes = 0;
  int nonuniform = 0;       // fingerprint classes mixing several symbols
  int recovery_collisions = 0;  // (fingerprint, lambda) shared by distinct unordered pairs
  std::string jsonl;
};
ConverseReport verify_converse(Family f, int max_rank, SignRule rule);

struct DualityReport {
  int rank = 0;
  int b_pairs = 0;
  int c_pairs = 0;
  int matched_classes = 0;
  int unmatched_b = 0;
  int unmatched_c = 0;
  std::string jsonl;
};
DualityReport duality_match(int rank, SignRule rule, bool include_d_self = false);

std::string move_sweep_jsonl(Family f, int max_rank, SignRule rule, bool enable_teto);

struct SelftestResult {
  bool pass = true;
  std::string report;        // one line per check
  std::string first_failure; // trace of the first failing fixture
};
SelftestResult run_selftest(const Config& cfg);

}  // namespace symfin
