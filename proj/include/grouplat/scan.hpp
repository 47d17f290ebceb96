#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grouplat/repchar.hpp"
#include "grouplat/totient.hpp"

namespace grouplat {

/// One verified identity or implication.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The per-group theorem bundle: Hall identity on every subgroup pair,
/// cyclicity criterion, Frattini factorization, Kratzer-Thévenaz
/// divisibility, crosscut vs recursive Möbius, the Pálfy identity, both
/// chain bounds, the dual-totient linear-primitivity implication, and the
/// reversed-lattice duality identity.
struct VerifyReport {
  std::string group;
  int order = 0;
  std::int64_t phi = 0, phi_hat = 0, chi = 0;  // on [1, G]
  bool faithful_irrep = false;
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

VerifyReport verify_group(const PermGroup& G, double tol = 1e-8,
                          std::uint64_t seed = 0, const GroupCaps& caps = {});

enum class ScanKind {
  verify,            // the theorem bundle only
  boolean_phi,       // Boolean interval [H,K] should have phi != 0
  golden_bound,      // Boolean interval of rank n+1: phi >= golden^n? (report)
  brown_chi,         // solvable G: chi(1,G) != 0
  eulerian_boolean,  // Eulerian subgroup lattice should be Boolean
  remark_conv,       // own bottom interval + faithful irrep + phi_hat == 0
  all,
};

std::optional<ScanKind> scan_kind_from_name(const std::string& name);
std::string scan_kind_name(ScanKind kind);

/// One scan record: a (group, H, G) item with its invariant values and a
/// status of "pass", "fail", "counterexample" (converse witnesses looked for
/// by remark_conv), "report" (observations without a verdict) or "error".
struct ScanRecord {
  std::string group;
  int group_order = 0;
  std::string check;
  std::string sub_label = "1";
  std::string top_label;
  TotientValues values;
  LatticeStats stats;
  std::string status;
  std::string detail;
};

struct ScanOptions {
  double tol = 1e-8;
  std::uint64_t seed = 0;
  int jobs = 1;
  GroupCaps caps;
};

/// Runs the requested scans over each group spec; per-item errors become
/// "error" records and the scan continues. Items run on a bounded worker
/// pool; records come back in input order.
std::vector<ScanRecord> conjecture_scan(const std::vector<std::string>& specs,
                                        ScanKind kind,
                                        const ScanOptions& options = {});

/// Same scans over already-built groups (used for semidirect families).
std::vector<ScanRecord> conjecture_scan_groups(
    const std::vector<const PermGroup*>& groups, ScanKind kind,
    const ScanOptions& options = {});

/// The reference catalog: all C_n for n <= 48, D8, D12, Q8, M16, S3, S4, A4,
/// C2xC2, C2xC2xC2, C6xC2.
std::vector<std::string> catalog_group_specs();

std::string scan_records_to_jsonl(const std::vector<ScanRecord>& records);
std::string scan_records_to_table(const std::vector<ScanRecord>& records);

}  // namespace grouplat
