#include "grouplat/scan.hpp"

#include <atomic>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "grouplat/automorphism.hpp"
#include "grouplat/catalog.hpp"
#include "grouplat/numeric.hpp"

namespace grouplat {

bool VerifyReport::all_pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

std::string totient_summary(const TotientValues& v) {
  return "phi=" + std::to_string(v.phi) + " phi_hat=" + std::to_string(v.phi_hat) +
         " chi=" + std::to_string(v.chi);
}

CheckResult check_hall_identity(const SubgroupLattice& SL) {
  const FinLattice& L = SL.lattice;
  int pairs = 0;
  for (int h = 0; h < L.size(); ++h)
    for (int k = 0; k < L.size(); ++k) {
      if (!L.leq(h, k)) continue;
      ++pairs;
      std::int64_t phi = euler_totient(SL, h, k);
      long long cosets =
          coset_generator_count(SL.G(), SL.subgroup(h), SL.subgroup(k));
      if (phi != cosets)
        return {"hall_identity", false,
                "phi(" + L.label(h) + "," + L.label(k) + ")=" +
                    std::to_string(phi) + " but " + std::to_string(cosets) +
                    " generating cosets"};
    }
  return {"hall_identity", true, std::to_string(pairs) + " pairs"};
}

CheckResult check_eulercyclic(const SubgroupLattice& SL, std::int64_t phi) {
  bool cyclic = SL.G().is_cyclic();
  bool nonzero = phi != 0;
  if (cyclic != nonzero)
    return {"eulercyclic", false,
            "phi(1,G)=" + std::to_string(phi) + " but group " +
                (cyclic ? "is" : "is not") + " cyclic"};
  return {"eulercyclic", true,
          cyclic ? "cyclic, phi=" + std::to_string(phi) : "non-cyclic, phi=0"};
}

CheckResult check_crosscut(const SubgroupLattice& SL, const MobiusTable& mu) {
  try {
    std::vector<std::int64_t> crosscut = mobius_crosscut_to_top(SL.lattice);
    for (int a = 0; a < SL.lattice.size(); ++a)
      if (crosscut[static_cast<size_t>(a)] != mu(a, SL.lattice.top()))
        return {"crosscut_recursive", false,
                "mu(" + SL.lattice.label(a) + ",G): crosscut " +
                    std::to_string(crosscut[static_cast<size_t>(a)]) +
                    " != recursive " + std::to_string(mu(a, SL.lattice.top()))};
    return {"crosscut_recursive", true,
            std::to_string(SL.lattice.size()) + " elements agree"};
  } catch (const CapExceeded& e) {
    return {"crosscut_recursive", true, std::string("skipped: ") + e.what()};
  }
}

CheckResult check_palfy(const PermGroup& G, const CharacterTable& T,
                        const GroupCaps& caps) {
  std::int64_t lhs = faithful_dim_square_sum(T);
  std::int64_t rhs = normal_dual_totient(G, caps);
  if (lhs != rhs)
    return {"palfy_identity", false,
            "sum of faithful deg^2 = " + std::to_string(lhs) +
                " but normal dual totient = " + std::to_string(rhs)};
  return {"palfy_identity", true, "both sides " + std::to_string(lhs)};
}

CheckResult check_chain_gene(const SubgroupLattice& SL) {
  int chain = min_totient_chain(SL, TotientVariant::phi).length();
  int mingen = min_generating_size(SL.G());
  if (chain != mingen)
    return {"chain_gene", false,
            "phi-chain length " + std::to_string(chain) +
                " != minimal generating size " + std::to_string(mingen)};
  return {"chain_gene", true, "both " + std::to_string(chain)};
}

CheckResult check_chain_gened(const SubgroupLattice& SL,
                              const CharacterTable& T) {
  int chain = min_totient_chain(SL, TotientVariant::phi_hat).length();
  std::optional<int> components = min_faithful_components(SL.G(), T);
  if (!components)
    return {"chain_gened", false, "no faithful direct sum found"};
  if (*components > chain)
    return {"chain_gened", false,
            "min faithful components " + std::to_string(*components) +
                " > phi_hat-chain length " + std::to_string(chain)};
  return {"chain_gened", true,
          std::to_string(*components) + " <= " + std::to_string(chain)};
}

CheckResult check_dual_euler_lp(const SubgroupLattice& SL,
                                const CharacterTable& T) {
  int tested = 0;
  for (int h = 0; h < SL.lattice.size(); ++h) {
    if (dual_euler_totient(SL, h) == 0) continue;
    ++tested;
    if (!is_linearly_primitive(SL.G(), SL.subgroup(h), T))
      return {"dual_euler_linear_primitivity", false,
              "phi_hat(" + SL.lattice.label(h) +
                  ",G) nonzero but interval not linearly primitive"};
  }
  return {"dual_euler_linear_primitivity", true,
          std::to_string(tested) + " nonzero intervals"};
}

// phi_hat on [h, G] must equal phi evaluated on the order-reversed interval
// with the reversed index weights.
CheckResult check_duality(const SubgroupLattice& SL) {
  const FinLattice& L = SL.lattice;
  for (int h = 0; h < L.size(); ++h) {
    std::vector<int> back;
    FinLattice I = L.interval(h, L.top(), &back);
    FinLattice R = I.reversed();
    MobiusTable mu_rev = mobius_recursive(R);
    std::int64_t phi_reversed = 0;
    const std::int64_t g_order = SL.G().order();
    for (int c = 0; c < R.size(); ++c) {
      std::int64_t weight = g_order / SL.order_of(back[static_cast<size_t>(c)]);
      phi_reversed = checked_add(
          phi_reversed, checked_mul(mu_rev(c, R.top()), weight));
    }
    std::int64_t expected = dual_euler_totient(SL, h);
    if (phi_reversed != expected)
      return {"duality_reversed", false,
              "reversed-lattice phi " + std::to_string(phi_reversed) +
                  " != phi_hat " + std::to_string(expected) + " at " +
                  L.label(h)};
  }
  return {"duality_reversed", true,
          std::to_string(L.size()) + " intervals agree"};
}

}  // namespace

VerifyReport verify_group(const PermGroup& G, double tol, std::uint64_t seed,
                          const GroupCaps& caps) {
  VerifyReport report;
  report.group = G.name();
  report.order = G.order();

  SubgroupLattice SL = build_subgroup_lattice(G, caps);
  MobiusTable mu = mobius_recursive(SL.lattice);
  CharacterTable T = character_table(G, tol, seed);

  TotientValues top_values = interval_totients(SL, SL.trivial_index(),
                                               SL.whole_index());
  report.phi = top_values.phi;
  report.phi_hat = top_values.phi_hat;
  report.chi = top_values.chi;
  report.faithful_irrep = has_faithful_irrep(T);

  report.checks.push_back(check_hall_identity(SL));
  report.checks.push_back(check_eulercyclic(SL, top_values.phi));
  report.checks.push_back(
      {"frattini_factorization", frattini_factorization_check(SL), ""});
  report.checks.push_back(
      {"kratzer_thevenaz", kratzer_thevenaz_check(SL), ""});
  report.checks.push_back(check_crosscut(SL, mu));
  report.checks.push_back(check_palfy(G, T, caps));
  report.checks.push_back(check_chain_gene(SL));
  report.checks.push_back(check_chain_gened(SL, T));
  report.checks.push_back(check_dual_euler_lp(SL, T));
  report.checks.push_back(check_duality(SL));
  return report;
}

std::optional<ScanKind> scan_kind_from_name(const std::string& name) {
  if (name == "verify") return ScanKind::verify;
  if (name == "boolean_phi") return ScanKind::boolean_phi;
  if (name == "golden_bound") return ScanKind::golden_bound;
  if (name == "brown_chi") return ScanKind::brown_chi;
  if (name == "eulerian_boolean") return ScanKind::eulerian_boolean;
  if (name == "remark_conv") return ScanKind::remark_conv;
  if (name == "all") return ScanKind::all;
  return std::nullopt;
}

std::string scan_kind_name(ScanKind kind) {
  switch (kind) {
    case ScanKind::verify: return "verify";
    case ScanKind::boolean_phi: return "boolean_phi";
    case ScanKind::golden_bound: return "golden_bound";
    case ScanKind::brown_chi: return "brown_chi";
    case ScanKind::eulerian_boolean: return "eulerian_boolean";
    case ScanKind::remark_conv: return "remark_conv";
    case ScanKind::all: return "all";
  }
  return "?";
}

namespace {

ScanRecord base_record(const PermGroup& G, const std::string& check) {
  ScanRecord rec;
  rec.group = G.name();
  rec.group_order = G.order();
  rec.check = check;
  rec.top_label = G.name();
  return rec;
}

void scan_verify(const PermGroup& G, const ScanOptions& opt,
                 std::vector<ScanRecord>& out) {
  VerifyReport vr = verify_group(G, opt.tol, opt.seed, opt.caps);
  ScanRecord rec = base_record(G, "verify");
  rec.values = {vr.phi, vr.phi_hat, vr.chi};
  rec.status = vr.all_pass() ? "pass" : "fail";
  std::string failed;
  for (const CheckResult& c : vr.checks)
    if (!c.pass) failed += (failed.empty() ? "" : ", ") + c.name;
  rec.detail = vr.all_pass()
                   ? std::to_string(vr.checks.size()) + " checks pass" +
                         (vr.faithful_irrep ? "; faithful irrep" : "")
                   : "failed: " + failed;
  out.push_back(std::move(rec));
}

void scan_boolean_intervals(const PermGroup& G, bool golden,
                            const ScanOptions& opt,
                            std::vector<ScanRecord>& out) {
  SubgroupLattice SL = build_subgroup_lattice(G, opt.caps);
  const FinLattice& L = SL.lattice;
  const double golden_ratio = (1.0 + std::sqrt(5.0)) / 2.0;
  for (int h = 0; h < L.size(); ++h)
    for (int k = 0; k < L.size(); ++k) {
      if (h == k || !L.leq(h, k)) continue;
      FinLattice I = L.interval(h, k);
      if (!is_boolean(I)) continue;
      int rank = static_cast<int>(I.atoms().size());
      TotientValues v = interval_totients(SL, h, k);
      if (!golden) {
        // Rank-1 intervals have phi = |K:H| - 1 > 0; only report rank >= 2
        // unless something is actually wrong.
        if (rank < 2 && v.phi != 0) continue;
        ScanRecord rec = base_record(G, "boolean_phi");
        rec.sub_label = L.label(h);
        rec.top_label = L.label(k);
        rec.values = v;
        rec.stats = lattice_stats(I);
        rec.status = v.phi != 0 ? "pass" : "counterexample";
        rec.detail = "Boolean rank " + std::to_string(rank) + ", " +
                     totient_summary(v);
        out.push_back(std::move(rec));
      } else {
        if (rank < 2) continue;
        double bound = std::pow(golden_ratio, rank - 1);
        ScanRecord rec = base_record(G, "golden_bound");
        rec.sub_label = L.label(h);
        rec.top_label = L.label(k);
        rec.values = v;
        rec.stats = lattice_stats(I);
        rec.status = "report";
        rec.detail = "phi=" + std::to_string(v.phi) +
                     (static_cast<double>(v.phi) >= bound ? " >= " : " < ") +
                     "golden^" + std::to_string(rank - 1);
        out.push_back(std::move(rec));
      }
    }
}

void scan_brown_chi(const PermGroup& G, const ScanOptions& opt,
                    std::vector<ScanRecord>& out) {
  SubgroupLattice SL = build_subgroup_lattice(G, opt.caps);
  TotientValues v =
      interval_totients(SL, SL.trivial_index(), SL.whole_index());
  bool solvable = is_solvable(G);
  ScanRecord rec = base_record(G, "brown_chi");
  rec.values = v;
  rec.stats = lattice_stats(SL.lattice);
  if (solvable) {
    rec.status = v.chi != 0 ? "pass" : "fail";
    rec.detail = "solvable, chi=" + std::to_string(v.chi);
  } else {
    rec.status = v.chi != 0 ? "report" : "counterexample";
    rec.detail = "not solvable, chi=" + std::to_string(v.chi);
  }
  out.push_back(std::move(rec));
}

void scan_eulerian_boolean(const PermGroup& G, const ScanOptions& opt,
                           std::vector<ScanRecord>& out) {
  SubgroupLattice SL = build_subgroup_lattice(G, opt.caps);
  LatticeStats stats = lattice_stats(SL.lattice);
  ScanRecord rec = base_record(G, "eulerian_boolean");
  rec.stats = stats;
  rec.values = interval_totients(SL, SL.trivial_index(), SL.whole_index());
  if (stats.eulerian && !stats.boolean) {
    rec.status = "counterexample";
    rec.detail = "Eulerian subgroup lattice that is not Boolean";
  } else {
    rec.status = "pass";
    rec.detail = stats.eulerian ? "Eulerian and Boolean" : "not Eulerian";
  }
  out.push_back(std::move(rec));
}

void scan_remark_conv(const PermGroup& G, const ScanOptions& opt,
                      std::vector<ScanRecord>& out) {
  SubgroupLattice SL = build_subgroup_lattice(G, opt.caps);
  bool own_bottom =
      bottom_interval_top(SL.lattice) == SL.lattice.top();
  TotientValues v =
      interval_totients(SL, SL.trivial_index(), SL.whole_index());
  CharacterTable T = character_table(G, opt.tol, opt.seed);
  bool faithful = has_faithful_irrep(T);

  ScanRecord rec = base_record(G, "remark_conv");
  rec.values = v;
  rec.stats = lattice_stats(SL.lattice);
  bool converse_counterexample = own_bottom && faithful && v.phi_hat == 0;
  rec.status = converse_counterexample ? "counterexample" : "pass";
  rec.detail = std::string("own bottom interval: ") +
               (own_bottom ? "yes" : "no") + "; faithful irrep: " +
               (faithful ? "yes" : "no") + "; phi_hat=" +
               std::to_string(v.phi_hat);
  if (faithful && !corefree_dual_criterion(SL).has_value())
    rec.detail += "; corefree-converse-counterexample";
  out.push_back(std::move(rec));
}

void run_scans_for_group(const PermGroup& G, ScanKind kind,
                         const ScanOptions& opt,
                         std::vector<ScanRecord>& out) {
  auto run_one = [&](ScanKind k) {
    switch (k) {
      case ScanKind::verify: scan_verify(G, opt, out); break;
      case ScanKind::boolean_phi: scan_boolean_intervals(G, false, opt, out); break;
      case ScanKind::golden_bound: scan_boolean_intervals(G, true, opt, out); break;
      case ScanKind::brown_chi: scan_brown_chi(G, opt, out); break;
      case ScanKind::eulerian_boolean: scan_eulerian_boolean(G, opt, out); break;
      case ScanKind::remark_conv: scan_remark_conv(G, opt, out); break;
      case ScanKind::all: break;
    }
  };
  if (kind == ScanKind::all) {
    for (ScanKind k : {ScanKind::verify, ScanKind::boolean_phi,
                       ScanKind::golden_bound, ScanKind::brown_chi,
                       ScanKind::eulerian_boolean, ScanKind::remark_conv})
      run_one(k);
  } else {
    run_one(kind);
  }
}

template <typename Item, typename Fn>
std::vector<std::vector<ScanRecord>> parallel_map(const std::vector<Item>& items,
                                                  int jobs, Fn&& fn) {
  std::vector<std::vector<ScanRecord>> results(items.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      try {
        fn(items[i], results[i]);
      } catch (const std::exception& e) {
        ScanRecord rec;
        rec.check = "scan";
        rec.status = "error";
        rec.detail = e.what();
        results[i] = {std::move(rec)};
      }
    }
  };
  int thread_count = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
  if (thread_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return results;
}

}  // namespace

std::vector<ScanRecord> conjecture_scan(const std::vector<std::string>& specs,
                                        ScanKind kind,
                                        const ScanOptions& options) {
  auto results = parallel_map(specs, options.jobs,
                              [&](const std::string& spec,
                                  std::vector<ScanRecord>& out) {
                                PermGroup G = parse_group_spec(spec, options.caps);
                                if (G.name().empty()) G.set_name(spec);
                                run_scans_for_group(G, kind, options, out);
                              });
  std::vector<ScanRecord> flat;
  for (size_t i = 0; i < results.size(); ++i) {
    for (ScanRecord& rec : results[i]) {
      if (rec.group.empty()) rec.group = specs[i];
      flat.push_back(std::move(rec));
    }
  }
  return flat;
}

std::vector<ScanRecord> conjecture_scan_groups(
    const std::vector<const PermGroup*>& groups, ScanKind kind,
    const ScanOptions& options) {
  auto results = parallel_map(groups, options.jobs,
                              [&](const PermGroup* G,
                                  std::vector<ScanRecord>& out) {
                                run_scans_for_group(*G, kind, options, out);
                              });
  std::vector<ScanRecord> flat;
  for (size_t i = 0; i < results.size(); ++i)
    for (ScanRecord& rec : results[i]) {
      if (rec.group.empty()) rec.group = groups[i]->name();
      flat.push_back(std::move(rec));
    }
  return flat;
}

std::vector<std::string> catalog_group_specs() {
  std::vector<std::string> specs;
  for (int n = 1; n <= 48; ++n) specs.push_back("C" + std::to_string(n));
  for (const char* s : {"D8", "D12", "Q8", "M16", "S3", "S4", "A4", "C2xC2",
                        "C2xC2xC2", "C6xC2"})
    specs.push_back(s);
  return specs;
}

namespace {

nlohmann::json record_to_json(const ScanRecord& rec) {
  return nlohmann::json{
      {"group", rec.group},
      {"order", rec.group_order},
      {"check", rec.check},
      {"sub", rec.sub_label},
      {"top", rec.top_label},
      {"phi", rec.values.phi},
      {"phi_hat", rec.values.phi_hat},
      {"chi", rec.values.chi},
      {"lattice",
       {{"size", rec.stats.size},
        {"atoms", rec.stats.atom_count},
        {"coatoms", rec.stats.coatom_count},
        {"boolean", rec.stats.boolean},
        {"eulerian", rec.stats.eulerian}}},
      {"status", rec.status},
      {"detail", rec.detail},
  };
}

}  // namespace

std::string scan_records_to_jsonl(const std::vector<ScanRecord>& records) {
  std::ostringstream out;
  for (const ScanRecord& rec : records) out << record_to_json(rec).dump() << "\n";
  return out.str();
}

std::string scan_records_to_table(const std::vector<ScanRecord>& records) {
  std::ostringstream out;
  out << std::left << std::setw(22) << "group" << std::setw(18) << "check"
      << std::setw(10) << "sub" << std::setw(8) << "phi" << std::setw(9)
      << "phi_hat" << std::setw(8) << "chi" << std::setw(16) << "status"
      << "detail\n";
  for (const ScanRecord& rec : records)
    out << std::left << std::setw(22) << rec.group << std::setw(18) << rec.check
        << std::setw(10) << rec.sub_label << std::setw(8) << rec.values.phi
        << std::setw(9) << rec.values.phi_hat << std::setw(8) << rec.values.chi
        << std::setw(16) << rec.status << rec.detail << "\n";
  return out.str();
}

}  // namespace grouplat
