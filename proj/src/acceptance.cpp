#include <bqg/acceptance.hpp>

#include <bqg/catalog.hpp>
#include <bqg/colimit.hpp>
#include <bqg/limits.hpp>
#include <bqg/spaces.hpp>

#include <chrono>
#include <cstdio>
#include <sstream>

namespace bqg {

namespace {

FgAbelianGroup free_group(std::size_t rank) { return FgAbelianGroup{rank, {}}; }

FgAbelianGroup torsion_group(std::size_t rank, const std::vector<Integer>& orders) {
  return FgAbelianGroup::from_cyclic_orders(rank, orders);
}

FgAbelianGroup degree(const std::vector<FgAbelianGroup>& lim, std::size_t s) {
  return s < lim.size() ? lim[s] : FgAbelianGroup{};
}

std::string list(const std::vector<FgAbelianGroup>& gs) {
  std::string s = "[";
  for (std::size_t i = 0; i < gs.size(); ++i) s += (i ? ", " : "") + gs[i].to_string();
  return s + "]";
}

FiniteGroup g2(bool minus) { return catalog(minus ? "extraspecial_minus" : "extraspecial_plus", {2}); }

CheckOutcome extraspecial_limits() {
  CheckOutcome out{true, ""};
  const std::vector<Integer> nine(9, 2);
  for (bool minus : {false, true}) {
    const auto r = rep_ring_limits_cech(g2(minus), 2);
    bool ok = degree(r.lim, 0) == free_group(32) && degree(r.lim, 1) == torsion_group(0, nine);
    for (std::size_t s = 2; s < r.lim.size(); ++s) ok = ok && r.lim[s].is_zero();
    out.passed = out.passed && ok;
    out.detail += std::string(minus ? "minus " : "plus ") + list(r.lim) + "; ";
  }
  return out;
}

CheckOutcome extraspecial_ktheory() {
  const auto r = ktheory_report(g2(false));
  const bool ok = r.collapse_certified && r.k0 == "Z + Z_2^31" &&
                  r.k1_group == torsion_group(0, std::vector<Integer>(9, 2));
  return {ok, "K0 = " + r.k0 + ", K1 = " + r.k1 +
                  (r.collapse_certified ? ", collapse certified" : ", collapse not certified")};
}

CheckOutcome extraspecial_colimits() {
  CheckOutcome out{true, ""};
  for (bool minus : {false, true}) {
    const auto c = verify_extraspecial_colimit(2, minus);
    const bool ok = c.passed() && c.colimit_order == 64;
    out.passed = out.passed && ok;
    out.detail += std::string(minus ? "minus" : "plus") + ": order " +
                  std::to_string(c.colimit_order) + ", kernel central of order 2 " +
                  (c.kernel_order_two && c.kernel_central ? "yes" : "no") + ", complement " +
                  (c.complement_found && c.complement_isomorphic ? "found" : "missing") + "; ";
  }
  return out;
}

CheckOutcome extraspecial_cover() {
  const auto u = universal_cover_homology(g2(false));
  const auto& h = u.nerve.homology;
  const bool ok = u.nerve.euler_characteristic == 152 && h.size() == 3 && h[0] == free_group(1) &&
                  h[1].is_zero() && h[2] == free_group(151) && u.simply_connected;
  return {ok, "chi = " + std::to_string(u.nerve.euler_characteristic) + ", H = " + list(h) +
                  ", colimit order " + std::to_string(u.colimit_order)};
}

CheckOutcome rank2_reduction() {
  CheckOutcome out{true, ""};
  std::size_t compared = 0, skipped = 0;
  for (const auto& e : catalog_sweep(64)) {
    const auto r = compare_rank2(catalog(e.name, e.params));
    if (r.full_status != r.reduced_status) {
      out.passed = false;
      out.detail += e.label() + " completes for one presentation only; ";
      continue;
    }
    if (!r.both_complete()) {
      ++skipped;
      continue;
    }
    ++compared;
    if (!r.isomorphic || r.full_order != r.reduced_order) {
      out.passed = false;
      out.detail += e.label() + " differs; ";
    }
  }
  if (compared == 0) out.passed = false;
  out.detail += std::to_string(compared) + " groups compared, " + std::to_string(skipped) +
                " beyond the coset cap";
  return out;
}

// Both sweep criteria read the same Cech computations.
struct LimitSweepEntry {
  std::string label;
  std::uint64_t prime;
  std::size_t n_p;
  std::vector<FgAbelianGroup> lim;
};

std::vector<LimitSweepEntry> limit_sweep() {
  std::vector<LimitSweepEntry> out;
  for (const auto& e : catalog_sweep(64)) {
    const auto g = catalog(e.name, e.params);
    const auto census = element_census(g);
    for (auto p : prime_divisors(g.order())) {
      auto it = census.prime_power_counts.find(p);
      out.push_back({e.label(), p, it == census.prime_power_counts.end() ? 0 : it->second,
                     rep_ring_limits_cech(g, p).lim});
    }
  }
  return out;
}

CheckOutcome rank_law() {
  CheckOutcome out{true, ""};
  const auto sweep = limit_sweep();
  for (const auto& s : sweep) {
    const auto& l0 = degree(s.lim, 0);
    if (!l0.is_free() || l0.rank != s.n_p + 1) {
      out.passed = false;
      out.detail += s.label + " p=" + std::to_string(s.prime) + ": lim0 = " + l0.to_string() +
                    ", n_p = " + std::to_string(s.n_p) + "; ";
    }
  }
  out.detail += std::to_string(sweep.size()) + " (group, prime) pairs";
  return out;
}

CheckOutcome rational_vanishing() {
  CheckOutcome out{true, ""};
  const auto sweep = limit_sweep();
  for (const auto& s : sweep)
    for (std::size_t k = 1; k < s.lim.size(); ++k)
      if (s.lim[k].rank != 0) {
        out.passed = false;
        out.detail += s.label + " has free lim^" + std::to_string(k) + "; ";
      }
  for (const char* name : {"dihedral:8", "quaternion8", "symmetric:3"}) {
    std::vector<long long> params;
    std::string n = name;
    if (auto c = n.find(':'); c != std::string::npos) {
      params.push_back(std::stoll(n.substr(c + 1)));
      n = n.substr(0, c);
    }
    const auto g = catalog(n, params);
    for (auto p : prime_divisors(g.order())) {
      const auto lim = rep_ring_limits_cech(g, p).lim;
      for (std::size_t k = 1; k < lim.size(); ++k)
        if (!lim[k].is_zero()) {
          out.passed = false;
          out.detail += std::string(name) + " has nonzero lim^" + std::to_string(k) + "; ";
        }
    }
  }
  const auto g2lim = rep_ring_limits_cech(g2(false), 2).lim;
  if (degree(g2lim, 1).torsion.empty()) {
    out.passed = false;
    out.detail += "extraspecial_plus:2 shows no torsion in lim^1; ";
  }
  out.detail += std::to_string(sweep.size()) + " pairs; TC groups D8, Q8, S3 have no higher limits; "
                "G2 lim^1 = " + degree(g2lim, 1).to_string();
  return out;
}

CheckOutcome stable_splitting() {
  CheckOutcome out{true, ""};
  const std::vector<CatalogEntry> groups = {
      {"cyclic", {6}}, {"cyclic", {12}}, {"symmetric", {3}}, {"dihedral", {12}}};
  for (const auto& e : groups) {
    const auto r = splitting_report(catalog(e.name, e.params), 2, 3);
    if (!r.passed) {
      out.passed = false;
      out.detail += e.label() + " does not split; ";
    }
  }
  // Homology of a cyclic group: Z/n in odd degrees, 0 in positive even ones.
  for (long n : {6L, 12L}) {
    const auto h = bqg_homology(cyclic_group(static_cast<std::size_t>(n)), 2, 3);
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto want = k % 2 ? torsion_group(0, {Integer(n)}) : FgAbelianGroup{};
      if (!(h[k] == want)) {
        out.passed = false;
        out.detail += "H_" + std::to_string(k) + "(Z/" + std::to_string(n) + ") = " +
                      h[k].to_string() + "; ";
      }
    }
  }
  const auto z6 = bqg_homology(cyclic_group(6), 2, 3);
  const auto sum = direct_sum(torsion_group(0, {2}), torsion_group(0, {3}));
  if (!(z6[1] == sum && z6[3] == sum)) out.passed = false;
  out.detail += "Z/6: H1 = " + z6[1].to_string() + ", H3 = " + z6[3].to_string() +
                ", Z/2 + Z/3 = " + sum.to_string();
  return out;
}

CheckOutcome fundamental_group() {
  CheckOutcome out{true, ""};
  std::size_t checked = 0;
  for (const auto& e : catalog_sweep(32)) {
    const auto g = catalog(e.name, e.params);
    const auto h1 = bqg_homology(g, 2, 1)[1];
    const auto ab = abelianization(abelian_colimit_presentation(nilpotent_poset(g, 2).members()));
    ++checked;
    if (!(h1 == ab)) {
      out.passed = false;
      out.detail += e.label() + ": H1 = " + h1.to_string() + ", abelianization " +
                    ab.to_string() + "; ";
    }
  }
  const auto s3 = bqg_homology(catalog("symmetric", {3}), 2, 1)[1];
  if (!(s3 == torsion_group(0, {3, 2, 2, 2}))) out.passed = false;
  out.detail += std::to_string(checked) + " groups; S3: H1 = " + s3.to_string();
  return out;
}

CheckOutcome coset_posets() {
  CheckOutcome out{true, ""};
  std::size_t checked = 0;
  for (const auto& e : catalog_sweep(24)) {
    const auto g = catalog(e.name, e.params);
    if (!is_solvable(g)) continue;
    const auto w = verify_wedge_spheres(g);
    ++checked;
    if (!w.passed) {
      out.passed = false;
      out.detail += e.label() + " reduced homology " + list(w.reduced_homology) + " with d = " +
                    std::to_string(w.d) + "; ";
    }
  }
  const auto v4 = catalog("abelian", {2, 2});
  const auto p = coset_poset(v4);
  const auto w = verify_wedge_spheres(v4);
  if (p.size != 10 || w.d != 2 || w.spheres != 3) out.passed = false;
  out.detail += std::to_string(checked) + " solvable groups; Z/2 x Z/2: " +
                std::to_string(p.size) + " cosets, " + std::to_string(w.spheres) +
                " spheres of dimension " + std::to_string(w.d - 1);
  return out;
}

CheckOutcome limit_engines_agree() {
  CheckOutcome out{true, ""};
  std::size_t pairs = 0;
  for (const auto& e : catalog_sweep(32)) {
    const auto g = catalog(e.name, e.params);
    for (auto p : prime_divisors(g.order())) {
      const auto cech = rep_ring_limits_cech(g, p);
      const auto bar = rep_ring_limits_bar(g, p, 3);
      ++pairs;
      const auto top = std::min(3, bar.reliable_top);
      for (int s = 0; s <= top; ++s)
        if (!(degree(cech.lim, static_cast<std::size_t>(s)) ==
              degree(bar.lim, static_cast<std::size_t>(s)))) {
          out.passed = false;
          out.detail += e.label() + " p=" + std::to_string(p) + " degree " + std::to_string(s) +
                        ": " + degree(cech.lim, static_cast<std::size_t>(s)).to_string() +
                        " vs " + degree(bar.lim, static_cast<std::size_t>(s)).to_string() + "; ";
        }
      if (top < 3) {
        out.passed = false;
        out.detail += e.label() + " bar complex unreliable past degree " + std::to_string(top) + "; ";
      }
    }
  }
  out.detail += std::to_string(pairs) + " (group, prime) pairs agree through degree 3";
  return out;
}

}  // namespace

const std::vector<AcceptanceCheck>& acceptance_checks() {
  static const std::vector<AcceptanceCheck> checks = {
      {1, "rep-ring higher limits of both extraspecial groups of order 32", 10, extraspecial_limits},
      {2, "K-theory of extraspecial_plus:2", 10, extraspecial_ktheory},
      {3, "abelian colimit of order-32 extraspecial groups splits off Z/2", 60, extraspecial_colimits},
      {4, "homology of the universal cover of B(2, extraspecial_plus:2)", 60, extraspecial_cover},
      {5, "rank-2 reduced colimit presentations enumerate the same group", 300, rank2_reduction},
      {6, "rank of lim^0 equals n_p + 1", 120, rank_law},
      {7, "higher limits are torsion", 120, rational_vanishing},
      {8, "stable splitting of B(2,G) over primes", 300, stable_splitting},
      {9, "H1 of B(2,G) equals the abelianized colimit", 300, fundamental_group},
      {10, "coset posets of solvable groups are wedges of spheres", 120, coset_posets},
      {11, "Cech and bar higher limits agree", 300, limit_engines_agree},
  };
  return checks;
}

CheckResult run_check(const AcceptanceCheck& c) {
  CheckResult r{c.id, c.title, false, "", 0, c.budget_seconds};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const auto o = c.run();
    r.passed = o.passed;
    r.detail = o.detail;
  } catch (const Error& e) {
    r.detail = std::string(error_code_name(e.code())) + ": " + e.what();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.seconds > r.budget_seconds) {
    r.passed = false;
    r.detail += " (over the time budget)";
  }
  return r;
}

std::vector<CheckResult> run_suite(const std::string& suite) {
  if (suite != "paper") fail(ErrorCode::UnknownName, "unknown suite '" + suite + "'");
  std::vector<CheckResult> out;
  for (const auto& c : acceptance_checks()) out.push_back(run_check(c));
  return out;
}

Json to_json(const std::vector<CheckResult>& results) {
  Json checks = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    checks.push_back(Json{{"id", r.id},
                          {"title", r.title},
                          {"passed", r.passed},
                          {"detail", r.detail},
                          {"seconds", r.seconds},
                          {"budget_seconds", r.budget_seconds}});
  }
  return Json{{"command", "verify"}, {"suite", "paper"}, {"passed", all}, {"checks", checks}};
}

std::string render_suite(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& r : results) {
    char t[32];
    std::snprintf(t, sizeof t, "%.2fs", r.seconds);
    out << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.title << "  (" << t << ")\n"
        << "      " << r.detail << '\n';
    if (r.passed) ++passed;
  }
  out << passed << "/" << results.size() << " checks passed\n";
  return out.str();
}

}  // namespace bqg
