#include <bqg/report.hpp>

#include <bqg/abelian.hpp>
#include <bqg/colimit.hpp>
#include <bqg/limits.hpp>
#include <bqg/spaces.hpp>

#include <functional>
#include <map>
#include <sstream>

namespace bqg {

namespace {

void check_options(const FiniteGroup& g, const RunOptions& o) {
  if (o.q < 2) fail(ErrorCode::UnsupportedParam, "q must be at least 2");
  if (o.prime) {
    const auto ps = prime_divisors(g.order());
    if (std::find(ps.begin(), ps.end(), *o.prime) == ps.end())
      fail(ErrorCode::UnsupportedParam,
           "prime " + std::to_string(*o.prime) + " does not divide the group order");
  }
  if (o.coset_cap == 0) fail(ErrorCode::UnsupportedParam, "coset cap must be positive");
}

std::size_t max_deg_of(const FiniteGroup& g, const RunOptions& o) {
  return o.max_deg ? *o.max_deg : default_max_deg(g);
}

Json subgroup_json(const Subgroup& h) {
  const auto& g = h.parent();
  Json gens = Json::array();
  for (Elem x : h.generators()) gens.push_back(g.name_of(x));
  Json j{{"order", h.order()}, {"generators", gens}, {"abelian", h.is_abelian()}};
  if (h.is_abelian()) j["invariants"] = abelian_invariants(h);
  return j;
}

Json census_json(const ElementCensus& c) {
  Json counts = Json::object();
  for (const auto& [p, n] : c.prime_power_counts) counts[std::to_string(p)] = n;
  return Json{{"prime_power_counts", counts}, {"mixed_order_count", c.mixed_order_count}};
}

const char* status_name(EnumerationStatus s) {
  return s == EnumerationStatus::Complete ? "complete" : "cap_exceeded";
}

std::vector<std::uint64_t> primes_for(const FiniteGroup& g, const RunOptions& o) {
  if (o.prime) return {*o.prime};
  return prime_divisors(g.order());
}

}  // namespace

Json report_group_info(const FiniteGroup& g) {
  Json j{{"command", "group-info"}, {"order", g.order()}};
  j["abelian"] = g.is_abelian();
  j["center_order"] = center(g).order();
  j["derived_order"] = derived_subgroup(whole_group(g)).order();
  const auto cls = nilpotency_class(whole_group(g));
  j["nilpotency_class"] = cls ? Json(*cls) : Json(nullptr);
  j["solvable"] = is_solvable(g);
  j["transitively_commutative"] = !g.is_abelian() && is_transitively_commutative(g);
  j["census"] = census_json(element_census(g));
  j["names"] = g.names();
  j["table"] = g.table();
  return j;
}

Json report_poset(const FiniteGroup& g, const RunOptions& o) {
  check_options(g, o);
  const auto p = o.prime ? nilpotent_p_poset(g, o.q, *o.prime) : nilpotent_poset(g, o.q);
  Json j{{"command", "poset"}, {"q", o.q}};
  j["prime"] = o.prime ? Json(*o.prime) : Json(nullptr);
  j["size"] = p.size();
  Json members = Json::array();
  for (const auto& h : p.members()) members.push_back(subgroup_json(h));
  j["members"] = members;
  Json edges = Json::array();
  for (const auto& [a, b] : p.hasse_edges()) edges.push_back({a, b});
  j["hasse_edges"] = edges;
  const auto maximals = maximal_members(p);
  Json mx = Json::array();
  for (const auto& m : maximals) mx.push_back(*p.index_of(m));
  j["maximals"] = mx;
  j["intersection_closure_size"] = intersection_closure(maximals).size();
  return j;
}

Json report_colimit(const FiniteGroup& g, const RunOptions& o) {
  check_options(g, o);
  const auto r = colimit_group(g, o.q, o.coset_cap);
  Json j{{"command", "colimit"}, {"q", r.q}, {"reduced", r.reduced}};
  j["collection_size"] = r.collection_size;
  j["generators"] = r.presentation.generator_count();
  j["relators"] = r.presentation.relators.size();
  j["abelianization"] = to_json(abelianization(r.presentation));
  j["status"] = status_name(r.table.status);
  j["coset_cap"] = o.coset_cap;
  j["peak_cosets"] = r.table.peak_cosets;
  j["order"] = r.order ? Json(*r.order) : Json(nullptr);
  if (r.complete()) {
    j["psi_homomorphism"] = r.psi_homomorphism;
    j["psi_surjective"] = r.psi_surjective;
    j["psi_kernel_order"] = r.psi_kernel_order;
    j["kernel_central"] = r.kernel_central;
  }
  return j;
}

Json report_higher_limits(const FiniteGroup& g, const RunOptions& o) {
  check_options(g, o);
  Json j{{"command", "higher-limits"}, {"functor", "representation ring"}};
  Json per = Json::array();
  for (auto p : primes_for(g, o)) {
    auto r = rep_ring_limits_cech(g, p);
    if (o.max_deg && r.lim.size() > *o.max_deg + 1) r.lim.resize(*o.max_deg + 1);
    const auto census = element_census(g);
    auto it = census.prime_power_counts.find(p);
    per.push_back(Json{{"prime", p},
                       {"method", r.method},
                       {"maximal_count", r.maximal_count},
                       {"cochain_ranks", r.cochain_ranks},
                       {"n_p", it == census.prime_power_counts.end() ? 0 : it->second},
                       {"lim", to_json(r.lim)}});
  }
  j["primes"] = per;
  if (per.size() == 1) j["lim"] = per[0]["lim"];
  return j;
}

Json report_homology(const FiniteGroup& g, const RunOptions& o) {
  check_options(g, o);
  const auto deg = max_deg_of(g, o);
  const auto data = bqg_simplices(g, o.q, deg, o.prime);
  auto h = homology_all(data.chains());
  h.resize(deg + 1);
  Json j{{"command", "homology"}, {"q", o.q}};
  j["prime"] = o.prime ? Json(*o.prime) : Json(nullptr);
  j["max_deg"] = deg;
  j["simplex_counts"] = data.counts;
  j["homology"] = to_json(h);
  j["reduced_homology"] = to_json(reduced(h));
  return j;
}

Json report_universal_cover(const FiniteGroup& g, const RunOptions& o) {
  check_options(g, o);
  const auto u = universal_cover_homology(g, o.q, o.coset_cap);
  Json j{{"command", "universal-cover"}, {"q", o.q}};
  j["colimit_order"] = u.colimit_order;
  j["poset_size"] = u.poset_size;
  j["simplex_counts"] = u.nerve.simplex_counts;
  j["homology"] = to_json(u.nerve.homology);
  j["euler_characteristic"] = u.nerve.euler_characteristic;
  j["simply_connected"] = u.simply_connected;
  return j;
}

Json report_coset_poset(const FiniteGroup& g, const RunOptions& o) {
  check_options(g, o);
  const auto h = coset_poset_homology(g);
  const auto chief = complemented_chief_factors(g);
  const auto w = verify_wedge_spheres(g);
  Json j{{"command", "coset-poset"}};
  j["vertices"] = h.simplex_counts.empty() ? 0 : h.simplex_counts[0];
  j["simplex_counts"] = h.simplex_counts;
  j["euler_characteristic"] = h.euler_characteristic;
  j["reduced_homology"] = to_json(reduced(h.homology));
  Json series = Json::array();
  for (const auto& n : chief.series) series.push_back(n.order());
  j["chief_series_orders"] = series;
  j["complemented"] = chief.complemented;
  j["d"] = chief.d;
  j["wedge_of_spheres"] = w.passed;
  j["sphere_dimension"] = chief.d == 0 ? Json(nullptr) : Json(chief.d - 1);
  j["spheres"] = w.spheres;
  return j;
}

Json report_splitting(const FiniteGroup& g, const RunOptions& o) {
  check_options(g, o);
  const auto r = splitting_report(g, o.q, max_deg_of(g, o));
  Json j{{"command", "splitting"}, {"q", o.q}, {"passed", r.passed}};
  Json degrees = Json::array();
  for (const auto& d : r.degrees) {
    Json per = Json::object();
    for (const auto& [p, a] : d.per_prime) per[std::to_string(p)] = to_json(a);
    degrees.push_back(Json{{"degree", d.degree},
                           {"whole", to_json(d.whole)},
                           {"per_prime", per},
                           {"sum", to_json(d.sum)},
                           {"equal", d.equal}});
  }
  j["degrees"] = degrees;
  return j;
}

Json report_ktheory(const FiniteGroup& g, const RunOptions& o) {
  check_options(g, o);
  const auto r = ktheory_report(g);
  Json j{{"command", "ktheory"}};
  Json per = Json::array();
  for (const auto& p : r.primes)
    per.push_back(Json{{"prime", p.prime},
                       {"n_p", p.n_p},
                       {"lim", to_json(p.lim)},
                       {"collapse_certified", p.collapse_certified}});
  j["primes"] = per;
  j["collapse_certified"] = r.collapse_certified;
  j["K0"] = r.collapse_certified ? Json(r.k0) : Json(nullptr);
  j["K1"] = r.collapse_certified ? Json(r.k1) : Json(nullptr);
  j["K1_group"] = r.collapse_certified ? to_json(r.k1_group) : Json(nullptr);
  j["rational_K0"] = r.rational_k0;
  j["rational_K1"] = r.rational_k1;
  return j;
}

namespace {

using Handler = std::function<Json(const FiniteGroup&, const RunOptions&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h = {
      {"group-info", [](const FiniteGroup& g, const RunOptions&) { return report_group_info(g); }},
      {"poset", report_poset},
      {"colimit", report_colimit},
      {"higher-limits", report_higher_limits},
      {"homology", report_homology},
      {"universal-cover", report_universal_cover},
      {"coset-poset", report_coset_poset},
      {"splitting", report_splitting},
      {"ktheory", report_ktheory},
  };
  return h;
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

void render(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    if (j.contains("text") && j.contains("rank") && j.contains("torsion")) {
      out << ' ' << j["text"].get<std::string>() << '\n';
      return;
    }
    out << '\n';
    for (const auto& [k, v] : j.items()) {
      out << pad << k << ':';
      render(out, v, indent + 2);
    }
    return;
  }
  if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), is_scalar);
    if (flat && j.size() <= 32) {
      out << ' ' << j.dump() << '\n';
      return;
    }
    if (flat) {
      out << " [" << j.size() << " entries]\n";
      return;
    }
    out << '\n';
    std::size_t i = 0;
    for (const auto& v : j) {
      out << pad << '[' << i++ << "]";
      render(out, v, indent + 2);
    }
    return;
  }
  out << ' ' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

}  // namespace

bool is_group_command(const std::string& command) { return handlers().count(command) > 0; }

Json run_command(const std::string& command, const FiniteGroup& g, const RunOptions& o) {
  auto it = handlers().find(command);
  if (it == handlers().end()) fail(ErrorCode::UnknownName, "unknown command '" + command + "'");
  return it->second(g, o);
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  Json shown = report;
  if (shown.is_object() && shown.contains("table") && shown["table"].size() > 16)
    shown["table"] = "(" + std::to_string(shown["table"].size()) + " x " +
                     std::to_string(shown["table"].size()) + " Cayley table; use --format json)";
  if (shown.is_object()) {
    for (const auto& [k, v] : shown.items()) {
      out << k << ':';
      render(out, v, 2);
    }
  } else {
    render(out, shown, 0);
  }
  return out.str();
}

}  // namespace bqg
