#include <bqg/io.hpp>

#include <bqg/catalog.hpp>

#include <fstream>
#include <sstream>

namespace bqg {

namespace {

long long parse_param(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size())
    fail(ErrorCode::InvalidInput, "catalog parameter '" + s + "' is not an integer");
  return v;
}

}  // namespace

FiniteGroup group_from_json(const Json& j) {
  try {
    if (!j.is_object()) fail(ErrorCode::InvalidInput, "group JSON must be an object");
    if (j.contains("catalog")) {
      std::vector<long long> params;
      if (j.contains("params")) params = j.at("params").get<std::vector<long long>>();
      return catalog(j.at("catalog").get<std::string>(), params);
    }
    if (j.contains("table")) {
      auto table = j.at("table").get<std::vector<std::vector<Elem>>>();
      if (j.contains("order") && j.at("order").get<std::size_t>() != table.size())
        fail(ErrorCode::InvalidInput, "order does not match the table size");
      std::vector<std::string> names;
      if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
      return FiniteGroup::from_cayley_table(table, std::move(names));
    }
    if (j.contains("permutations")) {
      const auto perms = j.at("permutations").get<std::vector<std::vector<std::size_t>>>();
      std::size_t degree = 0;
      if (j.contains("degree"))
        degree = j.at("degree").get<std::size_t>();
      else if (!perms.empty())
        degree = perms.front().size();
      return from_permutations(perms, degree);
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidInput, std::string("malformed group JSON: ") + e.what());
  }
  fail(ErrorCode::InvalidInput, "group JSON needs 'table', 'permutations' or 'catalog'");
}

FiniteGroup group_from_spec(const std::string& spec) {
  if (spec.rfind("@", 0) == 0) {
    std::ifstream in(spec.substr(1));
    if (!in) fail(ErrorCode::InvalidInput, "cannot read group file '" + spec.substr(1) + "'");
    Json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::InvalidInput, std::string("group file is not JSON: ") + e.what());
    }
    return group_from_json(j);
  }
  if (spec.rfind("catalog:", 0) == 0) {
    std::stringstream ss(spec.substr(8));
    std::string name, part;
    std::getline(ss, name, ':');
    std::vector<long long> params;
    while (std::getline(ss, part, ':')) params.push_back(parse_param(part));
    if (name.empty()) fail(ErrorCode::InvalidInput, "catalog spec is missing a name");
    return catalog(name, params);
  }
  fail(ErrorCode::InvalidInput, "group spec must be 'catalog:<name>:<params>' or '@file.json'");
}

Json group_to_json(const FiniteGroup& g) {
  return Json{{"order", g.order()}, {"names", g.names()}, {"table", g.table()}};
}

Json to_json(const Integer& n) {
  if (n.fits_slong_p()) return Json(n.get_si());
  return Json(n.get_str());
}

Json to_json(const FgAbelianGroup& a) {
  Json t = Json::array();
  for (const auto& d : a.torsion) t.push_back(to_json(d));
  return Json{{"rank", a.rank}, {"torsion", t}, {"text", a.to_string()}};
}

Json to_json(const std::vector<FgAbelianGroup>& groups) {
  Json out = Json::array();
  for (const auto& g : groups) out.push_back(to_json(g));
  return out;
}

}  // namespace bqg
