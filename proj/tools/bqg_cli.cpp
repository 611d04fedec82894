#include <bqg/bqg.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <memory>
#include <string>

namespace {

struct Args {
  std::string group;
  int q = 2;
  unsigned long long prime = 0;
  int max_deg = -1;
  unsigned long long coset_cap = 1000000;
  std::string format = "text";
  std::string suite = "paper";
};

int report_error(bqg_status s, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j{{"error",
                              {{"status", bqg_status_name(s)},
                               {"code", static_cast<int>(s)},
                               {"message", bqg_last_error()}}}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "error: " << bqg_status_name(s) << ": " << bqg_last_error() << "\n";
  }
  return 1;
}

struct StringFree {
  void operator()(char* p) const { bqg_string_free(p); }
};
struct GroupFree {
  void operator()(bqg_group* g) const { bqg_group_free(g); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classifying spaces for commutativity of finite groups: invariants and checks"};
  app.require_subcommand(1);
  Args a;
  app.add_option("--group", a.group, "catalog:<name>:<params> or @file.json");
  app.add_option("--q", a.q, "nilpotency bound q (class < q)")->check(CLI::Range(2, 64));
  app.add_option("--prime", a.prime, "restrict to one prime")->check(CLI::PositiveNumber);
  app.add_option("--max-deg", a.max_deg, "top homological degree")->check(CLI::Range(0, 16));
  app.add_option("--coset-cap", a.coset_cap, "coset enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--format", a.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--suite", a.suite, "acceptance suite for verify")->check(CLI::IsMember({"paper"}));

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"group-info", "order, center, census and Cayley table"},
      {"poset", "poset N(q,G) or its p-part"},
      {"colimit", "colimit of the poset and the map to G"},
      {"higher-limits", "higher limits of the representation ring"},
      {"homology", "homology of B(q,G) through --max-deg"},
      {"universal-cover", "homology of the universal cover of E(q,G)"},
      {"coset-poset", "coset poset homology and chief factors"},
      {"splitting", "prime splitting of the homology of B(q,G)"},
      {"ktheory", "K-theory of B(2,G)"},
      {"verify", "run the acceptance suite"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  bqg_options o;
  bqg_options_init(&o);
  o.q = a.q;
  o.prime = a.prime;
  o.max_deg = a.max_deg;
  o.coset_cap = a.coset_cap;
  o.format = a.format == "json" ? BQG_FORMAT_JSON : BQG_FORMAT_TEXT;

  char* raw = nullptr;
  if (command == "verify") {
    int all = 0;
    const auto s = bqg_verify(a.suite.c_str(), &o, &raw, &all);
    std::unique_ptr<char, StringFree> out(raw);
    if (s != BQG_OK) return report_error(s, a.format);
    std::cout << out.get();
    return all ? 0 : 1;
  }

  if (a.group.empty()) {
    std::cerr << "usage error: " << command << " requires --group\n";
    return 2;
  }
  bqg_group* g = nullptr;
  if (auto s = bqg_group_from_spec(a.group.c_str(), &g); s != BQG_OK)
    return report_error(s, a.format);
  std::unique_ptr<bqg_group, GroupFree> group(g);
  const auto s = bqg_run(command.c_str(), group.get(), &o, &raw);
  std::unique_ptr<char, StringFree> out(raw);
  if (s != BQG_OK) return report_error(s, a.format);
  std::cout << out.get();
  return 0;
}
