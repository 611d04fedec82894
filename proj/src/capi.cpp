#include <bqg/bqg.h>

#include <bqg/acceptance.hpp>
#include <bqg/error.hpp>
#include <bqg/io.hpp>
#include <bqg/report.hpp>

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct bqg_group {
  bqg::FiniteGroup g;
};

namespace {

thread_local std::string last_error;

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
bqg_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return BQG_OK;
  } catch (const bqg::Error& e) {
    last_error = e.what();
    return static_cast<bqg_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return BQG_ERR_TOO_LARGE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return BQG_ERR_INTERNAL;
  }
}

bqg_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return BQG_ERR_NULL_ARGUMENT;
}

bqg::RunOptions convert(const bqg_options* o) {
  bqg::RunOptions r;
  if (!o) return r;
  r.q = o->q;
  if (o->prime) r.prime = o->prime;
  if (o->max_deg >= 0) r.max_deg = static_cast<std::size_t>(o->max_deg);
  else if (o->max_deg != -1) bqg::fail(bqg::ErrorCode::UnsupportedParam, "max_deg must be >= 0");
  r.coset_cap = o->coset_cap;
  return r;
}

std::string emit(const bqg::Json& j, const bqg_options* o) {
  if (o && o->format == BQG_FORMAT_JSON) return j.dump(2) + "\n";
  return bqg::render_text(j);
}

}  // namespace

extern "C" {

void bqg_options_init(bqg_options* options) {
  if (!options) return;
  options->q = 2;
  options->prime = 0;
  options->max_deg = -1;
  options->coset_cap = 1000000;
  options->format = BQG_FORMAT_TEXT;
}

bqg_status bqg_group_from_spec(const char* spec, bqg_group** out) {
  if (!spec) return null_argument("spec");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new bqg_group{bqg::group_from_spec(spec)}; });
}

bqg_status bqg_group_from_json(const char* json, bqg_group** out) {
  if (!json) return null_argument("json");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    bqg::Json j;
    try {
      j = bqg::Json::parse(json);
    } catch (const nlohmann::json::exception& e) {
      bqg::fail(bqg::ErrorCode::InvalidInput, std::string("group text is not JSON: ") + e.what());
    }
    *out = new bqg_group{bqg::group_from_json(j)};
  });
}

void bqg_group_free(bqg_group* group) { delete group; }

size_t bqg_group_order(const bqg_group* group) { return group ? group->g.order() : 0; }

bqg_status bqg_run(const char* command, const bqg_group* group, const bqg_options* options,
                   char** out) {
  if (!command) return null_argument("command");
  if (!group) return null_argument("group");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const auto j = bqg::run_command(command, group->g, convert(options));
    *out = copy_out(emit(j, options));
  });
}

bqg_status bqg_verify(const char* suite, const bqg_options* options, char** out,
                      int* all_passed) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (all_passed) *all_passed = 0;
  return guarded([&] {
    const auto results = bqg::run_suite(suite ? suite : "paper");
    const auto j = bqg::to_json(results);
    if (all_passed) *all_passed = j["passed"].get<bool>() ? 1 : 0;
    const bool json = options && options->format == BQG_FORMAT_JSON;
    *out = copy_out(json ? j.dump(2) + "\n" : bqg::render_suite(results));
  });
}

void bqg_string_free(char* s) { std::free(s); }

const char* bqg_last_error(void) { return last_error.c_str(); }

const char* bqg_status_name(bqg_status status) {
  switch (status) {
    case BQG_OK: return "ok";
    case BQG_ERR_NULL_ARGUMENT: return "NullArgument";
    default: break;
  }
  const int v = static_cast<int>(status);
  if (v >= 1 && v <= 18) return bqg::error_code_name(static_cast<bqg::ErrorCode>(v)).data();
  return "Unknown";
}

}  // extern "C"
