// hadcode: build Hadamard matrices and punctured Hadamard codes, then measure and audit them.
//
// Exit codes: 0 success, 2 invalid input, 3 order not constructible, 4 verification failure
// (including a certified counterexample from probe or a certified extension from extend).

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hadcode/hadcode.h"
#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitNotConstructible = 3;
constexpr int kExitVerification = 4;

struct PlanDeleter {
  void operator()(hc_plan* p) const { hc_plan_free(p); }
};
struct MatrixDeleter {
  void operator()(hc_matrix* m) const { hc_matrix_free(m); }
};
struct CodeDeleter {
  void operator()(hc_code* c) const { hc_code_free(c); }
};
using PlanPtr = std::unique_ptr<hc_plan, PlanDeleter>;
using MatrixPtr = std::unique_ptr<hc_matrix, MatrixDeleter>;
using CodePtr = std::unique_ptr<hc_code, CodeDeleter>;

// Carries a library status out of a command body.
struct Failure {
  hc_status status;
  std::string message;
};

void check(hc_status s) {
  if (s != HC_OK) throw Failure{s, hc_last_error()};
}

int exit_code_for(hc_status s) {
  switch (s) {
    case HC_OK: return kExitOk;
    case HC_ERR_ORDER_IMPOSSIBLE:
    case HC_ERR_ORDER_UNREACHABLE: return kExitNotConstructible;
    case HC_ERR_NOT_HADAMARD_INPUT:
    case HC_ERR_CONSTRUCTION_FAILED:
    case HC_ERR_INTERNAL: return kExitVerification;
    default: return kExitInvalid;
  }
}

std::string reason_for(hc_status s) {
  switch (s) {
    case HC_ERR_ORDER_IMPOSSIBLE: return "impossible";
    case HC_ERR_ORDER_UNREACHABLE: return "unreachable";
    case HC_ERR_NOT_HADAMARD_INPUT: return "not_hadamard";
    case HC_ERR_PARSE: return "parse_error";
    case HC_ERR_IO: return "io_error";
    case HC_ERR_CONSTRUCTION_FAILED: return "verification_failed";
    case HC_ERR_INTERNAL: return "internal";
    default: return "invalid_input";
  }
}

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{HC_ERR_IO, "cannot open " + path};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Failure{HC_ERR_INTERNAL, "SHA-256 failed"};
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string rational_string(hc_rational r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

template <class Getter>
std::string fetch_string(Getter get) {
  size_t needed = 0;
  check(get(nullptr, 0, &needed));
  std::string out(needed, '\0');
  check(get(out.data(), out.size(), &needed));
  out.resize(needed - 1);
  return out;
}

std::string word_string(const hc_code* c, size_t k) {
  std::string s(hc_code_length(c), '0');
  for (size_t j = 0; j < s.size(); ++j) s[j] = hc_code_bit(c, k, j) == 1 ? '1' : '0';
  return s;
}

struct LoadedMatrix {
  MatrixPtr matrix;
  json input;
};

struct LoadedCode {
  CodePtr code;
  json input;
};

LoadedMatrix load_matrix(const std::string& path) {
  const std::string bytes = read_bytes(path);
  hc_matrix* m = nullptr;
  check(hc_matrix_parse(bytes.data(), bytes.size(), &m));
  return {MatrixPtr(m), json{{"role", "matrix"}, {"path", path}, {"sha256", sha256_hex(bytes)}}};
}

LoadedCode load_code(const std::string& path) {
  const std::string bytes = read_bytes(path);
  hc_code* c = nullptr;
  check(hc_code_parse(bytes.data(), bytes.size(), &c));
  return {CodePtr(c), json{{"role", "code"}, {"path", path}, {"sha256", sha256_hex(bytes)}}};
}

json params_json(const hc_code_params& p) {
  return {{"length", p.length}, {"size", p.size}, {"min_distance", p.min_distance}};
}

json bound_json(const hc_bound_report& r) {
  json j = {{"n", r.n}, {"d", r.d}, {"applicable", static_cast<bool>(r.applicable)}};
  j["bound"] = r.applicable ? json(rational_string(r.bound)) : json(nullptr);
  j["floor"] = r.applicable ? json(r.floor) : json(nullptr);
  j["code_size"] = r.has_code_size ? json(r.code_size) : json(nullptr);
  j["gap"] = r.has_gap ? json(r.gap) : json(nullptr);
  return j;
}

// Column selection shared by code and probe: "last", "first" or "3,7,11,...".
struct ColumnChoice {
  hc_column_policy policy = HC_COLUMNS_LAST;
  std::vector<size_t> explicit_columns;
  std::string label = "last";
};

ColumnChoice parse_columns(const std::string& text) {
  ColumnChoice c;
  c.label = text;
  if (text == "last") return c;
  if (text == "first") {
    c.policy = HC_COLUMNS_FIRST;
    return c;
  }
  c.policy = HC_COLUMNS_EXPLICIT;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      const unsigned long long v = std::stoull(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      c.explicit_columns.push_back(static_cast<size_t>(v));
    } catch (const std::exception&) {
      throw Failure{HC_ERR_BAD_COLUMN_LIST, "bad column index '" + item + "'"};
    }
  }
  return c;
}

std::vector<size_t> resolve_columns(const ColumnChoice& choice, size_t order, size_t count) {
  if (choice.policy == HC_COLUMNS_EXPLICIT) return choice.explicit_columns;
  std::vector<size_t> cols;
  const size_t start = choice.policy == HC_COLUMNS_FIRST ? 0 : order - count;
  for (size_t k = 0; k < count; ++k) cols.push_back(start + k);
  return cols;
}

struct Context {
  std::string command;
  bool as_json = false;
  json inputs = json::array();
  json parameters = json::object();
  json results = json::object();
  std::vector<std::string> text;  // human-readable lines
  int exit_code = kExitOk;
};

json envelope(const Context& ctx) {
  return {{"schema_version", kSchemaVersion},
          {"tool", "hadcode"},
          {"tool_version", hc_version()},
          {"command", ctx.command},
          {"timestamp", utc_timestamp()},
          {"inputs", ctx.inputs},
          {"parameters", ctx.parameters}};
}

int emit(const Context& ctx) {
  if (ctx.as_json) {
    json j = envelope(ctx);
    j["status"] = "ok";
    j["results"] = ctx.results;
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& line : ctx.text) std::cout << line << '\n';
  }
  return ctx.exit_code;
}

int emit_failure(const Context& ctx, const Failure& f) {
  const int code = exit_code_for(f.status);
  if (ctx.as_json) {
    json j = envelope(ctx);
    j["status"] = "error";
    j["error"] = {{"code", hc_status_name(f.status)}, {"reason", reason_for(f.status)}, {"message", f.message},
                  {"exit_code", code}};
    std::cout << j.dump(2) << '\n';
  }
  std::cerr << "error: code=" << hc_status_name(f.status) << " reason=" << reason_for(f.status) << " message=\""
            << f.message << "\"\n";
  return code;
}

// ---- commands -------------------------------------------------------------

struct ConstructArgs {
  uint64_t order = 0;
  std::string method = "auto";
  std::string out;
};

void run_construct(Context& ctx, const ConstructArgs& a) {
  static const std::map<std::string, hc_method> methods = {{"auto", HC_METHOD_AUTO},
                                                           {"sylvester", HC_METHOD_SYLVESTER},
                                                           {"paley1", HC_METHOD_PALEY1},
                                                           {"paley2", HC_METHOD_PALEY2},
                                                           {"twinprime", HC_METHOD_TWINPRIME}};
  ctx.parameters = {{"order", a.order}, {"method", a.method}, {"out", a.out.empty() ? json(nullptr) : json(a.out)}};
  hc_plan* raw = nullptr;
  check(hc_plan_create(a.order, methods.at(a.method), &raw));
  PlanPtr plan(raw);
  const std::string described =
      fetch_string([&](char* b, size_t c, size_t* n) { return hc_plan_describe(plan.get(), b, c, n); });

  hc_matrix* mraw = nullptr;
  check(hc_plan_execute(plan.get(), &mraw));
  MatrixPtr m(mraw);
  int ok = 0;
  check(hc_matrix_is_hadamard(m.get(), &ok));
  if (!ok) throw Failure{HC_ERR_CONSTRUCTION_FAILED, "constructed matrix failed verification"};

  if (!a.out.empty()) {
    check(hc_matrix_write_file(m.get(), a.out.c_str()));
  } else if (!ctx.as_json) {
    ctx.text.push_back(fetch_string([&](char* b, size_t c, size_t* n) { return hc_matrix_to_text(m.get(), b, c, n); }));
    ctx.text.back().pop_back();
  }
  ctx.results = {{"order", hc_plan_order(plan.get())},
                 {"plan", described},
                 {"kronecker_nodes", hc_plan_kronecker_nodes(plan.get())},
                 {"is_hadamard", true}};
  ctx.text.insert(ctx.text.begin(), "plan: " + described);
}

struct CodeArgs {
  std::string matrix;
  size_t puncture = 0;
  std::string columns = "last";
  bool normalize = false;
  std::string out;
};

void run_code(Context& ctx, const CodeArgs& a) {
  ctx.parameters = {{"puncture", a.puncture},
                    {"columns", a.columns},
                    {"normalize", a.normalize},
                    {"out", a.out.empty() ? json(nullptr) : json(a.out)}};
  auto loaded = load_matrix(a.matrix);
  ctx.inputs.push_back(loaded.input);
  MatrixPtr h = std::move(loaded.matrix);
  if (a.normalize) {
    hc_matrix* n = nullptr;
    check(hc_matrix_normalize(h.get(), &n));
    h.reset(n);
  }
  const ColumnChoice choice = parse_columns(a.columns);
  hc_code* raw = nullptr;
  hc_puncture_info info{};
  check(hc_code_from_punctured(h.get(), a.puncture, choice.policy, choice.explicit_columns.data(),
                               choice.explicit_columns.size(), &raw, &info));
  CodePtr code(raw);
  hc_code_params p{};
  check(hc_code_params_compute(code.get(), &p));
  int self_comp = 0;
  check(hc_code_is_self_complementary(code.get(), &self_comp));
  if (!a.out.empty()) check(hc_code_write_file(code.get(), a.out.c_str()));

  ctx.results = {{"code_params", params_json(p)},
                 {"t", info.t},
                 {"i", info.i},
                 {"guaranteed_distance", info.guaranteed_distance},
                 {"deleted_columns", resolve_columns(choice, hc_matrix_rows(h.get()), a.puncture)},
                 {"self_complementary", static_cast<bool>(self_comp)}};
  ctx.text.push_back("N=" + std::to_string(p.size) + " m=" + std::to_string(p.length) +
                     " d>=" + std::to_string(info.guaranteed_distance) + " d_exact=" + std::to_string(p.min_distance));
  if (p.min_distance < info.guaranteed_distance) {
    throw Failure{HC_ERR_CONSTRUCTION_FAILED, "measured distance below the guarantee"};
  }
}

void run_analyze(Context& ctx, const std::string& code_path) {
  auto loaded = load_code(code_path);
  ctx.inputs.push_back(loaded.input);
  hc_code* code = loaded.code.get();

  hc_code_params p{};
  check(hc_code_params_compute(code, &p));
  int self_comp = 0;
  check(hc_code_is_self_complementary(code, &self_comp));
  std::vector<uint64_t> counts(p.length + 1);
  check(hc_code_distance_distribution(code, counts.data(), counts.size()));

  json dist = json::array();
  for (size_t d = 0; d < counts.size(); ++d) {
    if (counts[d] > 0) dist.push_back({{"distance", d}, {"pairs", counts[d]}});
  }
  ctx.results = {{"code_params", params_json(p)}, {"self_complementary", static_cast<bool>(self_comp)},
                 {"distance_distribution", dist}};

  std::ostringstream line;
  line << "n=" << p.length << " size=" << p.size << " d=" << p.min_distance
       << " self_complementary=" << (self_comp ? "yes" : "no");
  ctx.text.push_back(line.str());

  if (p.min_distance > 0) {
    hc_bound_report r{};
    check(hc_grey_rankin(static_cast<int64_t>(p.length), static_cast<int64_t>(p.min_distance), &r));
    check(hc_bound_attach_code_size(&r, p.size));
    ctx.results["grey_rankin"] = bound_json(r);
    if (r.applicable) {
      ctx.text.push_back("grey_rankin=" + rational_string(r.bound) + " floor=" + std::to_string(r.floor) +
                         " gap=" + std::to_string(r.gap));
    } else {
      ctx.text.push_back("grey_rankin=not_applicable");
    }
  } else {
    ctx.results["grey_rankin"] = nullptr;
    ctx.text.push_back("grey_rankin=not_applicable (repeated words)");
  }
}

struct ProbeArgs {
  std::string code;
  std::string matrix;
  std::string columns = "last";
  uint64_t samples = 10000;
  uint64_t seed = 42;
};

void run_probe(Context& ctx, const ProbeArgs& a) {
  ctx.parameters = {{"columns", a.columns}, {"samples", a.samples}, {"seed", a.seed}};
  auto code = load_code(a.code);
  auto matrix = load_matrix(a.matrix);
  ctx.inputs.push_back(code.input);
  ctx.inputs.push_back(matrix.input);

  const size_t order = hc_matrix_rows(matrix.matrix.get());
  const size_t length = hc_code_length(code.code.get());
  if (order < length) throw Failure{HC_ERR_SHAPE_MISMATCH, "matrix order is smaller than the code length"};
  const auto deleted = resolve_columns(parse_columns(a.columns), order, order - length);

  hc_probe_report r{};
  hc_code* cex = nullptr;
  check(hc_maximality_probe(code.code.get(), matrix.matrix.get(), deleted.data(), deleted.size(), a.samples, a.seed,
                            &r, &cex));
  CodePtr counterexample(cex);

  ctx.results = {{"samples", r.samples},
                 {"seed", r.seed},
                 {"t", r.t},
                 {"i", r.i},
                 {"guaranteed_distance", r.guaranteed_distance},
                 {"in_guaranteed_range", static_cast<bool>(r.in_guaranteed_range)},
                 {"vacuous", static_cast<bool>(r.vacuous)},
                 {"all_rejected", static_cast<bool>(r.all_rejected)},
                 {"min_observed_best_distance", r.min_observed_best_distance},
                 {"max_observed_best_distance", r.max_observed_best_distance},
                 {"parseval_checked", static_cast<bool>(r.parseval_checked)},
                 {"min_max_abs_inner", r.min_max_abs_inner},
                 {"sqrt_bound_held", static_cast<bool>(r.sqrt_bound_held)},
                 {"parity_refined_bound", r.parity_refined_bound},
                 {"parity_bound_held", static_cast<bool>(r.parity_bound_held)},
                 {"counterexample", counterexample ? json(word_string(counterexample.get(), 0)) : json(nullptr)}};

  std::ostringstream line;
  line << "samples=" << r.samples << " seed=" << r.seed << " all_rejected=" << (r.all_rejected ? "true" : "false")
       << " max_best_distance=" << r.max_observed_best_distance << " d=" << r.guaranteed_distance
       << " parseval=" << (r.parseval_checked ? "ok" : "FAILED") << (r.vacuous ? " vacuous" : "");
  ctx.text.push_back(line.str());
  if (counterexample) ctx.text.push_back("counterexample=" + word_string(counterexample.get(), 0));
  if (!r.all_rejected || !r.parseval_checked) ctx.exit_code = kExitVerification;
}

struct ExtendArgs {
  std::string code;
  std::string matrix;
  uint64_t budget = 100000;
  uint64_t seed = 42;
  std::string out;
};

void run_extend(Context& ctx, const ExtendArgs& a) {
  ctx.parameters = {{"budget", a.budget}, {"seed", a.seed}, {"out", a.out.empty() ? json(nullptr) : json(a.out)}};
  auto code = load_code(a.code);
  ctx.inputs.push_back(code.input);
  if (!a.matrix.empty()) ctx.inputs.push_back(load_matrix(a.matrix).input);

  hc_extension_report r{};
  hc_code* raw = nullptr;
  check(hc_extend_search(code.code.get(), a.budget, a.seed, &r, &raw));
  CodePtr added(raw);
  json words = json::array();
  for (size_t k = 0; k < hc_code_size(added.get()); ++k) words.push_back(word_string(added.get(), k));
  if (!a.out.empty()) check(hc_code_write_file(added.get(), a.out.c_str()));

  ctx.results = {{"budget", r.budget},
                 {"spent", r.spent},
                 {"seed", r.seed},
                 {"restarts", r.restarts},
                 {"target_distance", r.target_distance},
                 {"added_count", r.added_count},
                 {"min_certificate_distance", r.added_count ? json(r.min_certificate_distance) : json(nullptr)},
                 {"added_words", words}};
  ctx.text.push_back("target_distance=" + std::to_string(r.target_distance) + " added=" +
                     std::to_string(r.added_count) + " spent=" + std::to_string(r.spent) + "/" +
                     std::to_string(r.budget) + " restarts=" + std::to_string(r.restarts));
  for (const auto& w : words) ctx.text.push_back("added " + w.get<std::string>());
  if (r.added_count > 0) ctx.exit_code = kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hadamard matrices, punctured Hadamard codes, Grey-Rankin bounds and maximality audits"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hc_version()));
  Context ctx;
  app.add_flag("--json", ctx.as_json, "Emit a JSON report envelope");

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Build and verify a Hadamard matrix");
  construct->add_option("--order", construct_args.order, "Matrix order")->required();
  construct->add_option("--method", construct_args.method, "auto|sylvester|paley1|paley2|twinprime")
      ->check(CLI::IsMember({"auto", "sylvester", "paley1", "paley2", "twinprime"}));
  construct->add_option("--out", construct_args.out, "Matrix file to write (stdout when omitted)");
  construct->add_flag("--json", ctx.as_json);

  CodeArgs code_args;
  auto* code = app.add_subcommand("code", "Puncture a Hadamard matrix and write its code");
  code->add_option("--matrix", code_args.matrix, "Hadamard matrix file")->required();
  code->add_option("--puncture", code_args.puncture, "Number of columns to delete (4i)");
  code->add_option("--columns", code_args.columns, "last|first|comma-separated 0-based indices");
  code->add_flag("--normalize", code_args.normalize, "Normalize the matrix before puncturing");
  code->add_option("--out", code_args.out, "Code file to write");
  code->add_flag("--json", ctx.as_json);

  std::string analyze_path;
  auto* analyze = app.add_subcommand("analyze", "Exact parameters and Grey-Rankin comparison of a code");
  analyze->add_option("code", analyze_path, "Code file")->required();
  analyze->add_flag("--json", ctx.as_json);

  ProbeArgs probe_args;
  auto* probe = app.add_subcommand("probe", "Randomized maximality probe of a punctured Hadamard code");
  probe->add_option("--code", probe_args.code, "Code file")->required();
  probe->add_option("--matrix", probe_args.matrix, "Hadamard matrix the code was punctured from")->required();
  probe->add_option("--columns", probe_args.columns, "Deleted columns: last|first|list");
  probe->add_option("--samples", probe_args.samples, "Number of random vectors");
  probe->add_option("--seed", probe_args.seed, "mt19937_64 seed");
  probe->add_flag("--json", ctx.as_json);

  ExtendArgs extend_args;
  auto* extend = app.add_subcommand("extend", "Search for words that extend a code at its minimum distance");
  extend->add_option("--code", extend_args.code, "Code file")->required();
  extend->add_option("--matrix", extend_args.matrix, "Optional source matrix (recorded in the report)");
  extend->add_option("--budget", extend_args.budget, "Candidate evaluations");
  extend->add_option("--seed", extend_args.seed, "mt19937_64 seed");
  extend->add_option("--out", extend_args.out, "Write added words as a code file");
  extend->add_flag("--json", ctx.as_json);

  auto* bounds = app.add_subcommand("bounds", "Grey-Rankin bound arithmetic");
  bounds->require_subcommand(1);
  bounds->add_flag("--json", ctx.as_json);
  int64_t gr_n = 0, gr_d = 0, pt_t = 0, pt_i = 0, scan_from = 5, scan_to = 130, thr_i = 0, sym_l = 0;
  std::optional<uint64_t> gr_size, pt_size;
  auto* gr = bounds->add_subcommand("grey-rankin", "Bound at (n, d)");
  gr->add_option("--n", gr_n)->required();
  gr->add_option("--d", gr_d)->required();
  gr->add_option("--size", gr_size, "Code size to compare against");
  gr->add_flag("--json", ctx.as_json);
  auto* pt = bounds->add_subcommand("punctured", "Bound at (4t, 2t - 2i)");
  pt->add_option("--t", pt_t)->required();
  pt->add_option("--i", pt_i)->required();
  pt->add_option("--size", pt_size, "Code size (default 8t + 8i)");
  pt->add_flag("--json", ctx.as_json);
  auto* scan = bounds->add_subcommand("scan", "t in [from, to] where the i = 1 bound is an integer");
  scan->add_option("--from", scan_from);
  scan->add_option("--to", scan_to);
  scan->add_flag("--json", ctx.as_json);
  auto* thr = bounds->add_subcommand("threshold", "Maximality threshold 16i^2 - i");
  thr->add_option("--i", thr_i)->required();
  thr->add_flag("--json", ctx.as_json);
  auto* sym = bounds->add_subcommand("symplectic", "Compare with the symplectic code parameters");
  sym->add_option("--l", sym_l)->required();
  sym->add_flag("--json", ctx.as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*construct) {
      ctx.command = "construct";
      run_construct(ctx, construct_args);
    } else if (*code) {
      ctx.command = "code";
      run_code(ctx, code_args);
    } else if (*analyze) {
      ctx.command = "analyze";
      run_analyze(ctx, analyze_path);
    } else if (*probe) {
      ctx.command = "probe";
      run_probe(ctx, probe_args);
    } else if (*extend) {
      ctx.command = "extend";
      run_extend(ctx, extend_args);
    } else if (*gr) {
      ctx.command = "bounds grey-rankin";
      ctx.parameters = {{"n", gr_n}, {"d", gr_d}};
      hc_bound_report r{};
      check(hc_grey_rankin(gr_n, gr_d, &r));
      if (gr_size) check(hc_bound_attach_code_size(&r, *gr_size));
      ctx.results = {{"grey_rankin", bound_json(r)}};
      ctx.text.push_back(r.applicable ? "bound=" + rational_string(r.bound) + " floor=" + std::to_string(r.floor) +
                                            (r.has_gap ? " gap=" + std::to_string(r.gap) : "")
                                      : "not_applicable");
    } else if (*pt) {
      ctx.command = "bounds punctured";
      ctx.parameters = {{"t", pt_t}, {"i", pt_i}};
      hc_bound_report r{};
      check(hc_grey_rankin_punctured(pt_t, pt_i, &r));
      check(hc_bound_attach_code_size(&r, pt_size.value_or(static_cast<uint64_t>(8 * pt_t + 8 * pt_i))));
      ctx.results = {{"grey_rankin", bound_json(r)}};
      ctx.text.push_back("n=" + std::to_string(r.n) + " d=" + std::to_string(r.d) + " bound=" +
                         rational_string(r.bound) + " floor=" + std::to_string(r.floor) +
                         " size=" + std::to_string(r.code_size) + " gap=" + std::to_string(r.gap));
    } else if (*scan) {
      ctx.command = "bounds scan";
      ctx.parameters = {{"from", scan_from}, {"to", scan_to}};
      size_t count = 0;
      check(hc_integrality_scan_i1(scan_from, scan_to, nullptr, 0, &count));
      std::vector<int64_t> ts(count);
      check(hc_integrality_scan_i1(scan_from, scan_to, ts.data(), ts.size(), &count));
      ctx.results = {{"integral_t", ts}};
      std::string line = "integral_t=";
      for (size_t k = 0; k < ts.size(); ++k) line += (k ? "," : "") + std::to_string(ts[k]);
      ctx.text.push_back(line);
    } else if (*thr) {
      ctx.command = "bounds threshold";
      ctx.parameters = {{"i", thr_i}};
      int64_t v = 0;
      check(hc_maximality_threshold(thr_i, &v));
      ctx.results = {{"threshold", v}};
      ctx.text.push_back("maximal for t > " + std::to_string(v));
    } else if (*sym) {
      ctx.command = "bounds symplectic";
      ctx.parameters = {{"l", sym_l}};
      hc_symplectic s{};
      check(hc_symplectic_comparison(sym_l, &s));
      ctx.results = {{"l", s.l},
                     {"n", s.n},
                     {"d", s.d},
                     {"symplectic_size", s.symplectic_size},
                     {"theorem_size", s.theorem_size},
                     {"ratio", rational_string(s.ratio)},
                     {"t", s.t},
                     {"i", s.i}};
      ctx.text.push_back("n=" + std::to_string(s.n) + " d=" + std::to_string(s.d) + " symplectic=" +
                         std::to_string(s.symplectic_size) + " punctured_hadamard=" + std::to_string(s.theorem_size) +
                         " ratio=" + rational_string(s.ratio) + " t=" + std::to_string(s.t) +
                         " i=" + std::to_string(s.i));
    }
  } catch (const Failure& f) {
    return emit_failure(ctx, f);
  }
  return emit(ctx);
}
