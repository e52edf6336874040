#include <cstdio>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "hadcode/hadcode.h"

namespace {

std::string describe(const hc_plan* p) {
  size_t needed = 0;
  REQUIRE(hc_plan_describe(p, nullptr, 0, &needed) == HC_OK);
  std::string s(needed, '\0');
  REQUIRE(hc_plan_describe(p, s.data(), s.size(), &needed) == HC_OK);
  s.resize(needed - 1);
  return s;
}

std::string code_text(const hc_code* c) {
  size_t needed = 0;
  REQUIRE(hc_code_to_text(c, nullptr, 0, &needed) == HC_OK);
  std::string s(needed, '\0');
  REQUIRE(hc_code_to_text(c, s.data(), s.size(), &needed) == HC_OK);
  s.resize(needed - 1);
  return s;
}

std::string temp_path(const char* name) { return (std::filesystem::temp_directory_path() / name).string(); }

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(hc_version()) > 0);
  CHECK(std::string(hc_status_name(HC_OK)) == "Ok");
  CHECK(std::string(hc_status_name(HC_ERR_ORDER_UNREACHABLE)) == "OrderUnreachable");
  CHECK(std::string(hc_status_name(HC_ERR_BUFFER_TOO_SMALL)) == "BufferTooSmall");
}

TEST_CASE("plans") {
  hc_plan* p = nullptr;
  REQUIRE(hc_plan_create(40, HC_METHOD_AUTO, &p) == HC_OK);
  CHECK(hc_plan_order(p) == 40);
  CHECK(hc_plan_kronecker_nodes(p) == 1);
  CHECK(describe(p) == "Kronecker(Sylvester(1), PaleyI(19))");

  char small[4];
  size_t needed = 0;
  CHECK(hc_plan_describe(p, small, sizeof small, &needed) == HC_ERR_BUFFER_TOO_SMALL);
  CHECK(needed == std::strlen("Kronecker(Sylvester(1), PaleyI(19))") + 1);

  hc_matrix* m = nullptr;
  REQUIRE(hc_plan_execute(p, &m) == HC_OK);
  int ok = 0;
  CHECK(hc_matrix_is_hadamard(m, &ok) == HC_OK);
  CHECK(ok == 1);
  hc_matrix_free(m);
  hc_plan_free(p);

  hc_plan* q = nullptr;
  CHECK(hc_plan_create(6, HC_METHOD_AUTO, &q) == HC_ERR_ORDER_IMPOSSIBLE);
  CHECK(q == nullptr);
  CHECK(std::strlen(hc_last_error()) > 0);
  CHECK(hc_plan_create(92, HC_METHOD_AUTO, &q) == HC_ERR_ORDER_UNREACHABLE);

  REQUIRE(hc_plan_create(24, HC_METHOD_PALEY1, &q) == HC_OK);
  CHECK(describe(q) == "PaleyI(23)");
  hc_plan_free(q);
  REQUIRE(hc_plan_create(20, HC_METHOD_PALEY2, &q) == HC_OK);
  CHECK(describe(q) == "PaleyII(9)");
  hc_plan_free(q);
  REQUIRE(hc_plan_create(16, HC_METHOD_TWINPRIME, &q) == HC_OK);
  CHECK(describe(q) == "TwinPrime(3)");
  hc_plan_free(q);
  CHECK(hc_plan_create(24, HC_METHOD_SYLVESTER, &q) != HC_OK);
  CHECK(hc_plan_create(6, HC_METHOD_PALEY1, &q) == HC_ERR_ORDER_IMPOSSIBLE);
  CHECK(hc_plan_create(16, HC_METHOD_AUTO, nullptr) == HC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("matrix constructors and accessors") {
  hc_matrix* a = nullptr;
  hc_matrix* b = nullptr;
  hc_matrix* k = nullptr;
  REQUIRE(hc_matrix_sylvester(1, &a) == HC_OK);
  REQUIRE(hc_matrix_paley_one(3, &b) == HC_OK);
  REQUIRE(hc_matrix_kronecker(a, b, &k) == HC_OK);
  CHECK(hc_matrix_rows(k) == 8);
  CHECK(hc_matrix_cols(k) == 8);
  CHECK(hc_matrix_entry(a, 1, 1) == -1);
  CHECK(hc_matrix_entry(a, 2, 0) == 0);
  CHECK(hc_matrix_entry(nullptr, 0, 0) == 0);

  hc_matrix* bad = nullptr;
  CHECK(hc_matrix_paley_one(5, &bad) == HC_ERR_BAD_RESIDUE_CLASS);
  CHECK(hc_matrix_paley_two(7, &bad) == HC_ERR_BAD_RESIDUE_CLASS);
  CHECK(hc_matrix_twin_prime(13, &bad) == HC_ERR_NOT_TWIN_PRIME_POWERS);
  CHECK(hc_matrix_paley_one(15, &bad) == HC_ERR_NOT_PRIME_POWER);
  CHECK(bad == nullptr);

  REQUIRE(hc_matrix_parse("2 2\n++\n++\n", 10, &bad) == HC_OK);
  int ok = 1;
  CHECK(hc_matrix_is_hadamard(bad, &ok) == HC_OK);
  CHECK(ok == 0);
  hc_matrix* out = nullptr;
  CHECK(hc_matrix_kronecker(bad, a, &out) == HC_ERR_NOT_HADAMARD_INPUT);
  CHECK(hc_matrix_normalize(bad, &out) == HC_ERR_NOT_HADAMARD_INPUT);
  hc_matrix_free(bad);

  hc_matrix* rect = nullptr;
  REQUIRE(hc_matrix_parse("1 2\n+-\n", 7, &rect) == HC_OK);
  CHECK(hc_matrix_is_hadamard(rect, &ok) == HC_ERR_NOT_SQUARE);
  hc_matrix_free(rect);

  CHECK(hc_matrix_parse("2 2\n++\n", 7, &out) == HC_ERR_PARSE);
  CHECK(std::string(hc_last_error()).find("line 3") != std::string::npos);

  hc_matrix* n = nullptr;
  REQUIRE(hc_matrix_normalize(k, &n) == HC_OK);
  for (size_t j = 0; j < 8; ++j) CHECK(hc_matrix_entry(n, 0, j) == 1);

  hc_matrix_free(n);
  hc_matrix_free(k);
  hc_matrix_free(b);
  hc_matrix_free(a);
  hc_matrix_free(nullptr);
}

TEST_CASE("matrix text and file round trip") {
  hc_matrix* h = nullptr;
  REQUIRE(hc_matrix_twin_prime(3, &h) == HC_OK);
  size_t needed = 0;
  REQUIRE(hc_matrix_to_text(h, nullptr, 0, &needed) == HC_OK);
  std::string text(needed, '\0');
  REQUIRE(hc_matrix_to_text(h, text.data(), text.size(), &needed) == HC_OK);
  text.resize(needed - 1);
  CHECK(text.substr(0, 6) == "16 16\n");

  const auto path = temp_path("hadcode_capi_matrix.txt");
  REQUIRE(hc_matrix_write_file(h, path.c_str()) == HC_OK);
  hc_matrix* back = nullptr;
  REQUIRE(hc_matrix_read_file(path.c_str(), &back) == HC_OK);
  for (size_t r = 0; r < 16; ++r) {
    for (size_t c = 0; c < 16; ++c) CHECK(hc_matrix_entry(back, r, c) == hc_matrix_entry(h, r, c));
  }
  std::remove(path.c_str());
  hc_matrix* missing = nullptr;
  CHECK(hc_matrix_read_file(path.c_str(), &missing) == HC_ERR_IO);
  hc_matrix_free(back);
  hc_matrix_free(h);
}

TEST_CASE("codes") {
  hc_matrix* h = nullptr;
  REQUIRE(hc_matrix_sylvester(1, &h) == HC_OK);
  hc_code* c = nullptr;
  REQUIRE(hc_code_from_matrix(h, &c) == HC_OK);
  CHECK(code_text(c) == "4 2\n11\n10\n00\n01\n");
  CHECK(hc_code_bit(c, 1, 1) == 0);
  CHECK(hc_code_bit(c, 9, 0) == -1);
  hc_code_params p{};
  REQUIRE(hc_code_params_compute(c, &p) == HC_OK);
  CHECK(p.size == 4);
  CHECK(p.min_distance == 1);
  size_t d = 0;
  CHECK(hc_code_distance(c, 0, 2, &d) == HC_OK);
  CHECK(d == 2);
  CHECK(hc_code_distance(c, 0, 4, &d) == HC_ERR_INVALID_ARGUMENT);
  int sc = 0;
  CHECK(hc_code_is_self_complementary(c, &sc) == HC_OK);
  CHECK(sc == 1);
  uint64_t counts[3];
  CHECK(hc_code_distance_distribution(c, counts, 2) == HC_ERR_BUFFER_TOO_SMALL);
  REQUIRE(hc_code_distance_distribution(c, counts, 3) == HC_OK);
  CHECK(counts[1] == 4);
  CHECK(counts[2] == 2);
  hc_code_free(c);
  hc_matrix_free(h);

  hc_matrix* dup = nullptr;
  REQUIRE(hc_matrix_parse("2 2\n+-\n-+\n", 10, &dup) == HC_OK);
  CHECK(hc_code_from_matrix(dup, &c) == HC_ERR_DEGENERATE_ROWS);
  hc_matrix_free(dup);

  hc_code* single = nullptr;
  REQUIRE(hc_code_parse("1 3\n010\n", 8, &single) == HC_OK);
  CHECK(hc_code_params_compute(single, &p) == HC_ERR_TOO_FEW_WORDS);
  hc_code_free(single);
}

TEST_CASE("punctured codes") {
  hc_code* c = nullptr;
  hc_matrix* h = nullptr;
  size_t deleted[4];
  REQUIRE(hc_code_punctured_hadamard(5, 1, HC_COLUMNS_LAST, nullptr, 0, &c, &h, deleted) == HC_OK);
  hc_code_params p{};
  REQUIRE(hc_code_params_compute(c, &p) == HC_OK);
  CHECK(p.length == 20);
  CHECK(p.size == 48);
  CHECK(p.min_distance == 8);
  CHECK(deleted[0] == 20);
  CHECK(deleted[3] == 23);

  hc_code_params g{};
  int64_t alpha = -1;
  hc_matrix* whole = nullptr;
  REQUIRE(hc_matrix_paley_one(23, &whole) == HC_OK);
  REQUIRE(hc_code_gram_params(whole, &g, &alpha) == HC_OK);
  CHECK(alpha == 0);
  CHECK(g.min_distance == 12);

  hc_code* c2 = nullptr;
  hc_puncture_info info{};
  REQUIRE(hc_code_from_punctured(h, 4, HC_COLUMNS_LAST, nullptr, 0, &c2, &info) == HC_OK);
  CHECK(info.t == 5);
  CHECK(info.i == 1);
  CHECK(info.guaranteed_distance == 8);
  CHECK(code_text(c2) == code_text(c));

  const size_t cols[4] = {0, 7, 9, 13};
  hc_code* c3 = nullptr;
  REQUIRE(hc_code_from_punctured(h, 4, HC_COLUMNS_EXPLICIT, cols, 4, &c3, nullptr) == HC_OK);
  REQUIRE(hc_code_params_compute(c3, &p) == HC_OK);
  CHECK(p.min_distance >= 8);

  hc_code* bad = nullptr;
  CHECK(hc_code_from_punctured(h, 3, HC_COLUMNS_LAST, nullptr, 0, &bad, nullptr) == HC_ERR_BAD_COLUMN_LIST);
  CHECK(hc_code_from_punctured(h, 12, HC_COLUMNS_LAST, nullptr, 0, &bad, nullptr) == HC_ERR_BAD_PARAMS);
  CHECK(hc_code_from_punctured(h, 4, HC_COLUMNS_EXPLICIT, cols, 3, &bad, nullptr) == HC_ERR_BAD_COLUMN_LIST);
  CHECK(hc_code_punctured_hadamard(2, 2, HC_COLUMNS_LAST, nullptr, 0, &bad, nullptr, nullptr) == HC_ERR_BAD_PARAMS);
  CHECK(hc_code_punctured_hadamard(22, 1, HC_COLUMNS_LAST, nullptr, 0, &bad, nullptr, nullptr) ==
        HC_ERR_ORDER_UNREACHABLE);
  CHECK(bad == nullptr);

  hc_code_free(c3);
  hc_code_free(c2);
  hc_matrix_free(whole);
  hc_matrix_free(h);
  hc_code_free(c);
}

TEST_CASE("code file round trip") {
  hc_code* c = nullptr;
  REQUIRE(hc_code_punctured_hadamard(3, 1, HC_COLUMNS_FIRST, nullptr, 0, &c, nullptr, nullptr) == HC_OK);
  const auto path = temp_path("hadcode_capi_code.txt");
  REQUIRE(hc_code_write_file(c, path.c_str()) == HC_OK);
  hc_code* back = nullptr;
  REQUIRE(hc_code_read_file(path.c_str(), &back) == HC_OK);
  CHECK(code_text(back) == code_text(c));
  std::remove(path.c_str());
  hc_code_free(back);
  hc_code_free(c);
}

TEST_CASE("bounds") {
  hc_bound_report r{};
  REQUIRE(hc_grey_rankin(20, 8, &r) == HC_OK);
  CHECK(r.applicable == 1);
  CHECK(r.bound.num == 192);
  CHECK(r.bound.den == 1);
  REQUIRE(hc_bound_attach_code_size(&r, 48) == HC_OK);
  CHECK(r.has_gap == 1);
  CHECK(r.gap == 144);

  REQUIRE(hc_grey_rankin_punctured(125, 1, &r) == HC_OK);
  CHECK(r.floor == 1032);
  CHECK(r.bound.den == 121);
  CHECK(hc_grey_rankin_punctured(4, 1, &r) == HC_ERR_BAD_PARAMS);

  REQUIRE(hc_grey_rankin(16, 4, &r) == HC_OK);
  CHECK(r.applicable == 0);

  int64_t ts[4];
  size_t count = 0;
  REQUIRE(hc_integrality_scan_i1(5, 130, ts, 4, &count) == HC_OK);
  CHECK(count == 16);
  CHECK(ts[0] == 5);
  CHECK(ts[3] == 8);

  int64_t thr = 0;
  REQUIRE(hc_maximality_threshold(2, &thr) == HC_OK);
  CHECK(thr == 62);

  hc_symplectic s{};
  REQUIRE(hc_symplectic_comparison(3, &s) == HC_OK);
  CHECK(s.n == 28);
  CHECK(s.t == 7);
  CHECK(s.ratio.num == 2);
  CHECK(hc_symplectic_comparison(2, &s) == HC_ERR_BAD_PARAMS);
}

TEST_CASE("audits") {
  hc_matrix* h = nullptr;
  REQUIRE(hc_matrix_sylvester(4, &h) == HC_OK);
  std::vector<uint8_t> bits(16, 1);
  bits[3] = 0;
  int holds = 0;
  REQUIRE(hc_parseval_check(h, bits.data(), bits.size(), &holds) == HC_OK);
  CHECK(holds == 1);
  CHECK(hc_parseval_check(h, bits.data(), 15, &holds) == HC_ERR_LENGTH_MISMATCH);

  hc_code* c = nullptr;
  hc_matrix* hh = nullptr;
  size_t deleted[4];
  REQUIRE(hc_code_punctured_hadamard(5, 1, HC_COLUMNS_LAST, nullptr, 0, &c, &hh, deleted) == HC_OK);
  hc_probe_report pr{};
  hc_code* cx = nullptr;
  REQUIRE(hc_maximality_probe(c, hh, deleted, 4, 1000, 42, &pr, &cx) == HC_OK);
  CHECK(pr.t == 5);
  CHECK(pr.i == 1);
  CHECK(pr.samples == 1000);
  CHECK(pr.parseval_checked == 1);
  CHECK(pr.has_counterexample == (pr.all_rejected ? 0 : 1));
  CHECK((cx != nullptr) == (pr.has_counterexample == 1));
  hc_code_free(cx);

  CHECK(hc_maximality_probe(c, h, deleted, 4, 10, 1, &pr, nullptr) == HC_ERR_SHAPE_MISMATCH);
  REQUIRE(hc_maximality_probe(c, hh, deleted, 4, 0, 1, &pr, nullptr) == HC_OK);
  CHECK(pr.vacuous == 1);

  int maximal = 0;
  REQUIRE(hc_exhaustive_maximality(c, &maximal) == HC_OK);
  // (5, 1) lies below the guaranteed range; a probe counterexample would refute maximality.
  REQUIRE(hc_maximality_probe(c, hh, deleted, 4, 1000, 42, &pr, nullptr) == HC_OK);
  if (pr.has_counterexample) CHECK(maximal == 0);

  hc_extension_report er{};
  hc_code* added = nullptr;
  REQUIRE(hc_extend_search(c, 2000, 9, &er, &added) == HC_OK);
  CHECK(er.spent <= 2000);
  CHECK(hc_code_size(added) == er.added_count);
  CHECK(hc_code_length(added) == 20);
  hc_code_free(added);

  hc_code* big = nullptr;
  hc_matrix* h32 = nullptr;
  REQUIRE(hc_matrix_sylvester(5, &h32) == HC_OK);
  REQUIRE(hc_code_from_matrix(h32, &big) == HC_OK);
  CHECK(hc_exhaustive_maximality(big, &maximal) == HC_ERR_TOO_LONG);

  hc_code_free(big);
  hc_matrix_free(h32);
  hc_code_free(c);
  hc_matrix_free(hh);
  hc_matrix_free(h);
}
