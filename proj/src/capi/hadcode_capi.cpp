#include "hadcode/hadcode.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "hadcode/audit.hpp"
#include "hadcode/bounds.hpp"
#include "hadcode/code.hpp"
#include "hadcode/error.hpp"
#include "hadcode/hadamard.hpp"
#include "hadcode/text_io.hpp"

struct hc_plan {
  hadcode::ConstructionPlan plan;
};

struct hc_matrix {
  hadcode::BipolarMatrix m;
};

struct hc_code {
  hadcode::BinaryCode c;
};

namespace {

thread_local std::string g_last_error;

hc_status fail(hc_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
hc_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const hadcode::Error& e) {
    return fail(static_cast<hc_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HC_ERR_INTERNAL, e.what());
  }
}

hc_status null_argument(const char* name) {
  return fail(HC_ERR_INVALID_ARGUMENT, std::string("null argument: ") + name);
}

hc_status copy_out(const std::string& text, char* buf, size_t cap, size_t* needed) {
  if (needed) *needed = text.size() + 1;
  if (!buf) return HC_OK;
  if (cap < text.size() + 1) return fail(HC_ERR_BUFFER_TOO_SMALL, "buffer too small");
  std::memcpy(buf, text.c_str(), text.size() + 1);
  return HC_OK;
}

hc_status give_matrix(hadcode::BipolarMatrix m, hc_matrix** out) {
  *out = new hc_matrix{std::move(m)};
  return HC_OK;
}

hc_status give_code(hadcode::BinaryCode c, hc_code** out) {
  *out = new hc_code{std::move(c)};
  return HC_OK;
}

hadcode::ColumnPolicy to_policy(hc_column_policy p) {
  switch (p) {
    case HC_COLUMNS_LAST: return hadcode::ColumnPolicy::Last;
    case HC_COLUMNS_FIRST: return hadcode::ColumnPolicy::First;
    case HC_COLUMNS_EXPLICIT: return hadcode::ColumnPolicy::Explicit;
  }
  throw hadcode::Error(hadcode::Errc::InvalidArgument, "unknown column policy");
}

hc_rational to_c(const hadcode::Rational& r) { return {r.num(), r.den()}; }

hc_bound_report to_c(const hadcode::BoundReport& r) {
  hc_bound_report out{};
  out.n = r.n;
  out.d = r.d;
  out.applicable = r.applicable;
  if (r.bound) out.bound = to_c(*r.bound);
  if (r.floor) out.floor = *r.floor;
  out.has_code_size = r.code_size.has_value();
  if (r.code_size) out.code_size = *r.code_size;
  out.has_gap = r.gap.has_value();
  if (r.gap) out.gap = *r.gap;
  return out;
}

}  // namespace

extern "C" {

HC_API const char* hc_version(void) { return HADCODE_VERSION_STRING; }

HC_API const char* hc_status_name(hc_status status) {
  switch (status) {
    case HC_OK: return "Ok";
    case HC_ERR_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case HC_ERR_INTERNAL: return "Internal";
    default: break;
  }
  if (status >= HC_ERR_INVALID_ARGUMENT && status <= HC_ERR_OVERFLOW) {
    return hadcode::errc_name(static_cast<hadcode::Errc>(status)).data();
  }
  return "Unknown";
}

HC_API const char* hc_last_error(void) { return g_last_error.c_str(); }

/* ---- plans ---- */

HC_API hc_status hc_plan_create(uint64_t order, hc_method method, hc_plan** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    using Kind = hadcode::ConstructionPlan::Kind;
    if (method == HC_METHOD_AUTO) {
      *out = new hc_plan{hadcode::plan_order(order)};
      return HC_OK;
    }
    Kind kind{};
    switch (method) {
      case HC_METHOD_SYLVESTER: kind = Kind::Sylvester; break;
      case HC_METHOD_PALEY1: kind = Kind::PaleyI; break;
      case HC_METHOD_PALEY2: kind = Kind::PaleyII; break;
      case HC_METHOD_TWINPRIME: kind = Kind::TwinPrime; break;
      default: return fail(HC_ERR_INVALID_ARGUMENT, "unknown method");
    }
    if (order > 2 && order % 4 != 0) {
      return fail(HC_ERR_ORDER_IMPOSSIBLE, "order " + std::to_string(order) + " > 2 is not divisible by 4");
    }
    if (order > hadcode::kDefaultOrderCap) return fail(HC_ERR_SIZE_CAP_EXCEEDED, "order exceeds cap");
    auto leaf = hadcode::leaf_for_order(kind, order);
    if (!leaf) {
      return fail(HC_ERR_ORDER_UNREACHABLE, std::string("not reachable by implemented constructions: ") +
                                                hadcode::kind_name(kind) + " cannot produce order " +
                                                std::to_string(order));
    }
    *out = new hc_plan{*leaf};
    return HC_OK;
  });
}

HC_API void hc_plan_free(hc_plan* plan) { delete plan; }

HC_API uint64_t hc_plan_order(const hc_plan* plan) { return plan ? plan->plan.order() : 0; }

HC_API size_t hc_plan_kronecker_nodes(const hc_plan* plan) { return plan ? plan->plan.kronecker_nodes() : 0; }

HC_API hc_status hc_plan_describe(const hc_plan* plan, char* buf, size_t cap, size_t* needed) {
  if (!plan) return null_argument("plan");
  return guarded([&] { return copy_out(plan->plan.describe(), buf, cap, needed); });
}

HC_API hc_status hc_plan_execute(const hc_plan* plan, hc_matrix** out) {
  if (!plan || !out) return null_argument("plan/out");
  return guarded([&] { return give_matrix(hadcode::execute(plan->plan), out); });
}

/* ---- matrices ---- */

HC_API hc_status hc_matrix_sylvester(unsigned a, hc_matrix** out) {
  if (!out) return null_argument("out");
  return guarded([&] { return give_matrix(hadcode::sylvester(a), out); });
}

HC_API hc_status hc_matrix_paley_one(uint64_t q, hc_matrix** out) {
  if (!out) return null_argument("out");
  return guarded([&] { return give_matrix(hadcode::paley_one(q), out); });
}

HC_API hc_status hc_matrix_paley_two(uint64_t q, hc_matrix** out) {
  if (!out) return null_argument("out");
  return guarded([&] { return give_matrix(hadcode::paley_two(q), out); });
}

HC_API hc_status hc_matrix_twin_prime(uint64_t q, hc_matrix** out) {
  if (!out) return null_argument("out");
  return guarded([&] { return give_matrix(hadcode::twin_prime(q), out); });
}

HC_API hc_status hc_matrix_kronecker(const hc_matrix* a, const hc_matrix* b, hc_matrix** out) {
  if (!a || !b || !out) return null_argument("a/b/out");
  return guarded([&] { return give_matrix(hadcode::kronecker(a->m, b->m), out); });
}

HC_API void hc_matrix_free(hc_matrix* m) { delete m; }

HC_API size_t hc_matrix_rows(const hc_matrix* m) { return m ? m->m.rows() : 0; }

HC_API size_t hc_matrix_cols(const hc_matrix* m) { return m ? m->m.cols() : 0; }

HC_API int hc_matrix_entry(const hc_matrix* m, size_t row, size_t col) {
  if (!m || row >= m->m.rows() || col >= m->m.cols()) return 0;
  return m->m.at(row, col);
}

HC_API hc_status hc_matrix_is_hadamard(const hc_matrix* m, int* is_hadamard) {
  if (!m || !is_hadamard) return null_argument("m/is_hadamard");
  return guarded([&] {
    *is_hadamard = hadcode::is_hadamard(m->m) ? 1 : 0;
    return HC_OK;
  });
}

HC_API hc_status hc_matrix_normalize(const hc_matrix* m, hc_matrix** out) {
  if (!m || !out) return null_argument("m/out");
  return guarded([&] { return give_matrix(hadcode::normalize(m->m), out); });
}

HC_API hc_status hc_matrix_parse(const char* text, size_t len, hc_matrix** out) {
  if (!text || !out) return null_argument("text/out");
  return guarded([&] { return give_matrix(hadcode::parse_matrix({text, len}), out); });
}

HC_API hc_status hc_matrix_to_text(const hc_matrix* m, char* buf, size_t cap, size_t* needed) {
  if (!m) return null_argument("m");
  return guarded([&] { return copy_out(hadcode::matrix_to_text(m->m), buf, cap, needed); });
}

HC_API hc_status hc_matrix_read_file(const char* path, hc_matrix** out) {
  if (!path || !out) return null_argument("path/out");
  return guarded([&] { return give_matrix(hadcode::parse_matrix(hadcode::read_file(path)), out); });
}

HC_API hc_status hc_matrix_write_file(const hc_matrix* m, const char* path) {
  if (!m || !path) return null_argument("m/path");
  return guarded([&] {
    hadcode::write_file(path, hadcode::matrix_to_text(m->m));
    return HC_OK;
  });
}

/* ---- codes ---- */

HC_API hc_status hc_code_from_matrix(const hc_matrix* m, hc_code** out) {
  if (!m || !out) return null_argument("m/out");
  return guarded([&] { return give_code(hadcode::code_from_matrix(m->m), out); });
}

HC_API hc_status hc_code_from_punctured(const hc_matrix* h, size_t puncture, hc_column_policy policy,
                                        const size_t* columns, size_t ncolumns, hc_code** out,
                                        hc_puncture_info* info) {
  if (!h || !out) return null_argument("h/out");
  if (policy == HC_COLUMNS_EXPLICIT && ncolumns > 0 && !columns) return null_argument("columns");
  return guarded([&] {
    const size_t order = h->m.rows();
    if (puncture % 4 != 0) {
      return fail(HC_ERR_BAD_COLUMN_LIST, "puncture count " + std::to_string(puncture) + " is not a multiple of 4");
    }
    if (!h->m.is_square() || order % 4 != 0 || order == 0) {
      return fail(HC_ERR_BAD_SHAPE, "expected a square matrix of order divisible by 4");
    }
    if (!hadcode::is_hadamard(h->m)) return fail(HC_ERR_NOT_HADAMARD_INPUT, "matrix is not Hadamard");
    if (2 * puncture >= order) {
      return fail(HC_ERR_BAD_PARAMS, "need i < t, i.e. fewer than half the columns deleted");
    }
    hadcode::PunctureParams pp;
    pp.i = puncture / 4;
    pp.t = order / 4 - pp.i;
    const auto pol = to_policy(policy);
    if (pol == hadcode::ColumnPolicy::Explicit) {
      pp.deleted_columns.assign(columns, columns + ncolumns);
    } else {
      pp.deleted_columns = hadcode::policy_columns(pol, order, puncture);
    }
    auto code = hadcode::code_from_matrix(hadcode::puncture(h->m, pp));
    if (info) *info = {pp.t, pp.i, 2 * pp.t - 2 * pp.i};
    return give_code(std::move(code), out);
  });
}

HC_API hc_status hc_code_punctured_hadamard(size_t t, size_t i, hc_column_policy policy, const size_t* columns,
                                            size_t ncolumns, hc_code** out, hc_matrix** hadamard,
                                            size_t* deleted) {
  if (!out) return null_argument("out");
  if (policy == HC_COLUMNS_EXPLICIT && ncolumns > 0 && !columns) return null_argument("columns");
  return guarded([&] {
    std::vector<size_t> cols;
    if (policy == HC_COLUMNS_EXPLICIT) cols.assign(columns, columns + ncolumns);
    auto pc = hadcode::punctured_hadamard_code(t, i, to_policy(policy), cols);
    if (deleted) std::copy(pc.puncture.deleted_columns.begin(), pc.puncture.deleted_columns.end(), deleted);
    if (hadamard) *hadamard = new hc_matrix{std::move(pc.hadamard)};
    return give_code(std::move(pc.code), out);
  });
}

HC_API void hc_code_free(hc_code* c) { delete c; }

HC_API size_t hc_code_size(const hc_code* c) { return c ? c->c.size() : 0; }

HC_API size_t hc_code_length(const hc_code* c) { return c ? c->c.length() : 0; }

HC_API int hc_code_bit(const hc_code* c, size_t word, size_t bit) {
  if (!c || word >= c->c.size() || bit >= c->c.length()) return -1;
  return c->c.word(word).bit(bit) ? 1 : 0;
}

HC_API hc_status hc_code_parse(const char* text, size_t len, hc_code** out) {
  if (!text || !out) return null_argument("text/out");
  return guarded([&] { return give_code(hadcode::parse_code({text, len}), out); });
}

HC_API hc_status hc_code_to_text(const hc_code* c, char* buf, size_t cap, size_t* needed) {
  if (!c) return null_argument("c");
  return guarded([&] { return copy_out(hadcode::code_to_text(c->c), buf, cap, needed); });
}

HC_API hc_status hc_code_read_file(const char* path, hc_code** out) {
  if (!path || !out) return null_argument("path/out");
  return guarded([&] { return give_code(hadcode::parse_code(hadcode::read_file(path)), out); });
}

HC_API hc_status hc_code_write_file(const hc_code* c, const char* path) {
  if (!c || !path) return null_argument("c/path");
  return guarded([&] {
    hadcode::write_file(path, hadcode::code_to_text(c->c));
    return HC_OK;
  });
}

HC_API hc_status hc_code_distance(const hc_code* c, size_t a, size_t b, size_t* out) {
  if (!c || !out) return null_argument("c/out");
  if (a >= c->c.size() || b >= c->c.size()) return fail(HC_ERR_INVALID_ARGUMENT, "word index out of range");
  return guarded([&] {
    *out = hadcode::distance(c->c.word(a), c->c.word(b));
    return HC_OK;
  });
}

HC_API hc_status hc_code_params_compute(const hc_code* c, hc_code_params* out) {
  if (!c || !out) return null_argument("c/out");
  return guarded([&] {
    const auto p = hadcode::min_distance(c->c);
    *out = {p.length, p.size, p.min_distance};
    return HC_OK;
  });
}

HC_API hc_status hc_code_gram_params(const hc_matrix* m, hc_code_params* out, int64_t* alpha) {
  if (!m || !out) return null_argument("m/out");
  return guarded([&] {
    const auto [g, p] = hadcode::gram_min_distance(m->m);
    *out = {p.length, p.size, p.min_distance};
    if (alpha) *alpha = g.max_offdiag_abs;
    return HC_OK;
  });
}

HC_API hc_status hc_code_distance_distribution(const hc_code* c, uint64_t* counts, size_t cap) {
  if (!c || !counts) return null_argument("c/counts");
  if (cap < c->c.length() + 1) return fail(HC_ERR_BUFFER_TOO_SMALL, "counts needs length + 1 entries");
  return guarded([&] {
    const auto dist = hadcode::distance_distribution(c->c);
    std::copy(dist.begin(), dist.end(), counts);
    return HC_OK;
  });
}

HC_API hc_status hc_code_is_self_complementary(const hc_code* c, int* out) {
  if (!c || !out) return null_argument("c/out");
  return guarded([&] {
    *out = hadcode::is_self_complementary(c->c) ? 1 : 0;
    return HC_OK;
  });
}

/* ---- bounds ---- */

HC_API hc_status hc_grey_rankin(int64_t n, int64_t d, hc_bound_report* out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = to_c(hadcode::grey_rankin(n, d));
    return HC_OK;
  });
}

HC_API hc_status hc_grey_rankin_punctured(int64_t t, int64_t i, hc_bound_report* out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = to_c(hadcode::grey_rankin_punctured(t, i));
    return HC_OK;
  });
}

HC_API hc_status hc_bound_attach_code_size(hc_bound_report* report, uint64_t code_size) {
  if (!report) return null_argument("report");
  report->has_code_size = 1;
  report->code_size = code_size;
  report->has_gap = report->applicable;
  if (report->applicable) report->gap = report->floor - static_cast<int64_t>(code_size);
  return HC_OK;
}

HC_API hc_status hc_integrality_scan_i1(int64_t first, int64_t last, int64_t* out, size_t cap, size_t* count) {
  if (!count || (cap > 0 && !out)) return null_argument("out/count");
  return guarded([&] {
    const auto ts = hadcode::integrality_scan_i1(first, last);
    *count = ts.size();
    std::copy_n(ts.begin(), std::min(cap, ts.size()), out);
    return HC_OK;
  });
}

HC_API hc_status hc_maximality_threshold(int64_t i, int64_t* out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = hadcode::maximality_threshold(i);
    return HC_OK;
  });
}

HC_API hc_status hc_symplectic_comparison(int64_t l, hc_symplectic* out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto s = hadcode::symplectic_comparison(l);
    *out = {s.l, s.n, s.d, s.symplectic_size, s.theorem_size, to_c(s.ratio), s.t, s.i};
    return HC_OK;
  });
}

/* ---- audits ---- */

HC_API hc_status hc_parseval_check(const hc_matrix* h, const uint8_t* bits, size_t len, int* holds) {
  if (!h || !holds || (len > 0 && !bits)) return null_argument("h/bits/holds");
  return guarded([&] {
    hadcode::BitVector v(len);
    for (size_t j = 0; j < len; ++j) v.set(j, bits[j] != 0);
    *holds = hadcode::parseval_check(h->m, v) ? 1 : 0;
    return HC_OK;
  });
}

HC_API hc_status hc_maximality_probe(const hc_code* c, const hc_matrix* h, const size_t* deleted, size_t ndeleted,
                                     uint64_t samples, uint64_t seed, hc_probe_report* out,
                                     hc_code** counterexample) {
  if (!c || !h || !out || (ndeleted > 0 && !deleted)) return null_argument("c/h/deleted/out");
  return guarded([&] {
    const size_t order = h->m.rows();
    const size_t length = c->c.length();
    if (length == 0 || length % 4 != 0 || order < length || (order - length) % 4 != 0) {
      return fail(HC_ERR_SHAPE_MISMATCH, "code length and matrix order do not fit 4t and 4t + 4i");
    }
    hadcode::PunctureParams pp;
    pp.t = length / 4;
    pp.i = (order - length) / 4;
    pp.deleted_columns.assign(deleted, deleted + ndeleted);
    const auto r = hadcode::maximality_probe(c->c, h->m, pp, samples, seed);
    *out = {r.samples,
            r.seed,
            r.t,
            r.i,
            r.guaranteed_distance,
            r.in_guaranteed_range,
            r.vacuous,
            r.all_rejected,
            r.min_observed_best_distance,
            r.max_observed_best_distance,
            r.parseval_checked,
            r.min_max_abs_inner,
            r.sqrt_bound_held,
            r.parity_refined_bound,
            r.parity_bound_held,
            r.counterexample.has_value()};
    if (counterexample) {
      *counterexample = nullptr;
      if (r.counterexample) {
        hadcode::BinaryCode one(r.counterexample->size());
        one.add(*r.counterexample);
        *counterexample = new hc_code{std::move(one)};
      }
    }
    return HC_OK;
  });
}

HC_API hc_status hc_exhaustive_maximality(const hc_code* c, int* maximal) {
  if (!c || !maximal) return null_argument("c/maximal");
  return guarded([&] {
    *maximal = hadcode::exhaustive_maximality(c->c) ? 1 : 0;
    return HC_OK;
  });
}

HC_API hc_status hc_extend_search(const hc_code* c, uint64_t budget, uint64_t seed, hc_extension_report* out,
                                  hc_code** added) {
  if (!c || !out) return null_argument("c/out");
  return guarded([&] {
    const auto r = hadcode::extend_search(c->c, budget, seed);
    size_t min_cert = 0;
    if (!r.certificate_distances.empty()) {
      min_cert = *std::min_element(r.certificate_distances.begin(), r.certificate_distances.end());
    }
    *out = {r.budget, r.spent, r.seed, r.restarts, r.target_distance, r.added.size(), min_cert};
    if (added) {
      hadcode::BinaryCode words(c->c.length());
      for (const auto& w : r.added) words.add(w);
      *added = new hc_code{std::move(words)};
    }
    return HC_OK;
  });
}

}  // extern "C"
