// Copyright 2026 The qsi developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsi/qsi.h"

#include <cstring>
#include <new>
#include <string>

#include "density.hpp"
#include "errors.hpp"
#include "extract.hpp"
#include "fisher.hpp"
#include "inequalities.hpp"
#include "order.hpp"
#include "skew.hpp"
#include "weights.hpp"

struct qsi_function {
  qsi::FisherFunction fn;
};
struct qsi_weight {
  qsi::WeightFunction w;
};
struct qsi_matrix {
  qsi::ComplexMatrix m;
};
struct qsi_density {
  qsi::DensityMatrix rho;
};

namespace {

thread_local std::string g_last_error;

qsi_status to_status(qsi::ErrorCode code) {
  return static_cast<qsi_status>(static_cast<int>(code));
}

template <typename Fn>
qsi_status guarded(Fn&& fn) {
  try {
    fn();
    return QSI_OK;
  } catch (const qsi::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return QSI_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QSI_ERR_INTERNAL;
  }
}

qsi_status require(bool condition, const char* message) {
  if (condition) return QSI_OK;
  g_last_error = message;
  return QSI_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qsi::ComplexMatrix matrix_from_entries(int dim, const double* entries) {
  if (dim < 1) qsi::raise(qsi::ErrorCode::invalid_argument, "dim must be >= 1");
  if (entries == nullptr) qsi::raise(qsi::ErrorCode::invalid_argument, "entries is null");
  std::vector<qsi::complexd> data(static_cast<size_t>(dim) * dim);
  for (size_t i = 0; i < data.size(); ++i)
    data[i] = qsi::complexd(entries[2 * i], entries[2 * i + 1]);
  return qsi::ComplexMatrix(dim, std::move(data));
}

}  // namespace

extern "C" {

const char* qsi_status_name(qsi_status status) {
  switch (status) {
    case QSI_OK: return "ok";
    case QSI_ERR_INVALID_ARGUMENT: return "invalid argument";
    case QSI_ERR_PARSE: return "parse error";
    case QSI_ERR_NOT_HERMITIAN: return "not Hermitian";
    case QSI_ERR_NOT_POSITIVE_DEFINITE: return "not positive definite";
    case QSI_ERR_TRACE_NOT_ONE: return "trace not one";
    case QSI_ERR_CONVERGENCE: return "eigensolver convergence failure";
    case QSI_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case QSI_ERR_DOMAIN: return "domain error";
    case QSI_ERR_NOT_REGULAR: return "function not regular";
    case QSI_ERR_QUADRATURE: return "quadrature failure";
    case QSI_ERR_INTEGRABILITY: return "integrability failure";
    case QSI_ERR_UNSUPPORTED_CONTINUATION: return "unsupported analytic continuation";
    case QSI_ERR_BRANCH_TRACKING: return "branch tracking failure";
    case QSI_ERR_WEIGHT_UNAVAILABLE: return "weight unavailable";
    case QSI_ERR_METHOD_DISAGREEMENT: return "method disagreement";
    case QSI_ERR_NUMERICAL_INCONSISTENCY: return "numerical inconsistency";
    case QSI_ERR_IO: return "i/o error";
    case QSI_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* qsi_last_error_message(void) { return g_last_error.c_str(); }

void qsi_string_free(char* s) { delete[] s; }

qsi_status qsi_function_parse(const char* spec, qsi_function** out) {
  if (qsi_status st = require(spec && out, "spec and out must not be null")) return st;
  return guarded([&] { *out = new qsi_function{qsi::parse_function_spec(spec)}; });
}

void qsi_function_free(qsi_function* fn) { delete fn; }

qsi_status qsi_function_spec(const qsi_function* fn, char** out) {
  if (qsi_status st = require(fn && out, "fn and out must not be null")) return st;
  return guarded([&] { *out = copy_string(fn->fn.spec()); });
}

qsi_status qsi_function_eval(const qsi_function* fn, double t, double* out) {
  if (qsi_status st = require(fn && out, "fn and out must not be null")) return st;
  return guarded([&] { *out = fn->fn(t); });
}

qsi_status qsi_function_f_zero(const qsi_function* fn, double* out) {
  if (qsi_status st = require(fn && out, "fn and out must not be null")) return st;
  return guarded([&] { *out = fn->fn.f_zero(); });
}

qsi_status qsi_function_is_regular(const qsi_function* fn, int* out) {
  if (qsi_status st = require(fn && out, "fn and out must not be null")) return st;
  return guarded([&] { *out = fn->fn.regular() ? 1 : 0; });
}

qsi_status qsi_function_eval_check(const qsi_function* fn, double t, double* out) {
  if (qsi_status st = require(fn && out, "fn and out must not be null")) return st;
  return guarded([&] { *out = fn->fn.check_f(t); });
}

qsi_status qsi_function_eval_tilde(const qsi_function* fn, double t, double* out) {
  if (qsi_status st = require(fn && out, "fn and out must not be null")) return st;
  return guarded([&] { *out = fn->fn.tilde_f(t); });
}

qsi_status qsi_function_mc(const qsi_function* fn, double x, double y, double* out) {
  if (qsi_status st = require(fn && out, "fn and out must not be null")) return st;
  return guarded([&] { *out = fn->fn.mc(x, y); });
}

qsi_status qsi_function_check_c(const qsi_function* fn, double x, double y, double* out) {
  if (qsi_status st = require(fn && out, "fn and out must not be null")) return st;
  return guarded([&] { *out = fn->fn.check_c(x, y); });
}

qsi_status qsi_function_d_c(const qsi_function* fn, double x, double y, double* out) {
  if (qsi_status st = require(fn && out, "fn and out must not be null")) return st;
  return guarded([&] { *out = fn->fn.d_c(x, y); });
}

qsi_status qsi_function_has_closed_weight(const qsi_function* fn, int* out) {
  if (qsi_status st = require(fn && out, "fn and out must not be null")) return st;
  return guarded([&] { *out = fn->fn.has_weight() ? 1 : 0; });
}

qsi_status qsi_function_weight(const qsi_function* fn, double lambda, double* out) {
  if (qsi_status st = require(fn && out, "fn and out must not be null")) return st;
  return guarded([&] {
    if (fn->fn.has_weight())
      *out = fn->fn.weight()(lambda);
    else
      *out = qsi::extract_weight(fn->fn, lambda);
  });
}

qsi_status qsi_function_extract_weight(const qsi_function* fn, double lambda, double* out) {
  if (qsi_status st = require(fn && out, "fn and out must not be null")) return st;
  return guarded([&] { *out = qsi::extract_weight(fn->fn, lambda); });
}

qsi_status qsi_function_sharp(const qsi_function* fn, qsi_function** out) {
  if (qsi_status st = require(fn && out, "fn and out must not be null")) return st;
  return guarded([&] { *out = new qsi_function{qsi::sharp(fn->fn)}; });
}

qsi_status qsi_function_meet(const qsi_function* a, const qsi_function* b, qsi_function** out) {
  if (qsi_status st = require(a && b && out, "arguments must not be null")) return st;
  return guarded([&] { *out = new qsi_function{qsi::meet(a->fn, b->fn)}; });
}

qsi_status qsi_function_join(const qsi_function* a, const qsi_function* b, qsi_function** out) {
  if (qsi_status st = require(a && b && out, "arguments must not be null")) return st;
  return guarded([&] { *out = new qsi_function{qsi::join(a->fn, b->fn)}; });
}

qsi_status qsi_order_preceq(const qsi_function* f, const qsi_function* g,
                            qsi_order_method method, qsi_order_verdict* out) {
  if (qsi_status st = require(f && g && out, "arguments must not be null")) return st;
  return guarded([&] {
    qsi::OrderConfig config;
    switch (method) {
      case QSI_ORDER_AUTO: config.method = qsi::OrderMethod::automatic; break;
      case QSI_ORDER_WEIGHT: config.method = qsi::OrderMethod::weight_comparison; break;
      case QSI_ORDER_PHI: config.method = qsi::OrderMethod::phi_monotonicity; break;
      case QSI_ORDER_BOTH: config.method = qsi::OrderMethod::both; break;
      default: qsi::raise(qsi::ErrorCode::invalid_argument, "unknown order method");
    }
    const qsi::OrderVerdict verdict = qsi::preceq(f->fn, g->fn, config);
    out->holds = verdict.holds ? 1 : 0;
    switch (verdict.method) {
      case qsi::OrderMethod::weight_comparison: out->method_used = QSI_ORDER_WEIGHT; break;
      case qsi::OrderMethod::phi_monotonicity: out->method_used = QSI_ORDER_PHI; break;
      case qsi::OrderMethod::both: out->method_used = QSI_ORDER_BOTH; break;
      default: out->method_used = QSI_ORDER_AUTO; break;
    }
    out->worst_margin = verdict.worst_margin;
    out->grid_size = verdict.grid_size;
  });
}

qsi_status qsi_weight_parse(const char* spec, qsi_weight** out) {
  if (qsi_status st = require(spec && out, "spec and out must not be null")) return st;
  return guarded([&] { *out = new qsi_weight{qsi::parse_weight_spec(spec)}; });
}

void qsi_weight_free(qsi_weight* w) { delete w; }

qsi_status qsi_weight_eval(const qsi_weight* w, double lambda, double* out) {
  if (qsi_status st = require(w && out, "w and out must not be null")) return st;
  return guarded([&] { *out = w->w(lambda); });
}

qsi_status qsi_weight_reconstruct_f(const qsi_weight* w, double t, double* out) {
  if (qsi_status st = require(w && out, "w and out must not be null")) return st;
  return guarded([&] { *out = qsi::reconstruct_f(w->w, t); });
}

qsi_status qsi_weight_reconstruct_check_f(const qsi_weight* w, double t, double* out) {
  if (qsi_status st = require(w && out, "w and out must not be null")) return st;
  return guarded([&] { *out = qsi::reconstruct_check_f(w->w, t); });
}

qsi_status qsi_wyd_weight(double p, double lambda, double* out) {
  if (qsi_status st = require(out != nullptr, "out must not be null")) return st;
  return guarded([&] { *out = qsi::wyd_weight(p, lambda); });
}

qsi_status qsi_bridge_weight(double p, double lambda, double* out) {
  if (qsi_status st = require(out != nullptr, "out must not be null")) return st;
  return guarded([&] { *out = qsi::bridge_weight(p, lambda); });
}

qsi_status qsi_matrix_create(int dim, const double* entries, qsi_matrix** out) {
  if (qsi_status st = require(out != nullptr, "out must not be null")) return st;
  return guarded([&] { *out = new qsi_matrix{matrix_from_entries(dim, entries)}; });
}

void qsi_matrix_free(qsi_matrix* m) { delete m; }

qsi_status qsi_density_create(int dim, const double* entries, qsi_density** out) {
  if (qsi_status st = require(out != nullptr, "out must not be null")) return st;
  return guarded(
      [&] { *out = new qsi_density{qsi::validate_density(matrix_from_entries(dim, entries))}; });
}

void qsi_density_free(qsi_density* rho) { delete rho; }

qsi_status qsi_variance(const qsi_density* rho, const qsi_matrix* a, double* out) {
  if (qsi_status st = require(rho && a && out, "arguments must not be null")) return st;
  return guarded([&] { *out = qsi::variance(rho->rho, a->m); });
}

qsi_status qsi_covariance(const qsi_density* rho, const qsi_matrix* a, const qsi_matrix* b,
                          double* out_re, double* out_im) {
  if (qsi_status st = require(rho && a && b && out_re && out_im, "arguments must not be null"))
    return st;
  return guarded([&] {
    const qsi::complexd c = qsi::covariance(rho->rho, a->m, b->m);
    *out_re = c.real();
    *out_im = c.imag();
  });
}

qsi_status qsi_skew_info(const qsi_function* fn, const qsi_density* rho, const qsi_matrix* a,
                         double* out) {
  if (qsi_status st = require(fn && rho && a && out, "arguments must not be null")) return st;
  return guarded([&] { *out = qsi::skew_info(fn->fn, rho->rho, a->m); });
}

qsi_status qsi_skew_info_alt(const qsi_function* fn, const qsi_density* rho, const qsi_matrix* a,
                             double* out) {
  if (qsi_status st = require(fn && rho && a && out, "arguments must not be null")) return st;
  return guarded([&] {
    *out = qsi::skew_info_alt(fn->fn, rho->rho, qsi::HermitianMatrix::require(a->m));
  });
}

qsi_status qsi_skew_bilinear(const qsi_function* fn, const qsi_density* rho, const qsi_matrix* a,
                             const qsi_matrix* b, double* out_re, double* out_im) {
  if (qsi_status st =
          require(fn && rho && a && b && out_re && out_im, "arguments must not be null"))
    return st;
  return guarded([&] {
    const qsi::complexd v = qsi::skew_bilinear(fn->fn, rho->rho, a->m, b->m);
    *out_re = v.real();
    *out_im = v.imag();
  });
}

qsi_status qsi_wyd_direct(double p, const qsi_density* rho, const qsi_matrix* a, double* out) {
  if (qsi_status st = require(rho && a && out, "arguments must not be null")) return st;
  return guarded([&] {
    *out = qsi::wyd_direct(p, rho->rho, qsi::HermitianMatrix::require(a->m));
  });
}

void qsi_verify_config_init(qsi_verify_config* cfg) {
  if (cfg == nullptr) return;
  cfg->suite = "basic";
  cfg->function_spec = "wyd:0.5";
  cfg->dim = 3;
  cfg->tuple_size = 2;
  cfg->trials = 1000;
  cfg->seed = 42;
  cfg->tol = 1e-9;
}

qsi_status qsi_verify_run(const qsi_verify_config* cfg, char** report_json, int* passed) {
  if (qsi_status st = require(cfg && cfg->suite && report_json, "cfg and report must not be null"))
    return st;
  return guarded([&] {
    qsi::SuiteConfig config;
    config.dims = {cfg->dim};
    config.tuple_size = cfg->tuple_size;
    config.trials = cfg->trials;
    config.seed = cfg->seed;
    config.tol = cfg->tol;
    const qsi::FisherFunction fn =
        qsi::parse_function_spec(cfg->function_spec ? cfg->function_spec : "wyd:0.5");
    const qsi::InequalityReport report = qsi::run_suite(cfg->suite, fn, config);
    *report_json = copy_string(report.to_json());
    if (passed != nullptr) *passed = report.passed ? 1 : 0;
  });
}

}  // extern "C"
