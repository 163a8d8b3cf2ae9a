#include "cbgon/cbgon.h"

#include "cbgon/error.hpp"
#include "cbgon/operations.hpp"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <new>
#include <string>

struct cbgon_instance {
  cbgon::Instance value;
};

struct cbgon_report {
  cbgon::Report value;
};

namespace {

thread_local std::string last_error;

cbgon_status to_status(cbgon::ErrorCode code) {
  using cbgon::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return CBGON_INVALID_ARGUMENT;
    case ErrorCode::NotPrime: return CBGON_NOT_PRIME;
    case ErrorCode::ZeroInverse: return CBGON_ZERO_INVERSE;
    case ErrorCode::FieldMismatch: return CBGON_FIELD_MISMATCH;
    case ErrorCode::SyntaxError: return CBGON_SYNTAX_ERROR;
    case ErrorCode::NotHomogeneous: return CBGON_NOT_HOMOGENEOUS;
    case ErrorCode::WrongVariable: return CBGON_WRONG_VARIABLE;
    case ErrorCode::BudgetExceeded: return CBGON_BUDGET_EXCEEDED;
    case ErrorCode::PointNotOnScheme: return CBGON_POINT_NOT_ON_SCHEME;
    case ErrorCode::DegenerateConfiguration: return CBGON_DEGENERATE_CONFIGURATION;
    case ErrorCode::NonReducedSubscheme: return CBGON_NON_REDUCED_SUBSCHEME;
    case ErrorCode::NegativeCanonicalTwist: return CBGON_NEGATIVE_CANONICAL_TWIST;
    case ErrorCode::PointNotOnCurve: return CBGON_POINT_NOT_ON_CURVE;
    case ErrorCode::NonReducedCenterIntersection: return CBGON_NON_REDUCED_CENTER_INTERSECTION;
    case ErrorCode::SingularAtCenter: return CBGON_SINGULAR_AT_CENTER;
    case ErrorCode::DegreeOrderViolation: return CBGON_DEGREE_ORDER_VIOLATION;
    case ErrorCode::RangeViolation: return CBGON_RANGE_VIOLATION;
    case ErrorCode::RetryLimit: return CBGON_RETRY_LIMIT;
    case ErrorCode::InstanceFormat: return CBGON_INSTANCE_FORMAT;
  }
  return CBGON_INTERNAL_ERROR;
}

template <typename F>
cbgon_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return CBGON_OK;
  } catch (const cbgon::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  }
  return CBGON_INTERNAL_ERROR;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw cbgon::Error(cbgon::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

cbgon::Field field_of(uint32_t prime) {
  return prime == CBGON_FIELD_RATIONAL ? cbgon::Field::rational() : cbgon::Field::prime(prime);
}

std::optional<cbgon::Field> override_of(uint32_t prime) {
  if (prime == CBGON_FIELD_NONE) return std::nullopt;
  return field_of(prime);
}

cbgon::RunOptions run_options(const cbgon_options* o) {
  cbgon::RunOptions r;
  if (o == nullptr) return r;
  if (o->has_seed) r.seed = o->seed;
  if (o->budget == 0) throw cbgon::Error(cbgon::ErrorCode::InvalidArgument, "budget must be at least 1");
  r.budget = o->budget;
  r.workers = o->workers == 0 ? 1 : o->workers;
  return r;
}

std::vector<unsigned> degrees_of(const unsigned* d, size_t count) {
  if (count > 0) require(d, "degrees");
  return std::vector<unsigned>(d, d + count);
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cbgon_status emit(cbgon_report** out, const std::function<cbgon::Report()>& make) {
  return guarded([&] {
    require(out, "output pointer");
    *out = new cbgon_report{make()};
  });
}

}  // namespace

extern "C" {

void cbgon_options_init(cbgon_options* options) {
  if (options == nullptr) return;
  options->seed = 0;
  options->has_seed = 0;
  options->budget = cbgon::kDefaultPointBudget;
  options->workers = 1;
}

const char* cbgon_last_error(void) { return last_error.c_str(); }

const char* cbgon_status_name(cbgon_status status) {
  switch (status) {
    case CBGON_OK: return "OK";
    case CBGON_INTERNAL_ERROR: return "InternalError";
    default: break;
  }
  if (status > CBGON_OK && status <= CBGON_INSTANCE_FORMAT) {
    return cbgon::error_code_name(static_cast<cbgon::ErrorCode>(status - 1));
  }
  return "Unknown";
}

cbgon_status cbgon_instance_from_json(const char* text, uint32_t override_prime, cbgon_instance** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output pointer");
    *out = new cbgon_instance{cbgon::parse_instance(text, override_of(override_prime))};
  });
}

cbgon_status cbgon_instance_load(const char* path, uint32_t override_prime, cbgon_instance** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "output pointer");
    *out = new cbgon_instance{cbgon::load_instance(path, override_of(override_prime))};
  });
}

cbgon_status cbgon_instance_random_curve(uint32_t prime, const unsigned* degrees, size_t count, uint64_t seed,
                                         int with_center, const cbgon_options* options, cbgon_instance** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = new cbgon_instance{cbgon::random_curve_instance(field_of(prime), degrees_of(degrees, count), seed,
                                                           with_center != 0, run_options(options))};
  });
}

cbgon_status cbgon_instance_planted_curve(uint32_t prime, const unsigned* degrees, size_t count, uint64_t seed,
                                          const cbgon_options* options, cbgon_instance** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = new cbgon_instance{
        cbgon::planted_curve_instance(field_of(prime), degrees_of(degrees, count), seed, run_options(options))};
  });
}

cbgon_status cbgon_instance_to_json(const cbgon_instance* instance, char** out) {
  return guarded([&] {
    require(instance, "instance");
    require(out, "output pointer");
    *out = duplicate(cbgon::instance_to_json(instance->value).dump(2));
  });
}

void cbgon_instance_free(cbgon_instance* instance) { delete instance; }

cbgon_status cbgon_indep_check(const cbgon_instance* instance, long long degree, cbgon_report** out) {
  return emit(out, [&] {
    require(instance, "instance");
    return cbgon::indep_check_report(instance->value, degree);
  });
}

cbgon_status cbgon_cb_check(const cbgon_instance* instance, long long degree, const cbgon_options* options,
                            cbgon_report** out) {
  return emit(out, [&] {
    require(instance, "instance");
    return cbgon::cb_check_report(instance->value, degree, run_options(options));
  });
}

cbgon_status cbgon_cb_canonical(const cbgon_instance* instance, const cbgon_options* options, cbgon_report** out) {
  return emit(out, [&] {
    require(instance, "instance");
    return cbgon::cb_canonical_report(instance->value, run_options(options));
  });
}

cbgon_status cbgon_project(const cbgon_instance* instance, const cbgon_options* options, cbgon_report** out) {
  return emit(out, [&] {
    require(instance, "instance");
    return cbgon::project_report(instance->value, run_options(options));
  });
}

cbgon_status cbgon_fibers(const cbgon_instance* instance, const cbgon_options* options, cbgon_report** out) {
  return emit(out, [&] {
    require(instance, "instance");
    return cbgon::fibers_report(instance->value, run_options(options));
  });
}

cbgon_status cbgon_secant_census(const cbgon_instance* instance, size_t k, const cbgon_options* options,
                                 cbgon_report** out) {
  return emit(out, [&] {
    require(instance, "instance");
    return cbgon::secant_census_report(instance->value, k, run_options(options));
  });
}

cbgon_status cbgon_gamma(const cbgon_instance* instance, const cbgon_options* options, cbgon_report** out) {
  return emit(out, [&] {
    require(instance, "instance");
    return cbgon::gamma_report(instance->value, run_options(options));
  });
}

cbgon_status cbgon_gonality(const unsigned* degrees, size_t count, int has_gamma, long long gamma, int has_deg_s,
                            long long deg_s, int has_alpha, long long alpha, cbgon_report** out) {
  return emit(out, [&] {
    auto opt = [](int has, long long v) { return has ? std::optional<long long>(v) : std::nullopt; };
    return cbgon::gonality_summary_report(degrees_of(degrees, count), opt(has_gamma, gamma), opt(has_deg_s, deg_s),
                                          opt(has_alpha, alpha));
  });
}

cbgon_status cbgon_dim_audit(const unsigned* degrees, size_t count, cbgon_report** out) {
  return emit(out, [&] { return cbgon::dim_audit_report(degrees_of(degrees, count)); });
}

cbgon_status cbgon_cbconj_scan(uint32_t prime, const unsigned* grid, size_t count, unsigned e,
                               const cbgon_instance* points, const cbgon_options* options, cbgon_report** out) {
  return emit(out, [&] {
    return cbgon::cbconj_scan_report(field_of(prime), degrees_of(grid, count), e, run_options(options),
                                     points ? &points->value : nullptr);
  });
}

cbgon_status cbgon_verify_suite(const cbgon_options* options, cbgon_report** out) {
  return emit(out, [&] { return cbgon::verify_suite_report(run_options(options)); });
}

cbgon_verdict cbgon_report_verdict(const cbgon_report* report) {
  if (report == nullptr) return CBGON_REPORT;
  switch (report->value.verdict) {
    case cbgon::Verdict::Pass: return CBGON_PASS;
    case cbgon::Verdict::Fail: return CBGON_FAIL;
    case cbgon::Verdict::Report: return CBGON_REPORT;
  }
  return CBGON_REPORT;
}

cbgon_status cbgon_report_json(const cbgon_report* report, int indent, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "output pointer");
    *out = duplicate(report->value.to_json().dump(indent));
  });
}

cbgon_status cbgon_report_text(const cbgon_report* report, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "output pointer");
    *out = duplicate(report->value.to_text());
  });
}

void cbgon_report_free(cbgon_report* report) { delete report; }

void cbgon_string_free(char* text) { std::free(text); }

}  // extern "C"
