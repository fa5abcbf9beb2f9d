#include "effalg/effalg.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "effalg/builtin.hpp"
#include "effalg/classify.hpp"
#include "effalg/compat.hpp"
#include "effalg/io.hpp"
#include "effalg/mvgen.hpp"
#include "effalg/report.hpp"

struct ea_algebra {
  effalg::EffectAlgebra e;
};

namespace {

thread_local std::string g_last_error;

ea_status status_of(effalg::ErrorKind k) {
  using effalg::ErrorKind;
  switch (k) {
    case ErrorKind::Syntax: return EA_ERR_SYNTAX;
    case ErrorKind::UnknownName: return EA_ERR_UNKNOWN_NAME;
    case ErrorKind::AxiomViolation: return EA_ERR_AXIOM;
    case ErrorKind::DuplicateContradiction: return EA_ERR_DUPLICATE;
    case ErrorKind::ZeroEqualsOne: return EA_ERR_ZERO_EQUALS_ONE;
    case ErrorKind::CapExceeded:
    case ErrorKind::ClosureBudgetExceeded: return EA_ERR_CAP;
    case ErrorKind::UnknownElement: return EA_ERR_UNKNOWN_ELEMENT;
    case ErrorKind::NotBelow: return EA_ERR_NOT_BELOW;
    case ErrorKind::SearchBudgetExceeded: return EA_ERR_BUDGET;
    case ErrorKind::UnknownBuiltin: return EA_ERR_UNKNOWN_BUILTIN;
    case ErrorKind::CoordinateOutOfRange: return EA_ERR_INVALID_ARGUMENT;
    default: return EA_ERR_PRECONDITION;
  }
}

ea_status fail(ea_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class F>
ea_status guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const effalg::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::exception& e) {
    return fail(EA_ERR_OTHER, e.what());
  } catch (...) {
    return fail(EA_ERR_OTHER, "unknown failure");
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

ea_status check_id(const ea_algebra* a, int x) {
  if (x < 0 || x >= a->e.size()) return fail(EA_ERR_UNKNOWN_ELEMENT, "element id " + std::to_string(x) + " out of range");
  return EA_OK;
}

#define EA_REQUIRE(cond)                                                      \
  do {                                                                        \
    if (!(cond)) return fail(EA_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

#define EA_CHECK_ID(a, x)                        \
  do {                                           \
    if (ea_status s_ = check_id(a, x); s_ != EA_OK) return s_; \
  } while (0)

ea_status set_query(const ea_algebra* a, uint64_t* out, effalg::ElementSet (*fn)(const effalg::EffectAlgebra&)) {
  EA_REQUIRE(a && out);
  return guarded([&] {
    *out = fn(a->e).bits();
    return EA_OK;
  });
}

}  // namespace

extern "C" {

const char* ea_last_error(void) { return g_last_error.c_str(); }

ea_status ea_algebra_parse(const char* text, ea_algebra** out) {
  EA_REQUIRE(text && out);
  *out = nullptr;
  return guarded([&] {
    *out = new ea_algebra{effalg::load_algebra(text)};
    return EA_OK;
  });
}

ea_status ea_algebra_builtin(const char* name, ea_algebra** out) {
  EA_REQUIRE(name && out);
  *out = nullptr;
  return guarded([&] {
    *out = new ea_algebra{effalg::EffectAlgebra::validate(effalg::to_table(effalg::builtin(name)))};
    return EA_OK;
  });
}

void ea_algebra_free(ea_algebra* a) { delete a; }

int ea_algebra_size(const ea_algebra* a) { return a ? a->e.size() : 0; }

ea_status ea_element_id(const ea_algebra* a, const char* name, int* out) {
  EA_REQUIRE(a && name && out);
  return guarded([&] {
    *out = a->e.id(name);
    return EA_OK;
  });
}

const char* ea_element_name(const ea_algebra* a, int id) {
  if (!a || id < 0 || id >= a->e.size()) return nullptr;
  return a->e.name(id).c_str();
}

ea_status ea_sum(const ea_algebra* a, int x, int y, int* defined, int* out) {
  EA_REQUIRE(a && defined && out);
  EA_CHECK_ID(a, x);
  EA_CHECK_ID(a, y);
  const auto s = a->e.sum(x, y);
  *defined = s.has_value();
  *out = s.value_or(-1);
  return EA_OK;
}

ea_status ea_leq(const ea_algebra* a, int x, int y, int* out) {
  EA_REQUIRE(a && out);
  EA_CHECK_ID(a, x);
  EA_CHECK_ID(a, y);
  *out = a->e.leq(x, y);
  return EA_OK;
}

ea_status ea_complement(const ea_algebra* a, int x, int* out) {
  EA_REQUIRE(a && out);
  EA_CHECK_ID(a, x);
  *out = a->e.complement(x);
  return EA_OK;
}

ea_status ea_ominus(const ea_algebra* a, int y, int x, int* out) {
  EA_REQUIRE(a && out);
  EA_CHECK_ID(a, x);
  EA_CHECK_ID(a, y);
  return guarded([&] {
    *out = a->e.ominus(y, x);
    return EA_OK;
  });
}

ea_status ea_ord(const ea_algebra* a, int x, int* out) {
  EA_REQUIRE(a && out);
  EA_CHECK_ID(a, x);
  return guarded([&] {
    *out = a->e.ord(x);
    return EA_OK;
  });
}

ea_status ea_sharp_set(const ea_algebra* a, uint64_t* out) { return set_query(a, out, effalg::sharp_set); }
ea_status ea_mea_set(const ea_algebra* a, uint64_t* out) { return set_query(a, out, effalg::mea_set); }
ea_status ea_hmea_set(const ea_algebra* a, uint64_t* out) { return set_query(a, out, effalg::hmea_set); }
ea_status ea_umea_set(const ea_algebra* a, uint64_t* out) { return set_query(a, out, effalg::umea_set); }

ea_status ea_is_homogeneous(const ea_algebra* a, int* out) {
  EA_REQUIRE(a && out);
  return guarded([&] {
    *out = effalg::is_homogeneous(a->e);
    return EA_OK;
  });
}

ea_status ea_blocks(const ea_algebra* a, long long budget, uint64_t* out, int capacity, int* count) {
  EA_REQUIRE(a && count && (out || capacity == 0) && capacity >= 0);
  return guarded([&] {
    effalg::Budget b(budget > 0 ? budget : effalg::Budget::kDefault);
    const auto bs = effalg::blocks(a->e, b);
    *count = static_cast<int>(bs.size());
    for (int i = 0; i < capacity && i < *count; ++i) out[i] = bs[static_cast<std::size_t>(i)].members.bits();
    return EA_OK;
  });
}

ea_status ea_run(const char* command, const char* input, const ea_options* options, char** text, int* exit_code) {
  EA_REQUIRE(command && input && text && exit_code);
  *text = nullptr;
  return guarded([&] {
    const auto names = effalg::command_names();
    if (std::find(names.begin(), names.end(), command) == names.end())
      return fail(EA_ERR_INVALID_ARGUMENT, std::string("unknown command '") + command + "'");
    effalg::ReportOptions opt;
    if (options) {
      opt.machine = options->machine != 0;
      opt.all_witnesses = options->all_witnesses != 0;
      if (options->budget > 0) opt.budget = options->budget;
    }
    const effalg::Report r = effalg::run_command(command, input, opt);
    *text = dup(r.text);
    *exit_code = r.exit_code;
    return *text ? EA_OK : fail(EA_ERR_OTHER, "out of memory");
  });
}

ea_status ea_builtin_text(const char* name, char** out) {
  EA_REQUIRE(name && out);
  *out = nullptr;
  return guarded([&] {
    *out = dup(effalg::builtin_text(name));
    return EA_OK;
  });
}

ea_status ea_mvgen_text(const char* spec, char** out) {
  EA_REQUIRE(spec && out);
  *out = nullptr;
  return guarded([&] {
    *out = dup(effalg::serialize(effalg::mvgen(effalg::parse_mvgen_spec(spec))));
    return EA_OK;
  });
}

ea_status ea_builtin_mvgen_spec(const char* name, char** out) {
  EA_REQUIRE(name && out);
  *out = nullptr;
  return guarded([&] {
    *out = dup(effalg::builtin_mvgen_text(name));
    return EA_OK;
  });
}

void ea_string_free(char* s) { std::free(s); }

}  // extern "C"
