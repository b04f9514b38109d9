#include "qfiber.h"

#include "affine.hpp"
#include "automorphism.hpp"
#include "definability.hpp"
#include "errors.hpp"
#include "eval.hpp"
#include "metric.hpp"
#include "model_iso.hpp"
#include "parser.hpp"
#include "textio.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

using namespace qfiber;

struct qf_term {
  Term value;
};
struct qf_formula {
  Formula value;
};
struct qf_profile {
  AutomorphismProfile value;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** err, const std::string& message) {
  if (err) *err = dup_string(message);
}

// Runs the body, translating exceptions into status codes and messages.
template <typename Fn>
qf_status guarded(char** err, Fn&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    set_error(err, e.what());
    return QF_PARSE_ERROR;
  } catch (const std::exception& e) {
    set_error(err, e.what());
    return QF_FAIL;
  }
}

std::string_view view_or_empty(const char* s) { return s ? std::string_view(s) : ""; }

// "k" or "k/n" read verbatim: the iteration counts come from the text, not
// from the reduced value.
std::pair<Int, Int> split_fraction_text(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    const Rational k = Rational::parse(text);
    if (!k.is_integer()) throw ParseError("expected an integer or k/n fraction");
    return {k.num(), Int(1)};
  }
  const Rational k = Rational::parse(text.substr(0, slash));
  const Rational n = Rational::parse(text.substr(slash + 1));
  if (!k.is_integer() || !n.is_integer())
    throw ParseError("expected integer numerator and denominator");
  return {k.num(), n.num()};
}

ParentAffineMap parse_parent_map(const char* slope, const char* intercept) {
  return {Rational::parse(view_or_empty(slope)), Rational::parse(view_or_empty(intercept))};
}

BasepointChoice parse_basepoint(const char* basepoint) {
  if (!basepoint || view_or_empty(basepoint).empty()) return constant_basepoint(Rational(0));
  return constant_basepoint(Rational::parse(basepoint));
}

}  // namespace

extern "C" {

const char* qf_version(void) { return "0.1.0"; }

void qf_free(char* s) { std::free(s); }

qf_status qf_term_parse(const char* text, qf_term** out, char** err) {
  return guarded(err, [&] {
    *out = new qf_term{parse_term(view_or_empty(text))};
    return QF_OK;
  });
}

void qf_term_free(qf_term* t) { delete t; }

qf_status qf_term_print(const qf_term* t, char** out) {
  *out = dup_string(t->value.str());
  return QF_OK;
}

qf_status qf_eval_term(const qf_term* t, const char* structure, const char* assignment,
                       char** out, char** err) {
  return guarded(err, [&] {
    const std::string_view which = view_or_empty(structure);
    if (which == "M" || which.empty()) {
      const Element result =
          eval_term_m(t->value, parse_element_assignment(view_or_empty(assignment)));
      *out = dup_string(result.str());
    } else if (which == "Q") {
      const Rational result =
          eval_term_q(t->value, parse_rational_assignment(view_or_empty(assignment)));
      *out = dup_string(result.str());
    } else {
      throw SemanticError("structure must be M or Q");
    }
    return QF_OK;
  });
}

qf_status qf_normalize_term(const qf_term* t, char** out, char** err) {
  return guarded(err, [&] {
    *out = dup_string(normalize_term(t->value).str());
    return QF_OK;
  });
}

qf_status qf_formula_parse(const char* text, qf_formula** out, char** err) {
  return guarded(err, [&] {
    *out = new qf_formula{parse_formula(view_or_empty(text))};
    return QF_OK;
  });
}

void qf_formula_free(qf_formula* f) { delete f; }

qf_status qf_formula_print(const qf_formula* f, char** out) {
  *out = dup_string(f->value.str());
  return QF_OK;
}

qf_status qf_eval_formula(const qf_formula* f, const char* assignment, int* value, char** err) {
  return guarded(err, [&] {
    *value =
        eval_formula_m(f->value, parse_element_assignment(view_or_empty(assignment))) ? 1 : 0;
    return QF_OK;
  });
}

qf_status qf_classify(const qf_formula* f, const char* target, const char* params, char** out,
                      char** err) {
  return guarded(err, [&] {
    if (view_or_empty(target).empty()) throw SemanticError("target variable is required");
    const SolutionSet set = classify_solutions(
        f->value, target, parse_rational_assignment(view_or_empty(params)));
    *out = dup_string(set.str());
    return QF_OK;
  });
}

qf_status qf_define_integer(const char* n, char** certificate_line, char** err) {
  return guarded(err, [&] {
    const Rational value = Rational::parse(view_or_empty(n));
    if (!value.is_integer()) throw SemanticError("integer certificate needs an integer");
    *certificate_line = dup_string(integer_certificate(value.num()).machine_line());
    return QF_OK;
  });
}

qf_status qf_define_rational(const char* text, char** certificate_line, char** err) {
  return guarded(err, [&] {
    const auto [k, n] = split_fraction_text(view_or_empty(text));
    *certificate_line = dup_string(rational_certificate(k, n).machine_line());
    return QF_OK;
  });
}

qf_status qf_certificate_describe(const char* certificate_line, char** out, char** err) {
  return guarded(err, [&] {
    *out = dup_string(Certificate::from_machine_line(view_or_empty(certificate_line)).describe());
    return QF_OK;
  });
}

qf_status qf_certificate_verify(const char* certificate_line, char** diagnostic, char** err) {
  return guarded(err, [&] {
    const VerifyResult result =
        verify_certificate(Certificate::from_machine_line(view_or_empty(certificate_line)));
    if (diagnostic) *diagnostic = dup_string(result.diagnostic);
    return result.ok ? QF_OK : QF_FAIL;
  });
}

qf_status qf_profile_parse(const char* text, qf_profile** out, char** err) {
  return guarded(err, [&] {
    *out = new qf_profile{AutomorphismProfile::parse(view_or_empty(text))};
    return QF_OK;
  });
}

void qf_profile_free(qf_profile* p) { delete p; }

qf_status qf_profile_print(const qf_profile* p, char** out) {
  *out = dup_string(p->value.str());
  return QF_OK;
}

qf_status qf_profile_apply(const qf_profile* p, const char* element, char** out, char** err) {
  return guarded(err, [&] {
    *out = dup_string(p->value.apply(Element::parse(view_or_empty(element))).str());
    return QF_OK;
  });
}

qf_status qf_profile_compose(const qf_profile* first_applied, const qf_profile* then_applied,
                             qf_profile** out) {
  *out = new qf_profile{then_applied->value.compose(first_applied->value)};
  return QF_OK;
}

qf_status qf_profile_invert(const qf_profile* p, qf_profile** out) {
  *out = new qf_profile{p->value.inverse()};
  return QF_OK;
}

qf_status qf_check_automorphism(const qf_profile* p, const char* extra_parents, char** report,
                                char** err) {
  return guarded(err, [&] {
    const std::vector<Rational> extras = parse_rational_list(view_or_empty(extra_parents));
    const CheckReport result = check_automorphism(p->value, standard_grid(p->value, extras));
    *report = dup_string(result.str());
    return result.ok ? QF_OK : QF_FAIL;
  });
}

qf_status qf_extract_profile(qf_element_map_fn map, void* context, const char* probes,
                             qf_profile** out, char** err) {
  return guarded(err, [&] {
    auto element_map = [map, context](const Element& e) {
      char* image_text = nullptr;
      const std::string text = e.str();
      if (map(context, text.c_str(), &image_text) != QF_OK || !image_text)
        throw SemanticError("element map callback failed on " + text);
      std::string image(image_text);
      std::free(image_text);
      return Element::parse(image);
    };
    *out = new qf_profile{
        extract_profile(element_map, parse_rational_list(view_or_empty(probes)))};
    return QF_OK;
  });
}

qf_status qf_product_metric(const qf_profile* g, const qf_profile* h, char** out, char** err) {
  return guarded(err, [&] {
    *out = dup_string(product_metric(g->value, h->value).str());
    return QF_OK;
  });
}

qf_status qf_augmented_metric(const char* j, const qf_profile* g, const qf_profile* h,
                              char** out, char** err) {
  return guarded(err, [&] {
    *out = dup_string(
        augmented_metric(Rational::parse(view_or_empty(j)), g->value, h->value).str());
    return QF_OK;
  });
}

qf_status qf_escape_witness(const char* support, const char* coset, const char* bound,
                            char** out, char** err) {
  return guarded(err, [&] {
    BasicOpenSet u = BasicOpenSet::stabilizer(parse_rational_list(view_or_empty(support)));
    const AutomorphismProfile coset_values = AutomorphismProfile::parse(view_or_empty(coset));
    for (const auto& [point, amount] : coset_values.shifts()) u.require(point, amount);
    const EscapeWitness witness = escape_witness(u, Rational::parse(view_or_empty(bound)));
    *out = dup_string(witness.str());
    return QF_OK;
  });
}

qf_status qf_extend_iso(const char* slope, const char* intercept, const char* basepoint,
                        const char* element, char** out, char** err) {
  return guarded(err, [&] {
    const ParentAffineMap sigma = parse_parent_map(slope, intercept);
    const BasepointChoice anchor = parse_basepoint(basepoint);
    const Element image =
        extend_iso(sigma, anchor, anchor, Element::parse(view_or_empty(element)));
    *out = dup_string(image.str());
    return QF_OK;
  });
}

qf_status qf_check_reduct_iso(const char* slope, const char* intercept, const char* basepoint,
                              char** report, char** err) {
  return guarded(err, [&] {
    const ParentAffineMap sigma = parse_parent_map(slope, intercept);
    const BasepointChoice anchor = parse_basepoint(basepoint);
    const CheckReport result = check_reduct_iso(sigma, anchor, anchor, default_iso_grid());
    *report = dup_string(result.str());
    return result.ok ? QF_OK : QF_FAIL;
  });
}

}  // extern "C"
