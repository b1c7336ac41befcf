#include "sepcomp/reports.hpp"

#include <functional>
#include <sstream>

#include <json.hpp>

namespace sepcomp {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string join_longs(const std::vector<long long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

struct ReportBuilder {
  std::vector<std::string> lines;
  ordered_json j;

  void line(const std::string& s) { lines.push_back(s); }
  void field(const std::string& key, bool value) {
    lines.push_back(key + ": " + yes_no(value));
    j[key] = value;
  }
};

Report finish(ReportBuilder& b, bool json, int exit_code,
              const std::string& err_kind, const std::string& err_message) {
  if (exit_code != 0) {
    b.j["error"] = {{"exit", exit_code},
                    {"kind", err_kind},
                    {"message", err_message}};
  }
  std::string text;
  if (json) {
    text = b.j.dump() + "\n";
  } else {
    for (const auto& line : b.lines) text += line + "\n";
  }
  if (exit_code != 0)
    text += "ERR " + std::to_string(exit_code) + " " + err_kind + ": " +
            err_message + "\n";
  return {std::move(text), exit_code};
}

Report run(bool json, const std::function<int(ReportBuilder&)>& body) {
  ReportBuilder b;
  try {
    const int code = body(b);
    if (code == 0) return finish(b, json, 0, "", "");
    // exit 3: a completed search with a negative answer
    return finish(b, json, code, "not-equivalent",
                  "no monomial map carries the first code onto the second");
  } catch (const Error& e) {
    return finish(b, json, errc_exit_code(e.code()), errc_name(e.code()),
                  e.what());
  }
}

std::string morphism_table(const PartialMorphism& w) {
  return join_ints(w.domain) + " -> " + join_ints(w.image);
}

ordered_json morphism_json(const PartialMorphism& w) {
  return {{"domain", w.domain}, {"image", w.image}, {"total", w.total}};
}

void emit_code_header(ReportBuilder& b, const std::string& name,
                      const LinearCode& c) {
  b.line("field: " + std::to_string(c.field()));
  b.line("length: " + std::to_string(c.length()));
  b.line("dimension: " + std::to_string(c.dimension()));
  b.line("codewords: " + std::to_string(c.codewords()));
  b.j["code"] = name;
  b.j["field"] = c.field();
  b.j["length"] = c.length();
  b.j["dimension"] = c.dimension();
  b.j["codewords"] = c.codewords();
}

}  // namespace

Report cmd_analyze(Workspace& ws, const std::string& name, bool json) {
  return run(json, [&](ReportBuilder& b) {
    FunctionGroupPtr a = ws.fgroup(name);
    const FgroupDef* def = ws.find_fgroup_def(name);
    b.line("analyze " + name);
    b.line("group: " + def->group + " order " +
           std::to_string(a->group()->order()));
    b.line("domain: " + std::to_string(a->domain_size()));
    b.line("elements: " + std::to_string(a->size()));
    b.j["command"] = "analyze";
    b.j["fgroup"] = name;
    b.j["group"] = def->group;
    b.j["group-order"] = a->group()->order();
    b.j["domain"] = a->domain_size();
    b.j["elements"] = a->size();

    b.field("faithful", a->is_faithful());
    b.field("separates-points", a->separates_points());
    b.field("function-group", a->is_function_group());
    b.field("pointwise-dense", a->is_pointwise_dense());

    const auto& ctrl = a->controllability();
    b.field("controllable", ctrl.controllable);
    if (!ctrl.controllable) {
      const auto& w = *ctrl.violation;
      b.line("controllable-witness: f = " +
             point_map_to_string(a->element(w.f)) + " ; d1 = " +
             mask_to_string(w.d1) + " ; d2 = " + mask_to_string(w.d2));
      b.j["controllable-witness"] = {{"f", a->element(w.f)},
                                     {"d1", mask_to_string(w.d1)},
                                     {"d2", mask_to_string(w.d2)}};
    }

    const auto& norm = a->normality();
    b.field("normal", norm.normal);
    if (!norm.normal) {
      b.line("normal-witness: d1 = " + mask_to_string(norm.violation->first) +
             " ; d2 = " + mask_to_string(norm.violation->second));
      b.j["normal-witness"] = {{"d1", mask_to_string(norm.violation->first)},
                               {"d2", mask_to_string(norm.violation->second)}};
    }

    b.line("d-lattice: " + std::to_string(a->d_lattice().size()) + " sets");
    b.line("e-lattice: " + std::to_string(a->e_lattice().size()) + " sets");
    b.j["d-lattice"] = a->d_lattice().size();
    b.j["e-lattice"] = a->e_lattice().size();

    const auto omega = omega_extension_closure(a);
    const bool collapse = omega.certificate.domain_finite &&
                          omega.certificate.all_bounded &&
                          omega.certificate.equals_original;
    b.field("omega-extension-identity", collapse);
    return 0;
  });
}

Report cmd_represent(Workspace& ws, const std::string& name, bool json) {
  return run(json, [&](ReportBuilder& b) {
    const GroupHom& h = ws.hom(name);
    const HomDef* def = ws.find_hom_def(name);
    const auto& a = *h.source();
    const auto& t = *h.target();
    b.line("represent " + name);
    b.line("source: " + def->source + " elements " + std::to_string(a.size()) +
           " domain " + std::to_string(a.domain_size()));
    b.line("target: " + def->target + " elements " + std::to_string(t.size()) +
           " domain " + std::to_string(t.domain_size()));
    b.j["command"] = "represent";
    b.j["hom"] = name;
    b.j["source"] = def->source;
    b.j["target"] = def->target;

    // Every claim below is backed by a check run in this invocation.
    b.line("hypotheses:");
    b.j["hypotheses"] = ordered_json::object();
    auto hyp = [&](const std::string& key, bool value) {
      b.line("  " + key + ": " + yes_no(value));
      b.j["hypotheses"][key] = value;
    };
    hyp("source-function-group", a.is_function_group());
    hyp("source-controllable", a.controllability().controllable);
    hyp("source-pointwise-dense", a.is_pointwise_dense());
    hyp("source-normal", a.normality().normal);
    hyp("target-function-group", t.is_function_group());
    const auto weakly = is_weakly_separating(h);
    hyp("weakly-separating", weakly.holds);
    const auto separating = is_separating(h);
    hyp("separating", separating.holds);
    if (!weakly.holds)
      fail(Errc::not_weakly_separating,
           "not weakly separating; witness f = " +
               point_map_to_string(a.element(weakly.witness->f)) + " ; g = " +
               point_map_to_string(a.element(weakly.witness->g)));

    const SupportMapResult smap = support_map(h);
    if (smap.dropped.empty()) {
      b.line("active-codomain: all");
      b.j["active-codomain"] = "all";
    } else {
      std::vector<int> kept;
      for (int y = 0; y < t.domain_size(); ++y)
        if (smap.h[y] >= 0) kept.push_back(y);
      b.line("active-codomain: " + join_ints(kept));
      b.line("dropped: " + join_ints(smap.dropped));
      b.j["active-codomain"] = kept;
      b.j["dropped"] = smap.dropped;
    }
    b.field("support-minimum", smap.all_minimum);

    const WeightedComposition wc = weight_map(h, smap.h);
    b.line("h: " + join_ints(wc.h));
    b.j["h"] = wc.h;
    b.j["w"] = ordered_json::array();
    for (std::size_t y = 0; y < wc.w.size(); ++y) {
      if (wc.h[y] < 0) {
        b.line("w[" + std::to_string(y) + "]: dropped");
        b.j["w"].push_back(nullptr);
      } else {
        b.line("w[" + std::to_string(y) + "]: " + morphism_table(wc.w[y]));
        b.j["w"].push_back(morphism_json(wc.w[y]));
      }
    }
    b.field("verified", wc.verified);

    const bool bijective = h.is_bijective();
    b.field("bijective", bijective);
    if (!bijective) return 0;

    const GroupHom h_inv = inverse_hom(h);
    const auto inv_weakly = is_weakly_separating(h_inv);
    b.field("inverse-weakly-separating", inv_weakly.holds);
    if (!inv_weakly.holds) return 0;

    const IsoRepresentation iso = represent_iso(h);
    b.line("h-inverse: " + join_ints(iso.inverse.h));
    b.j["h-inverse"] = iso.inverse.h;
    b.j["rho"] = ordered_json::array();
    for (std::size_t x = 0; x < iso.inverse.w.size(); ++x) {
      b.line("rho[" + std::to_string(x) + "]: " +
             morphism_table(iso.inverse.w[x]));
      b.j["rho"].push_back(morphism_json(iso.inverse.w[x]));
    }
    b.field("support-maps-mutually-inverse", iso.support_maps_mutually_inverse);
    b.field("weights-mutually-inverse", iso.weights_mutually_inverse);
    return 0;
  });
}

Report cmd_equiv(Workspace& ws, const std::string& name1,
                 const std::string& name2, bool json) {
  return run(json, [&](ReportBuilder& b) {
    LinearCodePtr c1 = ws.code(name1);
    LinearCodePtr c2 = ws.code(name2);
    b.line("equiv " + name1 + " " + name2);
    b.j["command"] = "equiv";
    b.j["codes"] = {name1, name2};
    if (c1->field() != c2->field())
      fail(Errc::invalid_argument, "codes are over different fields");
    if (c1->length() != c2->length())
      fail(Errc::invalid_argument, "codes have different lengths");
    b.line("field: " + std::to_string(c1->field()));
    b.line("length: " + std::to_string(c1->length()));
    b.j["field"] = c1->field();
    b.j["length"] = c1->length();

    const auto w1 = weight_enumerator(*c1);
    const auto w2 = weight_enumerator(*c2);
    b.line("weight-enumerator " + name1 + ": " + join_longs(w1));
    b.line("weight-enumerator " + name2 + ": " + join_longs(w2));
    b.j["weight-enumerators"] = {{name1, w1}, {name2, w2}};

    const auto witness = monomial_equivalence(*c1, *c2);
    b.field("equivalent", witness.has_value());
    if (!witness) return 3;
    b.line("sigma: " + join_ints(witness->sigma));
    b.line("lambda: " + join_ints(witness->lambda));
    b.j["sigma"] = witness->sigma;
    b.j["lambda"] = witness->lambda;
    return 0;
  });
}

Report cmd_aut(Workspace& ws, const std::string& name, bool json) {
  return run(json, [&](ReportBuilder& b) {
    LinearCodePtr c = ws.code(name);
    b.line("aut " + name);
    b.j["command"] = "aut";
    emit_code_header(b, name, *c);
    const auto witnesses = code_automorphisms(*c);
    b.line("automorphisms: " + std::to_string(witnesses.size()));
    b.j["automorphisms"] = witnesses.size();
    b.j["witnesses"] = ordered_json::array();
    for (const auto& w : witnesses) {
      b.line("sigma: " + join_ints(w.sigma));
      b.line("lambda: " + join_ints(w.lambda));
      b.j["witnesses"].push_back({{"sigma", w.sigma}, {"lambda", w.lambda}});
    }
    return 0;
  });
}

Report cmd_wenum(Workspace& ws, const std::string& name, bool json) {
  return run(json, [&](ReportBuilder& b) {
    LinearCodePtr c = ws.code(name);
    b.line("wenum " + name);
    b.j["command"] = "wenum";
    emit_code_header(b, name, *c);
    const auto w = weight_enumerator(*c);
    b.line("weights: " + join_longs(w));
    b.j["weights"] = w;
    return 0;
  });
}

}  // namespace sepcomp
