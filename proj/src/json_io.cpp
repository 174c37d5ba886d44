#include "alexandria/json_io.hpp"

namespace alexandria {

namespace {

json bigint_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) return BigInt(j.get<std::string>(), 10);
  throw ValidationError("expected an integer or a decimal string");
}

long long_from_json(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw ValidationError(std::string("expected an integer for ") + what);
  return j.get<long>();
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json poly_to_triples(const LaurentPoly& p) {
  json out = json::array();
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const Rational& c = p.coeffs()[i];
    if (sgn(c) == 0) continue;
    out.push_back(json::array({p.shift() + static_cast<long>(i),
                               bigint_to_json(c.get_num()),
                               bigint_to_json(c.get_den())}));
  }
  return out;
}

LaurentPoly poly_from_triples(const json& j) {
  if (!j.is_array()) throw ValidationError("polynomial triples must be an array");
  LaurentPoly acc;
  for (const json& item : j) {
    if (!item.is_array() || item.size() != 3)
      throw ValidationError("each polynomial entry must be [exp, num, den]");
    long exp = long_from_json(item.at(0), "exponent");
    BigInt num = bigint_from_json(item.at(1));
    BigInt den = bigint_from_json(item.at(2));
    if (sgn(den) == 0) throw ValidationError("zero denominator");
    acc += LaurentPoly::monomial(make_rational(num, den), exp);
  }
  return acc;
}

json module_to_json(const CycModule& m) {
  json prim = json::array();
  for (const auto& c : m.primaries())
    prim.push_back(json::array({c.p.str(), c.power}));
  return json{{"free_rank", m.free_rank()}, {"primaries", prim}};
}

CycModule module_from_json(const json& j) {
  long rank = long_from_json(require(j, "free_rank"), "free_rank");
  const json& prim = require(j, "primaries");
  if (!prim.is_array()) throw ValidationError("primaries must be an array");
  std::vector<PrimaryComponent> comps;
  for (const json& item : prim) {
    if (!item.is_array() || item.size() != 2)
      throw ValidationError("each primary must be [poly-text, power]");
    if (!item.at(0).is_string())
      throw ValidationError("primary polynomial must be text");
    LaurentPoly p = LaurentPoly::parse(item.at(0).get<std::string>());
    long power = long_from_json(item.at(1), "primary power");
    comps.push_back(make_primary(p, power));
  }
  return CycModule::make(rank, std::move(comps));
}

json matrix_to_json(const LaurentMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

LaurentMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw ValidationError("matrix must be a non-empty array of rows");
  std::size_t rows = j.size();
  if (!j.at(0).is_array() || j.at(0).empty())
    throw ValidationError("matrix rows must be non-empty arrays");
  std::size_t cols = j.at(0).size();
  LaurentMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j.at(i);
    if (!row.is_array() || row.size() != cols)
      throw ValidationError("matrix rows must all have the same length");
    for (std::size_t k = 0; k < cols; ++k) {
      if (!row.at(k).is_string())
        throw ValidationError("matrix entries must be polynomial text");
      m.at(i, k) = LaurentPoly::parse(row.at(k).get<std::string>());
    }
  }
  return m;
}

json descriptor_to_json(const SingularityDescriptor& s) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BrieskornSing>) {
          return json{{"brieskorn", v.exponents}};
        } else if constexpr (std::is_same_v<T, ExplicitPolySing>) {
          return json{{"poly", v.poly.str()}};
        } else if constexpr (std::is_same_v<T, CharPairSing>) {
          return json{{"char_pair", json::array({v.m, v.k})}};
        } else {
          return json{{"nodal_cuspidal",
                       json{{"delta", v.delta}, {"kappa", v.kappa}}}};
        }
      },
      s);
}

SingularityDescriptor descriptor_from_json(const json& j) {
  if (!j.is_object() || j.size() != 1)
    throw ValidationError(
        "a singularity must be a one-key object: brieskorn, char_pair, poly "
        "or nodal_cuspidal");
  SingularityDescriptor out;
  if (j.contains("brieskorn")) {
    const json& e = j.at("brieskorn");
    if (!e.is_array()) throw ValidationError("brieskorn expects an exponent list");
    BrieskornSing b;
    for (const json& x : e) b.exponents.push_back(long_from_json(x, "exponent"));
    out = b;
  } else if (j.contains("char_pair")) {
    const json& e = j.at("char_pair");
    if (!e.is_array() || e.size() != 2)
      throw ValidationError("char_pair expects [m, k]");
    out = CharPairSing{long_from_json(e.at(0), "m"), long_from_json(e.at(1), "k")};
  } else if (j.contains("poly")) {
    if (!j.at("poly").is_string())
      throw ValidationError("poly expects polynomial text");
    out = ExplicitPolySing{LaurentPoly::parse(j.at("poly").get<std::string>())};
  } else if (j.contains("nodal_cuspidal")) {
    const json& e = j.at("nodal_cuspidal");
    out = NodalCuspidalSing{long_from_json(require(e, "delta"), "delta"),
                            long_from_json(require(e, "kappa"), "kappa")};
  } else {
    throw ValidationError("unknown singularity kind");
  }
  validate(out);
  return out;
}

json hypersurface_to_json(const GlobalHypersurface& h) {
  json sing = json::array();
  for (const auto& s : h.singularities) sing.push_back(descriptor_to_json(s));
  json inf = json::array();
  for (const auto& s : h.infinity_singularities)
    inf.push_back(descriptor_to_json(s));
  json out{{"n", h.n},
           {"degree", h.degree},
           {"transversal", h.transversal_at_infinity},
           {"singularities", sing},
           {"infinity", inf},
           {"assert_ample", h.asserts_ample_resolution},
           {"assert_h_vanishing", h.asserts_h_vanishing}};
  out["p_infinity"] =
      h.infinity_poly ? json(h.infinity_poly->str()) : json(nullptr);
  return out;
}

GlobalHypersurface hypersurface_from_json(const json& j) {
  GlobalHypersurface h;
  h.n = long_from_json(require(j, "n"), "n");
  h.degree = long_from_json(require(j, "degree"), "degree");
  if (j.contains("transversal")) h.transversal_at_infinity = j.at("transversal").get<bool>();
  if (j.contains("singularities"))
    for (const json& s : j.at("singularities"))
      h.singularities.push_back(descriptor_from_json(s));
  if (j.contains("infinity"))
    for (const json& s : j.at("infinity"))
      h.infinity_singularities.push_back(descriptor_from_json(s));
  if (j.contains("assert_ample"))
    h.asserts_ample_resolution = j.at("assert_ample").get<bool>();
  if (j.contains("assert_h_vanishing"))
    h.asserts_h_vanishing = j.at("assert_h_vanishing").get<bool>();
  if (j.contains("p_infinity") && !j.at("p_infinity").is_null()) {
    if (!j.at("p_infinity").is_string())
      throw ValidationError("p_infinity must be polynomial text or null");
    h.infinity_poly = LaurentPoly::parse(j.at("p_infinity").get<std::string>());
  }
  validate(h);
  return h;
}

json report_to_json(const DivisibilityReport& r) {
  json out{{"product_bound", r.product_bound.str()},
           {"slack_t_minus_1", r.slack_stripped ? "stripped" : "unspecified"},
           {"combined_bound", r.combined_bound.str()},
           {"semisimple_required", r.semisimple_required},
           {"roots_restricted_to_d", r.roots_restricted_to_d},
           {"one_not_root", r.one_not_root},
           {"notes", r.notes},
           {"certified_zero", r.combined_bound.is_one()}};
  out["infinity_bound"] =
      r.infinity_bound ? json(r.infinity_bound->str()) : json(nullptr);
  return out;
}

DivisibilityReport report_from_json(const json& j) {
  DivisibilityReport r;
  r.product_bound =
      LaurentPoly::parse(require(j, "product_bound").get<std::string>());
  std::string slack = require(j, "slack_t_minus_1").get<std::string>();
  if (slack != "stripped" && slack != "unspecified")
    throw ValidationError("slack_t_minus_1 must be stripped or unspecified");
  r.slack_stripped = slack == "stripped";
  r.combined_bound =
      LaurentPoly::parse(require(j, "combined_bound").get<std::string>());
  r.semisimple_required = require(j, "semisimple_required").get<bool>();
  r.roots_restricted_to_d = require(j, "roots_restricted_to_d").get<bool>();
  r.one_not_root = require(j, "one_not_root").get<bool>();
  for (const json& n : require(j, "notes")) r.notes.push_back(n.get<std::string>());
  if (j.contains("infinity_bound") && !j.at("infinity_bound").is_null())
    r.infinity_bound =
        LaurentPoly::parse(j.at("infinity_bound").get<std::string>());
  return r;
}

json family_to_json(const FamilyDescription& f) {
  return json{{"n", f.n},
              {"exponents", f.exponents},
              {"degree", f.degree},
              {"count", bigint_to_json(f.singular_count)},
              {"local_type", descriptor_to_json(f.local_type)},
              {"module", module_to_json(f.module)},
              {"equation", f.equation_shape}};
}

FamilyDescription family_from_json(const json& j) {
  FamilyDescription f;
  f.n = long_from_json(require(j, "n"), "n");
  for (const json& x : require(j, "exponents"))
    f.exponents.push_back(long_from_json(x, "exponent"));
  f.degree = long_from_json(require(j, "degree"), "degree");
  f.singular_count = bigint_from_json(require(j, "count"));
  f.local_type = descriptor_from_json(require(j, "local_type"));
  f.module = module_from_json(require(j, "module"));
  f.equation_shape = require(j, "equation").get<std::string>();
  return f;
}

namespace {

LocalFiberType fiber_type_from_string(const std::string& s) {
  if (s == "tangency") return LocalFiberType::Tangency;
  if (s == "node") return LocalFiberType::Node;
  if (s == "cusp") return LocalFiberType::Cusp;
  throw ValidationError("unknown fiber type \"" + s +
                        "\" (expected tangency, node or cusp)");
}

}  // namespace

PencilInput pencil_input_from_json(const json& j) {
  PencilInput in;
  if (j.contains("gammas") || j.contains("degenerations")) {
    in.generic = true;
    in.fiber_rank =
        static_cast<int>(long_from_json(require(j, "fiber_rank"), "fiber_rank"));
    if (j.contains("gammas"))
      for (const json& m : j.at("gammas"))
        in.monodromies.push_back(matrix_from_json(m));
    if (j.contains("degenerations"))
      for (const json& m : j.at("degenerations"))
        in.degenerations.push_back(matrix_from_json(m));
    return in;
  }
  in.strands = static_cast<int>(long_from_json(require(j, "strands"), "strands"));
  if (in.strands < 2) throw ValidationError("strands must be at least 2");
  in.fiber_rank = in.strands - 1;
  if (j.contains("fiber_rank"))
    in.fiber_rank =
        static_cast<int>(long_from_json(j.at("fiber_rank"), "fiber_rank"));
  for (const json& f : require(j, "fibers")) {
    PencilFiber fiber;
    fiber.word =
        parse_braid_word(in.strands, require(f, "word").get<std::string>());
    if (f.contains("type") && !f.at("type").is_null())
      fiber.type = fiber_type_from_string(f.at("type").get<std::string>());
    if (f.contains("position"))
      fiber.position = static_cast<int>(long_from_json(f.at("position"), "position"));
    if (f.contains("conjugator"))
      fiber.conjugator =
          parse_braid_word(in.strands, f.at("conjugator").get<std::string>());
    if (f.contains("block")) fiber.block = matrix_from_json(f.at("block"));
    in.fibers.push_back(std::move(fiber));
  }
  return in;
}

}  // namespace alexandria
