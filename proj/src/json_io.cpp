#include "framedil/json_io.hpp"

#include "framedil/error.hpp"

namespace framedil {

namespace {

const Json &field(const Json &j, const char *key) {
  const auto it = j.find(key);
  if (it == j.end())
    throw Error(ErrorKind::ParseError, std::string("missing field '") + key +
                                           "'");
  return *it;
}

double number(const Json &j, const char *what) {
  if (!j.is_number())
    throw Error(ErrorKind::ParseError, std::string(what) + " must be a number");
  return j.get<double>();
}

cdouble complex_from_json(const Json &j) {
  if (!j.is_array() || j.size() != 2)
    throw Error(ErrorKind::ParseError, "complex entry must be [re, im]");
  return {number(j[0], "re"), number(j[1], "im")};
}

Json complex_to_json(const cdouble &z) {
  return Json::array({z.real(), z.imag()});
}

} // namespace

Json matrix_to_json(const ComplexMatrix &m) {
  Json data = Json::array();
  for (const auto &z : m.data()) data.push_back(complex_to_json(z));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

ComplexMatrix matrix_from_json(const Json &j) {
  const std::size_t rows = field(j, "rows").get<std::size_t>();
  const std::size_t cols = field(j, "cols").get<std::size_t>();
  const Json &data = field(j, "data");
  if (!data.is_array() || data.size() != rows * cols)
    throw Error(ErrorKind::ParseError, "matrix data length != rows*cols");
  ComplexMatrix m(rows, cols);
  for (std::size_t k = 0; k < rows * cols; ++k)
    m.data()[k] = complex_from_json(data[k]);
  if (!m.all_finite())
    throw Error(ErrorKind::ParseError, "matrix has non-finite entries");
  return m;
}

Json cvec_to_json(const CVec &v) {
  Json out = Json::array();
  for (const auto &z : v) out.push_back(complex_to_json(z));
  return out;
}

CVec cvec_from_json(const Json &j) {
  if (!j.is_array())
    throw Error(ErrorKind::ParseError, "vector must be an array");
  CVec v(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) v[k] = complex_from_json(j[k]);
  return v;
}

Json frame_to_json(const Frame &f) {
  Json vectors = Json::array();
  for (const auto &v : f.vectors) vectors.push_back(cvec_to_json(v));
  return Json{{"dim", f.dim}, {"vectors", vectors}};
}

Frame frame_from_json(const Json &j) {
  Frame f;
  f.dim = field(j, "dim").get<std::size_t>();
  for (const auto &v : field(j, "vectors"))
    f.vectors.push_back(cvec_from_json(v));
  validate_frame(f);
  return f;
}

Json bounds_to_json(const FrameBounds &b) {
  return Json{{"lower", b.lower}, {"upper", b.upper}};
}

FrameBounds bounds_from_json(const Json &j) {
  return FrameBounds{number(field(j, "lower"), "lower"),
                     number(field(j, "upper"), "upper")};
}

Json group_to_json(const FiniteGroup &g) {
  return Json{{"order", g.order}, {"table", g.table}};
}

FiniteGroup group_from_json(const Json &j) {
  const Json &table = field(j, "table");
  if (!table.is_array())
    throw Error(ErrorKind::ParseError, "group table must be an array");
  std::vector<std::vector<unsigned>> rows;
  for (const auto &r : table) {
    if (!r.is_array())
      throw Error(ErrorKind::ParseError, "group table row must be an array");
    std::vector<unsigned> row;
    for (const auto &v : r) {
      if (!v.is_number_unsigned())
        throw Error(ErrorKind::ParseError,
                    "group table entries must be non-negative integers");
      row.push_back(v.get<unsigned>());
    }
    rows.push_back(std::move(row));
  }
  if (j.contains("order") &&
      field(j, "order").get<std::size_t>() != rows.size())
    throw Error(ErrorKind::ParseError, "group order != table size");
  return make_group(std::move(rows));
}

Json representation_to_json(const Representation &rep) {
  Json mats = Json::array();
  for (const auto &m : rep.matrices) mats.push_back(matrix_to_json(m));
  return Json{{"group", group_to_json(rep.group)},
              {"dim", rep.dim},
              {"matrices", mats}};
}

Representation representation_from_json(const Json &j) {
  Representation rep;
  rep.group = group_from_json(field(j, "group"));
  rep.dim = field(j, "dim").get<std::size_t>();
  for (const auto &m : field(j, "matrices"))
    rep.matrices.push_back(matrix_from_json(m));
  if (rep.matrices.size() != rep.group.order)
    throw Error(ErrorKind::ParseError, "matrix count != group order");
  return rep;
}

Json multiplier_to_json(const MultiplierTable &m) {
  Json values = Json::array();
  for (std::size_t g = 0; g < m.group.order; ++g) {
    Json row = Json::array();
    for (std::size_t h = 0; h < m.group.order; ++h)
      row.push_back(complex_to_json(m.values(g, h)));
    values.push_back(std::move(row));
  }
  return Json{{"group", group_to_json(m.group)}, {"values", values}};
}

MultiplierTable multiplier_from_json(const Json &j) {
  MultiplierTable m;
  m.group = group_from_json(field(j, "group"));
  const Json &values = field(j, "values");
  if (!values.is_array() || values.size() != m.group.order)
    throw Error(ErrorKind::ParseError, "multiplier values must be |G| rows");
  m.values = ComplexMatrix(m.group.order, m.group.order);
  for (std::size_t g = 0; g < m.group.order; ++g) {
    if (!values[g].is_array() || values[g].size() != m.group.order)
      throw Error(ErrorKind::ParseError, "multiplier row length != |G|");
    for (std::size_t h = 0; h < m.group.order; ++h)
      m.values(g, h) = complex_from_json(values[g][h]);
  }
  return m;
}

Json projective_rep_to_json(const ProjectiveRep &rep) {
  Json j = Json{{"group", group_to_json(rep.group)},
                {"dim", rep.dim},
                {"multiplier", multiplier_to_json(rep.multiplier)}};
  Json mats = Json::array();
  for (const auto &m : rep.matrices) mats.push_back(matrix_to_json(m));
  j["matrices"] = std::move(mats);
  return j;
}

ProjectiveRep projective_rep_from_json(const Json &j) {
  ProjectiveRep rep;
  rep.group = group_from_json(field(j, "group"));
  rep.multiplier = multiplier_from_json(field(j, "multiplier"));
  if (!rep.multiplier.group.same_table(rep.group))
    throw Error(ErrorKind::ParseError,
                "multiplier group differs from representation group");
  rep.dim = field(j, "dim").get<std::size_t>();
  for (const auto &m : field(j, "matrices"))
    rep.matrices.push_back(matrix_from_json(m));
  if (rep.matrices.size() != rep.group.order)
    throw Error(ErrorKind::ParseError, "matrix count != group order");
  return rep;
}

Json gabor_to_json(const FiniteGaborSystem &sys) {
  return Json{{"N", sys.N},
              {"a", sys.a},
              {"b", sys.b},
              {"window", cvec_to_json(sys.window)}};
}

FiniteGaborSystem gabor_from_json(const Json &j) {
  FiniteGaborSystem sys;
  sys.N = field(j, "N").get<std::size_t>();
  sys.a = field(j, "a").get<std::size_t>();
  sys.b = field(j, "b").get<std::size_t>();
  sys.window = cvec_from_json(field(j, "window"));
  validate_gabor_system(sys);
  return sys;
}

Json bs_rep_to_json(const BSRepresentation &rep) {
  return Json{{"dim", rep.dim},
              {"D", matrix_to_json(rep.dilation)},
              {"T", matrix_to_json(rep.translation)}};
}

BSRepresentation bs_rep_from_json(const Json &j) {
  const ComplexMatrix d = matrix_from_json(field(j, "D"));
  const ComplexMatrix t = matrix_from_json(field(j, "T"));
  if (j.contains("dim") && field(j, "dim").get<std::size_t>() != d.rows())
    throw Error(ErrorKind::ParseError, "dim != generator size");
  return make_bs_representation(d, t);
}

Json affine_system_to_json(const AffineSystem &sys) {
  Json j = bs_rep_to_json(sys.rep);
  j["psi"] = cvec_to_json(sys.psi);
  return j;
}

AffineSystem affine_system_from_json(const Json &j) {
  const BSRepresentation rep = bs_rep_from_json(j);
  const CVec psi = cvec_from_json(field(j, "psi"));
  if (!j.contains("index_set")) return make_affine_system(rep, psi);
  std::vector<AffineIndex> indices;
  for (const auto &pair : field(j, "index_set")) {
    if (!pair.is_array() || pair.size() != 2)
      throw Error(ErrorKind::ParseError, "index_set entries must be [j, k]");
    indices.push_back(
        AffineIndex{pair[0].get<unsigned>(), pair[1].get<unsigned>()});
  }
  return make_affine_system(rep, psi, indices);
}

Json dilation_certificate_to_json(const DilationCertificate &c) {
  return Json{{"kind", "plain"},
              {"embedding", matrix_to_json(c.embedding)},
              {"dilation_operator", matrix_to_json(c.dilation_operator)},
              {"bounds", bounds_to_json(c.bounds)},
              {"tolerance", c.tolerance}};
}

DilationCertificate dilation_certificate_from_json(const Json &j) {
  DilationCertificate c;
  c.embedding = matrix_from_json(field(j, "embedding"));
  c.dilation_operator = matrix_from_json(field(j, "dilation_operator"));
  c.bounds = bounds_from_json(field(j, "bounds"));
  c.tolerance = number(field(j, "tolerance"), "tolerance");
  return c;
}

Json group_certificate_to_json(const GroupDilationCertificate &c) {
  Json j = dilation_certificate_to_json(c.base);
  j["kind"] = "group";
  j["regular_rep"] = representation_to_json(c.regular_rep);
  return j;
}

GroupDilationCertificate group_certificate_from_json(const Json &j) {
  GroupDilationCertificate c;
  c.base = dilation_certificate_from_json(j);
  c.regular_rep = representation_from_json(field(j, "regular_rep"));
  return c;
}

Json projective_certificate_to_json(const ProjectiveDilationCertificate &c,
                                    const char *kind) {
  return Json{{"kind", kind},
              {"canonical_vector", cvec_to_json(c.canonical_vector)},
              {"complement_rep", projective_rep_to_json(c.complement_rep)},
              {"complement_vector", cvec_to_json(c.complement_vector)},
              {"embedding", matrix_to_json(c.embedding)},
              {"projection", matrix_to_json(c.projection)},
              {"frame_operator_sqrt", matrix_to_json(c.frame_operator_sqrt)},
              {"bounds", bounds_to_json(c.bounds)},
              {"tolerance", c.tolerance}};
}

ProjectiveDilationCertificate projective_certificate_from_json(const Json &j) {
  ProjectiveDilationCertificate c;
  c.canonical_vector = cvec_from_json(field(j, "canonical_vector"));
  c.complement_rep = projective_rep_from_json(field(j, "complement_rep"));
  c.complement_vector = cvec_from_json(field(j, "complement_vector"));
  c.embedding = matrix_from_json(field(j, "embedding"));
  c.projection = matrix_from_json(field(j, "projection"));
  c.frame_operator_sqrt = matrix_from_json(field(j, "frame_operator_sqrt"));
  c.bounds = bounds_from_json(field(j, "bounds"));
  c.tolerance = number(field(j, "tolerance"), "tolerance");
  return c;
}

Json wavelet_result_to_json(const WaveletDilationResult &r) {
  if (!r.dilatable) {
    Json violations = Json::array();
    if (r.refusal.has_value())
      for (const auto &v : r.refusal->violations)
        violations.push_back(
            Json{{"j", v.j}, {"k", v.k}, {"residual", v.residual}});
    return Json{{"kind", "wavelet"},
                {"dilatable", false},
                {"max_residual",
                 r.refusal.has_value() ? r.refusal->max_residual : 0.0},
                {"violations", violations}};
  }
  const WaveletDilationCertificate &c = *r.certificate;
  return Json{
      {"kind", "wavelet"},
      {"dilatable", true},
      {"psi1", cvec_to_json(c.psi1)},
      {"frame_operator_sqrt", matrix_to_json(c.frame_operator_sqrt)},
      {"bounds", bounds_to_json(c.bounds)},
      {"complement",
       Json{{"D_prime", matrix_to_json(c.complement.dilation_prime)},
            {"T_prime", matrix_to_json(c.complement.translation_prime)},
            {"psi2", cvec_to_json(c.complement.psi2)},
            {"projection", matrix_to_json(c.complement.projection)},
            {"mechanism", c.complement.mechanism}}},
      {"tolerance", c.tolerance}};
}

WaveletDilationResult wavelet_result_from_json(const Json &j) {
  WaveletDilationResult r;
  r.dilatable = field(j, "dilatable").get<bool>();
  if (!r.dilatable) {
    WaveletRefusal ref;
    ref.max_residual =
        j.contains("max_residual") ? number(j["max_residual"], "max") : 0.0;
    for (const auto &v : field(j, "violations"))
      ref.violations.push_back(CommutantViolation{
          field(v, "j").get<unsigned>(), field(v, "k").get<unsigned>(),
          number(field(v, "residual"), "residual")});
    r.refusal = std::move(ref);
    return r;
  }
  WaveletDilationCertificate c;
  c.psi1 = cvec_from_json(field(j, "psi1"));
  c.frame_operator_sqrt = matrix_from_json(field(j, "frame_operator_sqrt"));
  c.bounds = bounds_from_json(field(j, "bounds"));
  const Json &comp = field(j, "complement");
  c.complement.dilation_prime = matrix_from_json(field(comp, "D_prime"));
  c.complement.translation_prime = matrix_from_json(field(comp, "T_prime"));
  c.complement.psi2 = cvec_from_json(field(comp, "psi2"));
  c.complement.projection = matrix_from_json(field(comp, "projection"));
  c.complement.mechanism = field(comp, "mechanism").get<std::string>();
  c.tolerance = number(field(j, "tolerance"), "tolerance");
  r.certificate = std::move(c);
  return r;
}

Json report_to_json(const Report &r) {
  Json checks = Json::array();
  for (const auto &c : r.checks) {
    Json item{{"name", c.name},
              {"residual", c.residual},
              {"threshold", c.threshold},
              {"pass", c.pass}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(std::move(item));
  }
  return Json{{"pass", r.pass()},
              {"max_residual", r.max_residual()},
              {"checks", checks}};
}

std::string certificate_kind(const Json &j) {
  if (!j.contains("kind") || !j["kind"].is_string())
    throw Error(ErrorKind::ParseError, "certificate has no kind tag");
  return j["kind"].get<std::string>();
}

std::string dump_json(const Json &j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string &text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw Error(ErrorKind::ParseError, "malformed JSON");
  return j;
}

} // namespace framedil
