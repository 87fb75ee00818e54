#include "kslim/problem_io.hpp"

#include <fstream>

#include "kslim/degeneration.hpp"

namespace kslim {

using nlohmann::json;

namespace {

Scalar parse_entry(const json& j, const char* what) {
  if (!j.is_string())
    throw ParseError(std::string(what) + ": rationals must be strings");
  try {
    return Scalar::parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

Mat parse_matrix(const json& j, std::size_t rank, const char* what) {
  if (!j.is_array() || j.size() != rank)
    throw ParseError(std::string(what) + ": expected " + std::to_string(rank) +
                     " rows");
  Mat m(rank, rank);
  for (std::size_t i = 0; i < rank; ++i) {
    if (!j[i].is_array() || j[i].size() != rank)
      throw ParseError(std::string(what) + ": row " + std::to_string(i) +
                       " has wrong length");
    for (std::size_t k = 0; k < rank; ++k) m(i, k) = parse_entry(j[i][k], what);
  }
  return m;
}

Vec parse_rational_vector(const json& j, std::size_t rank, const char* what) {
  if (!j.is_array() || j.size() != rank)
    throw ParseError(std::string(what) + ": expected " + std::to_string(rank) +
                     " entries");
  Vec v(rank);
  for (std::size_t i = 0; i < rank; ++i) v[i] = parse_entry(j[i], what);
  return v;
}

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json rational_vector_to_json(const Vec& v, bool imaginary_part) {
  json out = json::array();
  for (const auto& x : v)
    out.push_back(rat_str(imaginary_part ? x.im() : x.re()));
  return out;
}

json diamond_to_json(const HodgeDiamond& d) {
  json out = json::object();
  for (const auto& [pq, h] : d)
    out["h(" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ")"] = h;
  return out;
}

}  // namespace

K3LimitMHS ProblemFile::to_mhs() const {
  try {
    return K3LimitMHS{QuadSpace(gram), n, v_lim};
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad quadratic space: ") + e.what());
  }
}

ProblemFile problem_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("problem file must be a JSON object");
  ProblemFile p;
  if (!j.contains("rank") || !j["rank"].is_number_unsigned())
    throw ParseError("missing or invalid \"rank\"");
  p.rank = j["rank"].get<std::size_t>();
  if (p.rank < 2) throw ParseError("rank must be at least 2");

  for (const char* key : {"gram", "N", "v_lim_re", "v_lim_im"})
    if (!j.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");

  p.gram = parse_matrix(j["gram"], p.rank, "gram");
  p.n = parse_matrix(j["N"], p.rank, "N");
  Vec re = parse_rational_vector(j["v_lim_re"], p.rank, "v_lim_re");
  Vec im = parse_rational_vector(j["v_lim_im"], p.rank, "v_lim_im");
  p.v_lim.resize(p.rank);
  for (std::size_t i = 0; i < p.rank; ++i)
    p.v_lim[i] = Scalar(re[i].re(), im[i].re());

  if (j.contains("neron_components")) {
    const json& nc = j["neron_components"];
    if (!nc.is_number_unsigned() || nc.get<std::uint64_t>() == 0)
      throw ParseError("\"neron_components\" must be a positive integer");
    p.neron_components = mpz_class(nc.get<std::uint64_t>());
  }
  if (j.contains("zeta_terms")) {
    const json& zt = j["zeta_terms"];
    if (!zt.is_number_unsigned() || zt.get<std::size_t>() == 0)
      throw ParseError("\"zeta_terms\" must be a positive integer");
    p.zeta_terms = zt.get<std::size_t>();
  }
  return p;
}

json problem_to_json(const ProblemFile& p) {
  json j;
  j["rank"] = p.rank;
  j["gram"] = matrix_to_json(p.gram);
  j["N"] = matrix_to_json(p.n);
  j["v_lim_re"] = rational_vector_to_json(p.v_lim, false);
  j["v_lim_im"] = rational_vector_to_json(p.v_lim, true);
  if (p.neron_components)
    j["neron_components"] = std::stoull(p.neron_components->get_str());
  j["zeta_terms"] = p.zeta_terms;
  return j;
}

ProblemFile problem_from_example(const ExampleSpec& spec) {
  K3LimitMHS m = make_example(spec);
  ProblemFile p;
  p.rank = m.space.dim();
  p.gram = m.space.gram();
  p.n = m.n;
  p.v_lim = m.v_lim;
  return p;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return problem_from_json(j);
}

void save_problem(const ProblemFile& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << problem_to_json(p).dump(2) << "\n";
}

json validation_to_json(const ValidationReport& rep) {
  json items = json::object();
  for (const auto& item : rep.items) {
    json entry;
    entry["pass"] = item.pass;
    entry["description"] = item.description;
    if (!item.detail.empty()) entry["detail"] = item.detail;
    items[item.id] = std::move(entry);
  }
  json signs = json::array();
  for (const auto& s : rep.primitive_signs) {
    json entry;
    entry["weight"] = s.weight;
    entry["p"] = s.p;
    entry["q"] = s.q;
    entry["sign"] = s.sign;
    signs.push_back(std::move(entry));
  }
  json out;
  out["ok"] = rep.ok();
  out["axioms"] = std::move(items);
  out["primitive_signs"] = std::move(signs);
  out["essential_image_checked"] = rep.essential_image_checked;
  return out;
}

json analyze_report(const ProblemFile& p) {
  K3LimitMHS m = p.to_mhs();
  ValidationReport validation = validate_pmhs_k3(m);

  json rep;
  rep["input"] = problem_to_json(p);
  rep["validation"] = validation_to_json(validation);
  if (!validation.ok()) return rep;

  json checks = json::object();
  rep["type"] = type_name(classify_type(m.n));

  WeightFiltrationK3 wf = weight_filtration_k3(m.space, m.n);
  rep["k3"]["weight_dims"] = wf.dims();
  rep["k3"]["hodge_diamond"] = diamond_to_json(hodge_diamond_k3(m));

  AbLimitMHS ab = ks_lim(m);
  std::size_t d = ab.algebra.dim();
  rep["kuga_satake"]["d"] = d;
  rep["kuga_satake"]["dim_F1"] = ab.f1.dim();
  rep["kuga_satake"]["dim_W0"] = ab.w0.dim();
  rep["kuga_satake"]["dim_W1"] = ab.w1.dim();
  HodgeDiamond ab_diamond = hodge_diamond_ab(ab);
  rep["kuga_satake"]["hodge_diamond"] = diamond_to_json(ab_diamond);
  checks["nprime_squares_to_zero"] = (ab.nprime * ab.nprime).is_zero();
  checks["f1_half_dimensional"] = ab.f1.dim() == d / 2;
  checks["w0_inside_w1"] = ab.w1.contains(ab.w0);

  CentralFibreReport cf = central_fibre_h1(m);
  rep["central_fibre"]["type"] = type_name(cf.type);
  rep["central_fibre"]["h1_diamond"] = diamond_to_json(cf.h1_diamond);
  rep["central_fibre"]["torus_rank"] = cf.torus_rank;
  rep["central_fibre"]["dim_B"] = cf.dim_b;
  rep["central_fibre"]["component_birational_type"] = cf.birational_type;
  checks["central_fibre_closed_form"] = true;  // central_fibre_h1 enforces it

  DualComplexReport dc = dual_complex_cohomology(m);
  json betti = json::array();
  for (const auto& b : dc.betti) betti.push_back(b.get_str());
  rep["dual_complex"]["torus_rank"] = dc.torus_rank;
  rep["dual_complex"]["betti"] = std::move(betti);
  rep["dual_complex"]["component_lower_bound"] = dc.component_lower_bound.get_str();

  NeronData nd = neron_data(m);
  rep["neron"]["w"] = nd.w;
  rep["neron"]["dim_B"] = nd.dim_b;
  rep["neron"]["gr1_basis"] = matrix_to_json(nd.gr1_basis);
  rep["neron"]["gr1_F1_dim"] = nd.gr1_f1_dim;
  rep["neron"]["birational_type"] = nd.birational_type;

  json zeta = json::array();
  for (const auto& c : motivic_zeta(m, p.zeta_terms, p.neron_components))
    zeta.push_back(c.str());
  rep["zeta"] = std::move(zeta);

  // Consistency triangle across the section 5 invariants.
  checks["torus_rank_consistent"] =
      nd.w == ab.w0.dim() && nd.w == dc.torus_rank && nd.w == cf.torus_rank;
  checks["h1_dimension"] = ab.w1.dim() == d - ab.w0.dim() &&
                           2 * nd.dim_b + nd.w == ab.w1.dim();
  checks["diamond_total"] = diamond_total(ab_diamond) == d;
  rep["checks"] = std::move(checks);
  return rep;
}

}  // namespace kslim
