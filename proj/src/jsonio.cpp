#include "finq/jsonio.hpp"

#include <fstream>
#include <stdexcept>

namespace finq::jsonio {

namespace {

json complex_to_json(const matrixcore::cplx& z) {
  return json::array({z.real(), z.imag()});
}

matrixcore::cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("jsonio: complex value must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const matrixcore::CMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

matrixcore::CMatrix matrix_from_json(const json& j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) {
    throw std::invalid_argument("jsonio: matrix row count mismatch");
  }
  matrixcore::CMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!j[r].is_array() || j[r].size() != dim) {
      throw std::invalid_argument("jsonio: matrix column count mismatch");
    }
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

}  // namespace

json state_to_json(const embeddings::QState& f) {
  json j;
  j["dim"] = f.dim;
  j["basis"] = (f.basis == embeddings::Basis::Position) ? "position" : "momentum";
  json amp = json::array();
  for (const auto& a : f.amplitudes) amp.push_back(complex_to_json(a));
  j["amplitudes"] = std::move(amp);
  return j;
}

embeddings::QState state_from_json(const json& j) {
  embeddings::QState f;
  f.dim = j.at("dim").get<std::uint64_t>();
  std::string basis = j.at("basis").get<std::string>();
  if (basis == "position") {
    f.basis = embeddings::Basis::Position;
  } else if (basis == "momentum") {
    f.basis = embeddings::Basis::Momentum;
  } else {
    throw std::invalid_argument("jsonio: basis must be position or momentum");
  }
  const json& amp = j.at("amplitudes");
  if (!amp.is_array() || amp.size() != f.dim) {
    throw std::invalid_argument("jsonio: amplitude count != dim");
  }
  for (const auto& a : amp) f.amplitudes.push_back(complex_from_json(a));
  return f;
}

json density_to_json(const embeddings::DensityMatrix& rho) {
  json j;
  j["dims"] = json::array({rho.dim()});
  j["matrix"] = matrix_to_json(rho.matrix());
  return j;
}

json density_to_json(const embeddings::BipartiteDensity& rho) {
  json j;
  j["dims"] = json::array({rho.dim1(), rho.dim2()});
  j["matrix"] = matrix_to_json(rho.tensor().matrix());
  return j;
}

bool is_bipartite_density(const json& j) {
  const json& dims = j.at("dims");
  if (!dims.is_array() || dims.empty() || dims.size() > 2) {
    throw std::invalid_argument("jsonio: dims must hold one or two entries");
  }
  return dims.size() == 2;
}

embeddings::DensityMatrix density_from_json(const json& j) {
  if (is_bipartite_density(j)) {
    throw std::invalid_argument("jsonio: expected a single-system density");
  }
  std::uint64_t n = j.at("dims")[0].get<std::uint64_t>();
  return embeddings::DensityMatrix(matrix_from_json(j.at("matrix"), n));
}

embeddings::BipartiteDensity bipartite_density_from_json(const json& j) {
  if (!is_bipartite_density(j)) {
    throw std::invalid_argument("jsonio: expected a bipartite density");
  }
  std::uint64_t n1 = j.at("dims")[0].get<std::uint64_t>();
  std::uint64_t n2 = j.at("dims")[1].get<std::uint64_t>();
  return embeddings::BipartiteDensity(
      matrixcore::BiTensor(n1, n2, matrix_from_json(j.at("matrix"), n1 * n2)));
}

json phase_function_to_json(const phasespace::PhaseFunction& w) {
  json j;
  j["dim"] = w.dim();
  json vals = json::array();
  for (const auto& v : w.values()) vals.push_back(complex_to_json(v));
  j["values"] = std::move(vals);
  return j;
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void save_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

}  // namespace finq::jsonio
