#include "qac/io.hpp"

#include <fstream>
#include <sstream>

#include "qac/error.hpp"

namespace qac::io {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::vector<std::vector<double>> real_rows(const json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be a 2-D array");
  std::vector<std::vector<double>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw FormatError(std::string(what) + " must be a 2-D array");
    std::vector<double> r;
    for (const auto& x : row) {
      if (!x.is_number()) throw FormatError(std::string(what) + " entries must be numbers");
      r.push_back(x.get<double>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<double> real_list(const json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be a 1-D array");
  std::vector<double> out;
  for (const auto& x : j) {
    if (!x.is_number()) throw FormatError(std::string(what) + " entries must be numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

const json& list_payload(const json& j, const char* key) {
  if (j.is_array()) return j;
  const json& list = require(j, key);
  if (!list.is_array()) throw FormatError(std::string("\"") + key + "\" must be an array");
  return list;
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json rr = json::array();
    json ri = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      rr.push_back(m(i, j).real());
      ri.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  const auto re = real_rows(require(j, "re"), "re");
  if (re.empty() || re.front().empty()) throw FormatError("matrix is empty");
  const std::size_t rows = re.size();
  const std::size_t cols = re.front().size();
  std::vector<std::vector<double>> im;
  if (j.contains("im")) {
    im = real_rows(j.at("im"), "im");
    if (im.size() != rows) throw FormatError("re and im have different shapes");
  }
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (re[r].size() != cols) throw FormatError("ragged matrix rows");
    if (!im.empty() && im[r].size() != cols) throw FormatError("re and im have different shapes");
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          Complex(re[r][c], im.empty() ? 0.0 : im[r][c]);
    }
  }
  return m;
}

json vector_to_json(const ComplexVector& v) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(v[i].real());
    im.push_back(v[i].imag());
  }
  return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexVector vector_from_json(const json& j) {
  const auto re = real_list(require(j, "re"), "re");
  if (re.empty()) throw FormatError("vector is empty");
  std::vector<double> im;
  if (j.contains("im")) {
    im = real_list(j.at("im"), "im");
    if (im.size() != re.size()) throw FormatError("re and im have different lengths");
  }
  ComplexVector v(static_cast<Eigen::Index>(re.size()));
  for (std::size_t i = 0; i < re.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = Complex(re[i], im.empty() ? 0.0 : im[i]);
  }
  return v;
}

int StateFile::total_dim() const {
  int total = 1;
  for (int d : dims) total *= d;
  return total;
}

DensityMatrix StateFile::density() const {
  if (pure) return from_pure(pure_state());
  if (matrix->rows() != total_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix size does not match dims");
  }
  return DensityMatrix::validate(*matrix);
}

BipartiteDensityMatrix StateFile::bipartite_state() const {
  if (!bipartite()) throw Error(ErrorCode::DimensionMismatch, "state file has a single dimension");
  return BipartiteDensityMatrix(density(), Dims{dims[0], dims[1]});
}

PureState StateFile::pure_state() const {
  if (!pure) throw Error(ErrorCode::InvalidArgument, "state file holds a density matrix");
  if (pure->size() != total_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "vector length does not match dims");
  }
  return PureState::validate(*pure);
}

StateFile state_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("state file must be a JSON object");
  StateFile s;
  const json& dims = require(j, "dims");
  if (!dims.is_array() || dims.empty() || dims.size() > 2) {
    throw FormatError("\"dims\" must list one or two dimensions");
  }
  for (const auto& d : dims) {
    if (!d.is_number_integer() || d.get<int>() < 1) {
      throw FormatError("dimensions must be positive integers");
    }
    s.dims.push_back(d.get<int>());
  }
  if (j.contains("index_convention") && j.at("index_convention") != kIndexConvention) {
    throw FormatError("unsupported index convention");
  }
  const bool has_matrix = j.contains("matrix");
  const bool has_pure = j.contains("pure");
  if (has_matrix == has_pure) throw FormatError("state needs exactly one of \"matrix\" or \"pure\"");
  if (has_matrix) {
    s.matrix = matrix_from_json(j.at("matrix"));
  } else {
    s.pure = vector_from_json(j.at("pure"));
  }
  return s;
}

json state_to_json(const StateFile& s) {
  json j{{"schema_version", kSchemaVersion}, {"index_convention", kIndexConvention}, {"dims", s.dims}};
  if (s.pure) {
    j["pure"] = vector_to_json(*s.pure);
  } else {
    j["matrix"] = matrix_to_json(*s.matrix);
  }
  return j;
}

StateFile make_state_file(const DensityMatrix& rho, std::vector<int> dims) {
  StateFile s;
  s.dims = std::move(dims);
  s.matrix = rho.matrix();
  return s;
}

StateFile make_state_file(const PureState& psi, std::vector<int> dims) {
  StateFile s;
  s.dims = std::move(dims);
  s.pure = psi.amplitudes();
  return s;
}

json bases_to_json(const std::vector<ProjectiveBasis>& bases) {
  json list = json::array();
  for (const auto& b : bases) list.push_back(matrix_to_json(b.vectors()));
  return json{{"schema_version", kSchemaVersion},
              {"dim", bases.empty() ? 0 : bases.front().dim()},
              {"bases", std::move(list)}};
}

std::vector<ProjectiveBasis> bases_from_json(const json& j) {
  std::vector<ProjectiveBasis> out;
  for (const auto& m : list_payload(j, "bases")) {
    out.push_back(ProjectiveBasis::validate(matrix_from_json(m)));
  }
  if (out.empty()) throw FormatError("no bases in file");
  return out;
}

json channel_to_json(const KrausChannel& channel) {
  json list = json::array();
  for (const auto& k : channel.kraus()) list.push_back(matrix_to_json(k));
  return json{{"schema_version", kSchemaVersion},
              {"dim_in", channel.dim_in()},
              {"dim_out", channel.dim_out()},
              {"kraus", std::move(list)}};
}

KrausChannel channel_from_json(const json& j) {
  std::vector<ComplexMatrix> kraus;
  for (const auto& m : list_payload(j, "kraus")) kraus.push_back(matrix_from_json(m));
  if (kraus.empty()) throw FormatError("no Kraus operators in file");
  return KrausChannel::validate(std::move(kraus));
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace qac::io
