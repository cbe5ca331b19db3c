#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qac/bases.hpp"
#include "qac/channels.hpp"
#include "qac/linalg.hpp"
#include "qac/states.hpp"

namespace qac::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kIndexConvention = "A-major";

// Malformed files: unreadable, not JSON, or the wrong shape. Distinct from
// qac::Error, which reports a well-formed object that violates an invariant.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"re": [[...]], "im": [[...]]}, row-major; "im" may be omitted.
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);
json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const json& j);

// State file: {"index_convention": "A-major", "dims": [d] or [d_A, d_B],
// "matrix": {...}} or with "pure": {...} in place of "matrix".
struct StateFile {
  std::vector<int> dims;
  std::optional<ComplexMatrix> matrix;
  std::optional<ComplexVector> pure;

  int total_dim() const;
  bool bipartite() const { return dims.size() == 2; }
  // Validated views; throw qac::Error on invariant violations.
  DensityMatrix density() const;
  BipartiteDensityMatrix bipartite_state() const;
  PureState pure_state() const;
};

StateFile state_from_json(const json& j);
json state_to_json(const StateFile& s);
StateFile make_state_file(const DensityMatrix& rho, std::vector<int> dims);
StateFile make_state_file(const PureState& psi, std::vector<int> dims);

// MUB file: {"dim": d, "bases": [matrix, ...]}; a bare array of matrices is
// also accepted. Each matrix holds the basis vectors as columns.
json bases_to_json(const std::vector<ProjectiveBasis>& bases);
std::vector<ProjectiveBasis> bases_from_json(const json& j);

// Channel file: {"dim_in": n, "dim_out": m, "kraus": [matrix, ...]}; a bare
// array is also accepted.
json channel_to_json(const KrausChannel& channel);
KrausChannel channel_from_json(const json& j);

json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const json& j);

}  // namespace qac::io
