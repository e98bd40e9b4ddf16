#include "semvec/compositional_fixture.hpp"

#include <random>
#include <utility>

namespace semvec {

namespace {

const std::vector<std::string>& primitives() {
  static const std::vector<std::string> names = {
      "cold",   "water",  "precipitation", "frozen",  "road",    "wet",
      "woods",  "sea",    "predator",      "tourist", "ocean",   "safety",
      "vehicle", "france", "city",         "fashion", "body",    "surface",
      "tool",   "kitchen", "garden",       "workshop"};
  return names;
}

const std::vector<std::pair<std::string, std::vector<std::string>>>& compounds() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> table = {
      {"ice", {"cold", "water"}},
      {"snow", {"precipitation", "frozen"}},
      {"icy_roads", {"frozen", "road"}},
      {"rain", {"precipitation", "wet"}},
      {"wet_roads", {"wet", "road"}},
      {"bear", {"woods", "predator"}},
      {"hiker", {"woods", "tourist"}},
      {"shark", {"sea", "predator"}},
      {"snorkeler", {"sea", "tourist"}},
      {"seat_belt", {"road", "safety"}},
      {"car", {"road", "vehicle"}},
      {"life_preserver", {"ocean", "safety"}},
      {"ship", {"ocean", "vehicle"}},
      {"paris", {"france", "city", "fashion"}},
      {"finger", {"body", "kitchen"}},
      {"cutting_board", {"surface", "kitchen"}},
      {"knife", {"tool", "kitchen"}},
      {"toe", {"body", "garden"}},
      {"flowerbed", {"surface", "garden"}},
      {"trowel", {"tool", "garden"}},
      {"hand", {"body", "workshop"}},
      {"workbench", {"surface", "workshop"}},
      {"hammer", {"tool", "workshop"}},
  };
  return table;
}

// Spare dimensions beyond the primitives give the noise somewhere to live.
constexpr Eigen::Index kSpareDims = 10;

}  // namespace

VectorSpace compositional_fixture(std::uint64_t seed, double noise) {
  if (noise < 0.0 || noise > 0.01) throw DataError("fixture noise must lie in [0, 0.01]");
  const auto& prims = primitives();
  const auto& table = compounds();
  const auto dim = static_cast<Eigen::Index>(prims.size()) + kSpareDims;
  const auto rows = static_cast<Eigen::Index>(prims.size() + table.size());

  std::vector<std::string> vocab = prims;
  Matrix m = Matrix::Zero(rows, dim);
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(prims.size()); ++i) m(i, i) = 1.0;
  for (std::size_t c = 0; c < table.size(); ++c) {
    const auto r = static_cast<Eigen::Index>(prims.size() + c);
    vocab.push_back(table[c].first);
    for (const auto& part : table[c].second) {
      const auto p = std::find(prims.begin(), prims.end(), part) - prims.begin();
      m(r, static_cast<Eigen::Index>(p)) = 1.0;
    }
  }

  if (noise > 0.0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (Eigen::Index r = 0; r < rows; ++r) {
      Eigen::RowVectorXd eps(dim);
      for (Eigen::Index c = 0; c < dim; ++c) eps(c) = gauss(rng);
      m.row(r) += noise * eps / eps.norm();
    }
  }
  return VectorSpace(std::move(vocab), std::move(m));
}

std::vector<AnalogyProbe> compositional_fixture_probes() {
  return {
      {"bear", "hiker", "shark", "snorkeler"},
      {"seat_belt", "car", "life_preserver", "ship"},
      {"snow", "icy_roads", "rain", "wet_roads"},
      {"finger", "cutting_board", "toe", "flowerbed"},
      {"cutting_board", "knife", "workbench", "hammer"},
  };
}

}  // namespace semvec
