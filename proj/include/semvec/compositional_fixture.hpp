#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semvec/embedding_store.hpp"
#include "semvec/retrofitter.hpp"

namespace semvec {

/// Worked-example space built additively from orthogonal primitive directions
/// (cold, water, precipitation, frozen, road, woods, sea, predator, ...).
///
/// Every primitive is also a token. Compounds are sums of two or three
/// primitives: ice = cold + water, snow = precipitation + frozen,
/// icy_roads = frozen + road, rain = precipitation + wet, wet_roads = wet + road,
/// bear = woods + predator, hiker = woods + tourist, shark = sea + predator,
/// snorkeler = sea + tourist, seat_belt = road + safety, car = road + vehicle,
/// life_preserver = ocean + safety, ship = ocean + vehicle,
/// paris = france + city + fashion, and body/surface/tool crossed with the
/// kitchen, garden and workshop settings (finger, cutting_board, knife, toe,
/// flowerbed, trowel, hand, workbench, hammer).
///
/// Each row receives a seeded Gaussian perturbation of Euclidean norm `noise`
/// (at most 0.01).
VectorSpace compositional_fixture(std::uint64_t seed = 7, double noise = 0.005);

/// The analogies the fixture is built to answer.
std::vector<AnalogyProbe> compositional_fixture_probes();

}  // namespace semvec
