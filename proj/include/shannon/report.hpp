#pragma once

#include <string>

#include <json.hpp>

#include "shannon/cone.hpp"
#include "shannon/enumerate.hpp"
#include "shannon/inequalities.hpp"
#include "shannon/lattice.hpp"
#include "shannon/realizer.hpp"

namespace shannon {

nlohmann::json to_json(const Lattice& lattice, const LatticeProfile& profile);
nlohmann::json to_json(const GapReport& report);
nlohmann::json to_json(const Lattice& lattice, const Certificate& certificate);
nlohmann::json to_json(const ClassificationReport& report);
nlohmann::json ray_json(std::span<const Integer> ray);

/// Header lines plus one space-separated ray per line.
std::string format_ray_report(const Lattice& lattice, const RaySet& rays);

}  // namespace shannon
