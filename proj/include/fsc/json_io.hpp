#ifndef FSC_JSON_IO_HPP
#define FSC_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "fsc/bootstrap.hpp"
#include "fsc/decision.hpp"
#include "fsc/operator_index.hpp"
#include "fsc/spaces.hpp"

namespace fsc {

nlohmann::json decision_json(const Decision& decision);
nlohmann::json triple_json(const IndexTriple& x);
nlohmann::json path_json(const BootstrapPath& path);
nlohmann::json polygon_json(const RegionPolygon& poly);

}  // namespace fsc

#endif
