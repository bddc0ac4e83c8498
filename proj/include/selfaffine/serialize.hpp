#pragma once

#include "selfaffine/betaexp.hpp"
#include "selfaffine/derivative.hpp"
#include "selfaffine/selfaffine.hpp"
#include "selfaffine/spectrum.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace selfaffine {

using Json = nlohmann::ordered_json;

/// 17 significant digits; "nan", "inf", "-inf" for non-finite values.
std::string format_number(double value);

/// Compact JSON with every floating value printed to 17 significant digits
/// (non-finite values become null).
std::string dump_json(const Json& j);

Json to_json(const DerivativeClass& c);
Json to_json(const EntropyBounds& e);
Json to_json(const Thresholds& t);
Json to_json(const DimensionReport& r);
Json to_json(const GraphSample& g);
Json to_json(const std::vector<ProbeRow>& rows);
Json to_json(const DinfEnumeration& e);
Json to_json(const AsymptoticReport& r);
Json to_json(const QuasiGreedy& q);

std::string thresholds_csv(const std::vector<Thresholds>& rows);
std::string graph_csv(const GraphSample& g);
std::string probe_csv(const std::vector<ProbeRow>& rows);
std::string curve_csv(const std::vector<std::pair<double, double>>& curve);
std::string asymptotics_csv(const AsymptoticReport& r);
std::string dinf_csv(const DinfEnumeration& e);

} // namespace selfaffine
