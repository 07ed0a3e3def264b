#pragma once

// JSON and CSV forms of the library's results. Doubles are written so that
// parsing them back yields the same bits: CSV cells use 17 significant digits
// and JSON uses the shortest round-trip form.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "circech/exact.hpp"
#include "circech/homotopy_type.hpp"
#include "circech/montecarlo.hpp"

namespace circech {

using Json = nlohmann::ordered_json;

// {"kind":"odd","l":L} or {"kind":"even","a":A,"l":L}.
Json to_json(const HomotopyType& type);
HomotopyType homotopy_type_from_json(const Json& j);

// Everything but the wall-clock time sits at top level; the time lives under
// "timing" so that reruns can be compared after dropping that one key.
Json to_json(const Census& census);
Census census_from_json(const Json& j);

Json to_json(const EstimateWithCI& estimate);
Json to_json(const VerifyReport& report);

Json to_json(const std::vector<CurvePoint>& curve, std::int64_t n);
Json to_json(const std::vector<SpikeAnalysis>& rows);

std::string format_double(double x);

// Columns n,t,chi,chi_normalized.
void write_curve_csv(std::ostream& out, std::int64_t n, const std::vector<CurvePoint>& curve);
std::vector<CurvePoint> read_curve_csv(std::istream& in);

// Columns m,center_t,a_mn,b_mn,omega_m,alpha_lo,alpha_hi.
void write_spikes_csv(std::ostream& out, const std::vector<SpikeAnalysis>& rows);
std::vector<SpikeAnalysis> read_spikes_csv(std::istream& in, std::int64_t n);

}  // namespace circech
