#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ssdual/analysis.hpp"
#include "ssdual/duality.hpp"
#include "ssdual/markov.hpp"
#include "ssdual/poset.hpp"

namespace ssdual {

using Json = nlohmann::ordered_json;

// Rationals travel as canonical strings ("1/3", "-2/5", "7") in every JSON
// payload; chains carry an explicit "mode" so float data can never slip into
// exact computations unnoticed.

Json chain_to_json(const Chain& chain);
Chain chain_from_json(const Json& j);

Json float_chain_to_json(const FloatChain& chain);
FloatChain float_chain_from_json(const Json& j);

bool json_chain_is_float(const Json& j);

Json poset_to_json(const Poset& poset);
Poset poset_from_json(const Json& j, Index cap = kDefaultStateCap);

Json distribution_to_json(const RatRowVector& v);
RatRowVector distribution_from_json(const Json& j);

std::vector<Rational> rational_list_from_json(const Json& j);

Json duality_report_to_json(const DualityReport& report);
Json sharp_pair_report_to_json(const SharpPairReport& report);
Json sim_summary_to_json(const SimSummary& summary);

/// Canonical serialization: two-space indent, stable key order, trailing
/// newline. Emitted files re-read and re-emit byte-identically.
std::string dump_json(const Json& j);

std::string profile_csv(const std::vector<Rational>& sep, const std::vector<Rational>& tv,
                        const std::vector<Rational>* tail);
std::string profile_csv(const std::vector<double>& sep, const std::vector<double>& tv);
std::string tail_csv(const std::vector<Rational>& tail);
std::string cutoff_csv(const CutoffTable& table);

/// Six-significant-digit float formatting used by every CSV surface.
std::string format_float(double x);

}  // namespace ssdual
