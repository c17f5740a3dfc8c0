#pragma once

#include <string>

#include <json.hpp>

#include "jaclef/corpus.hpp"
#include "jaclef/invariants.hpp"
#include "jaclef/lefschetz.hpp"
#include "jaclef/verifier.hpp"

namespace jaclef {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.3.0";

nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const HilbertFunction& h);
nlohmann::json to_json(const SectionInvariants& s);
nlohmann::json to_json(const LefschetzVerdict& v);
nlohmann::json to_json(const LefschetzReport& r);
nlohmann::json to_json(const TheoremOneReport& r);
nlohmann::json to_json(const CorNReport& r);
nlohmann::json to_json(const ExHypReport& r);
nlohmann::json to_json(const ExCurvesReport& r);
nlohmann::json to_json(const ProbeReport& r);
nlohmann::json to_json(const Extension& e);
nlohmann::json to_json(const CheckResult& c);

/// Envelope shared by every CLI run. Timings are kept out unless asked for so
/// that reports for a fixed seed are byte-identical.
nlohmann::json run_report(const std::string& command, const ComputeOptions& opt, nlohmann::json result);

}  // namespace jaclef
