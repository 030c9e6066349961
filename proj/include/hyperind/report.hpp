#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "hyperind/bounds.hpp"
#include "hyperind/hypergraph.hpp"
#include "hyperind/oracle.hpp"
#include "hyperind/pipeline.hpp"

namespace hyperind::report {

using json = nlohmann::ordered_json;

json stats_report(const Hypergraph& h);
json alpha_report(const oracle::AlphaCertificate& cert);
json cleanup_report(const pipeline::CleanupReport& r);
json condition_report(const pipeline::ConditionReport& r);
json first_moment_report(const bounds::FirstMomentReport& r);
json ramsey_report(const bounds::RamseyReport& r);
json constant_report(const bounds::ConstantReport& r);

/// The fixed per-run schema ("report_v1"): params, cleanup sizes, witness,
/// both sides of the expectation inequality, condition ratios.
json report_v1(const pipeline::Params& params, const pipeline::PipelineResult& result);

/// CSV table: r, c_r, c_r*e/r, (r+1)!^{1/r}, c_r/(r+1)!^{1/r}.
std::string constants_csv(unsigned r_min, unsigned r_max);

} // namespace hyperind::report
