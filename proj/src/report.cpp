#include "hyperind/report.hpp"

#include <cmath>
#include <cstdio>

namespace hyperind::report {

namespace {

json vertex_list(const VertexSet& s) {
    json out = json::array();
    for (VertexId v : s.members()) out.push_back(v);
    return out;
}

const char* method_name(oracle::AlphaMethod m) {
    return m == oracle::AlphaMethod::exact ? "exact" : "greedy-lower-bound";
}

} // namespace

json stats_report(const Hypergraph& h) {
    json profile = json::object();
    const IntersectionProfile ip = intersection_profile(h);
    for (std::size_t i = 0; i < ip.counts.size(); ++i) {
        if (ip.counts[i] > 0) profile[std::to_string(i)] = ip.counts[i];
    }
    return json{{"uniformity", h.uniformity()},
                {"n", h.vertex_count()},
                {"m", h.edge_count()},
                {"max_r_degree", max_r_degree(h)},
                {"linear", is_linear(h)},
                {"triangles", count_triangles(h)},
                {"intersection_profile", profile},
                {"independent_neighborhoods", has_independent_neighborhoods(h)}};
}

json alpha_report(const oracle::AlphaCertificate& cert) {
    return json{{"alpha", cert.alpha},
                {"method", method_name(cert.method)},
                {"witness", vertex_list(cert.witness)}};
}

json cleanup_report(const pipeline::CleanupReport& r) {
    return json{{"sampled", r.sampled.size()},
                {"kept", r.kept.size()},
                {"deleted", vertex_list(r.deleted)},
                {"triangles", r.triangles_found},
                {"overlaps", r.overlap_pairs_found}};
}

json condition_report(const pipeline::ConditionReport& r) {
    auto side = [](const pipeline::ConditionSide& s) {
        return json{{"lhs", s.lhs}, {"rhs", s.rhs}, {"ratio", s.ratio}};
    };
    return json{{"alpha", r.alpha},
                {"q", r.q},
                {"degenerate", r.degenerate},
                {"first", side(r.first)},
                {"second", side(r.second)},
                {"third", side(r.third)}};
}

json first_moment_report(const bounds::FirstMomentReport& r) {
    return json{{"n", r.n},
                {"r", r.r},
                {"d", r.d},
                {"epsilon", r.epsilon},
                {"p", r.p},
                {"x", r.x},
                {"logE", r.log_expected_count},
                {"growth_lhs", r.growth_lhs},
                {"growth_rhs", r.growth_rhs},
                {"x_exceeds_n", r.x_exceeds_n}};
}

json ramsey_report(const bounds::RamseyReport& r) {
    return json{{"r", r.r},
                {"t", r.t},
                {"c", r.c},
                {"n_upper", r.n_upper},
                {"scaling", r.scaling},
                {"ratio_to_scaling", r.ratio_to_scaling},
                {"small_t", r.small_t}};
}

json constant_report(const bounds::ConstantReport& r) {
    return json{{"r", r.r},
                {"c_r", r.c_r},
                {"c_r_e_over_r", r.asymptote_ratio},
                {"formula_inputs",
                 json{{"r_factorial", r.r_factorial},
                      {"log_r_factorial", r.log_r_factorial},
                      {"r_times_3r_minus_1", r.r_times_3r_minus_1},
                      {"two_pow_r", r.two_pow_r},
                      {"log_one_minus_2_pow_minus_r", r.log_one_minus_2_pow_minus_r}}}};
}

json report_v1(const pipeline::Params& params, const pipeline::PipelineResult& result) {
    json lemma4{{"lhs", result.lemma4.lhs},
                {"rhs", result.lemma4.rhs},
                {"method", result.lemma4.method == pipeline::ExpectationMethod::exact
                               ? "exact"
                               : "monte-carlo"}};
    if (result.lemma4.standard_error) lemma4["stderr"] = *result.lemma4.standard_error;
    return json{{"version", "report_v1"},
                {"params",
                 json{{"n", params.n},
                      {"d", params.d},
                      {"r", params.r},
                      {"p", params.p},
                      {"b", params.b},
                      {"seed", params.seed}}},
                {"cleanup",
                 json{{"sampled", result.cleanup.sampled.size()},
                      {"kept", result.cleanup.kept.size()},
                      {"triangles", result.cleanup.triangles_found},
                      {"overlaps", result.cleanup.overlap_pairs_found}}},
                {"witness",
                 json{{"size", result.witness.witness.size()},
                      {"vertices", vertex_list(result.witness.witness)}}},
                {"lemma4", lemma4},
                {"conditions",
                 json{{"ratios",
                       json{{"first", result.conditions.first.ratio},
                            {"second", result.conditions.second.ratio},
                            {"third", result.conditions.third.ratio}}}}}};
}

std::string constants_csv(unsigned r_min, unsigned r_max) {
    std::string out = "r,c_r,c_r_e_over_r,upper_constant,ratio\n";
    char line[160];
    for (unsigned r = r_min; r <= r_max; ++r) {
        const bounds::ConstantReport report = bounds::c_r_constant(r);
        // (r+1)!^{1/r}: the constant of the random-construction upper bound.
        const double upper = std::exp(std::lgamma(static_cast<double>(r) + 2.0) /
                                      static_cast<double>(r));
        std::snprintf(line, sizeof line, "%u,%.10g,%.10g,%.10g,%.10g\n", r, report.c_r,
                      report.asymptote_ratio, upper, report.c_r / upper);
        out += line;
    }
    return out;
}

} // namespace hyperind::report
