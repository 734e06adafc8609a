#pragma once

#include <json.hpp>
#include <string>

#include "gabor/gram.hpp"
#include "gabor/pipeline.hpp"

namespace gabor {

/// Finite doubles as numbers, everything else as null.
nlohmann::json number_or_null(double v);

nlohmann::json config_json(const RunConfig& cfg);
nlohmann::json gap_json(const GapReport& gap);
nlohmann::json fit_json(const FitOutcome& f);
nlohmann::json comparison_json(const BoundComparison& cmp);
nlohmann::json kernel_json(const KernelRun& run);
nlohmann::json weight_checks_json(const WeightChecks& checks);

/// The sweep report; `kernel` may be null.
nlohmann::json emit_report(const SweepRun& run, const nlohmann::json& kernel = nullptr);
nlohmann::json fit_report(const SweepRun& run);

/// Serialises with two-space indentation and a trailing newline.
std::string dump(const nlohmann::json& j);

std::string sweep_csv(const SweepRun& run);
std::string bounds_csv(const BoundsTable& t);
std::string fits_csv(const std::vector<FitOutcome>& fits);
std::string gram_csv(const GramSection& G);
std::string envelope_csv(const EnvelopeProfile& env, int d);
std::string kernel_vector_csv(const KernelRun& run);
std::string lemma_csv(const std::vector<LemmaRow>& rows);

/// gnuplot script plotting log a_n and the log bounds from `csv_name`.
std::string plot_script(const std::string& csv_name);

}  // namespace gabor
