#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mutarate/date.hpp"
#include "mutarate/distance.hpp"
#include "mutarate/msa.hpp"
#include "mutarate/phmm.hpp"

namespace mutarate {

inline constexpr const char* kToolVersion = "1.0.0";

struct PipelineConfig {
    std::string manifest;
    std::string fasta;         // combined input FASTA; empty -> snapshot directory
    std::string snapshot_dir;  // empty -> <out>/snapshot
    std::string endpoint;      // efetch URL; empty disables network access
    ScoringScheme scheme;
    TrainingConfig training;
    std::vector<std::size_t> sweep_lengths;  // optional model-length sweep
    DistanceMethod tree_method = DistanceMethod::jukes_cantor;
    DistanceMethod rate_method = DistanceMethod::kimura;
    int degree = 1;
    std::optional<int> reference_year;
    std::optional<Date> reference_date;
    bool include_reference_point = true;
    bool allow_missing_records = false;  // continue without unavailable accessions
    std::string out_dir = "out";
    std::uint64_t seed = 1;

    // Relative paths in the document resolve against `base_dir`.
    static PipelineConfig from_json(const nlohmann::json& doc, const std::string& base_dir = {});
    static PipelineConfig load(const std::string& path);
    nlohmann::json to_json() const;
    void validate() const;

    std::string snapshot_path() const;
    std::string out(const std::string& relative) const;
};

// A failed stage, with the exit code its cause maps to.
class StageFailure : public std::runtime_error {
public:
    StageFailure(std::string stage, int exit_code, const std::string& cause);
    const std::string& stage() const { return stage_; }
    int exit_code() const { return exit_code_; }

private:
    std::string stage_;
    int exit_code_;
};

// 0 success, 2 config, 3 data, 4 numeric/saturation, 1 anything else.
int exit_code_for(const std::exception& e);

// Stage functions. Each reads its inputs from files (the previous stage's
// artifacts under cfg.out_dir) and writes its own artifacts there, so any
// stage can be rerun in isolation.
// Returns the accessions that could not be loaded; these are tolerated only
// when cfg.allow_missing_records is set, otherwise the stage throws.
std::vector<std::string> stage_fetch(const PipelineConfig& cfg);  // -> validation.json, sequences.fasta
void stage_align(const PipelineConfig& cfg);      // -> msa/<year>.aligned.fasta, msa/<year>.fasta
void stage_train(const PipelineConfig& cfg);      // -> models/<year>.json, models/<year>.training.json
void stage_score(const PipelineConfig& cfg);      // -> scores/<year>.tsv [, scores/<year>.sweep.tsv]
void stage_select(const PipelineConfig& cfg);     // -> representatives.json, representatives.fasta
void stage_distances(const PipelineConfig& cfg,
                     const std::vector<DistanceMethod>& methods);  // -> distances_<method>.tsv
void stage_tree(const PipelineConfig& cfg);       // -> tree.nwk, tree_rerooted.nwk, tree_events.json
void stage_rate(const PipelineConfig& cfg);       // -> observations.csv, fit.json, rate.svg
void stage_rate_from_observations(const PipelineConfig& cfg, const std::string& observations_csv);
nlohmann::json stage_report(const PipelineConfig& cfg);  // -> run_report.json

struct StageTiming {
    std::string stage;
    double seconds = 0.0;
};

struct RunReport {
    nlohmann::json document;
    std::vector<StageTiming> timings;  // also written to timings.log, never to JSON
};

// Runs every stage in order. On failure writes <out>/.partial naming the
// stage and cause, keeps whatever artifacts exist, and throws StageFailure.
RunReport run_pipeline(const PipelineConfig& cfg);

}  // namespace mutarate
