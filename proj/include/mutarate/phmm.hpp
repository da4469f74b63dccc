#pragma once

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mutarate/msa.hpp"

namespace mutarate {

// Krogh-style profile HMM over {A,C,G,T}.
//
// Positions k = 0..L. Position 0 holds the Begin state (stored in the match
// slot) and insert state I0; positions 1..L hold M_k, I_k, D_k. The transition
// block of position k is indexed [from][to] with from/to in {M, I, D}:
//   to M  -> M_{k+1}  (for k == L: the End state)
//   to I  -> I_k
//   to D  -> D_{k+1}  (forbidden at k == L)
// The D row of position 0 is structurally unused.
class ProfileHmm {
public:
    enum Kind : std::size_t { M = 0, I = 1, D = 2 };
    using Row = std::array<double, 4>;
    using Block = std::array<std::array<double, 3>, 3>;

    static constexpr double kFloor = 1e-12;

    ProfileHmm() = default;
    explicit ProfileHmm(std::size_t length);  // uniform emissions and transitions

    std::size_t length() const { return match_emissions_.size(); }

    // Match emission rows are indexed 1..L (index 0 is unused).
    const Row& match_emission(std::size_t k) const { return match_emissions_[k - 1]; }
    Row& match_emission(std::size_t k) { return match_emissions_[k - 1]; }
    const Row& insert_emission(std::size_t k) const { return insert_emissions_[k]; }
    Row& insert_emission(std::size_t k) { return insert_emissions_[k]; }
    const Block& transitions(std::size_t k) const { return transitions_[k]; }
    Block& transitions(std::size_t k) { return transitions_[k]; }

    // Whether a from->to move exists at position k.
    bool allowed(std::size_t k, Kind from, Kind to) const;

    // Lifts every allowed probability to at least kFloor and renormalizes
    // each distribution.
    void normalize();

    // Empty when all normalization invariants hold within `tolerance`,
    // otherwise a description of the first violation.
    std::string check_invariants(double tolerance = 1e-9) const;

    nlohmann::json to_json() const;
    static ProfileHmm from_json(const nlohmann::json& doc);

    friend bool operator==(const ProfileHmm&, const ProfileHmm&) = default;

private:
    std::vector<Row> match_emissions_;   // L
    std::vector<Row> insert_emissions_;  // L + 1
    std::vector<Block> transitions_;     // L + 1
};

struct TrainingConfig {
    double pseudocount = 0.01;
    int max_iterations = 100;
    double ll_tolerance = 1e-4;
    double gap_threshold = 0.5;

    void validate() const;
};

// Match states are the columns whose gap fraction is below the threshold.
ProfileHmm init_from_msa(const Msa& msa, const TrainingConfig& cfg = {});
// Counts-plus-pseudocount model with an explicit, ascending set of match columns.
ProfileHmm init_with_match_columns(const Msa& msa, const std::vector<std::size_t>& match_columns,
                                   const TrainingConfig& cfg = {});
// The `length` columns with the highest residue occupancy, ties to the left,
// returned in column order.
std::vector<std::size_t> occupancy_columns(const Msa& msa, std::size_t length);

// log P(seq | model), natural log, forward algorithm in log space.
double forward_log_likelihood(const ProfileHmm& hmm, std::string_view seq);

struct TrainingResult {
    ProfileHmm model;
    std::vector<double> ll_trace;  // total log-likelihood of the model at each iteration
    int iterations = 0;            // M-steps performed
    bool converged = false;
};

// Baum-Welch with maximum-likelihood M-steps (probabilities floored at
// ProfileHmm::kFloor). Pseudocounts enter only through the initial model.
TrainingResult baum_welch(const ProfileHmm& initial, const std::vector<std::string>& seqs,
                          const TrainingConfig& cfg = {});

// Invoked with the iteration number and the model after every M-step.
using IterationObserver = std::function<void(int, const ProfileHmm&)>;
TrainingResult baum_welch(const ProfileHmm& initial, const std::vector<std::string>& seqs,
                          const TrainingConfig& cfg, const IterationObserver& observer);

// log P(length == n | model): the forward sum with every emission set to 1.
double length_log_probability(const ProfileHmm& hmm, std::size_t n);

// Null model: the model's own path-length distribution with residues i.i.d.
// uniform over {A,C,G,T}. A model with uniform emissions scores exactly 0.
double null_log_likelihood(const ProfileHmm& hmm, std::string_view seq);
double log_odds_score(const ProfileHmm& hmm, std::string_view seq);

struct ScoreRow {
    std::size_t length = 0;
    std::string label;
    double score = 0.0;
};

struct ScoreTable {
    std::vector<ScoreRow> rows;

    std::vector<std::size_t> lengths() const;
    std::vector<std::string> labels() const;
    double at(std::size_t length, std::string_view label) const;
};

struct LabeledSequence {
    std::string label;
    std::string residues;
};

ScoreTable length_sweep(const Msa& msa, const std::vector<LabeledSequence>& seqs,
                        const std::vector<std::size_t>& lengths, const TrainingConfig& cfg = {});

// Rows are model lengths, columns are sequence labels in first-seen order.
std::string write_score_table(const ScoreTable& table);
ScoreTable read_score_table(std::string_view tsv);

struct LabeledScore {
    std::string label;
    double score = 0.0;
};

// Highest score wins; ties go to the earliest entry.
std::string select_representative(const std::vector<LabeledScore>& scores);

}  // namespace mutarate
