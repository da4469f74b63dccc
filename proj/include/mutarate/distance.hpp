#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mutarate/msa.hpp"

namespace mutarate {

// Column tallies for two aligned sequences. Columns holding a gap or an
// ambiguity code in either sequence are excluded (pairwise deletion).
struct SiteComparison {
    std::size_t sites = 0;
    std::size_t transitions = 0;    // A<->G, C<->T
    std::size_t transversions = 0;  // purine <-> pyrimidine

    double p() const { return static_cast<double>(transitions) / static_cast<double>(sites); }
    double q() const { return static_cast<double>(transversions) / static_cast<double>(sites); }
    double d() const { return static_cast<double>(transitions + transversions) / static_cast<double>(sites); }

    friend bool operator==(const SiteComparison&, const SiteComparison&) = default;
};

SiteComparison compare_sites(std::string_view a, std::string_view b);

// -(3/4) ln(1 - (4/3) D). SaturationError when D >= 0.75.
double jukes_cantor(double d);
double jukes_cantor(const SiteComparison& c);

// -(1/2) ln((1 - 2P - Q) sqrt(1 - 2Q)). SaturationError outside the domain.
double kimura(double p, double q);
double kimura(const SiteComparison& c);

double p_distance(const SiteComparison& c);

enum class DistanceMethod { jukes_cantor, kimura, p_distance };

DistanceMethod parse_distance_method(std::string_view name);
std::string to_string(DistanceMethod method);

class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::vector<std::string> labels);
    DistanceMatrix(std::vector<std::string> labels, std::vector<double> values);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t index_of(std::string_view label) const;

    double operator()(std::size_t i, std::size_t j) const { return values_[i * size() + j]; }
    double at(std::string_view a, std::string_view b) const { return (*this)(index_of(a), index_of(b)); }
    // Sets both (i, j) and (j, i).
    void set(std::size_t i, std::size_t j, double value);

    // Empty when symmetric within 1e-12 with zero diagonal and non-negative
    // entries, otherwise a description of the violation.
    std::string check_invariants() const;

    std::string to_tsv(int decimals = 6) const;
    static DistanceMatrix from_tsv(std::string_view tsv);

private:
    std::vector<std::string> labels_;
    std::vector<double> values_;
};

struct LabeledResidues {
    std::string label;
    std::string residues;
};

// Every pair is globally aligned first (the shorter-key sequence leads, so the
// result does not depend on input order), then compared site by site.
DistanceMatrix distance_matrix(const std::vector<LabeledResidues>& seqs, DistanceMethod method,
                               const ScoringScheme& scheme = {});

}  // namespace mutarate
