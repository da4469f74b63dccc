#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mutarate/dataset_io.hpp"

namespace mutarate {

struct ScoringScheme {
    int match = 5;
    int mismatch = -4;
    int gap_open = -10;   // cost of the first column of a gap run
    int gap_extend = -1;  // cost of every further column

    // Throws ConfigError unless match > 0, mismatch < 0, gap_open <= gap_extend < 0.
    void validate() const;
    int substitution(char a, char b) const;
};

struct PairwiseAlignment {
    std::string a;
    std::string b;
    long score = 0;
};

// Global affine-gap (Gotoh) alignment. Ties in traceback prefer the diagonal,
// then a gap in `b` (consuming `a`), then a gap in `a`.
PairwiseAlignment pairwise_align(std::string_view a, std::string_view b,
                                 const ScoringScheme& scheme = {});

struct MsaRow {
    std::string label;
    std::string residues;  // gapped

    friend bool operator==(const MsaRow&, const MsaRow&) = default;
};

class Msa {
public:
    Msa() = default;
    // Validates equal row lengths, width >= 1 and the absence of all-gap columns.
    explicit Msa(std::vector<MsaRow> rows);

    const std::vector<MsaRow>& rows() const { return rows_; }
    std::size_t width() const { return rows_.empty() ? 0 : rows_.front().residues.size(); }
    std::size_t size() const { return rows_.size(); }
    char at(std::size_t row, std::size_t column) const { return rows_[row].residues[column]; }

    std::string ungapped(std::size_t row) const;
    double gap_fraction(std::size_t column) const;

    friend bool operator==(const Msa&, const Msa&) = default;

private:
    std::vector<MsaRow> rows_;
};

struct MergeEvent {
    std::size_t left = 0;   // cluster ids: leaves are 0..n-1, merge k creates n+k
    std::size_t right = 0;
    double height = 0.0;

    friend bool operator==(const MergeEvent&, const MergeEvent&) = default;
};

struct GuideTree {
    std::size_t leaves = 0;
    std::vector<MergeEvent> merges;
};

// p-distance of the global pairwise alignment of two sequences. Returns 1 when
// no column is comparable.
double aligned_p_distance(std::string_view a, std::string_view b, const ScoringScheme& scheme);

// UPGMA over pairwise p-distances. Ties go to the pair with the lowest
// (first, second) cluster position, where clusters are ordered by their
// smallest member index.
GuideTree guide_tree(const std::vector<SequenceRecord>& seqs, const ScoringScheme& scheme = {});
GuideTree upgma(const std::vector<std::vector<double>>& distances);

Msa progressive_align(const std::vector<SequenceRecord>& seqs, const ScoringScheme& scheme = {});

// Replaces each IUPAC ambiguity cell with the most frequent compatible strict
// nucleotide in its column, falling back to the first compatible base in ACGT
// order when none occurs.
Msa resolve_ambiguities(const Msa& msa);

std::string write_msa_fasta(const Msa& msa, const std::vector<SequenceRecord>& source);
Msa msa_from_records(const std::vector<SequenceRecord>& aligned);

}  // namespace mutarate
