#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mutarate/date.hpp"

namespace mutarate {

struct SequenceRecord {
    std::string accession;
    std::string label;
    std::optional<int> year;  // absent for bare-accession headers until a manifest supplies it
    std::optional<Date> collection_date;
    std::string residues;

    friend bool operator==(const SequenceRecord&, const SequenceRecord&) = default;
};

struct ManifestEntry {
    std::string label;
    std::string accession;
    int year = 0;
    std::optional<Date> collection_date;
};

// Year-grouped dataset description. Group and intra-group order follow the
// manifest file, which downstream tie-breaking relies on.
class DatasetManifest {
public:
    DatasetManifest() = default;
    explicit DatasetManifest(std::vector<ManifestEntry> entries);

    const std::map<int, std::vector<ManifestEntry>>& groups() const { return groups_; }
    const std::vector<ManifestEntry>& entries() const { return entries_; }
    std::vector<int> years() const;

    int reference_year() const { return reference_year_; }
    const std::optional<Date>& reference_date_override() const { return reference_date_; }

    // Overrides the default origin (minimum year, March 23).
    void set_reference(int year, std::optional<Date> date = std::nullopt);

    // Origin of the time axis: explicit override, else March 23 of the reference year.
    Date reference_date() const;
    // A sample's date: its own collection date, else July 1 of its year.
    static Date effective_date(int year, const std::optional<Date>& collection_date);

    const ManifestEntry* find_accession(std::string_view accession) const;
    const ManifestEntry* find_label(std::string_view label) const;

private:
    std::vector<ManifestEntry> entries_;
    std::map<int, std::vector<ManifestEntry>> groups_;
    int reference_year_ = 0;
    std::optional<Date> reference_date_;
};

// FASTA with "label|accession|year[|date]" headers, or a bare accession
// (NCBI style; a trailing ".N" version suffix and any description are dropped).
std::vector<SequenceRecord> parse_fasta(std::string_view text);
// Same grammar, additionally accepting '-' gap characters in residues.
std::vector<SequenceRecord> parse_aligned_fasta(std::string_view text);
std::string write_fasta(const std::vector<SequenceRecord>& records, std::size_t line_width = 70);

DatasetManifest load_manifest(std::string_view text);
std::string write_manifest(const DatasetManifest& manifest);

struct AmbiguityHit {
    std::string label;
    std::size_t position = 0;  // 1-based
    char code = 'N';

    friend bool operator==(const AmbiguityHit&, const AmbiguityHit&) = default;
};

struct ValidationReport {
    std::vector<std::string> missing_records;     // manifest accessions with no record
    std::vector<std::string> unexpected_records;  // record accessions absent from the manifest
    std::vector<AmbiguityHit> ambiguities;
    std::map<std::string, std::size_t> ambiguity_counts;  // by record label

    bool has_mismatches() const { return !missing_records.empty() || !unexpected_records.empty(); }
};

ValidationReport validate_dataset(const DatasetManifest& manifest,
                                  const std::vector<SequenceRecord>& records);

struct YearGroup {
    int year = 0;
    std::vector<SequenceRecord> records;  // manifest order
};

// Joins records to the manifest by accession. Manifest label, year and date
// win over whatever the FASTA header carried. Throws DataError when any
// manifest accession lacks a record.
std::vector<YearGroup> assemble_groups(const DatasetManifest& manifest,
                                       const std::vector<SequenceRecord>& records);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

}  // namespace mutarate
