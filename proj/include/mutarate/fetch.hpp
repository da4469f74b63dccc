#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace mutarate {

struct FetchOptions {
    std::string endpoint = "https://eutils.ncbi.nlm.nih.gov/entrez/eutils/efetch.fcgi";
    std::string snapshot_dir = "snapshot";
    std::string database = "nuccore";
    int max_attempts = 3;
    std::chrono::milliseconds initial_backoff{500};
    std::chrono::seconds timeout{30};
};

struct FetchResult {
    std::string fasta;                   // concatenated, in request order
    std::vector<std::string> fetched;    // accessions downloaded in this call
    std::vector<std::string> from_snapshot;
    std::vector<std::string> misses;     // not found or failed after retries

    bool ok() const { return misses.empty(); }
};

// Snapshot-first E-utilities efetch client. Each accession is stored as
// <snapshot_dir>/<accession>.fasta; existing snapshots are never rewritten and
// satisfy later calls without touching the network.
FetchResult fetch_genbank(const std::vector<std::string>& accessions, const FetchOptions& options);

}  // namespace mutarate
