#pragma once

#include <string>
#include <string_view>

#include "klab/certificate.h"
#include "klab/kneser.h"
#include "klab/solve.h"
#include "klab/verify.h"

// JSON documents. Every document carries "format": "kneser-lab/1". Elements
// are 1-based, vertex ids 0-based. Keys appear in a fixed order and nested
// lists are written one entry per line so files diff cleanly.
//
//   hypergraph   {"format","n","k","r","s"?,"parts"?,"vertices","edges"}
//   partition    {"format","n","k","r","families"}
//   coloring     {"format","ground_n","k","r","s"?,"parts"?,"colors"}
//   solve result {"format","status","lower","upper","nodes","millis"?,
//                 "certificate"}
//
// Parsing failures throw kMalformedCertificate.
namespace klab {

enum class DocumentKind { kHypergraph, kPartition, kColoring, kSolveResult };

DocumentKind detect_document_kind(std::string_view text);

std::string to_json(const Hypergraph& h);
std::string to_json(const PartitionCertificate& cert);
std::string to_json(const ColoringCertificate& cert);
std::string to_json(const Report& report);

// The embedded certificate is the partition when present, otherwise a
// coloring certificate described by `h`'s generator fields. "millis" is
// written only when `timing` is set, so untimed output is reproducible.
std::string solve_result_to_json(const SolveResult& result, const Hypergraph& h, bool timing);

Hypergraph hypergraph_from_json(std::string_view text);
PartitionCertificate partition_from_json(std::string_view text);
ColoringCertificate coloring_from_json(std::string_view text);

// Parsed solve-result document; the certificate is one of the two kinds.
struct SolveDocument {
  SolveStatus status = SolveStatus::kBounds;
  int lower = 0;
  int upper = 0;
  std::optional<PartitionCertificate> partition;
  std::optional<ColoringCertificate> coloring;
};
SolveDocument solve_result_from_json(std::string_view text);

// Coloring certificate for a solved generated hypergraph.
ColoringCertificate coloring_certificate(const Hypergraph& h, std::vector<int> colors);

}  // namespace klab
