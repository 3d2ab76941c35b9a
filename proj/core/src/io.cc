#include "klab/io.h"

#include <json.hpp>

#include "klab/error.h"

namespace klab {
namespace {

using Json = nlohmann::ordered_json;

// Objects one key per line; arrays of arrays or objects one element per
// line; everything else compact.
void emit(const Json& j, int indent, std::string& out) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(it.key()).dump() + ": ";
      emit(it.value(), indent + 2, out);
    }
    out += "\n" + std::string(indent, ' ') + "}";
    return;
  }
  if (j.is_array() && !j.empty() && (j.front().is_array() || j.front().is_object())) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      if (j[i].is_object()) {
        emit(j[i], indent + 2, out);
      } else {
        out += j[i].dump();
      }
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "]";
    return;
  }
  out += j.dump();
}

std::string render(const Json& j) {
  std::string out;
  emit(j, 0, out);
  out += '\n';
  return out;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    fail(Errc::kMalformedCertificate, std::string("invalid JSON: ") + e.what());
  }
}

template <typename Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    fail(Errc::kMalformedCertificate, std::string("bad document: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::kMalformedCertificate) throw;
    fail(Errc::kMalformedCertificate, std::string("bad document: ") + e.what());
  }
}

void check_format(const Json& j) {
  if (j.contains("format") && j.at("format").get<std::string>() != kFormatTag) {
    fail(Errc::kMalformedCertificate,
         "unsupported format " + j.at("format").get<std::string>());
  }
}

Json parts_json(const PartSpec& spec) { return Json(spec.parts); }

PartSpec parts_from(const Json& j) {
  PartSpec spec;
  spec.parts = j.get<std::vector<std::vector<int>>>();
  return spec;
}

Json partition_json(const PartitionCertificate& cert) {
  Json j;
  j["format"] = kFormatTag;
  j["n"] = cert.params.n;
  j["k"] = cert.params.k;
  j["r"] = cert.params.r;
  Json families = Json::array();
  for (const SetFamily& f : cert.families) {
    Json members = Json::array();
    for (const KSubset& m : f.members()) members.push_back(m.elements());
    families.push_back(std::move(members));
  }
  j["families"] = std::move(families);
  return j;
}

Json coloring_json(const ColoringCertificate& cert) {
  Json j;
  j["format"] = kFormatTag;
  j["ground_n"] = cert.ground_n;
  j["k"] = cert.k;
  j["r"] = cert.r;
  if (cert.stable_s) j["s"] = *cert.stable_s;
  if (cert.parts) j["parts"] = parts_json(*cert.parts);
  j["colors"] = cert.colors;
  return j;
}

PartitionCertificate partition_from(const Json& j) {
  check_format(j);
  PartitionCertificate cert;
  cert.params = {j.at("n").get<int>(), j.at("k").get<int>(), j.at("r").get<int>()};
  try {
    cert.params.validate();
  } catch (const Error& e) {
    fail(Errc::kMalformedCertificate, e.what());
  }
  for (const Json& fam : j.at("families")) {
    std::vector<KSubset> members;
    for (const Json& m : fam) {
      members.push_back(KSubset::from_elements(cert.params.n, m.get<std::vector<int>>()));
    }
    cert.families.emplace_back(cert.params.n, std::move(members));
  }
  return cert;
}

ColoringCertificate coloring_from(const Json& j) {
  check_format(j);
  ColoringCertificate cert;
  cert.ground_n = j.at("ground_n").get<int>();
  cert.k = j.at("k").get<int>();
  cert.r = j.at("r").get<int>();
  if (j.contains("s")) cert.stable_s = j.at("s").get<int>();
  if (j.contains("parts")) cert.parts = parts_from(j.at("parts"));
  cert.colors = j.at("colors").get<std::vector<int>>();
  cert.num_colors =
      cert.colors.empty() ? 0 : *std::max_element(cert.colors.begin(), cert.colors.end()) + 1;
  return cert;
}

}  // namespace

DocumentKind detect_document_kind(std::string_view text) {
  const Json j = parse(text);
  if (!j.is_object()) fail(Errc::kMalformedCertificate, "document is not a JSON object");
  if (j.contains("status")) return DocumentKind::kSolveResult;
  if (j.contains("families")) return DocumentKind::kPartition;
  if (j.contains("colors")) return DocumentKind::kColoring;
  if (j.contains("edges")) return DocumentKind::kHypergraph;
  fail(Errc::kMalformedCertificate, "unrecognized document");
}

std::string to_json(const Hypergraph& h) {
  Json j;
  j["format"] = kFormatTag;
  j["n"] = h.n;
  j["k"] = h.k;
  j["r"] = h.r;
  if (h.stable_s) j["s"] = *h.stable_s;
  if (h.parts) j["parts"] = parts_json(*h.parts);
  Json vertices = Json::array();
  for (const KSubset& v : h.vertices) vertices.push_back(v.elements());
  j["vertices"] = std::move(vertices);
  j["edges"] = h.edges;
  return render(j);
}

std::string to_json(const PartitionCertificate& cert) { return render(partition_json(cert)); }

std::string to_json(const ColoringCertificate& cert) { return render(coloring_json(cert)); }

std::string to_json(const Report& report) {
  Json j;
  j["format"] = kFormatTag;
  j["ok"] = report.ok;
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    Json entry;
    if (v.family) entry["family"] = *v.family;
    entry["members"] = v.members;
    entry["reason"] = v.reason;
    violations.push_back(std::move(entry));
  }
  j["violations"] = std::move(violations);
  Json counters = Json::object();
  for (const auto& [name, value] : report.counters) counters[name] = value;
  j["stats"] = std::move(counters);
  return render(j);
}

ColoringCertificate coloring_certificate(const Hypergraph& h, std::vector<int> colors) {
  ColoringCertificate cert;
  cert.ground_n = h.n;
  cert.k = h.k;
  cert.r = h.r;
  cert.stable_s = h.stable_s;
  cert.parts = h.parts;
  cert.num_colors = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  cert.colors = std::move(colors);
  return cert;
}

std::string solve_result_to_json(const SolveResult& result, const Hypergraph& h, bool timing) {
  Json j;
  j["format"] = kFormatTag;
  j["status"] = std::string(status_name(result.status));
  j["lower"] = result.lower;
  j["upper"] = result.upper;
  j["nodes"] = result.stats.nodes;
  if (timing) j["millis"] = static_cast<std::int64_t>(result.stats.millis);
  if (result.partition) {
    j["certificate"] = partition_json(*result.partition);
  } else {
    j["certificate"] = coloring_json(coloring_certificate(h, result.coloring));
  }
  return render(j);
}

Hypergraph hypergraph_from_json(std::string_view text) {
  const Json j = parse(text);
  return guarded([&] {
    check_format(j);
    Hypergraph h;
    h.n = j.at("n").get<int>();
    h.k = j.at("k").get<int>();
    h.r = j.at("r").get<int>();
    if (j.contains("s")) h.stable_s = j.at("s").get<int>();
    if (j.contains("parts")) h.parts = parts_from(j.at("parts"));
    for (const Json& v : j.at("vertices")) {
      h.vertices.push_back(KSubset::from_elements(h.n, v.get<std::vector<int>>()));
    }
    h.edges = j.at("edges").get<std::vector<Edge>>();
    for (const Edge& e : h.edges) {
      if (e.size() < 2 || static_cast<int>(e.size()) > std::max(h.r, 2)) {
        fail(Errc::kMalformedCertificate, "edge size outside [2, r]");
      }
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] >= h.vertices.size() || (i > 0 && e[i] <= e[i - 1])) {
          fail(Errc::kMalformedCertificate, "edge ids must be increasing vertex indices");
        }
      }
    }
    return h;
  });
}

PartitionCertificate partition_from_json(std::string_view text) {
  const Json j = parse(text);
  return guarded([&] { return partition_from(j); });
}

ColoringCertificate coloring_from_json(std::string_view text) {
  const Json j = parse(text);
  return guarded([&] { return coloring_from(j); });
}

SolveDocument solve_result_from_json(std::string_view text) {
  const Json j = parse(text);
  return guarded([&] {
    check_format(j);
    SolveDocument doc;
    const std::string status = j.at("status").get<std::string>();
    if (status == "EXACT") {
      doc.status = SolveStatus::kExact;
    } else if (status == "BOUNDS") {
      doc.status = SolveStatus::kBounds;
    } else if (status == "TIMEOUT") {
      doc.status = SolveStatus::kTimeout;
    } else {
      fail(Errc::kMalformedCertificate, "unknown status " + status);
    }
    doc.lower = j.at("lower").get<int>();
    doc.upper = j.at("upper").get<int>();
    const Json& cert = j.at("certificate");
    if (cert.contains("families")) {
      doc.partition = partition_from(cert);
    } else {
      doc.coloring = coloring_from(cert);
    }
    return doc;
  });
}

}  // namespace klab
