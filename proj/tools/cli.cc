#include "cli.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "klab/constructions.h"
#include "klab/error.h"
#include "klab/io.h"
#include "klab/kneser.h"
#include "klab/solve.h"
#include "klab/verify.h"

namespace klab::cli {
namespace {

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    fail(Errc::kInvalidParams, "bad range '" + text + "' (expected a or a..b)");
  }
}

// "1,2/3,4/5,6" -> {{1,2},{3,4},{5,6}}
PartSpec parse_parts(const std::string& text) {
  PartSpec spec;
  std::stringstream blocks(text);
  std::string block;
  while (std::getline(blocks, block, '/')) {
    std::vector<int> part;
    std::stringstream elems(block);
    std::string e;
    while (std::getline(elems, e, ',')) {
      try {
        part.push_back(std::stoi(e));
      } catch (const std::exception&) {
        fail(Errc::kInvalidPartSpec, "bad element '" + e + "' in part spec");
      }
    }
    spec.parts.push_back(std::move(part));
  }
  return spec;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::kInvalidParams, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::kInvalidParams, "cannot write " + path);
  out << content;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::kInvalidParams:
    case Errc::kInadmissibleParams:
    case Errc::kInvalidPartSpec:
    case Errc::kEmptyInput:
      return kBadParams;
    case Errc::kCapExceeded:
    case Errc::kInstanceTooLarge:
      return kSizeCap;
    case Errc::kInvalidCertificate:
    case Errc::kMalformedCertificate:
    case Errc::kLengthMismatch:
    case Errc::kInternal:
      return kVerificationFailed;
  }
  return kVerificationFailed;
}

struct SolverFlags {
  double timeout = 0.0;
  std::uint64_t max_nodes = 0;
  int workers = 1;
  std::size_t max_exact = 40;
  bool timing = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--timeout", timeout, "Wall-clock limit in seconds (0 = none)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--max-nodes", max_nodes, "Search node limit (0 = none)");
    cmd->add_option("--workers", workers, "Portfolio workers")->check(CLI::Range(1, 256));
    cmd->add_option("--max-exact", max_exact,
                    "Largest vertex count for which optimality is proved");
    cmd->add_flag("--timing", timing, "Report wall time");
  }

  SolveLimits limits() const {
    SolveLimits l;
    l.time_limit_seconds = timeout;
    l.max_nodes = max_nodes;
    l.workers = workers;
    l.max_exact_vertices = max_exact;
    return l;
  }
};

struct Params {
  int n = 0;
  int k = 0;
  int r = 2;

  void attach(CLI::App* cmd) {
    cmd->add_option("n", n, "Ground set size")->required();
    cmd->add_option("k", k, "Subset size")->required();
    cmd->add_option("r", r, "Intersection arity")->required();
  }
  GroundParams ground() const { return {n, k, r}; }
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int bound(const Params& p, const std::string& format) {
    const GroundParams g = p.ground();
    g.validate();
    if (!g.admissible()) {
      err_ << "inadmissible: r*k = " << g.r * g.k << " > (r-1)*n = " << (g.r - 1) * g.n
           << "\n";
      return kBadParams;
    }
    const int m = tight_bound(g);
    const int s = tail_size(g.k, g.r);
    if (format == "json") {
      out_ << "{\"format\": \"" << kFormatTag << "\", \"n\": " << g.n << ", \"k\": " << g.k
           << ", \"r\": " << g.r << ", \"m\": " << m << ", \"s\": " << s
           << ", \"admissible\": true}\n";
    } else if (format == "csv") {
      out_ << "n,k,r,m,s\n" << g.n << ',' << g.k << ',' << g.r << ',' << m << ',' << s << "\n";
    } else {
      out_ << "m=" << m << " s=" << s << " n-s+1=" << g.n - s + 1 << "\n";
    }
    return kOk;
  }

  int construct(const Params& p, const std::string& output) {
    const PartitionCertificate cert = build_tight_partition(p.ground());
    emit(to_json(cert), output);
    if (!output.empty()) {
      out_ << "wrote " << cert.families.size() << " families to " << output << "\n";
    }
    return kOk;
  }

  int verify(const std::string& path, const std::string& format) {
    const std::string text = read_file(path);
    Report report;
    std::string summary;
    switch (detect_document_kind(text)) {
      case DocumentKind::kPartition: {
        const PartitionCertificate cert = partition_from_json(text);
        report = verify_partition_certificate(cert);
        summary = "partition certificate n=" + std::to_string(cert.params.n) +
                  " k=" + std::to_string(cert.params.k) + " r=" +
                  std::to_string(cert.params.r) + ", " +
                  std::to_string(cert.families.size()) + " families";
        break;
      }
      case DocumentKind::kColoring: {
        const ColoringCertificate cert = coloring_from_json(text);
        report = verify_coloring_certificate(cert);
        summary = "coloring certificate ground_n=" + std::to_string(cert.ground_n) + ", " +
                  std::to_string(cert.colors.size()) + " vertices, " +
                  std::to_string(cert.num_colors) + " colors";
        break;
      }
      case DocumentKind::kSolveResult: {
        const SolveDocument doc = solve_result_from_json(text);
        report = verify_solve_document(doc);
        summary = std::string(status_name(doc.status)) + " result [" +
                  std::to_string(doc.lower) + "," + std::to_string(doc.upper) + "]";
        break;
      }
      case DocumentKind::kHypergraph: {
        const Hypergraph h = hypergraph_from_json(text);
        report = verify_hypergraph_document(h);
        summary = "hypergraph with " + std::to_string(h.num_vertices()) + " vertices, " +
                  std::to_string(h.edges.size()) + " edges";
        break;
      }
    }
    if (format == "json") {
      out_ << to_json(report);
    } else {
      out_ << (report.ok ? "ok: " : "FAILED: ") << summary << "\n";
      for (const Violation& v : report.violations) out_ << "  " << v.reason << "\n";
    }
    return report.ok ? kOk : kVerificationFailed;
  }

  int solve(const Params& p, const SolverFlags& flags, const std::string& output,
            const std::string& format) {
    const GroundParams g = p.ground();
    g.validate();
    const SolveResult res = min_partition_number(g, flags.limits());
    Hypergraph descriptor;
    descriptor.n = g.n;
    descriptor.k = g.k;
    descriptor.r = g.r;
    return report_solve(res, descriptor, flags, output, format);
  }

  int chi(const Hypergraph& h, const SolverFlags& flags, const std::string& output,
          const std::string& format) {
    const SolveResult res = chromatic_number(h, flags.limits());
    return report_solve(res, h, flags, output, format);
  }

  int kneser(const Hypergraph& h, const std::string& output) {
    emit(to_json(h), output);
    for (const std::string& w : h.warnings) err_ << "warning: " << w << "\n";
    if (!output.empty()) {
      out_ << "wrote " << h.num_vertices() << " vertices, " << h.edges.size() << " edges to "
           << output << "\n";
    }
    return kOk;
  }

  int blowup(const std::string& input, const std::string& output, const std::string& format) {
    const PartitionCertificate cert = partition_from_json(read_file(input));
    const Blowup b = blow_up(cert);
    const Hypergraph lifted = build_partition_constrained(b.map.lifted_params(), b.map.blocks);
    const Report proper = verify_coloring(lifted, b.coloring.colors);
    const Report embedding = check_stable_embedding(b.map);
    const bool ok = proper.ok && embedding.ok;
    if (!output.empty()) write_file(output, to_json(b.coloring));
    if (format == "json") {
      if (output.empty()) out_ << to_json(b.coloring);
      Report merged = embedding;
      for (const Violation& v : proper.violations) merged.add(v);
      merged.counters["vertices"] = lifted.num_vertices();
      merged.counters["colors"] = b.coloring.num_colors;
      out_ << to_json(merged);
    } else {
      if (output.empty()) out_ << to_json(b.coloring);
      out_ << "blow-up: ground=" << b.coloring.ground_n << " vertices=" << lifted.num_vertices()
           << " colors=" << b.coloring.num_colors << " proper=" << (proper.ok ? "yes" : "no")
           << " stable-embedding=" << (embedding.ok ? "ok" : "FAILED")
           << " stable_vertices=" << embedding.counters.at("stable_vertices") << "\n";
      for (const Violation& v : proper.violations) out_ << "  " << v.reason << "\n";
      for (const Violation& v : embedding.violations) out_ << "  " << v.reason << "\n";
    }
    return ok ? kOk : kVerificationFailed;
  }

  int table(const Range& rs, const Range& ks, const std::string& n_spec, int span,
            const SolverFlags& flags, const std::string& output) {
    std::ostringstream csv;
    csv << "n,k,r,tight_bound,solver_status,solver_lower,solver_upper,construction_size,"
           "construction_ok,agree\n";
    bool all_agree = true;
    for (int r = rs.lo; r <= rs.hi; ++r) {
      for (int k = ks.lo; k <= ks.hi; ++k) {
        Range ns;
        if (n_spec == "auto") {
          ns.lo = static_cast<int>(ceil_div(static_cast<std::int64_t>(r) * k, r - 1));
          ns.hi = ns.lo + span;
        } else {
          ns = parse_range(n_spec);
        }
        for (int n = ns.lo; n <= ns.hi; ++n) {
          const GroundParams g{n, k, r};
          g.validate();
          if (!g.admissible()) continue;
          const int m = tight_bound(g);
          const PartitionCertificate cert = build_tight_partition(g);
          const bool cert_ok = verify_partition_certificate(cert).ok;
          const SolveResult res = min_partition_number(g, flags.limits());
          const bool solver_ok =
              res.exact() ? res.upper == m : (res.lower <= m && m <= res.upper);
          const bool agree =
              cert_ok && static_cast<int>(cert.families.size()) == m && solver_ok;
          all_agree = all_agree && agree;
          csv << n << ',' << k << ',' << r << ',' << m << ',' << status_name(res.status) << ','
              << res.lower << ',' << res.upper << ',' << cert.families.size() << ','
              << (cert_ok ? "yes" : "no") << ',' << (agree ? "yes" : "no") << "\n";
        }
      }
    }
    emit(csv.str(), output);
    if (!all_agree) err_ << "disagreement in table\n";
    return all_agree ? kOk : kVerificationFailed;
  }

 private:
  void emit(const std::string& content, const std::string& output) {
    if (output.empty()) {
      out_ << content;
    } else {
      write_file(output, content);
    }
  }

  int report_solve(const SolveResult& res, const Hypergraph& h, const SolverFlags& flags,
                   const std::string& output, const std::string& format) {
    const std::string doc = solve_result_to_json(res, h, flags.timing);
    if (!output.empty()) write_file(output, doc);
    if (format == "json") {
      out_ << doc;
    } else if (format == "csv") {
      out_ << "status,lower,upper,nodes\n"
           << status_name(res.status) << ',' << res.lower << ',' << res.upper << ','
           << res.stats.nodes << "\n";
    } else {
      out_ << status_name(res.status) << ' ';
      if (res.exact()) {
        out_ << res.upper;
      } else {
        out_ << '[' << res.lower << ',' << res.upper << ']';
      }
      out_ << " nodes=" << res.stats.nodes;
      if (flags.timing) out_ << " millis=" << static_cast<std::int64_t>(res.stats.millis);
      out_ << "\n";
    }
    return res.exact() ? kOk : kTimeout;
  }

  Report verify_solve_document(const SolveDocument& doc) {
    Report report;
    if (doc.lower > doc.upper) report.add({{}, "lower bound exceeds upper bound", {}});
    if (doc.status == SolveStatus::kExact && doc.lower != doc.upper) {
      report.add({{}, "EXACT result with lower != upper", {}});
    }
    Report inner;
    int used = 0;
    if (doc.partition) {
      inner = verify_partition_certificate(*doc.partition);
      used = static_cast<int>(doc.partition->families.size());
    } else {
      inner = verify_coloring_certificate(*doc.coloring);
      used = doc.coloring->num_colors;
    }
    if (used != doc.upper) {
      report.add({{}, "certificate uses " + std::to_string(used) + " classes, upper bound is " +
                          std::to_string(doc.upper), {}});
    }
    for (const Violation& v : inner.violations) report.add(v);
    for (const auto& [name, value] : inner.counters) report.counters[name] = value;
    return report;
  }

  // A hypergraph document must match its regenerated descriptor exactly.
  Report verify_hypergraph_document(const Hypergraph& h) {
    const GroundParams g{h.n, h.k, h.r};
    const Hypergraph ref = h.stable_s ? build_stable_subhypergraph(g, *h.stable_s)
                           : h.parts  ? build_partition_constrained(g, *h.parts)
                                      : build_kneser_hypergraph(g);
    Report report;
    if (ref.vertices != h.vertices) report.add({{}, "vertex list differs from generator", {}});
    if (ref.edges != h.edges) report.add({{}, "edge list differs from generator", {}});
    report.counters["vertices"] = h.num_vertices();
    report.counters["edges"] = h.edges.size();
    return report;
  }

  std::ostream& out_;
  std::ostream& err_;
};

Hypergraph build_target(const Params& p, std::optional<int> stable, const std::string& parts) {
  const GroundParams g = p.ground();
  if (stable) return build_stable_subhypergraph(g, *stable);
  if (!parts.empty()) return build_partition_constrained(g, parse_parts(parts));
  return build_kneser_hypergraph(g);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, certify and solve partitions of k-subsets into r-wise "
               "intersecting families"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  Params params;
  SolverFlags solver;
  std::string output;
  std::string input;
  std::optional<int> stable;
  std::string parts;

  auto* bound = app.add_subcommand("bound", "Print the tight bound m and tail size s");
  params.attach(bound);

  auto* construct = app.add_subcommand("construct", "Write the tight partition certificate");
  params.attach(construct);
  construct->add_option("-o,--output", output, "Output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Verify any document written by this tool");
  verify->add_option("path", input, "Document to verify")->required();

  auto* solve = app.add_subcommand("solve", "Exact minimum number of r-wise intersecting families");
  params.attach(solve);
  solver.attach(solve);
  solve->add_option("-o,--output", output, "Write the solve result JSON here");

  auto* chi = app.add_subcommand("chi", "Exact chromatic number of a Kneser-type hypergraph");
  chi->add_option("n", params.n, "Ground set size");
  chi->add_option("k", params.k, "Subset size");
  chi->add_option("r", params.r, "Edge arity");
  solver.attach(chi);
  auto* chi_stable = chi->add_option("--stable", stable, "Restrict to s-stable vertices");
  auto* chi_parts = chi->add_option("--parts", parts, "Blocks, e.g. 1,2/3,4/5,6");
  chi_stable->excludes(chi_parts);
  auto* chi_input = chi->add_option("--input", input, "Read a hypergraph JSON instead");
  chi_input->excludes(chi_stable)->excludes(chi_parts);
  chi->add_option("-o,--output", output, "Write the solve result JSON here");

  auto* kneser = app.add_subcommand("kneser", "Write a Kneser-type hypergraph as JSON");
  params.attach(kneser);
  auto* kn_stable = kneser->add_option("--stable", stable, "Restrict to s-stable vertices");
  kneser->add_option("--parts", parts, "Blocks, e.g. 1,2/3,4/5,6")->excludes(kn_stable);
  kneser->add_option("-o,--output", output, "Output path (default stdout)");

  auto* blowup = app.add_subcommand("blowup", "Lift a partition certificate to a coloring");
  blowup->add_option("input", input, "Partition certificate")->required();
  blowup->add_option("-o,--output", output, "Write the coloring certificate here");

  auto* table = app.add_subcommand("table", "Formula vs solver vs construction over a grid");
  std::string r_range = "2..3";
  std::string k_range = "1..3";
  std::string n_spec = "auto";
  int span = 1;
  table->add_option("--r", r_range, "Range a..b of r");
  table->add_option("--k", k_range, "Range a..b of k");
  table->add_option("--n", n_spec, "Range a..b of n, or auto");
  table->add_option("--span", span, "With --n auto: n runs from ceil(rk/(r-1)) to that plus span")
      ->check(CLI::NonNegativeNumber);
  table->add_option("-o,--output", output, "CSV path (default stdout)");
  solver.attach(table);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadParams;
  }

  Runner runner(out, err);
  try {
    if (*bound) return runner.bound(params, format);
    if (*construct) return runner.construct(params, output);
    if (*verify) return runner.verify(input, format);
    if (*solve) return runner.solve(params, solver, output, format);
    if (*chi) {
      if (!input.empty()) return runner.chi(hypergraph_from_json(read_file(input)), solver, output, format);
      if (params.n == 0) {
        err << "chi needs n k r or --input\n";
        return kBadParams;
      }
      return runner.chi(build_target(params, stable, parts), solver, output, format);
    }
    if (*kneser) return runner.kneser(build_target(params, stable, parts), output);
    if (*blowup) return runner.blowup(input, output, format);
    if (*table) {
      const Range rs = parse_range(r_range);
      const Range ks = parse_range(k_range);
      if (rs.lo < 2 || ks.lo < 1 || rs.lo > rs.hi || ks.lo > ks.hi) {
        fail(Errc::kInvalidParams, "table needs r >= 2, k >= 1 and nonempty ranges");
      }
      return runner.table(rs, ks, n_spec, span, solver, output);
    }
  } catch (const Error& e) {
    err << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kBadParams;
}

}  // namespace klab::cli
