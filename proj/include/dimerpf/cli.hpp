#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dimerpf/fixtures.hpp"
#include "dimerpf/fullmd.hpp"
#include "dimerpf/graphs.hpp"
#include "dimerpf/io.hpp"
#include "dimerpf/kasteleyn.hpp"
#include "dimerpf/oracle.hpp"
#include "dimerpf/partition.hpp"

// Subcommand bodies. Each returns the JSON report and the process exit code.
namespace dimerpf::cli {

using io::Json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInputError = 2;

struct CommandResult {
  Json output;
  int exit_code = kExitOk;
};

struct BoundaryOptions {
  std::string graph;
  std::string var = "x";
  std::string method = "theorem1";
  int threads = 1;
  bool timing = false;
};

struct FullOptions {
  std::string graph;
  std::string method = "skeleton";
  std::string skeleton;
  std::string rect;  // "COLSxROWS"
  std::string var = "x";
  int threads = 1;
  bool timing = false;
};

struct CorrelationOptions {
  std::string graph;
  std::string indices;  // comma-separated vertex ids
  std::string method = "wick";
};

struct OrientOptions {
  std::string graph;
};

struct CheckOptions {
  std::string graph;
  bool against_oracle = false;
  int threads = 1;
};

struct FixtureOptions {
  bool all = false;
  bool timing = false;
};

namespace detail {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline PlanarGraph load_graph(const std::string& path) {
  if (path.empty()) fail(ErrorKind::InvalidArgument, "--graph is required");
  return io::graph_from_json(io::parse_json(io::read_file(path)));
}

inline int var_of(const std::string& name) {
  if (name == "x") return kVarX;
  if (name == "z") return kVarZ;
  fail(ErrorKind::InvalidArgument, "--var must be x or z");
}

inline Json polynomial_json(const PartitionPolynomial& p, const std::string& var) {
  int v = var_of(var);
  return io::polynomial_to_json(v == kVarZ ? p.in_z().poly : p.poly, v);
}

inline std::pair<int, int> parse_rect(const std::string& text) {
  auto x = text.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    std::size_t a = 0, b = 0;
    int cols = std::stoi(text.substr(0, x), &a);
    int rows = std::stoi(text.substr(x + 1), &b);
    if (a != x || b != text.size() - x - 1) throw std::invalid_argument(text);
    return {cols, rows};
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidArgument, "--rect must look like 6x6");
  }
}

inline std::vector<int> parse_indices(const PlanarGraph& g, const std::string& text) {
  std::vector<int> out;
  for (const auto& item : fixtures::split_entries(text)) {
    long id = 0;
    try {
      std::size_t used = 0;
      id = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidArgument, "index '" + item + "' is not a vertex id");
    }
    auto v = g.index_of(id);
    if (!v) fail(ErrorKind::InvalidArgument, "index " + std::to_string(id) + " names a missing vertex");
    out.push_back(*v);
  }
  return out;
}

// nullopt when the check exceeds its enumeration cap.
inline std::optional<bool> kasteleyn_check(const PlanarGraph& g, const Orientation& orient) {
  try {
    return verify_kasteleyn(g, orient);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TooLarge) throw;
    return std::nullopt;
  }
}

// Every bMD covering of the enclosed graph has a positive pairing sign.
inline std::optional<bool> positivity_check(const EnclosedGraph& eg, const Orientation& orient, const Labeling& labeling) {
  const PlanarGraph& g = eg.graph();
  try {
    bool ok = true;
    for (const auto& c : enumerate_coverings({to_weighted(g), Region::Boundary, eg.boundary()}))
      if (covering_sign(g, orient, labeling, Covering{c.monomers, c.dimers}) < 0) ok = false;
    return ok;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TooLarge) throw;
    return std::nullopt;
  }
}

inline Json optional_flag(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

}  // namespace detail

inline CommandResult cmd_boundary_partition(const BoundaryOptions& o) {
  detail::Stopwatch clock;
  PlanarGraph g = detail::load_graph(o.graph);
  detail::var_of(o.var);
  PartitionPolynomial p;
  InterpolationStats stats;
  if (o.method == "theorem1") p = boundary_partition(g, o.threads, &stats);
  else if (o.method == "bijection") p = boundary_partition_bijection(g, o.threads);
  else fail(ErrorKind::InvalidArgument, "--method must be theorem1 or bijection");
  Json out;
  out["polynomial"] = detail::polynomial_json(p, o.var);
  out["var"] = o.var;
  out["method"] = p.method;
  out["graph_hash"] = p.graph_hash;
  if (o.method == "theorem1") out["counters"] = {{"evaluation_points", stats.points}};
  if (o.timing) out["timing_ms"] = clock.ms();
  return {out, kExitOk};
}

inline CommandResult cmd_full_partition(const FullOptions& o) {
  detail::Stopwatch clock;
  Json out;
  PartitionPolynomial p;
  if (o.method == "skeleton") {
    if (o.skeleton.empty() == o.rect.empty()) fail(ErrorKind::InvalidArgument, "skeleton method needs exactly one of --skeleton or --rect");
    Skeleton sk;
    if (!o.rect.empty()) {
      auto [cols, rows] = detail::parse_rect(o.rect);
      sk = build_skeleton_rectangle(cols, rows);
    } else {
      sk = io::skeleton_from_json(io::parse_json(io::read_file(o.skeleton)));
    }
    if (!o.graph.empty()) validate_skeleton_of(detail::load_graph(o.graph), sk);
    SkeletonStats stats;
    p = full_partition_skeleton(sk, o.threads, &stats);
    out["polynomial"] = detail::polynomial_json(p, o.var);
    out["counters"] = {{"pfaffians", stats.pfaffians}, {"matchings", stats.matchings}};
  } else if (o.method == "inout") {
    PlanarGraph g = detail::load_graph(o.graph);
    HamiltonianResult h = find_hamiltonian_cycle(g);
    p = full_partition_inout(h.graph, h.cycle);
    p.graph_hash = graph_hash(g);
    out["polynomial"] = detail::polynomial_json(p, o.var);
    Json cycle = Json::array();
    for (int v : h.cycle) cycle.push_back(h.graph.id(v));
    out["cycle"] = cycle;
    out["augmented"] = h.augmented;
  } else if (o.method == "oracle") {
    PlanarGraph g = detail::load_graph(o.graph);
    p = {oracle_full_partition(g), "oracle", graph_hash(g)};
    out["polynomial"] = detail::polynomial_json(p, o.var);
  } else {
    fail(ErrorKind::InvalidArgument, "--method must be skeleton, inout or oracle");
  }
  out["var"] = o.var;
  out["method"] = p.method;
  out["graph_hash"] = p.graph_hash;
  if (o.timing) out["timing_ms"] = clock.ms();
  return {out, kExitOk};
}

inline CommandResult cmd_correlations(const CorrelationOptions& o) {
  PlanarGraph g = detail::load_graph(o.graph);
  std::vector<int> vs = detail::parse_indices(g, o.indices);
  Rational value;
  if (o.method == "wick") value = wick_correlation(g, vs);
  else if (o.method == "ratio") value = monomer_correlation(g, vs);
  else fail(ErrorKind::InvalidArgument, "--method must be wick or ratio");
  Json ids = Json::array();
  for (int v : vs) ids.push_back(g.id(v));
  Json out;
  out["value"] = to_string(value);
  out["method"] = o.method;
  out["indices"] = ids;
  return {out, kExitOk};
}

// Orientation and labeling of the enclosed graph the pipeline builds (ids of added vertices continue past the input's).
inline CommandResult cmd_orient(const OrientOptions& o) {
  PlanarGraph g = detail::load_graph(o.graph);
  PipelineSetup s = prepare_pipeline(g);
  const PlanarGraph& eg = s.enclosed.graph();
  Json orientation = Json::array();
  for (const auto& ed : eg.edges()) {
    int tail = *s.orientation.tail(ed.u, ed.v);
    int head = tail == ed.u ? ed.v : ed.u;
    orientation.push_back(Json::array({eg.id(tail), eg.id(head)}));
  }
  Json labeling = Json::object();
  for (int v = 0; v < eg.vertex_count(); ++v) labeling[std::to_string(eg.id(v))] = s.labeling.of(v);
  auto kasteleyn = detail::kasteleyn_check(eg, s.orientation);
  auto positive = detail::positivity_check(s.enclosed, s.orientation, s.labeling);
  Json out;
  out["orientation"] = orientation;
  out["labeling"] = labeling;
  out["kasteleyn_verified"] = detail::optional_flag(kasteleyn);
  out["positive_verified"] = detail::optional_flag(positive);
  out["augmentation"] = io::augmentation_to_json(eg, s.record);
  out["graph"] = io::graph_to_json(eg);
  bool failed = (kasteleyn && !*kasteleyn) || (positive && !*positive);
  return {out, failed ? kExitMismatch : kExitOk};
}

// Cross-checks both boundary methods, the orientation, and optionally the oracle.
inline CommandResult cmd_check(const CheckOptions& o) {
  PlanarGraph g = detail::load_graph(o.graph);
  PartitionPolynomial theorem1 = boundary_partition(g, o.threads);
  PartitionPolynomial bijection = boundary_partition_bijection(g, o.threads);
  bool ok = theorem1.poly == bijection.poly;
  Json out;
  out["polynomial"] = io::polynomial_to_json(theorem1.poly, kVarX);
  out["graph_hash"] = theorem1.graph_hash;
  out["methods_agree"] = theorem1.poly == bijection.poly;
  if (g.vertex_count() > 0) {
    PipelineSetup s = prepare_pipeline(g);
    auto kasteleyn = detail::kasteleyn_check(s.enclosed.graph(), s.orientation);
    auto positive = detail::positivity_check(s.enclosed, s.orientation, s.labeling);
    out["kasteleyn_verified"] = detail::optional_flag(kasteleyn);
    out["positivity_verified"] = detail::optional_flag(positive);
    ok = ok && kasteleyn.value_or(true) && positive.value_or(true);
  }
  if (o.against_oracle) {
    bool match = oracle_boundary_partition(g) == theorem1.poly;
    out["oracle_match"] = match;
    ok = ok && match;
    if (g.vertex_count() >= 3 && g.vertex_count() <= kInOutCap) {
      try {
        HamiltonianResult h = find_hamiltonian_cycle(g);
        bool full = full_partition_inout(h.graph, h.cycle).poly == oracle_full_partition(g);
        out["inout_oracle_match"] = full;
        ok = ok && full;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotHamiltonian) throw;
      }
    }
  }
  out["ok"] = ok;
  return {out, ok ? kExitOk : kExitMismatch};
}

// Replays the stored reference matrices, the square pipeline and the rectangle skeletons.
inline CommandResult cmd_fixtures(const FixtureOptions& o) {
  Json results = Json::array();
  bool all_pass = true;
  auto record = [&](const std::string& name, bool pass, double ms, Json extra = Json::object()) {
    Json r;
    r["name"] = name;
    r["pass"] = pass;
    for (auto& [k, v] : extra.items()) r[k] = v;
    if (o.timing) r["timing_ms"] = ms;
    results.push_back(r);
    all_pass = all_pass && pass;
  };
  for (const auto& f : fixtures::matrix_fixtures()) {
    detail::Stopwatch clock;
    SparsePoly pf = pfaffian(fixtures::fixture_matrix(f)) * SparsePoly(f.scale);
    record("matrix/" + f.name, pf == fixtures::fixture_expected(f), clock.ms());
  }
  {
    detail::Stopwatch clock;
    PlanarGraph square = graphs::cycle(4);
    SparsePoly expected = fixtures::dense(kVarZ, {2, 0, 4, 0, 1});
    record("pipeline/square-theorem1", boundary_partition(square).in_z().poly == expected, clock.ms());
    detail::Stopwatch clock2;
    record("pipeline/square-bijection", boundary_partition_bijection(square).in_z().poly == expected, clock2.ms());
  }
  for (const auto& f : fixtures::full_fixtures()) {
    if (!o.all && f.pfaffians > 16) continue;
    detail::Stopwatch clock;
    SkeletonStats stats;
    SparsePoly p = full_partition_skeleton(build_skeleton_rectangle(f.cols, f.rows), 1, &stats).poly;
    bool pass = p == fixtures::dense(kVarX, f.expected) && stats.pfaffians == f.pfaffians;
    record("skeleton/" + f.name, pass, clock.ms(), {{"pfaffians", stats.pfaffians}});
  }
  Json out;
  out["fixtures"] = results;
  out["all_pass"] = all_pass;
  return {out, all_pass ? kExitOk : kExitMismatch};
}

// Runs a command, turning library errors into structured JSON with exit code 2.
inline CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    return {io::error_json(to_string(e.kind()), e.what()), kExitInputError};
  }
}

}  // namespace dimerpf::cli
