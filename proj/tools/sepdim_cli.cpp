// Command-line front end: constructions, verification and exact solvers
// over graph files. See README.md for the report layout.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "sepdim/sepdim.hpp"

namespace {

using sepdim::Vertex;
using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kCounterexample = 1, kInputError = 2, kBudget = 3 };

struct Common {
  std::uint64_t seed = 0;
  std::string format = "text";
  std::uint64_t budget = sepdim::kDefaultSearchBudget;
  bool timing = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw std::runtime_error("cannot write " + path);
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  }
  return hex.str();
}

Json edge_json(const sepdim::Edge& e) { return Json::array({e.u, e.v}); }

Json family_json(const sepdim::PermutationFamily& fam) {
  Json out = Json::array();
  for (const auto& m : fam.members()) out.push_back(std::vector<Vertex>(m.order().begin(), m.order().end()));
  return out;
}

Json realizer_json(const sepdim::IntervalOrder& c, const sepdim::Realizer& r) {
  return sepdim::interval_order_to_json(c, &r)["extensions"];
}

// One report per invocation. Keys keep insertion order, so equal inputs give
// byte-identical output; elapsed time is only added under --timing.
struct Report {
  Json body;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  Report(const std::string& command, const Common& c) {
    body["command"] = command;
    body["input_digest"] = nullptr;
    body["seed"] = c.seed;
    body["sizes"] = Json::object();
    body["verdict"] = nullptr;
    body["bounds"] = Json::object();
  }

  void emit(const Common& c) {
    if (c.timing) {
      body["elapsed_seconds"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    if (c.format == "structured") {
      std::cout << body.dump(2) << '\n';
      return;
    }
    for (const auto& [key, value] : body.items()) print_text(key, value);
  }

  static void print_text(const std::string& key, const Json& value) {
    if (value.is_object()) {
      for (const auto& [k, v] : value.items()) print_text(key + "." + k, v);
    } else if (value.is_string()) {
      std::cout << key << ": " << value.get<std::string>() << '\n';
    } else {
      std::cout << key << ": " << value.dump() << '\n';
    }
  }
};

sepdim::Graph load_graph_file(const std::string& path, std::string* digest) {
  const std::string text = read_file(path);
  *digest = sha256_hex(text);
  return sepdim::load_graph(text);
}

int cmd_bound_degenerate(const Common& c, const std::string& graph_path, const std::string& out) {
  Report rep("bound-degenerate", c);
  std::string digest;
  const auto g = load_graph_file(graph_path, &digest);
  rep.body["input_digest"] = digest;
  const auto cover = sepdim::theorem1_family(g, c.seed);
  const auto w = sepdim::verify_pairwise_suitable(cover.family, g);
  const std::size_t n = g.vertex_count();
  rep.body["sizes"] = {{"n", n},
                       {"m", g.edge_count()},
                       {"k", cover.k},
                       {"star_forests", cover.star_forests},
                       {"r", cover.r},
                       {"family", cover.family.size()}};
  rep.body["verdict"] = w.ok() ? "ok" : "counterexample";
  if (!w.ok()) {
    rep.body["counterexample"] = {edge_json(w.counterexample->first),
                                  edge_json(w.counterexample->second)};
  }
  rep.body["bounds"] = {{"2*s*r", 2 * cover.star_forests * cover.r},
                        {"4*k*r", 4 * cover.k * cover.r},
                        {"spencer_target(n)", sepdim::spencer_target(n)}};
  rep.body["base_generator"] = cover.base_generator;
  if (!out.empty()) {
    sepdim::FamilyDocument doc{cover.family, "degenerate-cover", c.seed, Json::object()};
    doc.provenance["k"] = cover.k;
    doc.provenance["star_forests"] = cover.star_forests;
    doc.provenance["r"] = cover.r;
    doc.provenance["base_generator"] = cover.base_generator;
    doc.provenance["input_digest"] = digest;
    write_file(out, sepdim::serialize_family(doc));
  }
  rep.emit(c);
  return w.ok() ? kOk : kCounterexample;
}

int cmd_bound_subdivision(const Common& c, const std::string& graph_path, const std::string& out,
                          const std::string& graph_out) {
  Report rep("bound-subdivision", c);
  std::string digest;
  const auto g = load_graph_file(graph_path, &digest);
  rep.body["input_digest"] = digest;
  const auto cover = sepdim::theorem3_family(g, c.seed);
  const auto w = sepdim::verify_pairwise_suitable(cover.family, cover.subdivided);
  rep.body["sizes"] = {{"n", g.vertex_count()},
                       {"m", g.edge_count()},
                       {"subdivided_n", cover.subdivided.vertex_count()},
                       {"colours", cover.colours},
                       {"height", cover.height},
                       {"realizer", cover.realizer.size()},
                       {"family", cover.family.size()}};
  rep.body["verdict"] = w.ok() ? "ok" : "counterexample";
  if (!w.ok()) {
    rep.body["counterexample"] = {edge_json(w.counterexample->first),
                                  edge_json(w.counterexample->second)};
  }
  double loglog = 0;
  if (cover.colours > 2) loglog = std::log2(std::log2(static_cast<double>(cover.colours - 1)));
  rep.body["bounds"] = {{"realizer+2", g.edge_count() ? cover.realizer.size() + 2 : 0},
                        {"colours-1", cover.colours ? cover.colours - 1 : 0},
                        {"loglog(colours-1)", loglog}};
  rep.body["exact_realizer"] = cover.exact_realizer;
  if (!out.empty()) {
    sepdim::FamilyDocument doc{cover.family, "subdivision-cover", c.seed, Json::object()};
    doc.provenance["sigma"] =
        std::vector<Vertex>(cover.sigma.order().begin(), cover.sigma.order().end());
    doc.provenance["realizer"] = cover.realizer.size();
    doc.provenance["exact_realizer"] = cover.exact_realizer;
    Json sub = Json::array();
    for (const auto& s : cover.map.entries()) sub.push_back({s.left, s.right, s.mid});
    doc.provenance["subdivision"] = std::move(sub);
    doc.provenance["input_digest"] = digest;
    write_file(out, sepdim::serialize_family(doc));
  }
  if (!graph_out.empty()) write_file(graph_out, sepdim::serialize_graph(cover.subdivided));
  rep.emit(c);
  return w.ok() ? kOk : kCounterexample;
}

int cmd_exact(const Common& c, const std::string& graph_path, std::size_t limit) {
  Report rep("exact", c);
  std::string digest;
  const auto g = load_graph_file(graph_path, &digest);
  rep.body["input_digest"] = digest;
  rep.body["sizes"] = {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"limit", limit}};
  const auto r = sepdim::exact_separation_dimension(g, limit, c.budget);
  rep.body["nodes"] = r.nodes;
  if (!r.value) {
    rep.body["verdict"] = "exceeded";
    rep.emit(c);
    return kBudget;
  }
  rep.body["verdict"] = "ok";
  rep.body["pi"] = *r.value;
  rep.body["witness"] = family_json(r.witness);
  rep.emit(c);
  return kOk;
}

int cmd_verify(const Common& c, const std::string& graph_path, const std::string& family_path,
               bool subdivide) {
  Report rep("verify", c);
  std::string digest;
  auto g = load_graph_file(graph_path, &digest);
  const std::string fam_text = read_file(family_path);
  rep.body["input_digest"] = sha256_hex(digest + sha256_hex(fam_text));
  const auto doc = sepdim::parse_family(fam_text);
  if (subdivide) g = sepdim::subdivide(g).first;
  const auto w = sepdim::verify_pairwise_suitable(doc.family, g);
  rep.body["sizes"] = {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"family", doc.family.size()}};
  rep.body["verdict"] = w.ok() ? "ok" : "counterexample";
  if (!w.ok()) {
    rep.body["counterexample"] = {edge_json(w.counterexample->first),
                                  edge_json(w.counterexample->second)};
  }
  rep.emit(c);
  return w.ok() ? kOk : kCounterexample;
}

constexpr std::size_t kCanonicalMaxN = 8;

int cmd_canonical_dim(const Common& c, std::size_t n, std::size_t limit) {
  Report rep("canonical-dim", c);
  rep.body["input_digest"] = sha256_hex("canonical-dim " + std::to_string(n));
  if (n < 2) throw sepdim::InvalidArgument("n must be at least 2");
  const double bound = n >= 3 ? std::log2(std::log2(static_cast<double>(n - 1))) : 0.0;
  rep.body["bounds"] = {{"loglog(n-1)", bound},
                        {"ceil(loglog(n-1))", static_cast<long>(std::ceil(bound - 1e-12))}};
  if (n > kCanonicalMaxN) {
    rep.body["sizes"] = {{"n", n}};
    rep.body["verdict"] = "exceeded";
    rep.body["message"] = "canonical-dim is limited to n <= " + std::to_string(kCanonicalMaxN);
    rep.emit(c);
    return kBudget;
  }
  const auto cn = sepdim::canonical_interval_order(n);
  rep.body["sizes"] = {{"n", n}, {"elements", cn.size()}, {"height", sepdim::height(cn.order)}};
  const auto r = sepdim::exact_poset_dimension(cn.order, limit, c.budget);
  rep.body["nodes"] = r.nodes;
  if (!r.value) {
    rep.body["verdict"] = "exceeded";
    rep.emit(c);
    return kBudget;
  }
  rep.body["verdict"] = "ok";
  rep.body["dim"] = *r.value;
  rep.body["realizer"] = realizer_json(cn, r.witness);
  rep.emit(c);
  return kOk;
}

int cmd_lower_harness(const Common& c, std::size_t n, std::size_t max_exact_n) {
  Report rep("lower-harness", c);
  rep.body["input_digest"] = sha256_hex("lower-harness " + std::to_string(n));
  if (n < 2) throw sepdim::InvalidArgument("n must be at least 2");
  const auto construction = sepdim::theorem3_family(sepdim::complete_graph(n), c.seed);
  rep.body["sizes"] = {{"n", n}, {"construction", construction.family.size()}};
  rep.body["bounds"] = {{"half*floor(loglog(n-1))", sepdim::subdivided_clique_lower_bound(n)}};
  sepdim::LowerBoundRun run;
  try {
    run = sepdim::run_lower_bound_harness(n, c.budget, max_exact_n);
  } catch (const sepdim::BudgetExceeded& e) {
    rep.body["verdict"] = "exceeded";
    rep.body["stage"] = "exact";
    rep.body["message"] = e.what();
    rep.emit(c);
    return kBudget;
  }
  rep.body["sizes"]["pi"] = *run.pi;
  rep.body["optimal"] = family_json(run.optimal);
  if (*run.pi == 0) {
    rep.body["verdict"] = "ok";
    rep.body["note"] = "no disjoint edge pairs";
    rep.emit(c);
    return kOk;
  }
  const std::size_t p = run.subset.vertices.size();
  rep.body["sizes"]["p"] = p;
  rep.body["subset"] = run.subset.vertices;
  rep.body["bounds"]["monotone_guarantee"] = run.guaranteed_subset;
  bool ok = p >= run.guaranteed_subset;
  if (run.dim_cp) {
    rep.body["sizes"]["dim_cp"] = *run.dim_cp;
    rep.body["realizer_valid"] = run.realizer_valid;
    rep.body["bounds"]["pi>=dim(C_p)"] = *run.pi >= *run.dim_cp;
    rep.body["realizer"] = realizer_json(sepdim::canonical_interval_order(p), run.realizer);
    ok = ok && run.realizer_valid && *run.pi >= *run.dim_cp;
  }
  rep.body["verdict"] = ok ? "ok" : "counterexample";
  rep.emit(c);
  return ok ? kOk : kCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separation dimension constructions and exact solvers"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", common.seed, "Seed for every random choice");
    sub->add_option("--format", common.format, "Report format")
        ->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--budget", common.budget, "Node-expansion cap for exact searches");
    sub->add_flag("--timing", common.timing, "Add elapsed time to the report");
  };

  std::string graph, family, out, graph_out;
  std::size_t limit = 8, n = 0, max_exact_n = 4;
  bool subdivide = false;

  auto* bd = app.add_subcommand("bound-degenerate", "Degeneracy-based family for a graph");
  bd->add_option("graph", graph, "Graph file")->required();
  bd->add_option("--out", out, "Write the family here");
  add_common(bd);

  auto* bs = app.add_subcommand("bound-subdivision", "Family for the full subdivision of a graph");
  bs->add_option("graph", graph, "Graph file")->required();
  bs->add_option("--out", out, "Write the family here");
  bs->add_option("--graph-out", graph_out, "Write the subdivided graph here");
  add_common(bs);

  auto* ex = app.add_subcommand("exact", "Exact separation dimension of a small graph");
  ex->add_option("graph", graph, "Graph file")->required();
  ex->add_option("--limit", limit, "Largest family size to try");
  add_common(ex);

  auto* ve = app.add_subcommand("verify", "Check a family against a graph");
  ve->add_option("graph", graph, "Graph file")->required();
  ve->add_option("family", family, "Family file")->required();
  ve->add_flag("--subdivide", subdivide, "Check against the full subdivision of the graph");
  add_common(ve);

  auto* cd = app.add_subcommand("canonical-dim", "Exact dimension of the canonical interval order");
  cd->add_option("n", n, "Endpoints 1..n")->required();
  cd->add_option("--limit", limit, "Largest realizer size to try");
  add_common(cd);

  auto* lh = app.add_subcommand("lower-harness", "Lower-bound pipeline on the subdivided clique");
  lh->add_option("n", n, "Clique size")->required();
  lh->add_option("--max-exact-n", max_exact_n, "Largest n for the exact stage");
  add_common(lh);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*bd) return cmd_bound_degenerate(common, graph, out);
    if (*bs) return cmd_bound_subdivision(common, graph, out, graph_out);
    if (*ex) return cmd_exact(common, graph, limit);
    if (*ve) return cmd_verify(common, graph, family, subdivide);
    if (*cd) return cmd_canonical_dim(common, n, limit);
    if (*lh) return cmd_lower_harness(common, n, max_exact_n);
  } catch (const sepdim::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const sepdim::VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kCounterexample;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
