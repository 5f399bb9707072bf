#pragma once

#include <atomic>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "bperf/bgreedy.hpp"
#include "bperf/clique_algo.hpp"
#include "bperf/enumerate.hpp"
#include "bperf/io.hpp"

namespace bperf::cli {

using nlohmann::json;

// Exit codes: 0 yes/success, 1 no/mismatch, 2 bad input, 3 guard violation.
constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;

struct Options {
  std::string input = "-";
  Format format = Format::graph6;
  bool as_json = false;
  uint64_t seed = 0;
  // color
  std::string order = "degree";
  bool require_b_perfect = false;
  // clique
  std::string method = "structural";
  bool unsafe_skip_check = false;
  // verify
  int max_n = 7;
  std::string checks = "oracle,color,clique";
  int threads = 0;
  // family
  bool boats = false;
  bool selfcheck = false;
};

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw malformed_input(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

inline json embedding_json(const Embedding& emb) {
  json out = json::array();
  for (int v : emb.image) out.push_back(v);
  return out;
}

inline void validate_embedding(const Graph& host, const Graph& pattern, const Embedding& emb) {
  if (static_cast<int>(emb.image.size()) != pattern.n()) throw std::logic_error("witness embedding has wrong size");
  for (int i = 0; i < pattern.n(); ++i)
    for (int j = i + 1; j < pattern.n(); ++j)
      if (pattern.adjacent(i, j) != host.adjacent(emb.image[i], emb.image[j]))
        throw std::logic_error("witness embedding failed re-validation");
}

inline int cmd_recognize(const Options& opt, std::istream& in, std::ostream& out) {
  Graph g = parse_graph(read_input(opt.input, in), opt.format);
  auto witness = find_forbidden(g);
  if (witness) validate_embedding(g, family()[witness->index - 1].graph, witness->embedding);
  if (opt.as_json) {
    json report{{"schema", 1}, {"n", g.n()}, {"m", g.edge_count()}, {"b_perfect", !witness}};
    if (witness) {
      const auto& alias = family()[witness->index - 1].alias;
      report["witness"] = {{"index", witness->index},
                          {"name", witness->name},
                          {"alias", alias},
                          {"embedding", embedding_json(witness->embedding)}};
    } else {
      report["witness"] = nullptr;
    }
    out << report.dump(2) << "\n";
  } else if (witness) {
    const auto& alias = family()[witness->index - 1].alias;
    out << "not b-perfect: contains " << witness->name;
    if (!alias.empty()) out << " (" << alias << ")";
    out << " on vertices";
    for (int v : witness->embedding.image) out << " " << v;
    out << "\n";
  } else {
    out << "b-perfect\n";
  }
  return witness ? kExitNo : kExitYes;
}

inline std::vector<int> parse_order(const Options& opt, const Graph& g) {
  if (opt.order == "degree") return default_order(g);
  std::vector<int> order(g.n());
  for (int i = 0; i < g.n(); ++i) order[i] = i;
  if (opt.order == "index") return order;
  if (opt.order == "random") {
    std::mt19937_64 rng(opt.seed);
    std::shuffle(order.begin(), order.end(), rng);
    return order;
  }
  order.clear();
  std::istringstream ls(opt.order);
  std::string tok;
  while (std::getline(ls, tok, ',')) {
    size_t used = 0;
    try {
      order.push_back(std::stoi(tok, &used));
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != tok.size()) throw malformed_input(0, "bad --order entry '" + tok + "'");
  }
  return order;
}

inline int cmd_color(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  Graph g = parse_graph(read_input(opt.input, in), opt.format);
  auto witness = find_forbidden(g);
  if (witness && opt.require_b_perfect) {
    err << "input contains " << witness->name << "; refusing to color\n";
    return kExitGuard;
  }
  BGreedyResult result = b_greedy(g, parse_order(opt, g));
  if (!is_b_coloring(g, result.coloring)) throw std::logic_error("result failed b-coloring re-validation");
  if (opt.as_json) {
    json rounds = json::array();
    for (const auto& round : result.trace.rounds) {
      json recolored = json::array();
      for (auto [v, to] : round.recolored) recolored.push_back({{"vertex", v}, {"to", to}});
      rounds.push_back({{"eliminated_color", round.eliminated_color}, {"recolored", recolored}});
    }
    json report{{"schema", 1},
                {"n", g.n()},
                {"colors", result.coloring.k},
                {"assignment", result.coloring.assignment},
                {"initial_colors", result.trace.initial.k},
                {"rounds", rounds},
                {"b_coloring", true}};
    if (witness) report["warning"] = "input is not b-perfect (contains " + witness->name + ")";
    out << report.dump(2) << "\n";
  } else {
    if (witness) err << "warning: input is not b-perfect (contains " << witness->name << ")\n";
    out << "colors: " << result.coloring.k << " (greedy start: " << result.trace.initial.k << ", "
        << result.trace.rounds.size() << " eliminations)\n";
    out << "assignment:";
    for (int c : result.coloring.assignment) out << " " << c;
    out << "\n";
  }
  return kExitYes;
}

inline int cmd_clique(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  Graph g = parse_graph(read_input(opt.input, in), opt.format);
  VertexSet clique;
  std::vector<CliqueStep> trace;
  try {
    if (opt.method == "oracle") {
      clique = max_clique(g);
    } else if (opt.method == "module-tree") {
      CliqueResult r = clique_via_module_tree(g, !opt.unsafe_skip_check);
      clique = r.clique;
      trace = std::move(r.trace);
    } else {
      CliqueResult r = bperf::clique(g, !opt.unsafe_skip_check);
      clique = r.clique;
      trace = std::move(r.trace);
    }
  } catch (const not_b_perfect& e) {
    err << "guard: " << e.what() << " on vertices";
    for (int v : e.witness.embedding.image) err << " " << v;
    err << " (use --unsafe-skip-check to bypass)\n";
    return kExitGuard;
  }
  if (!is_clique(g, clique)) throw std::logic_error("result failed clique re-validation");
  if (opt.as_json) {
    json steps = json::array();
    for (const auto& s : trace) steps.push_back({{"step", s.step}, {"action", s.action}, {"vertices", s.vertices}});
    out << json{{"schema", 1},
                {"method", opt.method},
                {"size", clique.size()},
                {"clique", clique},
                {"trace", steps}}
               .dump(2)
        << "\n";
  } else {
    out << "clique size " << clique.size() << ":";
    for (int v : clique) out << " " << v;
    out << "\n";
    for (const auto& s : trace) out << "  step " << s.step << ": " << s.action << "\n";
  }
  return kExitYes;
}

struct VerifyChecks {
  bool oracle = false, color = false, clique = false;
};

struct VerifyOutcome {
  std::string text;
  json record;
  bool mismatch = false;
  bool parse_error = false;
};

inline VerifyOutcome verify_line(const std::string& line, size_t index, const Options& opt,
                                 const VerifyChecks& checks) {
  VerifyOutcome res;
  res.record = {{"line", index + 1}};
  Graph g;
  try {
    g = parse_graph6(line);
  } catch (const malformed_input& e) {
    res.parse_error = true;
    res.text = "line " + std::to_string(index + 1) + ": parse error: " + e.what();
    res.record["parse_error"] = e.what();
    return res;
  }
  res.record["n"] = g.n();
  std::vector<std::string> problems;
  bool fast = is_b_perfect(g);
  res.record["b_perfect"] = fast;
  if (g.n() > opt.max_n) {
    res.record["skipped"] = "order exceeds --max-n";
    res.text = "line " + std::to_string(index + 1) + ": n=" + std::to_string(g.n()) + " skipped (exceeds --max-n)";
    return res;
  }
  if (checks.oracle) {
    bool oracle = is_b_perfect_oracle(g);
    if (oracle != fast)
      problems.push_back("recognizer says " + std::string(fast ? "b-perfect" : "not b-perfect") +
                         ", oracle disagrees");
  }
  if (fast && g.n() > 0) {
    int chi = chromatic_number(g);
    if (checks.color) {
      int colors = b_greedy(g).coloring.k;
      if (colors != chi)
        problems.push_back("b-greedy used " + std::to_string(colors) + " colors, chromatic number is " +
                           std::to_string(chi));
    }
    if (checks.clique) {
      int omega = clique_number(g);
      int structural = static_cast<int>(clique(g, false).clique.size());
      int via_tree = static_cast<int>(clique_via_module_tree(g, false).clique.size());
      if (structural != omega)
        problems.push_back("structural clique " + std::to_string(structural) + ", clique number " +
                           std::to_string(omega));
      if (via_tree != structural)
        problems.push_back("module-tree clique " + std::to_string(via_tree) + " differs from structural " +
                           std::to_string(structural));
    }
  }
  res.mismatch = !problems.empty();
  if (res.mismatch) {
    res.record["mismatches"] = problems;
    res.text = "line " + std::to_string(index + 1) + ": MISMATCH";
    for (const auto& p : problems) res.text += "; " + p;
  } else {
    res.text = "line " + std::to_string(index + 1) + ": n=" + std::to_string(g.n()) + " ok" +
               (fast ? " (b-perfect)" : " (not b-perfect)");
  }
  return res;
}

inline int cmd_verify(const Options& opt, std::istream& in, std::ostream& out) {
  VerifyChecks checks;
  {
    std::istringstream ls(opt.checks);
    std::string tok;
    while (std::getline(ls, tok, ',')) {
      if (tok == "oracle")
        checks.oracle = true;
      else if (tok == "color")
        checks.color = true;
      else if (tok == "clique")
        checks.clique = true;
      else if (!tok.empty())
        throw malformed_input(0, "unknown check '" + tok + "'");
    }
  }
  std::vector<std::string> lines;
  {
    std::istringstream text(read_input(opt.input, in));
    std::string line;
    while (std::getline(text, line))
      if (!line.empty()) lines.push_back(line);
  }
  std::vector<VerifyOutcome> outcomes(lines.size());
  int threads = opt.threads > 0 ? opt.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(lines.size() ? lines.size() : 1)));
  {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= lines.size()) return;
        outcomes[i] = verify_line(lines[i], i, opt, checks);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  size_t mismatches = 0, parse_errors = 0;
  for (const auto& o : outcomes) {
    mismatches += o.mismatch;
    parse_errors += o.parse_error;
  }
  if (opt.as_json) {
    json results = json::array();
    for (const auto& o : outcomes) results.push_back(o.record);
    out << json{{"schema", 1},
                {"count", lines.size()},
                {"mismatches", mismatches},
                {"parse_errors", parse_errors},
                {"results", results}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& o : outcomes) out << o.text << "\n";
    out << "checked " << lines.size() << " graphs: " << mismatches << " mismatches, " << parse_errors
        << " parse errors\n";
  }
  return mismatches == 0 ? kExitYes : kExitNo;
}

inline int cmd_family(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.selfcheck) {
    for (const ForbiddenPattern& p : family()) {
      if (!is_minimally_b_imperfect(p.graph)) {
        err << p.name << " failed the minimality gate\n";
        return kExitNo;
      }
      out << p.name << ": ok\n";
    }
    return kExitYes;
  }
  for (const ForbiddenPattern& p : family()) out << encode_graph6(p.graph) << "\n";
  if (opt.boats)
    for (const Graph& b : small_boats()) out << encode_graph6(b) << "\n";
  return kExitYes;
}

inline int cmd_enumerate(const Options& opt, std::ostream& out) {
  for (const Graph& g : enumerate_graphs(opt.max_n)) out << encode_graph6(g) << "\n";
  return kExitYes;
}

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"recognition, coloring and clique tools for b-perfect graphs"};
  app.require_subcommand(1);
  Options opt;

  std::string format = "graph6";
  app.add_option("--format", format, "input format: graph6, dimacs, edgelist")
      ->check(CLI::IsMember({"graph6", "dimacs", "edgelist"}));
  app.add_flag("--json", opt.as_json, "emit a JSON report");
  app.add_option("--seed", opt.seed, "seed for randomized options");

  auto* recognize = app.add_subcommand("recognize", "test whether a graph is b-perfect");
  recognize->add_option("input", opt.input, "input file, or - for stdin");

  auto* color = app.add_subcommand("color", "b-greedy coloring");
  color->add_option("input", opt.input, "input file, or - for stdin");
  color->add_option("--order", opt.order, "initial order: degree, index, random, or a comma list");
  color->add_flag("--require-b-perfect", opt.require_b_perfect, "refuse graphs that are not b-perfect");

  auto* clique_cmd = app.add_subcommand("clique", "largest clique of a b-perfect graph");
  clique_cmd->add_option("input", opt.input, "input file, or - for stdin");
  clique_cmd->add_option("--method", opt.method, "structural, module-tree, or oracle")
      ->check(CLI::IsMember({"structural", "module-tree", "oracle"}));
  clique_cmd->add_flag("--unsafe-skip-check", opt.unsafe_skip_check, "skip the b-perfection guard");

  auto* verify = app.add_subcommand("verify", "cross-check a graph6 stream against the oracles");
  verify->add_option("input", opt.input, "input file, or - for stdin");
  verify->add_option("--max-n", opt.max_n, "largest order passed to the exhaustive oracles");
  verify->add_option("--checks", opt.checks, "comma list from: oracle, color, clique");
  verify->add_option("--threads", opt.threads, "worker threads (default: hardware)");

  auto* family_cmd = app.add_subcommand("family", "print the forbidden family as graph6");
  family_cmd->add_flag("--boats", opt.boats, "append the two small boats");
  family_cmd->add_flag("--selfcheck", opt.selfcheck, "re-run the minimality gate on every member");

  auto* enumerate = app.add_subcommand("enumerate", "all non-isomorphic graphs up to --max-n");
  enumerate->add_option("--max-n", opt.max_n, "largest order to enumerate")->required();

  std::vector<const char*> argv;
  argv.push_back("bperf");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitYes;
    }
    err << e.what() << "\n";
    return kExitInput;
  }
  if (format == "dimacs") opt.format = Format::dimacs;
  if (format == "edgelist") opt.format = Format::edgelist;

  try {
    if (recognize->parsed()) return cmd_recognize(opt, in, out);
    if (color->parsed()) return cmd_color(opt, in, out, err);
    if (clique_cmd->parsed()) return cmd_clique(opt, in, out, err);
    if (verify->parsed()) return cmd_verify(opt, in, out);
    if (family_cmd->parsed()) return cmd_family(opt, out, err);
    if (enumerate->parsed()) return cmd_enumerate(opt, out);
  } catch (const malformed_input& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const unsupported& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const too_large& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const bad_order& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::runtime_error& e) {
    err << "guard violation: " << e.what() << "\n";
    return kExitGuard;
  }
  return kExitInput;
}

}  // namespace bperf::cli
