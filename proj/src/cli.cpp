#include "ngon/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "ngon/builder.hpp"
#include "ngon/group_actions.hpp"
#include "ngon/predimension.hpp"
#include "ngon/witnesses.hpp"
#include "ngon/zero_algebraic.hpp"

namespace ngon::cli {

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInputError = 2;

// Thrown for bad arguments that CLI11 cannot catch itself.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One output line. Plain mode prints the values (prefixed by the tag unless
// bare); structured mode prints `tag key=value ...`.
struct Record {
  std::string tag;
  std::vector<std::pair<std::string, std::string>> fields;
  bool bare = false;
};

class Output {
 public:
  explicit Output(bool structured) : structured_(structured) {}

  void add(Record r) { records_.push_back(std::move(r)); }
  void value(const std::string& tag, const std::string& v) { add({tag, {{"value", v}}, true}); }
  void raw(std::string line) { raw_ += line + '\n'; }

  std::string text() const {
    std::ostringstream os;
    for (const auto& r : records_) {
      if (structured_) {
        os << r.tag;
        for (const auto& [k, v] : r.fields) os << ' ' << k << '=' << v;
      } else {
        bool first = r.bare;
        if (!r.bare) os << r.tag;
        for (const auto& [k, v] : r.fields) {
          if (!first) os << ' ';
          os << v;
          first = false;
        }
      }
      os << '\n';
    }
    return raw_ + os.str();
  }

 private:
  bool structured_;
  std::vector<Record> records_;
  std::string raw_;
};

std::string flag(bool b) { return b ? "true" : "false"; }

std::string ids_text(const std::vector<VertexId>& ids) { return ids.empty() ? "-" : format_ids(ids); }
std::string ids_text(const BipartiteGraph& g, const VertexSet& s) { return ids_text(g.ids_of(s)); }

GraphDocument load(const std::string& path) {
  try {
    return load_graph(path);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

VertexSet subset_arg(const GraphDocument& doc, const std::string& spec) {
  try {
    return resolve_subset(doc, spec);
  } catch (const std::exception& e) {
    throw InputError("bad subset '" + spec + "': " + e.what());
  }
}

// A μ file holds `mu …` lines (and comments); without one, the graph file's
// own mu lines are used, and failing that the default μ.
MuFunction mu_for(const GraphDocument& doc, const std::string& mu_path) {
  std::vector<std::string> lines = doc.mu_lines;
  if (!mu_path.empty()) {
    std::ifstream in(mu_path);
    if (!in) throw InputError("cannot open " + mu_path);
    lines.clear();
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream words(line);
      std::string keyword;
      if (!(words >> keyword)) continue;
      if (keyword != "mu") throw InputError(mu_path + ": expected 'mu', got '" + keyword + "'");
      std::string rest;
      std::getline(words, rest);
      rest.erase(0, rest.find_first_not_of(' '));
      lines.push_back(rest);
    }
  }
  if (lines.empty()) return default_mu(doc.graph.n());
  try {
    return MuFunction::parse(doc.graph.n(), lines);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad mu block: ") + e.what());
  }
}

void write_or_print(const GraphDocument& doc, const std::string& path, Output& out) {
  if (path.empty()) {
    std::string text = write_graph(doc);
    text.pop_back();
    out.raw(text);
    return;
  }
  save_graph(doc, path);
}

PermGroup group_for(const BipartiteGraph& g, bool full) { return automorphism_group(g, !full); }

struct Args {
  std::string file;
  std::string subset;
  std::string base;
  std::string body;
  bool enumerate = false;
  std::size_t max_body = 0;
  std::string mu;
  int horizon = 0;
  std::string kind;
  std::vector<int> params;
  bool with_b = false;
  std::string output;
  std::string log;
  int steps = 0;
  std::uint64_t seed = 0;
  bool thick = false;
  bool type_preserving = false;
  bool full = false;
  VertexId vertex = 0;
};

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Predimension calculus, K^mu membership and polygon group checks", "ngon"};
  app.require_subcommand(1);
  std::string format = "plain";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "structured"}));

  Args a;
  std::function<int(Output&, std::string&)> run;

  auto file_arg = [&](CLI::App* cmd) { cmd->add_option("file", a.file, "Graph file")->required(); };
  auto subset_cmd = [&](const char* name, const char* help, std::function<int(Output&, std::string&)> body) {
    auto* cmd = app.add_subcommand(name, help);
    file_arg(cmd);
    cmd->add_option("subset", a.subset, "Subset name or ids:1,2,3")->required();
    cmd->callback([&run, body] { run = body; });
  };

  subset_cmd("delta", "Predimension of a subset", [&](Output& out, std::string&) {
    auto doc = load(a.file);
    out.value("delta", std::to_string(delta(doc.graph, subset_arg(doc, a.subset))));
    return kHolds;
  });
  subset_cmd("strong", "Is the subset strong in the graph", [&](Output& out, std::string& err) {
    auto doc = load(a.file);
    const auto& g = doc.graph;
    auto check = is_strong(g, subset_arg(doc, a.subset));
    out.add({"strong", {{"holds", flag(check.strong)}, {"delta", std::to_string(check.delta)},
                        {"min_delta", std::to_string(check.min_delta)}}});
    if (check.strong) return kHolds;
    err += "WITNESS " + ids_text(g, *check.witness) + ' ' + std::to_string(delta(g, *check.witness)) + '\n';
    return kFails;
  });
  subset_cmd("closure", "Smallest strong superset", [&](Output& out, std::string&) {
    auto doc = load(a.file);
    out.value("closure", ids_text(doc.graph, closure(doc.graph, subset_arg(doc, a.subset))));
    return kHolds;
  });
  subset_cmd("dmin", "Minimum of delta over supersets", [&](Output& out, std::string&) {
    auto doc = load(a.file);
    out.value("dmin", std::to_string(d_min(doc.graph, subset_arg(doc, a.subset))));
    return kHolds;
  });

  {
    auto* cmd = app.add_subcommand("zeroalg", "0-algebraic checks and pair enumeration");
    file_arg(cmd);
    auto* base = cmd->add_option("--base", a.base, "Base subset");
    auto* body = cmd->add_option("--body", a.body, "Body subset");
    auto* en = cmd->add_flag("--enumerate", a.enumerate, "List all 0-minimally algebraic pairs");
    cmd->add_option("--max-body", a.max_body, "Body size cap")->needs(en);
    base->needs(body);
    body->needs(base);
    en->excludes(base)->excludes(body);
    cmd->callback([&] {
      run = [&](Output& out, std::string&) {
        auto doc = load(a.file);
        const auto& g = doc.graph;
        if (a.enumerate) {
          std::optional<std::size_t> cap;
          if (a.max_body > 0) cap = a.max_body;
          auto result = enumerate_zero_min_pairs(g, cap);
          for (const auto& p : result.pairs)
            out.add({"PAIR", {{"base", ids_text(g, p.base)}, {"body", ids_text(g, p.body)}}});
          out.add({"pairs", {{"count", std::to_string(result.pairs.size())}}});
          out.add({"body_cap", {{"value", std::to_string(result.body_cap)}}});
          return kHolds;
        }
        if (a.base.empty()) throw InputError("zeroalg needs --base/--body or --enumerate");
        auto bs = subset_arg(doc, a.base);
        auto by = subset_arg(doc, a.body);
        if (bs.intersects(by)) throw InputError("base and body intersect");
        const bool algebraic = is_zero_algebraic(g, bs, by);
        out.add({"algebraic", {{"holds", flag(algebraic)}, {"delta_rel", std::to_string(delta_rel(g, by, bs))}}});
        out.add({"minimal", {{"holds", flag(algebraic && is_zero_minimally_algebraic(g, bs, by))}}});
        if (algebraic) out.add({"minimal_base", {{"ids", ids_text(g, minimal_base(g, bs, by))}}});
        return algebraic ? kHolds : kFails;
      };
    });
  }

  {
    auto* cmd = app.add_subcommand("kmu", "K^mu membership");
    file_arg(cmd);
    cmd->add_option("--mu", a.mu, "File of mu lines");
    cmd->add_option("--horizon", a.horizon, "Longest cycle inspected")->check(CLI::PositiveNumber);
    cmd->add_option("--max-body", a.max_body, "Body size cap");
    cmd->callback([&] {
      run = [&](Output& out, std::string&) {
        auto doc = load(a.file);
        const auto mu = mu_for(doc, a.mu);
        KmuOptions options;
        if (a.horizon > 0) options.horizon = a.horizon;
        if (a.max_body > 0) options.body_cap = a.max_body;
        auto report = in_class(doc.graph, mu, options);
        for (const auto& v : report.violations)
          out.add({"VIOLATION",
                   {{"condition", condition_name(v.condition)}, {"witness", ids_text(v.witness)},
                    {"value", std::to_string(v.value)}, {"bound", std::to_string(v.bound)}}});
        out.add({"member", {{"holds", flag(report.member)}}});
        out.add({"horizon", {{"value", std::to_string(report.horizon)}}});
        out.add({"body_cap", {{"value", std::to_string(report.body_cap)}}});
        return report.member ? kHolds : kFails;
      };
    });
  }

  {
    auto* cmd = app.add_subcommand("witness", "Write a witness graph");
    cmd->add_option("kind", a.kind, "path|cycle|gamma|cl|star|double|fano|gq22")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "gamma", "cl", "star", "double", "fano", "gq22"}));
    cmd->add_option("params", a.params, "n and, for path/cycle/cl, a length or l");
    cmd->add_flag("--with-b", a.with_b, "cl: add the vertex b with one edge to C");
    cmd->add_option("-o,--output", a.output, "Output file (default stdout)");
    cmd->callback([&] {
      run = [&](Output& out, std::string&) {
        const std::map<std::string, std::size_t> arity{{"path", 2}, {"cycle", 2}, {"gamma", 1}, {"cl", 2},
                                                       {"star", 1}, {"double", 1}, {"fano", 0}, {"gq22", 0}};
        if (a.params.size() != arity.at(a.kind))
          throw InputError("witness " + a.kind + " takes " + std::to_string(arity.at(a.kind)) + " parameter(s)");
        if (!a.params.empty() && a.params[0] < 3) throw InputError("n must be at least 3");
        GraphDocument doc;
        if (a.kind == "path") doc = make_path(a.params[0], a.params[1]);
        else if (a.kind == "cycle") doc = make_cycle(a.params[0], a.params[1]);
        else if (a.kind == "gamma") doc = make_gamma(a.params[0]);
        else if (a.kind == "cl") doc = make_cl_witness(a.params[0], a.params[1], a.with_b);
        else if (a.kind == "star") doc = make_star_path(a.params[0]);
        else if (a.kind == "double") doc = make_double_path(a.params[0]);
        else if (a.kind == "fano") doc = make_fano();
        else doc = make_gq22();
        write_or_print(doc, a.output, out);
        return kHolds;
      };
    });
  }

  {
    auto* cmd = app.add_subcommand("grow", "Randomized free-amalgamation growth");
    file_arg(cmd);
    cmd->add_option("--steps", a.steps, "Number of steps")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("--seed", a.seed, "RNG seed")->required();
    cmd->add_option("--mu", a.mu, "File of mu lines");
    cmd->add_option("-o,--output", a.output, "Output file (default stdout)");
    cmd->add_option("--log", a.log, "Step log file (default stderr)");
    cmd->add_option("--horizon", a.horizon, "Longest cycle inspected")->check(CLI::PositiveNumber);
    cmd->add_option("--max-body", a.max_body, "Body size cap");
    cmd->callback([&] {
      run = [&](Output& out, std::string& err) {
        auto doc = load(a.file);
        const auto mu = mu_for(doc, a.mu);
        GrowOptions options;
        if (a.horizon > 0) options.kmu.horizon = a.horizon;
        if (a.max_body > 0) options.kmu.body_cap = a.max_body;
        GrowResult result;
        try {
          result = grow(doc.graph, a.steps, a.seed, mu, options);
        } catch (const std::invalid_argument& e) {
          throw InputError(e.what());
        }
        std::string log;
        for (const auto& entry : result.log) log += entry.line() + '\n';
        if (a.log.empty()) {
          err += log;
        } else {
          std::ofstream f(a.log);
          if (!f) throw InputError("cannot write " + a.log);
          f << log;
        }
        GraphDocument grown{result.graph, {}, doc.mu_lines};
        write_or_print(grown, a.output, out);
        return kHolds;
      };
    });
  }

  {
    auto* cmd = app.add_subcommand("verify-ngon", "Check the generalized n-gon axioms");
    file_arg(cmd);
    cmd->add_flag("--thick", a.thick, "Also require all valencies >= 3");
    cmd->callback([&] {
      run = [&](Output& out, std::string& err) {
        auto doc = load(a.file);
        const auto& g = doc.graph;
        auto report = is_generalized_ngon(g, a.thick);
        auto number = [](int v) { return v == kInfinite ? std::string("inf") : std::to_string(v); };
        out.add({"ngon", {{"holds", flag(report.holds)}, {"girth", number(girth(g))}, {"diameter", number(diameter(g))}}});
        if (report.holds) return kHolds;
        err += "VIOLATION " + report.reason + ' ' + ids_text(report.witness) + '\n';
        return kFails;
      };
    });
  }

  {
    auto* cmd = app.add_subcommand("aut", "Automorphism group generators");
    file_arg(cmd);
    cmd->add_flag("--type-preserving", a.type_preserving, "Fix both parts setwise");
    cmd->callback([&] {
      run = [&](Output& out, std::string&) {
        auto doc = load(a.file);
        auto grp = automorphism_group(doc.graph, a.type_preserving);
        out.add({"order", {{"value", grp.order().str()}}});
        for (const auto& p : grp.generators()) out.add({"generator", {{"cycles", cycle_notation(doc.graph, p)}}, true});
        return kHolds;
      };
    });
  }

  auto polygon_cmd = [&](const char* name, const char* help, std::function<int(Output&, std::string&)> body) {
    auto* cmd = app.add_subcommand(name, help);
    file_arg(cmd);
    cmd->add_flag("--full", a.full, "Use the full automorphism group instead of the type-preserving one");
    cmd->callback([&run, body] { run = body; });
  };
  auto polygon = [&](std::function<int(const BipartiteGraph&, const PermGroup&, Output&, std::string&)> body) {
    return [&a, body](Output& out, std::string& err) {
      auto doc = load(a.file);
      const auto& g = doc.graph;
      if (auto report = is_generalized_ngon(g, false); !report.holds)
        throw InputError("not a generalized " + std::to_string(g.n()) + "-gon: " + report.reason);
      return body(g, group_for(g, a.full), out, err);
    };
  };
  polygon_cmd("strans", "Strong transitivity of the automorphism group",
              polygon([](const BipartiteGraph& g, const PermGroup& grp, Output& out, std::string& err) {
                auto report = is_strongly_transitive(g, grp);
                out.add({"strongly_transitive", {{"holds", flag(report.holds)}, {"cycle_form", flag(report.cycle_form)}}});
                if (report.holds) return kHolds;
                err += "PATH " + ids_text(report.path) + '\n';
                return kFails;
              }));
  polygon_cmd("moufang", "Moufang condition for the automorphism group",
              polygon([](const BipartiteGraph& g, const PermGroup& grp, Output& out, std::string& err) {
                auto report = is_moufang(g, grp);
                out.add({"moufang", {{"holds", flag(report.holds)}}});
                if (report.holds) return kHolds;
                err += "PATH " + ids_text(report.path) + '\n';
                return kFails;
              }));

  {
    auto* cmd = app.add_subcommand("transdeg", "Transitivity degree of a vertex stabilizer on its neighbours");
    file_arg(cmd);
    cmd->add_option("vertex", a.vertex, "Vertex id")->required();
    cmd->add_flag("--full", a.full, "Use the full automorphism group");
    cmd->callback([&] {
      run = [&](Output& out, std::string&) {
        auto doc = load(a.file);
        if (!doc.graph.index_of(a.vertex)) throw InputError("unknown vertex " + std::to_string(a.vertex));
        auto grp = group_for(doc.graph, a.full);
        out.value("transdeg", std::to_string(stabilizer_transitivity_degree(doc.graph, grp, a.vertex)));
        return kHolds;
      };
    });
  }

  CommandResult result;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--format") {
      ++i;
      continue;
    }
    if (args[i].starts_with('-')) continue;
    if (!app.get_subcommand_no_throw(args[i])) {
      result.exit_code = kInputError;
      result.err = "unknown command: " + args[i] + "\n\n" + app.help();
      return result;
    }
    break;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kInputError;
    result.err = std::string(e.what()) + "\n\n" + app.help();
    return result;
  }

  Output out(format == "structured");
  try {
    result.exit_code = run(out, result.err);
    result.out = out.text();
  } catch (const std::exception& e) {
    result.exit_code = kInputError;
    result.err += std::string("error: ") + e.what() + '\n';
  }
  return result;
}

}  // namespace ngon::cli
