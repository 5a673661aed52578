#include "linearr/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "linearr/boundary_ring.hpp"
#include "linearr/json_io.hpp"
#include "linearr/os_algebra.hpp"
#include "linearr/plumbing.hpp"
#include "linearr/random_arrangement.hpp"
#include "linearr/report.hpp"

namespace linearr {

namespace {

// Raised for unreadable or malformed input; maps to kExitUsage.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

Arrangement load_arrangement(const std::string& path) {
  const Json j = read_json_file(path);
  try {
    return arrangement_from_json(j);
  } catch (const SchemaError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json axiom_error_json(const ArrangementError& e) {
  Json out{{"error", to_string(e.kind())}, {"message", e.what()}};
  if (e.kind() == ArrangementError::Kind::PairCoveredTwice) {
    out["pair"] = Json::array({e.j(), e.k()});
    out["points"] = Json::array({e.first(), e.second()});
  }
  return out;
}

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(int argc, const char* const* argv) {
    CLI::App app{"Orlik-Solomon algebras, boundary manifolds and resonance of combinatorial line arrangements",
                 "linearr"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--seed", config_.seed, "Seed for every random choice")->capture_default_str();
    app.add_option("--trials", config_.trials, "Sample points for generic Betti numbers")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();

    std::string path;
    auto with_path = [&](CLI::App* sub) {
      sub->add_option("arrangement", path, "Arrangement JSON file")->required();
      return sub;
    };

    with_path(app.add_subcommand("validate", "Validate and normalize an arrangement"))
        ->callback([&] { action_ = [&] { return cmd_validate(path); }; });
    with_path(app.add_subcommand("report", "Full pipeline report"))->callback([&] {
      action_ = [&] { return cmd_report(path); };
    });
    with_path(app.add_subcommand("nbc", "nbc pairs, incidence graph and spanning tree"))->callback([&] {
      action_ = [&] { return cmd_nbc(path); };
    });
    with_path(app.add_subcommand("os", "Orlik-Solomon structure constants"))->callback([&] {
      action_ = [&] { return emit(algebra_to_json(os_algebra(load_arrangement(path)))); };
    });
    with_path(app.add_subcommand("double", "Structure constants of the doubled algebra"))->callback([&] {
      action_ = [&] { return emit(algebra_to_json(double_algebra(os_algebra(load_arrangement(path))).algebra)); };
    });
    with_path(app.add_subcommand("homology", "H_1 of the boundary manifold"))->callback([&] {
      action_ = [&] { return cmd_homology(path); };
    });
    with_path(app.add_subcommand("ring", "Intersection ring of the boundary manifold"))->callback([&] {
      action_ = [&] { return cmd_ring(path); };
    });
    with_path(app.add_subcommand("verify", "Check H^*(M) against the doubled Orlik-Solomon algebra"))
        ->callback([&] { action_ = [&] { return cmd_verify(path); }; });

    auto* resonance = app.add_subcommand("resonance", "Resonance of the doubled algebra");
    resonance->require_subcommand(1);
    std::string point_arg;
    auto* eval = with_path(resonance->add_subcommand("eval", "Betti numbers at one point"));
    eval->add_option("--point", point_arg, "Point as JSON {\"a\": [...], \"b\": [...]} or a file holding it")
        ->required();
    eval->callback([&] { action_ = [&] { return cmd_resonance_eval(path, point_arg); }; });
    with_path(resonance->add_subcommand("generic", "Generic Betti numbers by seeded sampling"))->callback([&] {
      action_ = [&] { return emit(generic_resonance_json(load_arrangement(path), config_)); };
    });
    with_path(resonance->add_subcommand("classify", "Pencil / near pencil / general and the R^1_1 dimension"))
        ->callback([&] { action_ = [&] { return emit(classification_json(load_arrangement(path))); }; });

    auto* random = app.add_subcommand("random", "Random arrangements, one JSON document per line");
    int lines = 6;
    double density = 0.5;
    int count = 1;
    random->add_option("--lines", lines, "Number of lines")->check(CLI::Range(3, 1000))->capture_default_str();
    random->add_option("--density", density, "Probability of keeping each multiple-point candidate")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    random->add_option("--count", count, "Number of arrangements")->check(CLI::NonNegativeNumber)->capture_default_str();
    random->callback([&] { action_ = [&] { return cmd_random(lines, density, count); }; });

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? kExitOk : kExitUsage;
    }
    config_.format = format == "table" ? RunConfig::Format::Table : RunConfig::Format::Json;

    try {
      return action_();
    } catch (const InputError& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const SchemaError& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const ArrangementError& e) {
      out_ << axiom_error_json(e).dump(2) << '\n';
      return kExitViolation;
    } catch (const DimensionMismatch& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const InternalContradiction& e) {
      err_ << "violation: " << e.what() << '\n';
      return kExitViolation;
    } catch (const ChainConditionViolated& e) {
      err_ << "violation: " << e.what() << '\n';
      return kExitViolation;
    }
  }

 private:
  int emit(const Json& j) {
    if (config_.format == RunConfig::Format::Table) {
      out_ << json_table(j);
    } else {
      out_ << j.dump(2) << '\n';
    }
    return kExitOk;
  }

  int cmd_validate(const std::string& path) {
    const Arrangement arr = load_arrangement(path);
    Json j = arrangement_to_json(arr);
    j["class"] = to_string(classify(arr).kind);
    return emit(j);
  }

  int cmd_report(const std::string& path) {
    const Json report = build_report(load_arrangement(path), config_);
    emit(report);
    if (!report.at("isomorphism").at("ok").get<bool>()) {
      err_ << "violation: cohomology ring does not match the doubled algebra\n";
      return kExitViolation;
    }
    return kExitOk;
  }

  int cmd_nbc(const std::string& path) {
    const Arrangement arr = load_arrangement(path);
    const IncidenceGraph g = incidence_graph(arr);
    Json pairs = Json::array();
    for (const auto& p : nbc_set(arr)) pairs.push_back(Json::array({p.j, p.k}));
    auto edges_json = [&](const std::vector<IncidenceEdge>& edges) {
      Json a = Json::array();
      for (const auto& e : edges) a.push_back(Json{{"line", e.line}, {"point", arr.points()[e.point]}});
      return a;
    };
    return emit(Json{{"nbc", std::move(pairs)},
                     {"vertices", g.vertex_count()},
                     {"edges", g.edges.size()},
                     {"b1_graph", g.b1()},
                     {"spanning_tree", edges_json(spanning_tree(arr))},
                     {"complement", edges_json(spanning_tree_complement(arr))}});
  }

  int cmd_homology(const std::string& path) {
    const Arrangement arr = load_arrangement(path);
    return emit(h1_to_json(h1_boundary(arr), plumbing_matrix(plumbing_graph(arr))));
  }

  int cmd_ring(const std::string& path) {
    const IntersectionRing ring = intersection_ring(load_arrangement(path));
    if (config_.format == RunConfig::Format::Table) {
      out_ << ring_table(ring);
      return kExitOk;
    }
    return emit(ring_to_json(ring));
  }

  int cmd_verify(const std::string& path) {
    const IsomorphismReport report = verify_double_isomorphism(load_arrangement(path));
    emit(isomorphism_to_json(report));
    return report.ok ? kExitOk : kExitViolation;
  }

  int cmd_resonance_eval(const std::string& path, const std::string& point_arg) {
    const Arrangement arr = load_arrangement(path);
    Json point_json;
    try {
      point_json = Json::parse(point_arg);
    } catch (const Json::parse_error&) {
      if (!std::filesystem::exists(point_arg)) throw InputError("--point is neither JSON nor a readable file");
      point_json = read_json_file(point_arg);
    }
    const AomotoPoint pt = point_from_json(point_json);
    const DoubledAlgebra dbl = double_algebra(os_algebra(arr));
    Json betti = Json::array();
    for (std::size_t b : betti_all(dbl, pt)) betti.push_back(b);
    Json out{{"betti", std::move(betti)}};
    out.update(classification_json(arr));
    return emit(out);
  }

  int cmd_random(int lines, double density, int count) {
    for (const auto& arr : random_arrangements(lines, density, config_.seed, count)) {
      out_ << arrangement_to_json(arr).dump() << '\n';
    }
    return kExitOk;
  }

  std::ostream& out_;
  std::ostream& err_;
  RunConfig config_;
  std::function<int()> action_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return Cli(out, err).run(argc, argv);
}

}  // namespace linearr
