// Command line front end. Every subcommand prints deterministic text (or
// JSON with --json); timings and diagnostics go to stderr so stdout is
// byte-identical across runs. Exit codes: 0 success, 1 failed checks,
// 2 malformed input or flags.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cobar/acceptance.hpp"
#include "cobar/cover.hpp"
#include "cobar/io.hpp"
#include "cobar/necklace.hpp"
#include "cobar/pi1.hpp"

using namespace cobar;
using nlohmann::json;

namespace {

struct GlobalOpts {
  std::string ring_text = "Z";
  int max_degree = 4;
  int max_word_length = 0;  // 0 means max_degree + 1
  std::string fault_text = "none";
  bool json_out = false;
  bool parallel = false;

  Ring ring() const { return Ring::parse(ring_text); }
  int word_cap() const { return max_word_length > 0 ? max_word_length : max_degree + 1; }
  Fault fault() const { return parse_fault(fault_text); }
  ExecMode mode() const { return parallel ? ExecMode::Parallel : ExecMode::Serial; }
};

// Space selector shared by most subcommands: a builtin name or a JSON file.
struct SpaceOpt {
  std::string example;
  std::string file;

  void attach(CLI::App* cmd) {
    cmd->add_option("--example", example, "builtin space name (see `examples`)");
    cmd->add_option("--space", file, "path to a presentation document");
  }
  SimplicialSetPresentation load() const {
    if (!example.empty() && !file.empty())
      throw input_error("pass either --example or --space, not both");
    if (example.empty() && file.empty())
      throw input_error("a space is required: --example NAME or --space FILE");
    return space_from_spec(example.empty() ? file : example);
  }
};

int report_exit(const Report& r) { return r.all_pass() ? 0 : 1; }

void print_report(const Report& r, bool json_out) {
  if (json_out)
    std::cout << r.to_json().dump(2) << "\n";
  else
    std::cout << r.to_text();
}

int cmd_chains(const GlobalOpts& g, const SpaceOpt& space) {
  const SimplicialSetPresentation s = space.load();
  const DgCoalgebra c(s, g.ring(), g.fault());
  const int top = std::min(s.top_dim(), g.max_degree);
  if (g.json_out) {
    json dims = json::array();
    for (int d = 0; d <= top; ++d) {
      json gens = json::array();
      for (int i = 0; i < s.count(d); ++i) {
        const GenRef ref{d, i};
        json o;
        o["id"] = s.generator(ref).id;
        o["boundary"] = c.show(c.boundary(ref));
        o["coproduct"] = c.show(c.coproduct(ref));
        gens.push_back(o);
      }
      dims.push_back({{"dim", d}, {"generators", gens}});
    }
    json doc;
    doc["name"] = s.name();
    doc["ring"] = g.ring().name();
    doc["dims"] = dims;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << "space: " << s.name() << "\n";
  std::cout << "ring: " << g.ring().name() << "\n";
  for (int d = 0; d <= top; ++d) {
    std::cout << "dim " << d << " (" << s.count(d)
              << (s.count(d) == 1 ? " generator)" : " generators)") << "\n";
    for (int i = 0; i < s.count(d); ++i) {
      const GenRef ref{d, i};
      std::cout << "  " << s.generator(ref).id << "\n";
      std::cout << "    d  = " << c.show(c.boundary(ref)) << "\n";
      std::cout << "    aw = " << c.show(c.coproduct(ref)) << "\n";
    }
  }
  return 0;
}

int cmd_cobar(const GlobalOpts& g, const SpaceOpt& space) {
  const CobarAlgebra om(DgCoalgebra(space.load(), g.ring(), g.fault()), g.fault());
  if (g.json_out) {
    json degrees = json::array();
    for (int d = 0; d <= g.max_degree; ++d) {
      json words = json::array();
      for (const CobarMonomial& m : om.basis(d, g.word_cap())) {
        json o;
        o["word"] = om.show(m);
        o["differential"] = om.show(om.differential(m));
        words.push_back(o);
      }
      degrees.push_back({{"degree", d}, {"words", words}});
    }
    json doc;
    doc["name"] = om.space().name();
    doc["ring"] = g.ring().name();
    doc["max_word_length"] = g.word_cap();
    doc["degrees"] = degrees;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << "cobar construction of " << om.space().name() << " over " << g.ring().name()
            << " (words of length <= " << g.word_cap() << ")\n";
  for (int d = 0; d <= g.max_degree; ++d) {
    const auto basis = om.basis(d, g.word_cap());
    std::cout << "degree " << d << ": " << basis.size()
              << (basis.size() == 1 ? " word" : " words") << "\n";
    for (const CobarMonomial& m : basis)
      std::cout << "  D " << om.show(m) << " = " << om.show(om.differential(m)) << "\n";
  }
  return 0;
}

int cmd_nabla(const GlobalOpts& g, const SpaceOpt& space) {
  const LoopBialgebra lb(DgCoalgebra(space.load(), g.ring(), g.fault()), g.fault());
  if (g.json_out) {
    json degrees = json::array();
    for (int d = 0; d <= g.max_degree; ++d) {
      json words = json::array();
      for (const CobarMonomial& m : lb.algebra().basis(d, g.word_cap())) {
        json o;
        o["word"] = lb.algebra().show(m);
        o["nabla"] = lb.show(lb.comultiplication(m));
        words.push_back(o);
      }
      degrees.push_back({{"degree", d}, {"words", words}});
    }
    json doc;
    doc["name"] = lb.space().name();
    doc["ring"] = g.ring().name();
    doc["degrees"] = degrees;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << "loop comultiplication on " << lb.space().name() << " over " << g.ring().name()
            << "\n";
  for (int d = 0; d <= g.max_degree; ++d)
    for (const CobarMonomial& m : lb.algebra().basis(d, g.word_cap()))
      std::cout << "nabla " << lb.algebra().show(m) << " = " << lb.show(lb.comultiplication(m))
                << "\n";
  return 0;
}

int cmd_bialgebra_check(const GlobalOpts& g, const SpaceOpt& space) {
  const LoopBialgebra lb(DgCoalgebra(space.load(), g.ring(), g.fault()), g.fault());
  const Report r = lb.check_bialgebra(g.max_degree, g.word_cap(), g.mode());
  if (!g.json_out)
    std::cout << "bialgebra axioms on " << lb.space().name() << " through degree "
              << g.max_degree << ", words of length <= " << g.word_cap() << "\n";
  print_report(r, g.json_out);
  return report_exit(r);
}

struct Pi1Opts {
  bool show_abelianization = false;
  bool show_tietze = false;
  long todd_coxeter = 0;  // 0 means off; otherwise the coset cap
  std::string grouplike_demo;
};

int cmd_pi1(const GlobalOpts& g, const SpaceOpt& space, const Pi1Opts& p) {
  int rc = 0;
  json doc;
  const bool want_space = !(space.example.empty() && space.file.empty());
  if (!want_space && p.grouplike_demo.empty())
    throw input_error("a space is required: --example NAME or --space FILE");
  if (want_space) {
    const SimplicialSetPresentation s = space.load();
    const GroupPresentation raw = pi1_presentation(s);
    const GroupPresentation reduced = tietze_reduce(raw);
    if (g.json_out) {
      doc["space"] = s.name();
      if (p.show_tietze) doc["edge_path_presentation"] = raw.to_string();
      doc["presentation"] = reduced.to_string();
    } else {
      if (p.show_tietze) std::cout << "edge-path presentation: " << raw.to_string() << "\n";
      std::cout << "pi1(" << s.name() << ") = " << reduced.to_string() << "\n";
    }
    if (p.show_abelianization) {
      const std::string ab = abelianization(reduced).to_string();
      if (g.json_out)
        doc["abelianization"] = ab;
      else
        std::cout << "abelianization: " << ab << "\n";
    }
    if (p.todd_coxeter > 0) {
      const auto order = todd_coxeter_order(reduced, p.todd_coxeter);
      const std::string text = order ? std::to_string(*order)
                                     : "not determined within " +
                                           std::to_string(p.todd_coxeter) + " cosets";
      if (g.json_out)
        doc["group_order"] = text;
      else
        std::cout << "group order: " << text << "\n";
    }
  }
  if (!p.grouplike_demo.empty()) {
    const FiniteGroupTable table = table_from_spec(p.grouplike_demo);
    Report r;
    const std::vector<std::string> likes = grouplike_elements(table, g.ring(), &r);
    r.merge(antipode_check(table, g.ring()));
    std::string joined;
    for (const std::string& e : likes) joined += (joined.empty() ? "" : ", ") + e;
    if (g.json_out) {
      doc["grouplike_demo"] = {{"group", table.name},
                               {"grouplikes", joined},
                               {"checks", r.to_json()}};
    } else {
      std::cout << "group-likes of " << g.ring().name() << "[" << table.name
                << "]: " << joined << "\n";
      std::cout << r.to_text();
    }
    if (!r.all_pass()) rc = 1;
  }
  if (g.json_out) std::cout << doc.dump(2) << "\n";
  return rc;
}

int cmd_loop_homology(const GlobalOpts& g, const SpaceOpt& space) {
  const SimplicialSetPresentation s = space.load();
  const auto h = loop_homology(s, g.ring(), g.max_degree, g.mode());
  if (g.json_out) {
    json rows = json::array();
    for (const AbelianGroupInvariants& inv : h) rows.push_back(inv.to_string());
    json doc;
    doc["space"] = s.name();
    doc["ring"] = g.ring().name();
    doc["loop_homology"] = rows;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << "loop space homology of " << s.name() << " over " << g.ring().name() << "\n";
  for (std::size_t d = 0; d < h.size(); ++d)
    std::cout << "H_" << d << " = " << h[d].to_string() << "\n";
  return 0;
}

struct CoverOpts {
  std::string group_table;
  std::string edge_map;
};

int cmd_cover_homology(const GlobalOpts& g, const SpaceOpt& space, const CoverOpts& c) {
  const SimplicialSetPresentation s = space.load();
  const FiniteGroupTable table = table_from_spec(c.group_table);
  const std::vector<int> labels = edge_map_from_json(read_text_file(c.edge_map), s, table);
  const GroupRealization rho(s, table, labels);
  const Report checks = check_twisted_complex(rho, g.ring(), g.mode());
  const auto h = cover_homology(rho, g.ring(), g.max_degree, g.mode());
  if (g.json_out) {
    json rows = json::array();
    for (const AbelianGroupInvariants& inv : h) rows.push_back(inv.to_string());
    json doc;
    doc["space"] = s.name();
    doc["deck_group"] = table.name;
    doc["ring"] = g.ring().name();
    doc["checks"] = checks.to_json();
    doc["cover_homology"] = rows;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "cover of " << s.name() << " with deck group " << table.name << " (order "
              << table.order() << ") over " << g.ring().name() << "\n";
    std::cout << checks.to_text();
    for (std::size_t d = 0; d < h.size(); ++d)
      std::cout << "H_" << d << " = " << h[d].to_string() << "\n";
  }
  return report_exit(checks);
}

struct RigidifyOpts {
  std::string from;
  std::string to;
  int max_beads = 4;
  int max_dim = 4;
};

int cmd_rigidify(const GlobalOpts& g, const SpaceOpt& space, const RigidifyOpts& r) {
  const SimplicialSetPresentation s = space.load();
  const GenRef x = s.lookup(r.from), y = s.lookup(r.to);
  const auto maps = enumerate_necklace_maps(s, x, y, r.max_beads, r.max_dim);
  const auto show_word = [&](const RawNecklace& w) {
    std::string out = "[";
    for (std::size_t b = 0; b < w.size(); ++b) {
      if (b) out += " | ";
      out += s.show(w[b]);
    }
    return out + "]";
  };
  if (g.json_out) {
    json words = json::array();
    for (const RawNecklace& w : maps) words.push_back(show_word(w));
    json doc;
    doc["space"] = s.name();
    doc["from"] = r.from;
    doc["to"] = r.to;
    doc["max_beads"] = r.max_beads;
    doc["max_total_dim"] = r.max_dim;
    doc["count"] = maps.size();
    doc["necklace_maps"] = words;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << "necklace maps " << r.from << " -> " << r.to << " in " << s.name()
            << " (beads <= " << r.max_beads << ", total dim <= " << r.max_dim << ")\n";
  std::cout << "count: " << maps.size() << "\n";
  for (const RawNecklace& w : maps) std::cout << show_word(w) << "\n";
  return 0;
}

struct SelftestOpts {
  std::string filter;
  std::string positional;
  bool verbose = false;
};

int cmd_selftest(const GlobalOpts& g, const SelftestOpts& s) {
  if (!s.filter.empty() && !s.positional.empty() && s.filter != s.positional)
    throw input_error("two different filters given");
  AcceptanceOptions opt;
  opt.filter = s.filter.empty() ? s.positional : s.filter;
  opt.fault = g.fault();
  opt.mode = g.mode();
  opt.verbose = s.verbose;
  return run_acceptance(std::cout, std::cerr, opt) ? 0 : 1;
}

int cmd_examples(const GlobalOpts& g) {
  if (g.json_out) {
    json rows = json::array();
    for (const std::string& name : builtin_names()) {
      const SimplicialSetPresentation s = builtin(name);
      json counts = json::array();
      for (int d = 0; d <= s.top_dim(); ++d) counts.push_back(s.count(d));
      rows.push_back({{"name", name}, {"generators_per_dim", counts}});
    }
    std::cout << rows.dump(2) << "\n";
    return 0;
  }
  for (const std::string& name : builtin_names()) {
    const SimplicialSetPresentation s = builtin(name);
    std::cout << name << "  (generators per dim:";
    for (int d = 0; d <= s.top_dim(); ++d) std::cout << " " << s.count(d);
    std::cout << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact chain-level algebra on finitely presented simplicial sets"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--ring", g.ring_text, "coefficients: Z, Q, or Fp:<p>")
      ->default_val("Z");
  app.add_option("--max-degree", g.max_degree, "bound on graded computations")
      ->default_val(4);
  app.add_option("--max-word-length", g.max_word_length,
                 "cap on cobar word length (default max-degree + 1)");
  app.add_option("--inject-fault", g.fault_text,
                 "sign corruption for demonstration: aw-sign, cobar-leibniz, "
                 "nabla-shuffle, ez-sign");
  app.add_flag("--json", g.json_out, "machine-readable output");
  app.add_flag("--parallel", g.parallel, "run verification sweeps with OpenMP");

  SpaceOpt chains_space;
  chains_space.attach(app.add_subcommand("chains", "normalized chains and their coalgebra"));
  SpaceOpt cobar_space;
  cobar_space.attach(app.add_subcommand("cobar", "cobar construction basis and differential"));
  SpaceOpt nabla_space;
  nabla_space.attach(app.add_subcommand("nabla", "loop comultiplication on cobar words"));
  SpaceOpt bialg_space;
  bialg_space.attach(
      app.add_subcommand("bialgebra-check", "verify the loop bialgebra axioms"));

  Pi1Opts pi1;
  SpaceOpt pi1_space;
  {
    CLI::App* cmd = app.add_subcommand("pi1", "fundamental group from edge paths");
    pi1_space.attach(cmd);
    cmd->add_flag("--abelianization", pi1.show_abelianization, "print abelian invariants");
    cmd->add_flag("--tietze", pi1.show_tietze, "print the unreduced edge-path presentation");
    cmd->add_option("--todd-coxeter", pi1.todd_coxeter,
                    "coset enumeration with this many cosets at most");
    cmd->add_option("--grouplike-demo", pi1.grouplike_demo,
                    "recover a finite group as the group-likes of its group algebra");
  }

  SpaceOpt loop_space;
  loop_space.attach(
      app.add_subcommand("loop-homology", "homology of the cobar construction"));

  CoverOpts cover;
  SpaceOpt cover_space;
  {
    CLI::App* cmd = app.add_subcommand("cover-homology", "homology of a finite regular cover");
    cover_space.attach(cmd);
    cmd->add_option("--group-table", cover.group_table,
                    "deck group: Z/n, S3, Q8, or a table document")
        ->required();
    cmd->add_option("--edge-map", cover.edge_map, "edge labeling document")->required();
  }

  RigidifyOpts rigid;
  SpaceOpt rigid_space;
  {
    CLI::App* cmd =
        app.add_subcommand("rigidify", "enumerate necklace maps between two vertices");
    rigid_space.attach(cmd);
    cmd->add_option("--from", rigid.from, "source vertex id")->required();
    cmd->add_option("--to", rigid.to, "target vertex id")->required();
    cmd->add_option("--max-beads", rigid.max_beads, "bead count cap")->default_val(4);
    cmd->add_option("--max-dim", rigid.max_dim, "total dimension cap")->default_val(4);
  }

  SelftestOpts selftest;
  {
    CLI::App* cmd = app.add_subcommand("selftest", "run the acceptance criteria");
    cmd->add_option("criteria", selftest.positional, "criterion filter (name or number)");
    cmd->add_option("--filter", selftest.filter, "criterion filter (name or number)");
    cmd->add_flag("--verbose", selftest.verbose, "print every check item");
  }

  app.add_subcommand("examples", "list the builtin spaces");

  try {
    app.parse(argc, argv);
    if (app.got_subcommand("chains")) return cmd_chains(g, chains_space);
    if (app.got_subcommand("cobar")) return cmd_cobar(g, cobar_space);
    if (app.got_subcommand("nabla")) return cmd_nabla(g, nabla_space);
    if (app.got_subcommand("bialgebra-check")) return cmd_bialgebra_check(g, bialg_space);
    if (app.got_subcommand("pi1")) return cmd_pi1(g, pi1_space, pi1);
    if (app.got_subcommand("loop-homology")) return cmd_loop_homology(g, loop_space);
    if (app.got_subcommand("cover-homology")) return cmd_cover_homology(g, cover_space, cover);
    if (app.got_subcommand("rigidify")) return cmd_rigidify(g, rigid_space, rigid);
    if (app.got_subcommand("selftest")) return cmd_selftest(g, selftest);
    if (app.got_subcommand("examples")) return cmd_examples(g);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bound_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
