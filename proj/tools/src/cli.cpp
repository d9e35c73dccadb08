#include "leewb/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "leewb/algebra.hpp"
#include "leewb/conditions.hpp"
#include "leewb/errors.hpp"
#include "leewb/harness.hpp"
#include "leewb/json_io.hpp"
#include "leewb/lee.hpp"
#include "leewb/words.hpp"

namespace leewb {

  using nlohmann::json;

  namespace {

    struct Globals {
      bool     json_out = false;
      unsigned threads  = 1;
    };

    IdentityKind kind_of(FiniteAlgebra const& M) {
      return M.kind() == AlgebraKind::Monoid ? IdentityKind::Monoid
                                             : IdentityKind::Semigroup;
    }

    int verdict_code(bool holds) {
      return holds ? exit_code::holds : exit_code::fails;
    }

    void print_report(std::ostream& out, ConditionReport const& rep) {
      out << (rep.verdict ? "holds" : "fails") << " (" << rep.bounds << ")\n";
      for (auto const& v : rep.violations) {
        out << "  " << v.clause << ": " << v.witness << '\n';
      }
      if (rep.violation_count > rep.violations.size()) {
        out << "  ... " << rep.violation_count - rep.violations.size()
            << " more\n";
      }
      if (rep.certificate) {
        out << "certificate: " << rep.certificate->to_string() << '\n';
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Verbs
    ////////////////////////////////////////////////////////////////////////

    struct BuildArgs {
      std::size_t ell    = 0;
      bool        monoid = false;
      std::string out;
    };

    int do_build(BuildArgs const& a, Globals const& g, std::ostream& out) {
      auto const M   = a.monoid ? lee_monoid(a.ell) : lee_semigroup(a.ell);
      auto const doc = algebra_to_json(M);
      if (a.out.empty()) {
        out << doc.dump() << '\n';
        return exit_code::holds;
      }
      save_algebra(M, a.out);
      if (g.json_out) {
        out << json{{"path", a.out},
                    {"kind", doc["kind"]},
                    {"elements", M.size()}}
                   .dump()
            << '\n';
      } else {
        out << "wrote " << M.size() << "-element " << doc["kind"].get<std::string>()
            << " to " << a.out << '\n';
      }
      return exit_code::holds;
    }

    struct IdentityArgs {
      std::string algebra;
      std::string id;
    };

    int do_check_identity(IdentityArgs const& a, Globals const& g, std::ostream& out) {
      auto const M   = load_algebra(a.algebra);
      auto const id  = parse_identity(a.id, kind_of(M));
      auto const res = satisfies(M, id, g.threads);
      json       doc = {{"identity", id.to_string()},
                        {"holds", res.holds},
                        {"substitutions_checked", res.substitutions_checked}};
      if (res.counterexample) {
        auto const& ce = *res.counterexample;
        doc["counterexample"] = substitution_to_json(M, ce);
        doc["values"] = {{"lhs", M.name(evaluate(M, ce, id.lhs))},
                         {"rhs", M.name(evaluate(M, ce, id.rhs))}};
      }
      if (g.json_out) {
        out << doc.dump() << '\n';
      } else if (res.holds) {
        out << "holds (" << res.substitutions_checked << " substitutions)\n";
      } else {
        out << "fails at " << to_string(M, *res.counterexample) << ": "
            << doc["values"]["lhs"].get<std::string>() << " != "
            << doc["values"]["rhs"].get<std::string>() << '\n';
      }
      return verdict_code(res.holds);
    }

    struct ClArgs {
      std::string   algebra;
      std::size_t   ell     = 0;
      bool          exact   = false;
      bool          bounded = false;
      std::uint32_t exp_cap = 0;
      std::size_t   run_cap = 0;
    };

    int do_check_cl(ClArgs const& a, Globals const& g, std::ostream& out) {
      auto const M = load_algebra(a.algebra);
      ConditionReport rep;
      if (a.bounded) {
        auto const e       = index_period(M);
        auto const exp_cap = a.exp_cap != 0 ? a.exp_cap
                                            : static_cast<std::uint32_t>(e.index + e.period);
        auto const run_cap = a.run_cap != 0 ? a.run_cap : 2 * a.ell + 2;
        rep                = check_c_ell_bounded(M, a.ell, exp_cap, run_cap);
      } else {
        rep = check_c_ell_exact(M, a.ell);
      }
      if (g.json_out) {
        out << report_to_json(rep).dump() << '\n';
      } else {
        print_report(out, rep);
      }
      return verdict_code(rep.verdict);
    }

    struct VarietyArgs {
      std::string algebra;
      std::string member;
    };

    int do_variety(VarietyArgs const& a, Globals const& g, std::ostream& out) {
      auto const S   = load_algebra(a.algebra);
      auto const T   = load_algebra(a.member);
      auto const res = variety_contains(S, T);
      json       doc = {{"contains", res.contains}, {"closure_size", res.closure_size}};
      if (res.certificate) {
        doc["certificate"] = res.certificate->to_string();
      }
      if (g.json_out) {
        out << doc.dump() << '\n';
      } else if (res.contains) {
        out << "contains (closure size " << res.closure_size << ")\n";
      } else {
        out << "does not contain; certificate: " << res.certificate->to_string()
            << '\n';
      }
      return verdict_code(res.contains);
    }

    struct FindArgs {
      std::string        algebra;
      IdentitySearchCaps caps;
      std::size_t        limit = 0;
    };

    int do_find(FindArgs const& a, Globals const& g, std::ostream& out) {
      auto const M   = load_algebra(a.algebra);
      auto const ids = find_identities(M, a.caps);
      std::size_t const shown =
          a.limit == 0 ? ids.size() : std::min(a.limit, ids.size());
      if (g.json_out) {
        json list = json::array();
        for (std::size_t i = 0; i < shown; ++i) {
          list.push_back(ids[i].to_string());
        }
        out << json{{"count", ids.size()},
                    {"caps",
                     {{"max_vars", a.caps.max_vars},
                      {"max_runs", a.caps.max_runs},
                      {"exp_cap", a.caps.exp_cap}}},
                    {"identities", std::move(list)}}
                   .dump()
            << '\n';
      } else {
        for (std::size_t i = 0; i < shown; ++i) {
          out << ids[i].to_string() << '\n';
        }
        if (shown < ids.size()) {
          out << "... " << ids.size() - shown << " more\n";
        }
      }
      return exit_code::holds;
    }

    struct WordArgs {
      std::string which;
      std::string word;
      std::size_t n = 0;
    };

    int do_word_conditions(WordArgs const& a, Globals const& g, std::ostream& out) {
      Word const u = parse_word(a.word);
      if (a.which == "2let") {
        bool const ok = check_2let(u);
        if (g.json_out) {
          out << json{{"verdict", ok}}.dump() << '\n';
        } else {
          out << (ok ? "holds" : "fails") << '\n';
        }
        return verdict_code(ok);
      }
      if (a.which == "sem-shape") {
        auto const shape = check_sem_shape(u);
        bool const ok    = shape.kind != SemShape::Kind::Other;
        if (g.json_out) {
          json doc = {{"shape", shape.to_string()}};
          if (shape.x) {
            doc["x"] = shape.x->name();
          }
          out << doc.dump() << '\n';
        } else {
          out << shape.to_string() << '\n';
        }
        return verdict_code(ok);
      }
      ConditionReport rep;
      if (a.which == "manylet") {
        rep = check_manylet(u);
      } else {
        rep = check_un_properties(u, a.n != 0 ? a.n : content(u).size());
      }
      if (g.json_out) {
        out << report_to_json(rep).dump() << '\n';
      } else {
        print_report(out, rep);
      }
      return verdict_code(rep.verdict);
    }

    struct ReproArgs {
      std::uint64_t seed  = 1;
      bool          quick = false;
    };

    int do_repro(ReproArgs const& a, Globals const& g, std::ostream& out) {
      ReproOptions opts;
      opts.seed    = a.seed;
      opts.quick   = a.quick;
      opts.threads = g.threads;
      bool all     = true;
      for (auto const& r : repro_suite(opts)) {
        all = all && r.passed();
        if (g.json_out) {
          out << r.to_json().dump() << std::endl;
        } else {
          out << (r.passed() ? "PASS " : "FAIL ") << r.claim << "  ("
              << static_cast<long long>(r.elapsed_ms) << " ms)\n";
        }
      }
      return verdict_code(all);
    }

    struct FuzzArgs {
      std::string   target = "unvn";
      std::string   algebra;
      FuzzConfig    cfg;
      bool          uniform = false;
    };

    int do_fuzz(FuzzArgs a, Globals const& g, std::ostream& out) {
      a.cfg.target   = a.target == "el30" ? FuzzTarget::Lee30 : FuzzTarget::UnVn;
      a.cfg.sampling = a.uniform ? FuzzSampling::Uniform : FuzzSampling::Guided;
      a.cfg.threads  = g.threads;
      FiniteAlgebra const M = !a.algebra.empty() ? load_algebra(a.algebra)
                              : a.cfg.target == FuzzTarget::UnVn ? lee_monoid(4)
                                                                 : lee_semigroup(3);
      auto const r = tau_fuzz(M, a.cfg);
      if (g.json_out) {
        out << r.to_json().dump() << '\n';
      } else {
        auto const& ev = r.evidence;
        out << (r.passed() ? "PASS " : "FAIL ") << r.claim << ": "
            << ev.value("matched_instances", 0) << " matched substitutions over "
            << ev.value("trials_run", 0) << " trials, "
            << ev.value("violations", 0) << " violations (bounded randomized "
            << "falsifier)\n";
        if (ev.contains("note")) {
          out << "note: " << ev["note"].get<std::string>() << '\n';
        }
        if (ev.contains("witness")) {
          out << "witness: " << ev["witness"].dump() << '\n';
        }
      }
      return verdict_code(r.passed());
    }

  }  // namespace

  int run_cli(std::vector<std::string> const& args, std::ostream& out,
              std::ostream& err) {
    CLI::App app{"Workbench for Lee semigroups and monoids", "lee"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json_out, "Print JSON instead of text");
    app.add_option("--threads", g.threads, "Worker threads; results do not depend on it")
        ->check(CLI::Range(1U, 256U));

    BuildArgs build;
    auto*     build_cmd = app.add_subcommand("build", "Build L_ell or L_ell^1");
    build_cmd->add_option("--ell", build.ell, "Length of the forbidden word")
        ->required()
        ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
    build_cmd->add_flag("--monoid", build.monoid, "Adjoin an identity");
    build_cmd->add_option("--out", build.out, "Output path (default: stdout)");

    IdentityArgs ident;
    auto* ident_cmd = app.add_subcommand("check-identity", "Check an identity u == v");
    ident_cmd->add_option("--algebra", ident.algebra, "Algebra JSON file")->required();
    ident_cmd->add_option("--id", ident.id, "Identity text \"u == v\"")->required();

    ClArgs cl;
    auto*  cl_cmd = app.add_subcommand("check-cl", "Check the height-ell type-term property");
    cl_cmd->add_option("--algebra", cl.algebra, "Algebra JSON file")->required();
    cl_cmd->add_option("--ell", cl.ell, "Height bound")
        ->required()
        ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
    auto* exact   = cl_cmd->add_flag("--exact", cl.exact, "Decide through variety membership");
    auto* bounded = cl_cmd->add_flag("--bounded", cl.bounded, "Search for violations within caps");
    exact->excludes(bounded);
    cl_cmd->add_option("--exp-cap", cl.exp_cap, "Exponent cap (default: index + period)")
        ->needs(bounded);
    cl_cmd->add_option("--run-cap", cl.run_cap, "Run cap (default: 2 ell + 2)")
        ->needs(bounded);

    VarietyArgs var;
    auto*       var_cmd =
        app.add_subcommand("variety-contains", "Decide whether var S contains T");
    var_cmd->add_option("--algebra", var.algebra, "S, as algebra JSON")->required();
    var_cmd->add_option("--member", var.member, "T, as algebra JSON with generators")
        ->required();

    FindArgs find;
    auto*    find_cmd = app.add_subcommand("find-identities", "List identities within caps");
    find_cmd->add_option("--algebra", find.algebra, "Algebra JSON file")->required();
    find_cmd->add_option("--max-vars", find.caps.max_vars)->capture_default_str();
    find_cmd->add_option("--max-runs", find.caps.max_runs)->capture_default_str();
    find_cmd->add_option("--exp-cap", find.caps.exp_cap)->capture_default_str();
    find_cmd->add_option("--limit", find.limit, "Print at most this many (0: all)");

    WordArgs word;
    auto*    word_cmd =
        app.add_subcommand("check-word-conditions", "Check word conditions");
    word_cmd->add_option("condition", word.which, "2let, manylet, un-props or sem-shape")
        ->required()
        ->check(CLI::IsMember({"2let", "manylet", "un-props", "sem-shape"}));
    word_cmd->add_option("--word", word.word, "The word")->required();
    word_cmd->add_option("--n", word.n, "Index for un-props (default: |con(u)|)");

    ReproArgs repro;
    auto*     repro_cmd = app.add_subcommand("repro", "Run the reproduction suite");
    repro_cmd->add_option("--seed", repro.seed)->capture_default_str();
    repro_cmd->add_flag("--quick", repro.quick, "Smaller fuzz and property budgets");

    FuzzArgs fuzz;
    auto*    fuzz_cmd = app.add_subcommand("fuzz", "Randomized type-preservation falsifier");
    fuzz_cmd->add_option("--target", fuzz.target, "unvn (L_4^1) or el30 (L_3)")
        ->check(CLI::IsMember({"unvn", "el30"}))
        ->capture_default_str();
    fuzz_cmd->add_option("--algebra", fuzz.algebra, "Algebra JSON (default by target)");
    fuzz_cmd->add_option("--seed", fuzz.cfg.seed)->capture_default_str();
    fuzz_cmd->add_option("--trials", fuzz.cfg.trials)
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    fuzz_cmd->add_option("--n", fuzz.cfg.n)->capture_default_str();
    fuzz_cmd->add_option("--max-vars", fuzz.cfg.identity_caps.max_vars)->capture_default_str();
    fuzz_cmd->add_option("--max-runs", fuzz.cfg.identity_caps.max_runs)->capture_default_str();
    fuzz_cmd->add_option("--exp-cap", fuzz.cfg.identity_caps.exp_cap)->capture_default_str();
    fuzz_cmd->add_option("--target-exp-cap", fuzz.cfg.exp_cap,
                         "Exponent cap of target words (0: index + period)");
    fuzz_cmd->add_option("--solution-cap", fuzz.cfg.solution_cap)->capture_default_str();
    fuzz_cmd->add_option("--stop-after", fuzz.cfg.stop_after_matches,
                         "Stop after this many matched substitutions (0: never)");
    fuzz_cmd->add_flag("--uniform", fuzz.uniform, "Draw identities uniformly");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? exit_code::holds : exit_code::usage;
    }

    try {
      if (build_cmd->parsed()) {
        return do_build(build, g, out);
      }
      if (ident_cmd->parsed()) {
        return do_check_identity(ident, g, out);
      }
      if (cl_cmd->parsed()) {
        if (!cl.exact && !cl.bounded) {
          err << "check-cl: pass --exact or --bounded\n";
          return exit_code::usage;
        }
        return do_check_cl(cl, g, out);
      }
      if (var_cmd->parsed()) {
        return do_variety(var, g, out);
      }
      if (find_cmd->parsed()) {
        return do_find(find, g, out);
      }
      if (word_cmd->parsed()) {
        return do_word_conditions(word, g, out);
      }
      if (repro_cmd->parsed()) {
        return do_repro(repro, g, out);
      }
      return do_fuzz(fuzz, g, out);
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return exit_code::usage;
    }
  }

}  // namespace leewb
