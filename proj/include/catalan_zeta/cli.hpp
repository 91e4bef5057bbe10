#pragma once

// catalan-zeta command line: enumeration, the word/path bijection, path
// statistics, zeta, the Speyer step, trees and the count table. Plain
// output is line oriented; json output is stable-ordered and timing-free
// so identical invocations print identical bytes.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "catalan_zeta/catalan_zeta.hpp"

namespace catalan_zeta {

namespace detail {

inline bool want_color(const std::ostream& os) {
  if (const char* env = std::getenv("CATALAN_ZETA_COLOR"))
    if (std::string_view(env) == "never") return false;
  if (&os == &std::cout) return isatty(fileno(stdout)) != 0;
  if (&os == &std::cerr) return isatty(fileno(stderr)) != 0;
  return false;
}

inline std::string colored(bool enable, const char* code, const std::string& text) {
  if (!enable) return text;
  return std::string("\033[") + code + "m" + text + "\033[0m";
}

inline std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace detail

/// Runs the command line given the arguments after the program name.
/// Returns the process exit code: 0 success, 1 domain or verification
/// failure, 2 usage error.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using nlohmann::ordered_json;

  CLI::App app{"Catalan-family words, Dyck paths, the zeta map and planted trees",
               "catalan-zeta"};
  app.require_subcommand(1);
  std::string format = "plain";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"plain", "json"}));

  std::string enum_kind;
  int enum_size = 0;
  auto* cmd_enumerate = app.add_subcommand("enumerate", "list all words or paths of one size");
  cmd_enumerate->fallthrough();
  cmd_enumerate->add_option("kind", enum_kind, "words or paths")
      ->required()
      ->check(CLI::IsMember({"words", "paths"}));
  cmd_enumerate->add_option("size", enum_size, "word length or path semilength")->required();

  std::string map_direction, map_input;
  bool map_trace = false;
  auto* cmd_map = app.add_subcommand("map", "apply the word/path bijection");
  cmd_map->fallthrough();
  cmd_map->add_option("direction", map_direction, "word-to-path or path-to-word")
      ->required()
      ->check(CLI::IsMember({"word-to-path", "path-to-word"}));
  cmd_map->add_option("input", map_input, "word or path")->required();
  cmd_map->add_flag("--trace", map_trace, "print every intermediate stage");

  std::string stats_input;
  auto* cmd_stats = app.add_subcommand("stats", "statistics of a path");
  cmd_stats->fallthrough();
  cmd_stats->add_option("path", stats_input, "path in N/E letters")->required();

  std::string zeta_input;
  bool zeta_inv = false;
  auto* cmd_zeta = app.add_subcommand("zeta", "apply zeta to a path");
  cmd_zeta->fallthrough();
  cmd_zeta->add_option("path", zeta_input, "path in N/E letters")->required();
  cmd_zeta->add_flag("--inverse", zeta_inv, "apply the inverse map");

  std::string speyer_input;
  bool speyer_inv = false;
  auto* cmd_speyer = app.add_subcommand("speyer", "merge the first two arches of a path");
  cmd_speyer->fallthrough();
  cmd_speyer->add_option("path", speyer_input, "path in N/E letters")->required();
  cmd_speyer->add_flag("--inverse", speyer_inv, "split the first arch instead");

  std::string tree_action, tree_input;
  auto* cmd_tree = app.add_subcommand("tree", "planted tree of a word and back");
  cmd_tree->fallthrough();
  cmd_tree->add_option("action", tree_action, "from-word, to-word or crucial")
      ->required()
      ->check(CLI::IsMember({"from-word", "to-word", "crucial"}));
  cmd_tree->add_option("input", tree_input, "word, parentheses or parent array")->required();

  int tutte_n = 0;
  auto* cmd_tutte = app.add_subcommand("tutte", "count table as a polynomial in x and y");
  cmd_tutte->fallthrough();
  cmd_tutte->add_option("n", tutte_n, "path semilength")->required();

  int verify_max_n = std::numeric_limits<int>::max();
  unsigned verify_seed = 1;
  auto* cmd_verify = app.add_subcommand("verify", "run every invariant suite");
  cmd_verify->fallthrough();
  cmd_verify->add_option("--max-n", verify_max_n, "cap the exhaustive bounds");
  cmd_verify->add_option("--seed", verify_seed, "seed for the randomized trials");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  const bool json = format == "json";

  try {
    if (*cmd_enumerate) {
      if (enum_kind == "words" && enum_size < 1) {
        err << "error: word length must be at least 1\n";
        return 2;
      }
      if (enum_kind == "paths" && enum_size < 0) {
        err << "error: path semilength must be nonnegative\n";
        return 2;
      }
      std::vector<std::string> items;
      if (enum_kind == "words") {
        for (const Word& w : all_words_a(enum_size)) items.push_back(w.str());
      } else {
        DyckPathEnumerator e(enum_size);
        while (auto p = e.next()) items.push_back(p->str());
      }
      if (json) {
        ordered_json j;
        j["count"] = items.size();
        j["items"] = items;
        out << j.dump() << "\n";
      } else {
        for (const std::string& s : items) out << s << "\n";
        out << "count=" << items.size() << "\n";
      }
      return 0;
    }

    if (*cmd_map) {
      std::vector<std::pair<std::string, std::string>> trace;
      std::string result;
      if (map_direction == "word-to-path") {
        const Word w = parse_word(map_input);
        const WordToPathStages s = word_to_path_stages(w);
        trace = {{"word", w.str()},
                 {"b_word", s.b_word.str()},
                 {"area_sequence", s.area.str()},
                 {"pre_zeta_path", s.pre_zeta.str()},
                 {"zeta_image", s.zeta_image.str()},
                 {"stripped_path", s.result.str()}};
        result = s.result.str();
      } else {
        const DyckPath p = parse_path(map_input);
        const PathToWordStages s = path_to_word_stages(p);
        trace = {{"path", p.str()},
                 {"wrapped_path", s.wrapped.str()},
                 {"zeta_preimage", s.preimage.str()},
                 {"area_sequence", s.area.str()},
                 {"word", s.result.str()}};
        result = s.result.str();
      }
      if (json) {
        ordered_json j;
        j["result"] = result;
        if (map_trace) {
          ordered_json t = ordered_json::array();
          for (const auto& [stage, value] : trace)
            t.push_back(ordered_json{{"stage", stage}, {"value", value}});
          j["trace"] = t;
        }
        out << j.dump() << "\n";
      } else {
        if (map_trace)
          for (const auto& [stage, value] : trace) out << stage << "=" << value << "\n";
        out << result << "\n";
      }
      return 0;
    }

    if (*cmd_stats) {
      const DyckPath p = parse_path(stats_input);
      const AreaSequence a = area_sequence_of(p);
      if (json) {
        ordered_json j;
        j["area"] = area(p);
        j["dinv"] = dinv(p);
        j["bounce"] = bounce(p);
        j["rises"] = rises(p);
        j["returns"] = returns(p);
        j["inner_touch_points"] = inner_touch_points(p);
        j["area_sequence"] = a.entries();
        out << j.dump() << "\n";
      } else {
        out << "area=" << area(p) << "\n";
        out << "dinv=" << dinv(p) << "\n";
        out << "bounce=" << bounce(p) << "\n";
        out << "rises=" << rises(p) << "\n";
        out << "returns=" << returns(p) << "\n";
        out << "inner_touch_points=" << inner_touch_points(p) << "\n";
        out << "area_sequence=" << a.str() << "\n";
      }
      return 0;
    }

    if (*cmd_zeta || *cmd_speyer) {
      const bool is_zeta = static_cast<bool>(*cmd_zeta);
      const DyckPath p = parse_path(is_zeta ? zeta_input : speyer_input);
      const bool inverse = is_zeta ? zeta_inv : speyer_inv;
      const DyckPath q = is_zeta ? (inverse ? zeta_inverse(p) : zeta(p))
                                 : (inverse ? speyer_step_inverse(p) : speyer_step(p));
      if (json) {
        out << ordered_json{{"result", q.str()}}.dump() << "\n";
      } else {
        out << q.str() << "\n";
      }
      return 0;
    }

    if (*cmd_tree) {
      if (tree_action == "from-word") {
        const Word w = parse_word(tree_input);
        const PlantedTree t = tree_from_area_sequence(area_sequence_from_entries(w.entries()));
        if (json) {
          ordered_json j;
          j["result"] = t.parent_array_str();
          j["parens"] = t.parenthesis_str();
          out << j.dump() << "\n";
        } else {
          out << t.parent_array_str() << "\n";
        }
      } else if (tree_action == "to-word") {
        const AreaSequence a = area_sequence_from_tree(parse_tree(tree_input));
        if (json)
          out << ordered_json{{"result", a.str()}}.dump() << "\n";
        else
          out << a.str() << "\n";
      } else {
        const std::vector<int> crucial = crucial_vertices(parse_tree(tree_input));
        if (json)
          out << ordered_json{{"result", crucial}}.dump() << "\n";
        else
          out << detail::join_ints(crucial) << "\n";
      }
      return 0;
    }

    if (*cmd_tutte) {
      if (tutte_n < 0) {
        err << "error: the size must be nonnegative\n";
        return 2;
      }
      const StatTable table = tutte_polynomial(tutte_n);
      if (json) {
        ordered_json j;
        j["n"] = table.n();
        j["polynomial"] = table.polynomial_str();
        ordered_json rows = ordered_json::array();
        for (const auto& [key, count] : table.counts())
          rows.push_back(
              ordered_json{{"p", key.first}, {"q", key.second}, {"count", count}});
        j["table"] = rows;
        out << j.dump() << "\n";
      } else {
        out << table.polynomial_str() << "\n";
      }
      return 0;
    }

    if (*cmd_verify) {
      if (verify_max_n < 1) {
        err << "error: --max-n must be at least 1\n";
        return 2;
      }
      VerifyOptions opts;
      opts.max_n = verify_max_n;
      opts.seed = verify_seed;
      const std::vector<SuiteResult> results = run_all(opts);
      const bool ok = all_passed(results);
      if (json) {
        ordered_json j;
        j["passed"] = ok;
        ordered_json suites = ordered_json::array();
        for (const SuiteResult& r : results) {
          suites.push_back(ordered_json{{"name", r.name},
                                        {"bound", r.bound},
                                        {"checked", r.checked},
                                        {"passed", r.passed},
                                        {"fail_n", r.fail_n},
                                        {"counterexample", r.counterexample}});
        }
        j["suites"] = suites;
        out << j.dump() << "\n";
      } else {
        const bool color = detail::want_color(out);
        std::size_t failed = 0;
        for (const SuiteResult& r : results) {
          out << std::left << std::setw(24) << r.name
              << (r.passed ? detail::colored(color, "32", "pass")
                           : detail::colored(color, "31", "FAIL"))
              << "  bound=" << r.bound << "  checked=" << r.checked << "  time=" << std::fixed
              << std::setprecision(1) << r.millis << "ms\n";
          if (!r.passed) {
            ++failed;
            if (r.fail_n >= 0) out << "  counterexample (n=" << r.fail_n << "): ";
            else out << "  ";
            out << r.counterexample << "\n";
          }
        }
        if (ok)
          out << "all " << results.size() << " suites passed\n";
        else
          out << failed << " of " << results.size() << " suites failed\n";
      }
      return ok ? 0 : 1;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no command given\n";
  return 2;
}

}  // namespace catalan_zeta
