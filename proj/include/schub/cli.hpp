#pragma once

// Command-line front end.  run_cli parses a subcommand plus options, executes
// it against the library, and writes either plain text or JSON to the given
// stream.  Exit codes: 0 on success, 1 when a verified property violation is
// found (negative scan verdict, identity-suite failure, or cross-method
// disagreement), 2 on usage or input errors.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "schub/bracket.hpp"
#include "schub/divdiff.hpp"
#include "schub/identities.hpp"
#include "schub/nilcox.hpp"
#include "schub/perm.hpp"
#include "schub/poly.hpp"
#include "schub/scan.hpp"
#include "schub/schubert.hpp"
#include "schub/schur.hpp"
#include "schub/skewop.hpp"

namespace schub {
namespace detail {

/// Rank ceiling for CLI work, read from SCHUBERT_MAX_N (default 6).
inline int max_rank_cap() {
  const char* s = std::getenv("SCHUBERT_MAX_N");
  if (s == nullptr || *s == '\0') return 6;
  char* end = nullptr;
  const long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0' || v < 1 || v > 16)
    throw std::invalid_argument(
        "SCHUBERT_MAX_N must be an integer between 1 and 16");
  return static_cast<int>(v);
}

inline void check_rank(int n, int cap) {
  if (n < 1) throw std::invalid_argument("rank must be at least 1");
  if (n > cap)
    throw std::invalid_argument("rank " + std::to_string(n) +
                                " exceeds the limit " + std::to_string(cap) +
                                " (set SCHUBERT_MAX_N to raise it)");
}

inline std::vector<int> cli_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    if (first == std::string::npos)
      throw std::invalid_argument("empty entry in integer list '" + text + "'");
    token = token.substr(first, last - first + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer '" + token + "' in list '" + text + "'");
    }
    if (used != token.size())
      throw std::invalid_argument("bad integer '" + token + "' in list '" + text + "'");
    out.push_back(value);
  }
  return out;
}

/// Accepts either a one-line permutation "2,1,4,3" (embedded into rank n) or
/// a word of adjacent transpositions "s:2,1,3,2,1" multiplied out in rank n.
inline Perm parse_perm_arg(const std::string& text, int n) {
  if (text.rfind("s:", 0) == 0) {
    const std::vector<int> letters = cli_int_list(text.substr(2));
    for (int a : letters)
      if (a < 1 || a >= n)
        throw std::invalid_argument("word letter " + std::to_string(a) +
                                    " out of range for rank " + std::to_string(n));
    return from_word(Word(letters.begin(), letters.end()), n);
  }
  const std::vector<int> img = cli_int_list(text);
  if (img.empty()) throw std::invalid_argument("empty permutation '" + text + "'");
  const Perm p{img};  // validates that img is a permutation of 1..k
  if (p.n() > n)
    throw std::invalid_argument("permutation '" + text + "' is longer than rank " +
                                std::to_string(n));
  return embed(p, n);
}

inline nlohmann::ordered_json expansion_json(const SchubExpansion& e) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [w, c] : e.coeffs) obj[to_string(w)] = c;
  return obj;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact divided-difference and Schubert-polynomial calculator"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  int schubert_n = 0;
  std::string schubert_perm;
  CLI::App* cmd_schubert = app.add_subcommand("schubert", "Print a Schubert polynomial");
  cmd_schubert->add_option("--n", schubert_n, "Rank")->required();
  cmd_schubert->add_option("--perm", schubert_perm, "Permutation")->required();

  int skew_n = 0;
  std::string skew_w, skew_v, skew_poly;
  CLI::App* cmd_skew = app.add_subcommand("skew-apply", "Apply a skew operator to a polynomial");
  cmd_skew->add_option("--n", skew_n, "Rank")->required();
  cmd_skew->add_option("--w", skew_w, "Upper permutation")->required();
  cmd_skew->add_option("--v", skew_v, "Lower permutation")->required();
  cmd_skew->add_option("--poly", skew_poly, "Polynomial to act on")->required();

  int con_n = 0;
  std::string con_u, con_v, con_method = "all";
  CLI::App* cmd_con = app.add_subcommand(
      "constants", "Expand a product of Schubert polynomials in the Schubert basis");
  cmd_con->add_option("--n", con_n, "Rank")->required();
  cmd_con->add_option("--u", con_u, "First factor")->required();
  cmd_con->add_option("--v", con_v, "Second factor")->required();
  cmd_con->add_option("--method", con_method, "Computation route")
      ->check(CLI::IsMember({"product", "skew", "paths", "all"}));

  int ss_n = 0;
  std::string ss_w, ss_v;
  CLI::App* cmd_ss = app.add_subcommand("skew-schubert", "Print a skew Schubert polynomial");
  cmd_ss->add_option("--n", ss_n, "Rank")->required();
  cmd_ss->add_option("--w", ss_w, "Upper permutation")->required();
  cmd_ss->add_option("--v", ss_v, "Lower permutation")->required();

  std::string key_alpha, key_v;
  int key_n = 0;
  CLI::App* cmd_key = app.add_subcommand("key", "Print a (skew) key polynomial");
  cmd_key->add_option("--alpha", key_alpha, "Weak composition")->required();
  CLI::Option* key_v_opt = cmd_key->add_option("--v", key_v, "Lower permutation");
  cmd_key->add_option("--n", key_n, "Rank override for parsing --v");

  int br_n = 0;
  std::string br_w, br_v;
  std::int64_t br_budget = 0;
  CLI::App* cmd_br = app.add_subcommand(
      "bracket", "Print the bracket-word expansion of a skew operator");
  cmd_br->add_option("--n", br_n, "Rank")->required();
  cmd_br->add_option("--w", br_w, "Upper permutation")->required();
  cmd_br->add_option("--v", br_v, "Lower permutation")->required();
  CLI::Option* br_search_opt = cmd_br->add_option(
      "--search", br_budget, "Rewrite-search budget (states examined)");

  std::string schur_lambda, schur_mu, schur_nu;
  int schur_n = 0;
  CLI::App* cmd_schur = app.add_subcommand(
      "schur", "Print a skew Schur polynomial or a Littlewood-Richardson number");
  cmd_schur->add_option("--lambda", schur_lambda, "Outer shape")->required();
  cmd_schur->add_option("--mu", schur_mu, "Inner shape");
  CLI::Option* schur_nu_opt =
      cmd_schur->add_option("--nu", schur_nu, "Weight shape: count tableaux instead");
  cmd_schur->add_option("--n", schur_n, "Number of variables")->required();

  int scan_n = 0, scan_workers = 0;
  std::string scan_mode, scan_out;
  bool scan_resume = false;
  CLI::App* cmd_scan = app.add_subcommand(
      "scan", "Stream positivity verdicts for skew operators applied to Schubert polynomials");
  cmd_scan->add_option("--n", scan_n, "Rank")->required();
  cmd_scan->add_option("--mode", scan_mode, "Pair selection: edges or full")
      ->required()
      ->check(CLI::IsMember({"edges", "full"}));
  cmd_scan->add_option("--out", scan_out, "Output JSON-lines file")->required();
  cmd_scan->add_flag("--resume", scan_resume, "Skip keys already in the output file");
  cmd_scan->add_option("--workers", scan_workers, "Worker threads (0 = auto)");

  int ver_n = 0;
  unsigned int ver_seed = 42;
  CLI::App* cmd_ver = app.add_subcommand("verify", "Run the identity suites");
  cmd_ver->add_option("--n", ver_n, "Rank")->required();
  cmd_ver->add_option("--seed", ver_seed, "Random seed for sampled checks");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const bool json = format == "json";
  const auto emit = [&](const nlohmann::ordered_json& j) { out << j.dump(2) << '\n'; };

  try {
    const int cap = detail::max_rank_cap();

    if (*cmd_schubert) {
      detail::check_rank(schubert_n, cap);
      const Perm w = detail::parse_perm_arg(schubert_perm, schubert_n);
      const Poly f = schubert_poly(w);
      if (json)
        emit({{"n", schubert_n}, {"perm", to_string(w)}, {"schubert", to_string(f)}});
      else
        out << to_string(f) << '\n';
      return 0;
    }

    if (*cmd_skew) {
      detail::check_rank(skew_n, cap);
      const Perm w = detail::parse_perm_arg(skew_w, skew_n);
      const Perm v = detail::parse_perm_arg(skew_v, skew_n);
      const Poly f = parse_poly(skew_poly);
      const Poly result = skew_apply(w, v, f);
      if (json)
        emit({{"n", skew_n},
              {"w", to_string(w)},
              {"v", to_string(v)},
              {"poly", to_string(f)},
              {"result", to_string(result)}});
      else
        out << to_string(result) << '\n';
      return 0;
    }

    if (*cmd_con) {
      detail::check_rank(con_n, cap);
      const Perm u = detail::parse_perm_arg(con_u, con_n);
      const Perm v = detail::parse_perm_arg(con_v, con_n);
      const int target = length(u) + length(v);

      const auto by_product = [&] { return constants_by_product(u, v, con_n); };
      const auto by_skew = [&] {
        SchubExpansion e;
        e.n = con_n;
        for (const Perm& w : all_perms(con_n)) {
          if (length(w) != target || !bruhat_leq(v, w)) continue;
          const std::int64_t c = constants_by_skew(u, v, w, con_n);
          if (c != 0) e.coeffs.emplace(w, c);
        }
        return e;
      };
      const auto by_paths = [&] {
        SchubExpansion e;
        e.n = con_n;
        for (const Perm& w : all_perms(con_n)) {
          if (length(w) != target) continue;
          const NilCoxElem paths = path_sum_constants(w, u, con_n);
          const auto it = paths.coeffs.find(v);
          if (it == paths.coeffs.end()) continue;
          const std::int64_t c = it->second.constant_term();
          if (c != 0) e.coeffs.emplace(w, c);
        }
        return e;
      };

      if (con_method != "all") {
        const SchubExpansion e = con_method == "product" ? by_product()
                                 : con_method == "skew"  ? by_skew()
                                                         : by_paths();
        if (json)
          emit({{"n", con_n},
                {"u", to_string(u)},
                {"v", to_string(v)},
                {"method", con_method},
                {"expansion", detail::expansion_json(e)}});
        else
          out << to_string(e) << '\n';
        return 0;
      }

      const SchubExpansion ep = by_product();
      const SchubExpansion es = by_skew();
      const SchubExpansion eq = by_paths();
      const bool agree = ep.coeffs == es.coeffs && ep.coeffs == eq.coeffs;
      if (json) {
        emit({{"n", con_n},
              {"u", to_string(u)},
              {"v", to_string(v)},
              {"methods",
               {{"product", detail::expansion_json(ep)},
                {"skew", detail::expansion_json(es)},
                {"paths", detail::expansion_json(eq)}}},
              {"agreement", agree}});
      } else {
        out << "product: " << to_string(ep) << '\n';
        out << "skew: " << to_string(es) << '\n';
        out << "paths: " << to_string(eq) << '\n';
        out << "agreement: " << (agree ? "yes" : "no") << '\n';
      }
      return agree ? 0 : 1;
    }

    if (*cmd_ss) {
      detail::check_rank(ss_n, cap);
      const Perm w = detail::parse_perm_arg(ss_w, ss_n);
      const Perm v = detail::parse_perm_arg(ss_v, ss_n);
      const Poly f = skew_schubert(w, v);
      if (json)
        emit({{"n", ss_n},
              {"w", to_string(w)},
              {"v", to_string(v)},
              {"skew_schubert", to_string(f)}});
      else
        out << to_string(f) << '\n';
      return 0;
    }

    if (*cmd_key) {
      const std::vector<int> alpha = detail::cli_int_list(key_alpha);
      for (int a : alpha)
        if (a < 0) throw std::invalid_argument("composition parts must be nonnegative");
      const Perm sorter = w_of_composition(alpha);
      detail::check_rank(std::max(1, sorter.n()), cap);
      Poly f;
      std::string v_text;
      if (key_v_opt->count() > 0) {
        const int rank = key_n > 0 ? key_n : std::max(2, sorter.n());
        detail::check_rank(rank, cap);
        const Perm v = detail::parse_perm_arg(key_v, rank);
        v_text = to_string(v);
        f = skew_key_poly(alpha, v);
      } else {
        f = key_poly(alpha);
      }
      if (json) {
        nlohmann::ordered_json j{{"alpha", alpha}};
        if (!v_text.empty()) j["v"] = v_text;
        j["key"] = to_string(f);
        emit(j);
      } else {
        out << to_string(f) << '\n';
      }
      return 0;
    }

    if (*cmd_br) {
      detail::check_rank(br_n, cap);
      const Perm w = detail::parse_perm_arg(br_w, br_n);
      const Perm v = detail::parse_perm_arg(br_v, br_n);
      const BracketElem e = bracket_skew(w, v);
      std::optional<std::string> rewrite;
      if (br_search_opt->count() > 0) {
        if (br_budget < 1) throw std::invalid_argument("search budget must be positive");
        const std::optional<BracketElem> found = rewrite_search(e, br_budget);
        rewrite = found ? to_string(*found) : std::string{};
      }
      if (json) {
        nlohmann::ordered_json j{
            {"n", br_n}, {"w", to_string(w)}, {"v", to_string(v)}, {"element", to_string(e)}};
        if (rewrite) {
          if (rewrite->empty())
            j["rewrite"] = nullptr;
          else
            j["rewrite"] = *rewrite;
        }
        emit(j);
      } else {
        out << to_string(e) << '\n';
        if (rewrite) {
          if (rewrite->empty())
            out << "rewrite: none within budget\n";
          else
            out << "rewrite: " << *rewrite << '\n';
        }
      }
      return 0;
    }

    if (*cmd_schur) {
      const std::vector<int> lambda = detail::cli_int_list(schur_lambda);
      const std::vector<int> mu = detail::cli_int_list(schur_mu);
      if (schur_nu_opt->count() > 0) {
        const std::vector<int> nu = detail::cli_int_list(schur_nu);
        const std::int64_t count = lr_numbers(lambda, mu, nu);
        if (json)
          emit({{"lambda", lambda}, {"mu", mu}, {"nu", nu}, {"count", count}});
        else
          out << count << '\n';
        return 0;
      }
      detail::check_rank(schur_n, cap);
      const Poly f = skew_schur_jt(lambda, mu, schur_n);
      if (json)
        emit({{"lambda", lambda}, {"mu", mu}, {"n", schur_n}, {"schur", to_string(f)}});
      else
        out << to_string(f) << '\n';
      return 0;
    }

    if (*cmd_scan) {
      detail::check_rank(scan_n, cap);
      const ScanSummary s = run_scan(scan_n, scan_mode_from_string(scan_mode), scan_out,
                                     scan_resume, scan_workers);
      if (json) {
        emit({{"n", scan_n},
              {"mode", scan_mode},
              {"out", scan_out},
              {"checked", s.checked},
              {"skipped", s.skipped},
              {"positives", s.positives},
              {"negatives", s.negatives}});
      } else {
        out << "checked: " << s.checked << '\n';
        out << "skipped: " << s.skipped << '\n';
        out << "positives: " << s.positives << '\n';
        out << "negatives: " << s.negatives << '\n';
      }
      return s.negatives > 0 ? 1 : 0;
    }

    if (*cmd_ver) {
      detail::check_rank(ver_n, cap);
      const IdentityReport report = run_identities(ver_n, ver_seed);
      if (json) {
        nlohmann::ordered_json items = nlohmann::ordered_json::array();
        for (const IdentityItem& item : report.items)
          items.push_back({{"name", item.name}, {"pass", item.pass}, {"detail", item.detail}});
        emit({{"n", report.n},
              {"seed", report.seed},
              {"items", items},
              {"all_pass", report.all_pass()}});
      } else {
        out << to_string(report);
      }
      return report.all_pass() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  err << "error: no subcommand selected\n";
  return 2;
}

}  // namespace schub
