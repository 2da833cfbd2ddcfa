#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "germ/local.hpp"
#include "germ/oracle.hpp"
#include "germ/poly.hpp"
#include "germ/rational_set.hpp"
#include "germ/search.hpp"

namespace germ::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kInconclusive = 2;

std::string order_label(int n) { return n == -1 ? "a-1" : "a" + std::to_string(n); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Germ order on eventually periodic sets and D-avoiding winners", "germ"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string d_text;
  std::size_t m_max = 0, block_max = 0, prefix_max = 0, length = 0, horizon = 0, ell = 0, max_period = 0;
  std::string set_a, set_b, set_text, bits, file;
  bool open_left = false, force = false;

  auto* winner_cmd = app.add_subcommand("winner", "Search for a certified winner");
  winner_cmd->add_option("--d", d_text, "Forbidden distances, e.g. 3,5")->required();
  winner_cmd->add_option("--m-max", m_max, "Longest repeatable window tried (default 4*||D||)");
  winner_cmd->add_option("--block-max", block_max, "Longest repeating block tried (default 2*||D||+2)");
  winner_cmd->add_option("--prefix-max", prefix_max, "Longest leading block tried (default 4*block-max)");

  auto* best_cmd = app.add_subcommand("best", "Germ-maximal D-avoiding string of a given length");
  best_cmd->add_option("--d", d_text)->required();
  best_cmd->add_option("--len", length)->required();

  auto* greedy_cmd = app.add_subcommand("greedy", "Greedy D-avoiding string and detected period");
  greedy_cmd->add_option("--d", d_text)->required();
  greedy_cmd->add_option("--horizon", horizon)->required();

  auto* compare_cmd = app.add_subcommand("compare", "Germ comparison of two sets written pre|rep");
  compare_cmd->add_option("--a", set_a)->required();
  compare_cmd->add_option("--b", set_b)->required();

  auto* valuation_cmd = app.add_subcommand("valuation", "Density and constant term of a set");
  valuation_cmd->add_option("--set", set_text)->required();

  auto* improve_cmd = app.add_subcommand("improve", "Local improvement to an l-maximal fixpoint");
  improve_cmd->add_option("--d", d_text)->required();
  improve_cmd->add_option("--w", bits)->required();
  improve_cmd->add_option("--ell", ell, "Patch length (default ||D||)");
  improve_cmd->add_flag("--open-left", open_left, "Also rewrite the first ||D|| positions (shorter left context)");

  auto* certify_cmd = app.add_subcommand("certify", "Verify a stored certificate");
  certify_cmd->add_option("--file", file)->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference answers");
  oracle_cmd->require_subcommand(1);
  auto* oracle_best = oracle_cmd->add_subcommand("best", "Exhaustive germ-maximal string");
  oracle_best->add_option("--d", d_text)->required();
  oracle_best->add_option("--len", length)->required();
  oracle_best->add_flag("--force", force, "Exceed the enumeration cap");
  auto* oracle_periodic = oracle_cmd->add_subcommand("periodic", "Exhaustive best purely periodic set");
  oracle_periodic->add_option("--d", d_text)->required();
  oracle_periodic->add_option("--max-period", max_period)->required();
  oracle_periodic->add_flag("--force", force, "Exceed the enumeration cap");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }

  try {
    if (winner_cmd->parsed()) {
      DistanceSet d = DistanceSet::parse(d_text);
      SearchOutcome res = winner(d, SearchBudget{m_max, block_max, prefix_max});
      if (!res.certificate) {
        out << json{{"status", "inconclusive"}, {"diagnostic", res.diagnostic}}.dump(2) << "\n";
        return kInconclusive;
      }
      out << to_json(*res.certificate).dump(2) << "\n";
      return kOk;
    }
    if (best_cmd->parsed()) {
      if (length == 0) throw std::invalid_argument("--len must be positive");
      DistanceSet d = DistanceSet::parse(d_text);
      std::string s = best_string(d, length);
      if (as_json) out << json{{"distances", d.to_string()}, {"length", length}, {"best", s}}.dump(2) << "\n";
      else out << s << "\n";
      return kOk;
    }
    if (greedy_cmd->parsed()) {
      DistanceSet d = DistanceSet::parse(d_text);
      GreedyResult g = greedy(d, horizon);
      if (as_json) {
        json j{{"bits", g.bits}};
        j["detected"] = g.detected ? set_to_json(*g.detected) : json(nullptr);
        out << j.dump(2) << "\n";
      } else {
        out << g.bits << "\n" << "period: " << (g.detected ? g.detected->to_string() : std::string("none detected")) << "\n";
      }
      return kOk;
    }
    if (compare_cmd->parsed()) {
      RationalSet a = RationalSet::parse(set_a);
      RationalSet b = RationalSet::parse(set_b);
      auto ord = set_compare(a, b);
      auto gap = leading_laurent_gap(gen_fun(a), gen_fun(b));
      if (as_json) {
        json j{{"ordering", ordering_name(ord)}};
        j["gap"] = gap ? json{{"order", gap->order}, {"value", rational_string(gap->value)}} : json(nullptr);
        out << j.dump(2) << "\n";
      } else {
        out << ordering_name(ord);
        if (gap) out << "\ngap " << order_label(gap->order) << " = " << rational_string(gap->value);
        out << "\n";
      }
      return kOk;
    }
    if (valuation_cmd->parsed()) {
      RationalSet s = RationalSet::parse(set_text);
      if (as_json) {
        out << set_to_json(s).dump(2) << "\n";
      } else {
        Valuation v = valuation(s);
        out << "density " << rational_string(v.density()) << "\na0 " << rational_string(v.a0()) << "\n";
      }
      return kOk;
    }
    if (improve_cmd->parsed()) {
      DistanceSet d = DistanceSet::parse(d_text);
      require_bits(bits);
      if (ell == 0) ell = std::max<std::size_t>(d.norm(), 1);
      SweepOptions opts;
      opts.open_left = open_left;
      SweepResult r = sweep_to_fixpoint(bits, ell, d, opts);
      std::string delta = ordering_name(bits_germ_compare(r.bits, bits));
      if (as_json) {
        out << json{{"fixpoint", r.bits}, {"delta", delta}, {"improvements", r.improvements}, {"passes", r.passes}}.dump(2)
            << "\n";
      } else {
        out << r.bits << "\n" << "delta " << delta << "\n";
      }
      return kOk;
    }
    if (certify_cmd->parsed()) {
      std::ifstream in(file);
      if (!in) throw std::invalid_argument("cannot open " + file);
      json j;
      try {
        j = json::parse(in);
      } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
      }
      Certificate cert = certificate_from_json(j);
      bool ok = verify(cert);
      if (as_json) out << json{{"valid", ok}, {"kind", kind_name(cert.kind())}}.dump(2) << "\n";
      else out << (ok ? "valid" : "invalid") << " " << kind_name(cert.kind()) << " " << cert.winner.to_string() << "\n";
      return ok ? kOk : kInvalid;
    }
    if (oracle_best->parsed()) {
      DistanceSet d = DistanceSet::parse(d_text);
      oracle::Caps caps;
      caps.allow_exceed = force;
      std::string s = oracle::brute_best(d, length, caps);
      if (as_json) out << json{{"distances", d.to_string()}, {"length", length}, {"best", s}}.dump(2) << "\n";
      else out << s << "\n";
      return kOk;
    }
    if (oracle_periodic->parsed()) {
      DistanceSet d = DistanceSet::parse(d_text);
      oracle::Caps caps;
      caps.allow_exceed = force;
      RationalSet s = oracle::brute_best_periodic(d, max_period, caps);
      if (as_json) out << set_to_json(s).dump(2) << "\n";
      else out << s.to_string() << "\n";
      return kOk;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace germ::cli
