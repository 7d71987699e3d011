#include <cstdint>
#include <cstdlib>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tsid/constructions.hpp"
#include "tsid/counting.hpp"
#include "tsid/covers.hpp"
#include "tsid/errors.hpp"
#include "tsid/io.hpp"
#include "tsid/property.hpp"
#include "tsid/quasirandom.hpp"
#include "tsid/report.hpp"

namespace {

using namespace tsid;

constexpr int exit_holds = 0;
constexpr int exit_error = 1;
constexpr int exit_violated = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

template <class F>
auto with_file_context(const std::string& path, F&& parse) {
  try {
    return parse(read_file(path));
  } catch (const ParseError& e) {
    throw Error("parse error in " + path + ", " + e.what());
  }
}

Digraph load_digraph(const std::string& path) {
  return with_file_context(path, [](const std::string& text) { return parse_dgf(text); });
}

// TRN/1 has a one-number header; anything else is read as DGF/1.
Tournament load_tournament(const std::string& path) {
  return with_file_context(path, [](const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line) && !line.empty() && line.front() == '#') {}
    std::istringstream header(line);
    long long a = 0, b = 0;
    if ((header >> a) && !(header >> b)) return parse_trn(text);
    return Tournament(parse_dgf(text));
  });
}

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dots = item.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoi(item));
        continue;
      }
      const int lo = std::stoi(item.substr(0, dots));
      const int hi = std::stoi(item.substr(dots + 2));
      if (hi < lo) throw PreconditionError("empty range '" + item + "'");
      for (int n = lo; n <= hi; ++n) out.push_back(n);
    } catch (const std::logic_error&) {
      throw PreconditionError("bad size list '" + text + "' (use 6, 4..14 or 4,8,12)");
    }
  }
  if (out.empty()) throw PreconditionError("empty size list");
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::logic_error&) {
      throw PreconditionError("bad integer list '" + text + "'");
    }
  }
  return out;
}

Rational parse_exact(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw PreconditionError(std::string(what) + ": " + e.what());
  }
}

std::uint64_t require_seed(const RunConfig& c, const std::string& why) {
  if (!c.seed) throw PreconditionError(why + " is randomized and needs an explicit --seed");
  return *c.seed;
}

void record_options(const CLI::App& sub, RunConfig& c) {
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->count() == 0 || opt->get_single_name() == "help") continue;
    std::string joined;
    for (const auto& r : opt->results()) joined += (joined.empty() ? "" : " ") + r;
    if (opt->nonpositional()) c.flags[opt->get_single_name()] = joined.empty() ? "true" : joined;
    else
      for (const auto& r : opt->results()) c.args.push_back(r);
  }
}

void write_output(const RunConfig& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw PreconditionError("cannot write '" + c.output + "'");
  out << text;
}

void emit(const RunConfig& c, const std::string& kind, Json result) {
  const Json env = make_envelope(c, kind, std::move(result));
  write_output(c, c.format == OutputFormat::Json ? env.dump(2) + "\n" : render_text(env));
}

int verdict_exit(Verdict v) { return v == Verdict::ViolatedBy ? exit_violated : exit_holds; }

CountOptions count_options(const RunConfig& c) { return CountOptions{c.budget, std::nullopt}; }

ScanOptions scan_options(const RunConfig& c, bool dedup) { return ScanOptions{c.threads, dedup, count_options(c)}; }

std::uint64_t env_budget() {
  const char* v = std::getenv("TSID_WORK_BUDGET");
  if (v == nullptr || *v == '\0') return default_work_budget;
  try {
    std::size_t used = 0;
    const std::uint64_t b = std::stoull(v, &used);
    if (used != std::string(v).size() || b == 0) throw std::invalid_argument("");
    return b;
  } catch (const std::logic_error&) {
    throw PreconditionError(std::string("TSID_WORK_BUDGET must be a positive integer, got '") + v + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tournament subgraph densities: exact counts, property checks, constructions"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::string format = "json";
  auto* seed_opt = app.add_option("--seed", seed, "Seed for randomized commands (required by them)");
  auto* budget_opt = app.add_option("--budget", budget, "Work budget per count (node expansions); TSID_WORK_BUDGET overrides the default");
  app.add_option("--threads", cfg.threads, "Worker threads for exhaustive scans (0 = hardware)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("-o,--output", cfg.output, "Write the report here instead of stdout");

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "Write a named construction as DGF/1");
  std::string family;
  std::vector<long long> params;
  construct_cmd->add_option("family", family, "Family name")->required();
  construct_cmd->add_option("params", params, "Integer parameters");
  construct_cmd->footer("Families: " + [] {
    std::string s;
    for (const auto& f : family_names()) s += (s.empty() ? "" : ", ") + f;
    return s;
  }());

  // count
  auto* count = app.add_subcommand("count", "Exact count of a pattern in a tournament");
  std::string pattern_file, host_file, mode_name = "labeled", pins;
  count->add_option("pattern", pattern_file, "Pattern, DGF/1")->required();
  count->add_option("host", host_file, "Host tournament, TRN/1 or DGF/1")->required();
  count->add_option("--mode", mode_name, "labeled or hom")->check(CLI::IsMember({"labeled", "hom", "homomorphisms"}));
  count->add_option("--pin", pins, "Pinned vertices as v:image,v:image");

  // check
  auto* check = app.add_subcommand("check", "Check a property and emit a report");
  std::string property;
  int exhaustive = 0;
  std::string family_name, n_list, c_text = "0", base_file, pin_list;
  int blow_m = 2;
  bool dedup = false;
  check->add_option("property", property, "anti, sidorenko, strong, impartial or blowup")
      ->required()
      ->check(CLI::IsMember({"anti", "sidorenko", "strong", "impartial", "blowup"}));
  check->add_option("pattern", pattern_file, "Pattern, DGF/1")->required();
  check->add_option("--exhaustive", exhaustive, "All tournaments on 1..N vertices");
  check->add_option("--family", family_name, "Host family")->check(CLI::IsMember({"transitive", "blowup", "two-block"}));
  check->add_option("--n", n_list, "Host sizes: 6, 4..14 or 4,8,12 (impartial: largest n)");
  check->add_option("--c", c_text, "Two-block fraction c in [0,1], exact decimal or p/q");
  check->add_option("--base", base_file, "Blowup family base digraph (default: the pattern)");
  check->add_option("--mode", mode_name, "Family and Sidorenko scans: labeled or hom")->check(CLI::IsMember({"labeled", "hom", "homomorphisms"}));
  check->add_option("--pin", pin_list, "Strong check: pinned independent set, comma separated");
  check->add_option("--m", blow_m, "Blowup factor for the falsifier")->check(CLI::PositiveNumber);
  check->add_flag("--dedup", dedup, "Only score-sorted tournament codes");

  // quasi
  auto* quasi = app.add_subcommand("quasi", "Quasirandom direction epsilon of a tournament");
  int transitive_n = -1;
  std::vector<std::string> two_block;
  std::uint64_t samples = 0;
  quasi->add_option("host", host_file, "Host tournament, TRN/1 or DGF/1");
  quasi->add_option("--transitive", transitive_n, "Use TT_N");
  quasi->add_option("--two-block", two_block, "C N: two-block host (needs --seed)")->expected(2);
  quasi->add_option("--samples", samples, "Sampled estimate with this many draws (needs --seed)");

  // cover
  auto* cover = app.add_subcommand("cover", "Biclique covers and uniqueness checks");
  cover->require_subcommand(1);
  auto* hyper = cover->add_subcommand("hypercube", "Hypercube cover of 2^r vertices with k parts");
  int r_bits = 0, k_parts = 0;
  std::string bcv_out;
  hyper->add_option("r", r_bits, "Dimension; the host has 2^r vertices")->required();
  hyper->add_option("k", k_parts, "Number of parts, 1 <= k <= r")->required();
  hyper->add_option("--write-bcv", bcv_out, "Also write the cover as BCV/1");
  auto* verify = cover->add_subcommand("verify", "Verify a BCV/1 cover of the underlying graph of a DGF/1 file");
  std::string cover_file;
  verify->add_option("host", host_file, "Host, DGF/1 (edge directions ignored)")->required();
  verify->add_option("cover", cover_file, "Cover, BCV/1")->required();
  auto* two_path = cover->add_subcommand("two-path", "Adjacent-or-2-path condition on every pair");
  two_path->add_option("pattern", pattern_file, "Digraph, DGF/1")->required();
  auto* probe = cover->add_subcommand("probe", "Homomorphism multiplicity over seeded random hosts (needs --seed)");
  std::uint64_t trials = 100;
  probe->add_option("pattern", pattern_file, "Pattern, DGF/1")->required();
  probe->add_option("--trials", trials, "Number of random hosts")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_error;
  }

  try {
    if (*seed_opt) cfg.seed = seed;
    cfg.budget = *budget_opt ? budget : env_budget();
    if (cfg.budget == 0) throw PreconditionError("--budget must be positive");
    cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
    CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    if (sub == cover) {
      sub = cover->get_subcommands().front();
      cfg.command += " " + sub->get_name();
    }
    record_options(*sub, cfg);

    if (sub == construct_cmd) {
      const Construction c = tsid::construct(family, params);
      std::string out = "# tsid construct " + c.family;
      for (long long p : c.params) out += " " + std::to_string(p);
      out += "\n";
      for (const auto& note : c.notes) {
        out += "# warning: " + note + "\n";
        std::cerr << "warning: " << note << "\n";
      }
      write_output(cfg, out + to_dgf(c.digraph));
      return exit_holds;
    }

    if (sub == count) {
      const Digraph d = load_digraph(pattern_file);
      const Tournament t = load_tournament(host_file);
      const CountMode mode = count_mode_from_string(mode_name);
      std::vector<int> pinned, anchor;
      if (!pins.empty()) {
        std::stringstream ss(pins);
        std::string item;
        std::vector<std::pair<int, int>> pairs;
        while (std::getline(ss, item, ',')) {
          const auto colon = item.find(':');
          if (colon == std::string::npos) throw PreconditionError("--pin expects v:image pairs, got '" + item + "'");
          try {
            pairs.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
          } catch (const std::logic_error&) {
            throw PreconditionError("--pin expects integers, got '" + item + "'");
          }
        }
        std::sort(pairs.begin(), pairs.end());
        for (const auto& [v, img] : pairs) {
          pinned.push_back(v);
          anchor.push_back(img);
        }
      }
      CountResult res;
      if (mode == CountMode::Labeled && !pinned.empty()) {
        VertexSet set(d.order());
        for (int v : pinned) set.insert(v);
        res = count_labeled_pinned(PinnedPattern{d, set, anchor}, t, count_options(cfg));
      } else {
        res.value = PatternCounter(d, mode, pinned).count(t.graph(), anchor, count_options(cfg));
        res.bound = anti_bound(d, t.order(), static_cast<int>(pinned.size()));
        res.ratio = res.bound == 0 ? Rational(0) : Rational(res.value) / res.bound;
      }
      Json j{{"pattern", to_json(d)}, {"host_n", t.order()}, {"host_trn", trn_bits(t)}, {"mode", to_string(mode)}, {"pinned", pinned}, {"anchor", anchor}};
      const Json body = to_json(res);
      for (const auto& [k, v] : body.items()) j[k] = v;
      emit(cfg, "count", std::move(j));
      return exit_holds;
    }

    if (sub == check) {
      const Digraph d = load_digraph(pattern_file);
      PropertyReport report;
      if (property == "blowup") {
        const auto f = falsify_by_blowup(d, blow_m, count_options(cfg));
        Json j{{"digraph", to_json(d)}, {"applicable", f.has_value()}};
        bool violated = false;
        if (f) {
          const Rational baseline = pow2(-d.edge_count());
          violated = f->density > baseline;
          j["falsifier"] = to_json(*f);
          j["baseline"] = to_json(baseline);
        }
        j["verdict"] = violated ? "violated-by" : "holds-up-to";
        emit(cfg, "blowup", std::move(j));
        return violated ? exit_violated : exit_holds;
      }
      if (property == "impartial") {
        const auto sizes = parse_n_list(n_list.empty() ? std::to_string(exhaustive) : n_list);
        report = check_impartial(d, *std::max_element(sizes.begin(), sizes.end()), count_options(cfg));
      } else if (property == "strong") {
        if (exhaustive <= 0) throw PreconditionError("strong check needs --exhaustive N");
        VertexSet set(d.order());
        for (int v : parse_int_list(pin_list)) set.insert(v);
        report = check_strong_anti(d, set, exhaustive, scan_options(cfg, dedup));
      } else if (!family_name.empty()) {
        if (property != "anti") throw PreconditionError("family scans support the anti property only");
        if (n_list.empty()) throw PreconditionError("--family needs --n");
        HostFamily fam;
        if (family_name == "transitive") fam.kind = HostFamily::Kind::Transitive;
        if (family_name == "blowup") {
          fam.kind = HostFamily::Kind::Blowup;
          fam.base = base_file.empty() ? d : load_digraph(base_file);
        }
        if (family_name == "two-block") {
          fam.kind = HostFamily::Kind::TwoBlock;
          fam.c = parse_exact(c_text, "--c");
          fam.seed = require_seed(cfg, "the two-block family");
        }
        report = check_anti_on_family(d, fam, parse_n_list(n_list), count_mode_from_string(mode_name), count_options(cfg));
      } else {
        if (exhaustive <= 0) throw PreconditionError("give --exhaustive N or --family NAME --n LIST");
        report = property == "anti" ? check_anti_exhaustive(d, exhaustive, scan_options(cfg, dedup))
                                    : check_sidorenko_scan(d, exhaustive, scan_options(cfg, dedup),
                                                           count_mode_from_string(mode_name));
      }
      report.provenance = pattern_file;
      emit(cfg, "property", to_json(report));
      return verdict_exit(report.verdict);
    }

    if (sub == quasi) {
      std::optional<Tournament> host;
      std::string source;
      if (transitive_n >= 0) {
        host = Tournament::transitive(transitive_n);
        source = "transitive";
      } else if (!two_block.empty()) {
        const Rational c = parse_exact(two_block[0], "--two-block C");
        int n = 0;
        try {
          n = std::stoi(two_block[1]);
        } catch (const std::logic_error&) {
          throw PreconditionError("--two-block N must be an integer");
        }
        host = two_block_tournament({n, c, require_seed(cfg, "the two-block host")});
        source = "two-block";
      } else if (!host_file.empty()) {
        host = load_tournament(host_file);
        source = host_file;
      } else {
        throw PreconditionError("give a host file, --transitive N or --two-block C N");
      }
      const Tournament& t = *host;
      EpsilonResult eps;
      if (samples > 0 || t.order() > quasirandom_exact_guard) {
        const std::uint64_t draws = samples > 0 ? samples : 4096;
        eps = quasirandom_epsilon_sampled(t, draws, require_seed(cfg, "sampled epsilon"));
      } else {
        eps = quasirandom_epsilon_exact(t);
      }
      Json j{{"host", source}};
      const Json body = to_json(eps);
      for (const auto& [k, v] : body.items()) j[k] = v;
      if (!eps.exact) j["note"] = "best of sampled sets A: a lower bound on epsilon";
      emit(cfg, "quasi", std::move(j));
      return exit_holds;
    }

    if (sub == hyper) {
      const HypercubeCover hc = hypercube_cover(r_bits, k_parts);
      const long long n = hc.host.order();
      const long long s = n * (n - 1) / 2 - hc.host.edge_count();
      const long long w = cover_weight(hc.cover);
      const TtClaimReport tt = check_tt_claim(hc.host, hc.cover);
      const auto identity = remark_identity_exact(n, s, w);
      Json j{{"r", r_bits}, {"k", k_parts}, {"n", n}, {"s", s}, {"weight", w}};
      j["verify"] = to_json(verify_cover(hc.host, hc.cover));
      j["remark_bound_approx"] = remark_bound(n, s);
      j["remark_identity"] = identity ? Json(*identity) : Json(nullptr);
      j["leading_lower_bound_approx"] = leading_lower_bound(n, s);
      j["leading_lower_bound_note"] = std::string(leading_lower_bound_note);
      j["tt_claim"] = to_json(tt);
      if (!bcv_out.empty()) {
        std::ofstream out(bcv_out, std::ios::binary);
        if (!out) throw PreconditionError("cannot write '" + bcv_out + "'");
        out << to_bcv(hc.cover);
      }
      emit(cfg, "cover-hypercube", std::move(j));
      return tt.holds && identity.value_or(false) ? exit_holds : exit_violated;
    }

    if (sub == verify) {
      const UndirectedGraph h = underlying(load_digraph(host_file));
      const BicliqueCover c = with_file_context(cover_file, [](const std::string& text) { return parse_bcv(text); });
      const CoverCheck res = verify_cover(h, c);
      Json j = to_json(res);
      j["weight"] = cover_weight(c);
      if (res.ok) j["tt_claim"] = to_json(check_tt_claim(h, c));
      emit(cfg, "cover-verify", std::move(j));
      return res.ok ? exit_holds : exit_violated;
    }

    if (sub == two_path) {
      const TwoPathCheck res = two_path_condition(load_digraph(pattern_file));
      emit(cfg, "two-path", to_json(res));
      return res.ok ? exit_holds : exit_violated;
    }

    if (sub == probe) {
      const Digraph d = load_digraph(pattern_file);
      const MultiplicityProbe res =
          homomorphism_multiplicity_probe(d, trials, require_seed(cfg, "the multiplicity probe"), std::max(cfg.threads, 1), count_options(cfg));
      emit(cfg, "probe", to_json(res));
      return res.max_count <= 1 && res.designed_count == 1 ? exit_holds : exit_violated;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "tsid: work budget exhausted (not a zero count): " << e.what() << "\n";
    return exit_error;
  } catch (const std::exception& e) {
    std::cerr << "tsid: " << e.what() << "\n";
    return exit_error;
  }
  return exit_error;
}
