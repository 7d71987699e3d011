#include "tsid/report.hpp"

#include <sstream>

#include "tsid/errors.hpp"
#include "tsid/io.hpp"

namespace tsid {

Json to_json(const Rational& q) {
  return Json{{"num", boost::multiprecision::numerator(q).str()}, {"den", boost::multiprecision::denominator(q).str()}};
}

Rational rational_from_json(const Json& j) {
  try {
    const BigInt num(j.at("num").get<std::string>());
    const BigInt den(j.at("den").get<std::string>());
    if (den == 0) throw PreconditionError("rational with zero denominator");
    return Rational(num, den);
  } catch (const Json::exception& e) {
    throw PreconditionError(std::string("malformed rational: ") + e.what());
  } catch (const std::runtime_error& e) {
    throw PreconditionError(std::string("malformed rational: ") + e.what());
  }
}

Json to_json(const Digraph& d) {
  Json edges = Json::array();
  for (const Edge& e : d.edges()) edges.push_back({e.from, e.to});
  return Json{{"n", d.order()}, {"edges", std::move(edges)}};
}

Digraph digraph_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  return Digraph(n, edges);
}

std::string to_string(Property p) {
  switch (p) {
    case Property::AntiSidorenkoUpTo: return "anti-sidorenko-up-to";
    case Property::SidorenkoRatioScan: return "sidorenko-ratio-scan";
    case Property::StrongAntiUpTo: return "strong-anti-up-to";
    case Property::Impartial: return "impartial";
    case Property::QuasirandomDirection: return "quasirandom-direction";
  }
  return "?";
}

Property property_from_string(const std::string& s) {
  for (Property p : {Property::AntiSidorenkoUpTo, Property::SidorenkoRatioScan, Property::StrongAntiUpTo,
                     Property::Impartial, Property::QuasirandomDirection})
    if (to_string(p) == s) return p;
  throw PreconditionError("unknown property '" + s + "'");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::HoldsUpTo: return "holds-up-to";
    case Verdict::ViolatedBy: return "violated-by";
    case Verdict::ScanOnly: return "scan-only";
  }
  return "?";
}

std::string to_string(CountMode m) { return m == CountMode::Labeled ? "labeled" : "homomorphisms"; }

CountMode count_mode_from_string(const std::string& s) {
  if (s == "labeled") return CountMode::Labeled;
  if (s == "homomorphisms" || s == "hom") return CountMode::Homomorphisms;
  throw PreconditionError("unknown count mode '" + s + "' (labeled, hom)");
}

namespace {

std::string regime_kind(Regime::Kind k) {
  switch (k) {
    case Regime::Kind::Exhaustive: return "exhaustive";
    case Regime::Kind::Family: return "family";
    case Regime::Kind::Sampled: return "sampled";
  }
  return "?";
}

Json witness_json(const Tournament& t, const std::vector<int>& anchor, const Rational& ratio) {
  return Json{{"n", t.order()},
              {"trn", trn_bits(t)},
              {"anchor", anchor},
              {"ratio", to_json(ratio)},
              {"ratio_approx", to_double(ratio)}};
}

}  // namespace

Json to_json(const PropertyReport& r) {
  Json regime{{"kind", regime_kind(r.regime.kind)}};
  if (r.regime.kind == Regime::Kind::Exhaustive) regime["n_max"] = r.regime.n_max;
  if (!r.regime.family.empty()) regime["family"] = r.regime.family;
  if (!r.regime.params.empty()) regime["params"] = r.regime.params;
  if (r.regime.kind == Regime::Kind::Sampled) regime["count"] = r.regime.count;
  if (r.regime.kind != Regime::Kind::Exhaustive) regime["seed"] = r.regime.seed;

  Json curve = Json::array();
  for (const RatioPoint& p : r.curve) {
    Json row{{"n", p.n},
             {"hosts", p.hosts},
             {"max_value", p.max_value.str()},
             {"min_value", p.min_value.str()},
             {"bound", to_json(p.bound)},
             {"max_ratio", to_json(p.max_ratio)},
             {"min_ratio", to_json(p.min_ratio)},
             {"max_ratio_approx", to_double(p.max_ratio)},
             {"min_ratio_approx", to_double(p.min_ratio)}};
    if (r.regime.kind == Regime::Kind::Exhaustive) {
      row["argmax_code"] = p.argmax_code;
      row["argmin_code"] = p.argmin_code;
    }
    curve.push_back(std::move(row));
  }
  Json j;
  j["digraph"] = to_json(r.digraph);
  j["provenance"] = r.provenance;
  j["property"] = to_string(r.property);
  j["mode"] = to_string(r.mode);
  j["pinned"] = r.pinned;
  j["regime"] = std::move(regime);
  j["verdict"] = to_string(r.verdict);
  j["extremal_ratio"] = to_json(r.extremal_ratio);
  j["extremal_ratio_approx"] = to_double(r.extremal_ratio);
  j["witness"] = r.witness ? witness_json(*r.witness, r.witness_anchor, r.witness_ratio) : Json(nullptr);
  j["curve"] = std::move(curve);
  j["notes"] = r.notes;
  return j;
}

Json to_json(const CountResult& r) {
  return Json{{"value", r.value.str()},
              {"bound", to_json(r.bound)},
              {"ratio", to_json(r.ratio)},
              {"ratio_approx", to_double(r.ratio)}};
}

Json to_json(const EpsilonResult& r) {
  return Json{{"n", r.a.universe()},
              {"epsilon", to_json(r.epsilon)},
              {"epsilon_approx", to_double(r.epsilon)},
              {"excess", r.excess},
              {"a", r.a.members()},
              {"b", r.b.members()},
              {"exact", r.exact},
              {"samples", r.samples}};
}

Json to_json(const ImpartialResult& r) {
  Json counts = Json::array();
  for (const BigInt& c : r.count_by_n) counts.push_back(c.str());
  Json j{{"impartial", r.impartial}, {"count_by_n", std::move(counts)}};
  if (r.witness) j["witness"] = Json::array({trn_bits(r.witness->first), trn_bits(r.witness->second)});
  return j;
}

Json to_json(const BlowupFalsifier& f) {
  return Json{{"m", f.m},
              {"host_n", f.host.order()},
              {"host_trn", trn_bits(f.host)},
              {"density", to_json(f.density)},
              {"density_approx", to_double(f.density)},
              {"threshold", to_json(f.threshold)}};
}

Json to_json(const InterpolationResult& r) {
  Json trace = Json::array();
  for (const InterpolationStep& s : r.trace)
    trace.push_back({{"u", s.u}, {"v", s.v}, {"h", s.h.str()}, {"delta", s.delta.str()}});
  Json j{{"step_bound", r.step_bound.str()}, {"max_delta", r.max_delta.str()}};
  j["crossing_step"] = r.crossing_step ? Json(*r.crossing_step) : Json(nullptr);
  j["crossing_trn"] = r.crossing_step ? Json(trn_bits(r.crossing)) : Json(nullptr);
  j["trace"] = std::move(trace);
  return j;
}

Json to_json(const std::vector<ForcingRow>& rows) {
  Json out = Json::array();
  for (const ForcingRow& r : rows)
    out.push_back({{"n", r.n},
                   {"host", r.host},
                   {"density", to_json(r.density)},
                   {"deviation", to_json(r.deviation)},
                   {"deviation_approx", to_double(r.deviation)},
                   {"epsilon_approx", r.epsilon},
                   {"epsilon_exact", r.epsilon_exact}});
  return out;
}

namespace {

Json pair_or_null(const std::optional<std::pair<int, int>>& p) {
  return p ? Json::array({p->first, p->second}) : Json(nullptr);
}

}  // namespace

Json to_json(const CoverCheck& c) {
  Json j{{"ok", c.ok}, {"uncovered", pair_or_null(c.uncovered)}, {"extraneous", pair_or_null(c.extraneous)}};
  j["overlapping_part"] = c.overlapping_part ? Json(*c.overlapping_part) : Json(nullptr);
  return j;
}

Json to_json(const TtClaimReport& r) {
  Json rows = Json::array();
  for (const TtRow& row : r.rows)
    rows.push_back({{"t", row.t}, {"size", row.size}, {"bound_approx", row.bound}, {"slack_approx", row.slack}, {"holds", row.holds}});
  return Json{{"s", r.s}, {"holds", r.holds}, {"rows", std::move(rows)}};
}

Json to_json(const TwoPathCheck& c) { return Json{{"ok", c.ok}, {"bad_pair", pair_or_null(c.bad_pair)}}; }

Json to_json(const MultiplicityProbe& p) {
  return Json{{"trials", p.trials},
              {"max_count", p.max_count},
              {"argmax_trial", p.argmax_trial},
              {"designed_count", p.designed_count},
              {"counts_capped_at", 2},
              {"note", "sampled hosts plus the designed host; not exhaustive over all tournaments"}};
}

Json to_json(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  j["args"] = c.args;
  j["flags"] = Json::object();
  for (const auto& [k, v] : c.flags) j["flags"][k] = v;
  j["seed"] = c.seed ? Json(std::to_string(*c.seed)) : Json(nullptr);
  j["budget"] = std::to_string(c.budget);
  j["threads"] = c.threads;
  j["output"] = c.output;
  j["format"] = c.format == OutputFormat::Json ? "json" : "text";
  return j;
}

RunConfig run_config_from_json(const Json& j) {
  RunConfig c;
  try {
    c.command = j.at("command").get<std::string>();
    c.args = j.at("args").get<std::vector<std::string>>();
    for (const auto& [k, v] : j.at("flags").items()) c.flags[k] = v.get<std::string>();
    if (!j.at("seed").is_null()) c.seed = std::stoull(j.at("seed").get<std::string>());
    c.budget = std::stoull(j.at("budget").get<std::string>());
    c.threads = j.value("threads", 0);
    c.output = j.value("output", std::string());
    const std::string format = j.value("format", std::string("json"));
    if (format != "json" && format != "text") throw PreconditionError("unknown format '" + format + "'");
    c.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
  } catch (const Json::exception& e) {
    throw PreconditionError(std::string("malformed run config: ") + e.what());
  } catch (const std::logic_error& e) {
    throw PreconditionError(std::string("malformed run config: ") + e.what());
  }
  return c;
}

Json make_envelope(const RunConfig& c, const std::string& kind, Json result) {
  Json config = to_json(c);
  config.erase("threads");
  config.erase("output");
  return Json{{"schema", report_schema_id}, {"config", std::move(config)}, {"kind", kind}, {"result", std::move(result)}};
}

namespace {

void render(const Json& j, const std::string& path, std::string& out) {
  if (j.is_object() && j.contains("num") && j.contains("den") && j.size() == 2) {
    out += path + ": " + j["num"].get<std::string>() + "/" + j["den"].get<std::string>() + "\n";
    return;
  }
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render(v, path.empty() ? k : path + "." + k, out);
    return;
  }
  if (j.is_array()) {
    bool scalar = true;
    for (const auto& v : j) scalar = scalar && v.is_primitive();
    if (scalar) {
      out += path + ": " + j.dump() + "\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) render(j[i], path + "[" + std::to_string(i) + "]", out);
    return;
  }
  out += path + ": " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
}

}  // namespace

std::string render_text(const Json& j) {
  std::string out;
  render(j, "", out);
  return out;
}

WitnessCheck reverify_witness(const Json& report) {
  WitnessCheck w;
  const Json& r = report.contains("result") ? report.at("result") : report;
  if (!r.contains("witness") || r.at("witness").is_null()) {
    w.message = "no witness";
    return w;
  }
  w.present = true;
  const Digraph d = digraph_from_json(r.at("digraph"));
  const Json& wit = r.at("witness");
  const int n = wit.at("n").get<int>();
  const Tournament t = parse_trn(std::to_string(n) + "\n" + wit.at("trn").get<std::string>() + "\n");
  const auto pinned = r.at("pinned").get<std::vector<int>>();
  const auto anchor = wit.at("anchor").get<std::vector<int>>();
  const CountMode mode = count_mode_from_string(r.at("mode").get<std::string>());
  const PatternCounter counter(d, mode, pinned);
  const BigInt value = counter.count(t.graph(), anchor);
  const Rational bound = anti_bound(d, n, static_cast<int>(pinned.size()));
  w.ratio = bound == 0 ? Rational(0) : Rational(value) / bound;
  const Rational claimed = rational_from_json(wit.at("ratio"));
  w.confirmed = w.ratio == claimed && w.ratio > 1;
  std::ostringstream msg;
  msg << "recomputed ratio " << w.ratio.str() << (w.ratio == claimed ? " matches" : " differs from") << " the reported "
      << claimed.str();
  w.message = msg.str();
  return w;
}

}  // namespace tsid
