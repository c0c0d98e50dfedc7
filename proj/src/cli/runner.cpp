#include "okaforge/cli/runner.hpp"

#include <algorithm>
#include <sstream>

#include "okaforge/cli/expression.hpp"
#include "okaforge/error.hpp"

namespace okaforge::cli {

namespace {

const std::vector<std::string> kCommands = {"classify", "construct", "embed", "verify", "double-points", "reduce", "guard"};

template <class T>
T option(const Json& j, const char* name, T fallback) {
  if (!j.contains(name)) return fallback;
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::ParseError, std::string("option '") + name + "' has the wrong type");
  }
}

std::optional<std::string> optional_text(const Json& j, const char* name) {
  if (!j.contains(name)) return std::nullopt;
  if (!j.at(name).is_string()) throw Error(ErrorCode::ParseError, std::string("'") + name + "' must be a string");
  return j.at(name).get<std::string>();
}

PuncturedPlane plane_of(const JobSpec& job) { return PuncturedPlane{job.punctures}; }
PuncturedCircularDomain circular_of(const JobSpec& job) { return PuncturedCircularDomain{job.holes, job.punctures}; }
bool circular(const JobSpec& job) { return job.domain == "circular"; }

void require_valid(const JobSpec& job) {
  std::vector<Violation> v = circular(job) ? validate(circular_of(job)) : validate(plane_of(job));
  if (!v.empty()) {
    Json list = Json::array();
    for (const auto& x : v) list.push_back(to_json(x));
    throw Error(ErrorCode::InvalidParameter, "domain violates constraints: " + list.dump());
  }
}

const WindingClass& require_windings(const JobSpec& job) {
  if (!job.windings) throw Error(ErrorCode::ParseError, "windings are required for " + job.command);
  return *job.windings;
}

MapPair require_map(const JobSpec& job) {
  if (!job.map) throw Error(ErrorCode::ParseError, "a map is required for " + job.command);
  return parse_map(*job.map);
}

EnumerationOptions enumeration(const JobSpec& job) {
  EnumerationOptions e;
  e.tol = job.options.tol;
  e.precision = job.options.precision;
  e.max_precision = std::max<mpfr_prec_t>(1024, job.options.precision);
  return e;
}

struct Outcome {
  Json result = Json::object();
  bool pass = true;
};

void add_certificate(Outcome& o, Json& into, const std::string& name, const Certificate& c, bool counts = true) {
  into[name] = to_json(c);
  if (counts && !c.passed()) o.pass = false;
}

GaussianRational default_c(const PuncturedPlane& X) {
  long c = 0;
  while (std::find(X.punctures.begin(), X.punctures.end(), GaussianRational(c)) != X.punctures.end()) ++c;
  return GaussianRational(c);
}

Outcome do_classify(const JobSpec& job) {
  MapPair m = require_map(job);
  require_valid(job);
  WindingClass w = circular(job) ? classify_map(m, circular_of(job)) : classify_map(m, plane_of(job));
  Outcome o;
  o.result["map"] = to_json(m);
  o.result["windings"] = to_json(w);
  return o;
}

Outcome do_construct(const JobSpec& job) {
  require_valid(job);
  const WindingClass& w = require_windings(job);
  Outcome o;
  Json certs = Json::object();
  if (circular(job)) {
    PuncturedCircularDomain D = circular_of(job);
    ReductionResult red = reduce_to_plane(D, w);
    auto [map, log] = build_nonnull_immersion(red.plane, red.windings, {job.options.seed, job.options.budget});
    o.result["construction"] = "nonnull_on_reduction";
    o.result["reduction"] = to_json(red);
    o.result["map"] = to_json(map);
    add_certificate(o, certs, "immersion", check_immersion(map, red.plane));
    add_certificate(o, certs, "properness", check_properness(map, D));
    add_certificate(o, certs, "winding", check_winding(map, D, w));
    o.result["certificates"] = certs;
    DoublePointReport report = enumerate(map, red.plane, 0, enumeration(job));
    if (report.finiteness != Finiteness::Finite) o.pass = false;
    o.result["double_points"] = to_json(report);
    if (report.finiteness == Finiteness::Finite) {
      ClearanceReport clear = boundary_clearance(report, D);
      o.result["boundary_clearance"] = to_json(clear);
      if (!clear.passed()) o.pass = false;
    }
    o.result["log"] = to_json(log);
    return o;
  }
  PuncturedPlane X = plane_of(job);
  MapPair map;
  std::optional<PerturbationLog> log;
  int K = 0;
  if (w.is_null()) {
    if (w.puncture_windings.size() != X.punctures.size()) throw Error(ErrorCode::ShapeError, "winding count mismatch");
    GaussianRational c = job.c ? *job.c : default_c(X);
    map = build_null_immersion(X, c);
    o.result["construction"] = "null";
    o.result["c"] = to_json(c);
    K = job.options.K;
  } else {
    auto built = build_nonnull_immersion(X, w, {job.options.seed, job.options.budget});
    map = built.first;
    log = built.second;
    o.result["construction"] = "nonnull";
  }
  o.result["map"] = to_json(map);
  add_certificate(o, certs, "immersion", check_immersion(map, X));
  add_certificate(o, certs, "properness", check_properness(map, X));
  add_certificate(o, certs, "winding", check_winding(map, X, w));
  o.result["certificates"] = certs;
  DoublePointReport report = enumerate(map, X, K, enumeration(job));
  if (report.finiteness == Finiteness::InfiniteCommonComponent) o.pass = false;
  o.result["double_points"] = to_json(report);
  if (log) o.result["log"] = to_json(*log);
  return o;
}

Outcome do_embed(const JobSpec& job) {
  require_valid(job);
  const WindingClass& w = require_windings(job);
  Outcome o;
  Json certs = Json::object();
  if (circular(job)) {
    PuncturedCircularDomain D = circular_of(job);
    auto built = build_embedding_circular(D, w, job.options.seed);
    if (auto* nc = std::get_if<NotCovered>(&built)) {
      o.result["covered"] = false;
      o.result["reason"] = nc->reason;
      o.pass = false;
      return o;
    }
    const auto& e = std::get<CircularEmbedding>(built);
    o.result["covered"] = true;
    o.result["case"] = e.case_number;
    o.result["reduction"] = to_json(e.reduction);
    o.result["map"] = to_json(e.map);
    o.result["projection"] = to_json(e.projection);
    if (!e.projection.passed()) o.pass = false;
    if (e.remediation) {
      Json rejected = Json::array();
      for (const auto& d : e.remediation->rejected) rejected.push_back(to_json(d));
      o.result["remediation"] = Json{{"d", e.remediation->d ? to_json(*e.remediation->d) : Json()},
                                     {"rejected", rejected}};
    }
    add_certificate(o, certs, "properness", e.wold.properness);
    add_certificate(o, certs, "immersion", e.wold.immersion);
    add_certificate(o, certs, "injective_by_form", e.wold.injective);
    add_certificate(o, certs, "winding", check_winding(e.map, D, w));
    o.result["certificates"] = certs;
    o.result["boundary_clearance"] = to_json(e.wold.clearance);
    if (!e.wold.clearance.passed()) o.pass = false;
    return o;
  }
  PuncturedPlane X = plane_of(job);
  auto built = build_embedding_plane(X, w);
  if (auto* nc = std::get_if<NotCovered>(&built)) {
    o.result["covered"] = false;
    o.result["reason"] = nc->reason;
    o.pass = false;
    return o;
  }
  const auto& e = std::get<PlaneEmbedding>(built);
  o.result["covered"] = true;
  o.result["case"] = e.case_number;
  o.result["order"] = e.order;
  o.result["map"] = to_json(e.map);
  add_certificate(o, certs, "injective_by_form", check_injective_by_form(e.map));
  add_certificate(o, certs, "immersion", check_immersion(e.map, X));
  add_certificate(o, certs, "properness", check_properness(e.map, X));
  add_certificate(o, certs, "winding", check_winding(e.map, X, w));
  o.result["certificates"] = certs;
  return o;
}

Outcome do_verify(const JobSpec& job) {
  require_valid(job);
  MapPair m = require_map(job);
  Outcome o;
  o.result["map"] = to_json(m);
  Json certs = Json::object();
  add_certificate(o, certs, "immersion", check_immersion(m, plane_of(job)));
  if (circular(job)) {
    add_certificate(o, certs, "properness", check_properness(m, circular_of(job)));
    if (job.windings) add_certificate(o, certs, "winding", check_winding(m, circular_of(job), *job.windings));
  } else {
    add_certificate(o, certs, "properness", check_properness(m, plane_of(job)));
    if (job.windings) add_certificate(o, certs, "winding", check_winding(m, plane_of(job), *job.windings));
  }
  // reported for information; injectivity is not implied either way
  add_certificate(o, certs, "injective_by_form", check_injective_by_form(m), false);
  o.result["certificates"] = certs;
  return o;
}

Outcome do_double_points(const JobSpec& job) {
  if (circular(job)) throw Error(ErrorCode::InvalidParameter, "double-points works on a punctured plane");
  require_valid(job);
  MapPair m = require_map(job);
  Outcome o;
  o.result["map"] = to_json(m);
  DoublePointReport report = enumerate(m, plane_of(job), job.options.K, enumeration(job));
  o.result["double_points"] = to_json(report);
  if (report.finiteness == Finiteness::InfiniteCommonComponent) o.pass = false;
  return o;
}

Outcome do_reduce(const JobSpec& job) {
  if (!circular(job)) throw Error(ErrorCode::InvalidParameter, "reduce needs a circular domain");
  require_valid(job);
  Outcome o;
  o.result["reduction"] = to_json(reduce_to_plane(circular_of(job), require_windings(job)));
  return o;
}

Outcome do_guard(const JobSpec& job) {
  if (!job.f) throw Error(ErrorCode::ParseError, "guard needs --f");
  RationalFunction f = parse_rational_function(*job.f);
  Outcome o;
  Json certs = Json::object();
  add_certificate(o, certs, "not_proper_first", guard_not_proper_first(f));
  if (job.sigma) add_certificate(o, certs, "symmetry", guard_symmetry(f, parse_rational_function(*job.sigma)));
  o.result["f"] = to_json(f);
  o.result["certificates"] = certs;
  return o;
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SearchExhausted:
    case ErrorCode::PrecisionExhausted:
    case ErrorCode::AmbiguousRoot:
    case ErrorCode::AmbiguousFiber:
    case ErrorCode::AmbiguousBoundary:
      return kExhausted;
    default:
      return kUsage;
  }
}

Json to_json(const JobSpec& job) {
  Json domain{{"kind", job.domain}};
  Json punct = Json::array();
  for (const auto& p : job.punctures) punct.push_back(cli::to_json(p));
  domain["punctures"] = punct;
  if (job.domain == "circular") {
    Json holes = Json::array();
    for (const auto& h : job.holes) holes.push_back(Json{{"center", cli::to_json(h.center)}, {"radius", rational_to_string(h.radius)}});
    domain["holes"] = holes;
  }
  Json out{{"command", job.command}, {"domain", domain}};
  if (job.windings) out["windings"] = cli::to_json(*job.windings);
  if (job.map) out["map"] = *job.map;
  if (job.c) out["c"] = cli::to_json(*job.c);
  if (job.f) out["f"] = *job.f;
  if (job.sigma) out["sigma"] = *job.sigma;
  out["options"] = Json{{"seed", job.options.seed}, {"tol", job.options.tol}, {"K", job.options.K},
                        {"budget", job.options.budget}, {"precision", job.options.precision}};
  return out;
}

JobSpec job_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "job must be a JSON object");
  JobSpec job;
  job.command = option<std::string>(j, "command", "");
  if (std::find(kCommands.begin(), kCommands.end(), job.command) == kCommands.end()) {
    throw Error(ErrorCode::ParseError, "unknown command '" + job.command + "'");
  }
  if (j.contains("domain")) {
    const Json& d = j.at("domain");
    job.domain = option<std::string>(d, "kind", "plane");
    if (job.domain != "plane" && job.domain != "circular") throw Error(ErrorCode::ParseError, "domain kind must be plane or circular");
    if (d.contains("punctures")) {
      for (const auto& p : d.at("punctures")) job.punctures.push_back(gaussian_from_json(p));
    }
    if (d.contains("holes")) {
      for (const auto& h : d.at("holes")) {
        const Json& r = h.at("radius");
        job.holes.push_back({gaussian_from_json(h.at("center")),
                             r.is_string() ? parse_rational(r.get<std::string>()) : Rational(r.get<long>())});
      }
    }
  }
  if (j.contains("windings")) {
    const Json& w = j.at("windings");
    job.windings = WindingClass{option<std::vector<int>>(w, "puncture_windings", {}),
                                option<std::vector<int>>(w, "hole_windings", {})};
  }
  if (j.contains("map")) job.map = j.at("map").is_string() ? j.at("map").get<std::string>() : map_from_json(j.at("map")).to_string();
  if (j.contains("c")) job.c = gaussian_from_json(j.at("c"));
  job.f = optional_text(j, "f");
  job.sigma = optional_text(j, "sigma");
  if (j.contains("options")) {
    const Json& o = j.at("options");
    job.options.seed = option<std::uint64_t>(o, "seed", 0);
    job.options.tol = option<double>(o, "tol", 1e-10);
    job.options.K = option<int>(o, "K", 10);
    job.options.budget = option<int>(o, "budget", 64);
    job.options.precision = option<long>(o, "precision", 64);
  }
  if (job.options.tol <= 0 || job.options.K < 0 || job.options.budget <= 0 || job.options.precision < 32) {
    throw Error(ErrorCode::ParseError, "options out of range");
  }
  return job;
}

RunResult run(const JobSpec& job) {
  RunResult r;
  r.output = Json{{"schema", "okaforge/1"}, {"job", to_json(job)}};
  try {
    Outcome o;
    if (job.command == "classify") o = do_classify(job);
    else if (job.command == "construct") o = do_construct(job);
    else if (job.command == "embed") o = do_embed(job);
    else if (job.command == "verify") o = do_verify(job);
    else if (job.command == "double-points") o = do_double_points(job);
    else if (job.command == "reduce") o = do_reduce(job);
    else if (job.command == "guard") o = do_guard(job);
    else throw Error(ErrorCode::ParseError, "unknown command '" + job.command + "'");
    r.output["result"] = o.result;
    r.output["status"] = o.pass ? "pass" : "fail";
    r.exit_code = o.pass ? kPass : kFail;
  } catch (const Error& e) {
    r.output["error"] = Json{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    r.output["status"] = "error";
    r.exit_code = exit_code_for(e.code());
  }
  return r;
}

std::string dump_points(const Json& output) {
  std::ostringstream os;
  if (!output.contains("result") || !output["result"].contains("double_points")) return {};
  for (const auto& p : output["result"]["double_points"]["pairs"]) {
    os << p["x"]["re"].get<std::string>() << ' ' << p["x"]["im"].get<std::string>() << ' '
       << p["y"]["re"].get<std::string>() << ' ' << p["y"]["im"].get<std::string>() << ' '
       << (p.contains("k") ? p["k"].get<int>() : 0) << '\n';
  }
  return os.str();
}

}  // namespace okaforge::cli
