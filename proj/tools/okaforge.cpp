#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "okaforge/cli/expression.hpp"
#include "okaforge/cli/runner.hpp"
#include "okaforge/error.hpp"

using namespace okaforge;
using namespace okaforge::cli;

namespace {

struct Flags {
  std::string domain = "plane";
  std::string punctures;
  std::string holes;
  std::string windings;
  std::string hole_windings;
  std::string map;
  std::string c;
  std::string f;
  std::string sigma;
  std::string input;
  std::string dump;
  JobOptions options;
};

struct Handles {
  CLI::Option* windings = nullptr;
  CLI::Option* hole_windings = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* tol = nullptr;
  CLI::Option* K = nullptr;
  CLI::Option* budget = nullptr;
  CLI::Option* precision = nullptr;
};

void add_options(CLI::App* app, Flags& f, Handles& h, bool job_fields) {
  if (job_fields) {
    app->add_option("--domain", f.domain, "plane or circular")->check(CLI::IsMember({"plane", "circular"}));
    app->add_option("--punctures", f.punctures, "comma separated Gaussian rationals");
    app->add_option("--holes", f.holes, "center:radius;center:radius");
    h.windings = app->add_option("--windings", f.windings, "winding at each puncture");
    h.hole_windings = app->add_option("--hole-windings", f.hole_windings, "winding around each hole");
    app->add_option("--map", f.map, "(first, second)");
    app->add_option("--c", f.c, "null construction constant");
    app->add_option("--f", f.f, "first component for guards");
    app->add_option("--sigma", f.sigma, "candidate symmetry for guards");
    app->add_option("--input", f.input, "job file in JSON");
  }
  h.seed = app->add_option("--seed", f.options.seed);
  h.tol = app->add_option("--tol", f.options.tol);
  h.K = app->add_option("--K", f.options.K);
  h.budget = app->add_option("--budget", f.options.budget);
  h.precision = app->add_option("--precision", f.options.precision);
  app->add_option("--dump-points", f.dump, "write identified pairs to FILE");
}

JobSpec job_from_flags(const std::string& command, const Flags& f, const Handles& h) {
  if (!f.input.empty()) {
    std::ifstream in(f.input);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read " + f.input);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    if (!j.contains("command")) j["command"] = command;
    JobSpec job = job_from_json(j);
    if (job.command != command) throw Error(ErrorCode::ParseError, "job file is for '" + job.command + "'");
    return job;
  }
  JobSpec job;
  job.command = command;
  job.domain = f.domain;
  job.punctures = parse_points(f.punctures);
  job.holes = parse_holes(f.holes);
  if (h.windings->count() > 0 || h.hole_windings->count() > 0) {
    job.windings = WindingClass{parse_ints(f.windings), parse_ints(f.hole_windings)};
  }
  if (!f.map.empty()) job.map = f.map;
  if (!f.c.empty()) job.c = parse_gaussian(f.c);
  if (!f.f.empty()) job.f = f.f;
  if (!f.sigma.empty()) job.sigma = f.sigma;
  job.options = f.options;
  return job;
}

void override_options(JobSpec& job, const Flags& f, const Handles& h) {
  if (h.seed->count() > 0) job.options.seed = f.options.seed;
  if (h.tol->count() > 0) job.options.tol = f.options.tol;
  if (h.K->count() > 0) job.options.K = f.options.K;
  if (h.budget->count() > 0) job.options.budget = f.options.budget;
  if (h.precision->count() > 0) job.options.precision = f.options.precision;
}

int emit(const JobSpec& job, const Flags& f) {
  RunResult r = run(job);
  std::cout << r.output.dump(2) << '\n';
  if (r.output.contains("error")) std::cerr << "error: " << r.output["error"]["message"].get<std::string>() << '\n';
  if (!f.dump.empty()) {
    std::ofstream out(f.dump);
    if (!out) {
      std::cerr << "error: cannot write " << f.dump << '\n';
      return kUsage;
    }
    out << dump_points(r.output);
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"okaforge: immersions and embeddings of punctured planar domains"};
  app.require_subcommand(1);
  const std::vector<std::string> commands = {"classify", "construct", "embed", "verify", "double-points", "reduce", "guard"};
  std::vector<Flags> flags(commands.size());
  std::vector<Handles> handles(commands.size());
  std::vector<CLI::App*> subs;
  for (std::size_t k = 0; k < commands.size(); ++k) {
    subs.push_back(app.add_subcommand(commands[k]));
    add_options(subs.back(), flags[k], handles[k], true);
  }
  CLI::App* corpus_cmd = app.add_subcommand("corpus", "bundled example jobs");
  corpus_cmd->require_subcommand(1);
  corpus_cmd->add_subcommand("list");
  CLI::App* corpus_run = corpus_cmd->add_subcommand("run");
  std::string entry_name;
  corpus_run->add_option("name", entry_name)->required();
  Flags corpus_flags;
  Handles corpus_handles;
  add_options(corpus_run, corpus_flags, corpus_handles, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    for (std::size_t k = 0; k < commands.size(); ++k) {
      if (subs[k]->parsed()) return emit(job_from_flags(commands[k], flags[k], handles[k]), flags[k]);
    }
    if (corpus_run->parsed()) {
      JobSpec job = corpus_entry(entry_name).job;
      override_options(job, corpus_flags, corpus_handles);
      return emit(job, corpus_flags);
    }
    Json list = Json::array();
    for (const auto& e : corpus()) list.push_back(Json{{"name", e.name}, {"command", e.job.command}, {"description", e.description}});
    std::cout << Json{{"schema", "okaforge/1"}, {"corpus", list}}.dump(2) << '\n';
    return kPass;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}
