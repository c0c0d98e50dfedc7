#include "okaforge/cli/expression.hpp"
#include "okaforge/cli/runner.hpp"
#include "okaforge/error.hpp"

namespace okaforge::cli {

namespace {

JobSpec job(const std::string& command, const std::string& punctures) {
  JobSpec j;
  j.command = command;
  j.punctures = parse_points(punctures);
  return j;
}

JobSpec with_map(JobSpec j, const std::string& map) {
  j.map = map;
  return j;
}

JobSpec with_windings(JobSpec j, const std::string& k, const std::string& s = "") {
  j.windings = WindingClass{parse_ints(k), parse_ints(s)};
  return j;
}

JobSpec circular(JobSpec j, const std::string& holes) {
  j.domain = "circular";
  j.holes = parse_holes(holes);
  return j;
}

JobSpec guard(const std::string& f, const std::string& sigma = "") {
  JobSpec j;
  j.command = "guard";
  j.f = f;
  if (!sigma.empty()) j.sigma = sigma;
  return j;
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> c;
  JobSpec a = with_map(job("double-points", "0"), "(z+1/z, exp(pi*i*z))");
  a.options.K = 10;
  c.push_back({"example-a", "z+1/z with exp(pi i z) on C minus 0, two pairs per shift", a});
  JobSpec n1 = with_windings(job("construct", "0"), "0");
  n1.c = GaussianRational(1);
  c.push_back({"null-c1", "null immersion on C minus 0 with c=1", n1});
  JobSpec n2 = with_windings(job("construct", "0,1"), "0,0");
  n2.c = GaussianRational(2);
  c.push_back({"null-c2", "null immersion on C minus {0,1} with c=2", n2});
  c.push_back({"nonnull-rn", "nonnull immersion with every winding nonzero", with_windings(job("construct", "0,1"), "1,1")});
  c.push_back({"embed-case1", "plane embedding, all windings nonzero", with_windings(job("embed", "0,1"), "2,-1")});
  c.push_back({"embed-case3", "plane embedding, windings 1,-1,0", with_windings(job("embed", "0,1,2"), "1,-1,0")});
  c.push_back({"embed-null-cstar", "null class of C minus 0 is not covered", with_windings(job("embed", "0"), "0")});
  c.push_back({"embed-circ-case5", "circular case 5 with two zero windings",
               circular(with_windings(job("embed", "0,1/2"), "0,0"), "")});
  c.push_back({"embed-circ-case6", "circular case 6 with one hole",
               circular(with_windings(job("embed", "1/2,-1/2"), "0,0", "1"), "1/2i:1/8")});
  c.push_back({"classify-exp", "exp second component has null class", with_map(job("classify", "0,1"), "(z, exp(z))")});
  c.push_back({"classify-case3", "quotient second component has windings 1,-1,0",
               with_map(job("classify", "0,1,2"), "(z, (z-0)/(z-1))")});
  c.push_back({"reduce-bare", "no holes, windings 3,0", circular(with_windings(job("reduce", "0,1/2"), "3,0"), "")});
  c.push_back({"reduce-hole", "one hole of radius 1/4 at 0", circular(with_windings(job("reduce", "1/2"), "5", "0"), "0:1/4")});
  c.push_back({"verify-null", "null map is an immersion", with_map(job("verify", "0"), "((z-1)^2/z, exp(z))")});
  c.push_back({"verify-end", "end-of-section example passes", with_map(job("verify", "0,1,2"), "(1/((z-1)(z-2)), z^2)")});
  c.push_back({"dp-common", "a = -b gives a common component", with_map(job("double-points", "0,1,-1"), "(1/((z-1)(z+1)), z^2)")});
  c.push_back({"dp-end", "end-of-section example has no pairs", with_map(job("double-points", "0,1,2"), "(1/((z-1)(z-2)), z^2)")});
  c.push_back({"dp-corrected", "corrected map has no pairs", with_map(job("double-points", "0,1,-1"), "(1/((z-1)(z+1)^2), z^2)")});
  c.push_back({"guard-joukowski", "z+1/z is not proper and is symmetric under 1/z", guard("z+1/z", "1/z")});
  c.push_back({"guard-identity", "z passes with a note", guard("z")});
  return c;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : corpus()) {
    if (e.name == name) return e;
  }
  throw Error(ErrorCode::ParseError, "no corpus entry named '" + name + "'");
}

}  // namespace okaforge::cli
