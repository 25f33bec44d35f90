#include <cstdint>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "igsys/apps.hpp"
#include "igsys/groebner.hpp"
#include "igsys/problem.hpp"
#include "igsys/report.hpp"
#include "igsys/verify.hpp"
#include "json.hpp"

using Json = nlohmann::ordered_json;
using namespace igsys;

namespace {

// Input that parses but does not fit the subcommand.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Flags {
  bool json = false;
  unsigned depth = 24;
  std::uint64_t seed = 1;
  std::string order;
  std::size_t verify = 0;
  std::string signs = "enforce";
  bool rejected = false;
};

SearchOptions searchOptions(const Flags& f) {
  SearchOptions o;
  o.depth = f.depth;
  return o;
}

ProblemFile load(const std::string& path, const Flags& f) {
  ProblemFile p = loadProblem(path);
  if (!f.order.empty()) p = p.withOrder(parseOrderSpec(f.order));
  return p;
}

std::vector<std::string> texts(const std::vector<Polynomial>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.toString());
  return out;
}

std::string verifyLine(const SampleCheck& c) {
  return "verify: " + std::to_string(c.samples) + " samples, " + std::to_string(c.uncovered) + " uncovered, " +
         std::to_string(c.mismatched) + " specialisation failures\n";
}

Json verifyJson(const SampleCheck& c) {
  return Json{{"samples", c.samples}, {"uncovered", c.uncovered}, {"mismatched", c.mismatched}};
}

std::string runGb(const std::string& path, const Flags& f) {
  const ProblemFile p = load(path, f);
  if (p.isParametric()) throw UsageError("gb expects a file without params");
  const auto G = reducedGB(p.ring, p.exactPolys());
  if (f.json) return Json{{"order", p.order.toString()}, {"basis", texts(G.generators())}}.dump(2) + "\n";
  std::string out = "order " + p.order.toString() + "\n";
  for (const auto& g : G.generators()) out += g.toString() + "\n";
  return out;
}

Box parameterBox(const ProblemFile& p, bool required) {
  std::vector<BoxCoordinate> coords;
  for (const auto& name : p.parameters) {
    auto it = std::find_if(p.boxes.begin(), p.boxes.end(), [&](const NamedRange& b) { return b.name == name; });
    if (it == p.boxes.end()) {
      if (required) throw UsageError("no box given for parameter '" + name + "'");
      coords.push_back({name, Interval::whole(), std::nullopt, std::nullopt});
    } else {
      coords.push_back({name, it->range, std::nullopt, std::nullopt});
    }
  }
  return Box(std::move(coords));
}

std::string runCgs(const std::string& path, const Flags& f) {
  const ProblemFile p = load(path, f);
  if (!p.isParametric()) throw UsageError("cgs expects a file with params");
  const auto res = pgb(*p.parametric, p.parametricPolys);
  std::optional<SampleCheck> check;
  if (f.verify) {
    const auto pts = sampleBox(parameterBox(p, false), f.verify, f.seed);
    check = checkSamples(res.ring, p.parametricPolys, res.branches, pts);
  }
  const BranchTable table = branchTable(res);
  if (f.json) {
    Json j = Json::parse(toJson(table));
    if (check) j = Json{{"branches", j}, {"verify", verifyJson(*check)}};
    return j.dump(2) + "\n";
  }
  std::string out = renderText(table);
  out += std::to_string(res.branches.size()) + " branches\n";
  if (check) out += verifyLine(*check);
  return out;
}

std::string runIgs(const std::string& path, const Flags& f) {
  const ProblemFile p = load(path, f);
  IGSResult res;
  if (p.isParametric()) {
    res = igsParametric(*p.parametric, p.parametricPolys, parameterBox(p, true), searchOptions(f));
  } else {
    res = igs(IntervalSystem{p.ring, p.polys}, p.ring->order(), searchOptions(f));
  }
  std::vector<Branch> branches;
  std::size_t unknown = 0;
  for (const auto& bv : res.branches) {
    branches.push_back(bv.branch);
    unknown += bv.verdict.status == Consistency::Unknown;
  }
  std::optional<SampleCheck> check;
  if (f.verify) check = checkSamples(res.ring, res.system, branches, sampleBox(res.box, f.verify, f.seed));

  const BranchTable table = branchTable(res);
  if (f.json) {
    Json j = Json::parse(toJson(table));
    if (check || f.rejected) {
      Json wrapped{{"branches", j}};
      if (f.rejected) wrapped["rejected"] = Json::parse(toJson(rejectedTable(res)));
      if (check) wrapped["verify"] = verifyJson(*check);
      j = wrapped;
    }
    return j.dump(2) + "\n";
  }
  std::string out;
  const auto& names = res.ring.parameters()->names();
  for (std::size_t i = 0; i < res.box.size(); ++i) out += names[i] + " in " + toString(res.box.range(i)) + "\n";
  out += "system: " + setToString(texts(res.system)) + "\n\n";
  out += renderText(table);
  out += std::to_string(res.branches.size()) + " branches, " + std::to_string(res.rejected.size()) + " rejected, " +
         std::to_string(unknown) + " unknown\n";
  if (f.rejected && !res.rejected.empty()) out += "\nrejected:\n" + renderText(rejectedTable(res));
  if (check) out += verifyLine(*check);
  return out;
}

Json endpointJson(const RootEndpoint& e) {
  if (!e.value) return nullptr;
  const RealRoot& r = *e.value;
  Json j{{"closed", e.closed}, {"approx", r.approx()}};
  if (auto v = r.exactValue()) {
    j["exact"] = toString(*v);
  } else {
    j["exact"] = nullptr;
    j["poly"] = r.poly().toString();
    j["isolating"] = {toString(r.lo()), toString(r.hi())};
  }
  return j;
}

std::string endpointText(const RootEndpoint& e) {
  const RealRoot& r = *e.value;
  if (auto v = r.exactValue()) return toString(*v);
  return "root of " + r.poly().toString() + " in (" + toString(r.lo()) + ", " + toString(r.hi()) + "]";
}

std::string runSolveUni(const std::string& path, const Flags& f) {
  const ProblemFile p = load(path, f);
  if (p.isParametric() || p.polys.size() != 1) throw UsageError("solve-uni expects exactly one interval polynomial");
  const auto rs = solveUnivariate(p.polys[0]);
  if (f.json) {
    Json comps = Json::array();
    for (const auto& c : rs.components) comps.push_back(Json{{"lo", endpointJson(c.lo)}, {"hi", endpointJson(c.hi)}});
    return Json{{"set", rs.toString()}, {"components", comps}}.dump(2) + "\n";
  }
  std::string out = "solutions: " + rs.toString() + "\n";
  for (const auto& c : rs.components) {
    out += "  " + c.toString() + "\n";
    if (c.lo.value) out += "    lower: " + endpointText(c.lo) + "\n";
    if (c.hi.value) out += "    upper: " + endpointText(c.hi) + "\n";
  }
  return out;
}

Json divisibilityJson(const DivisibilityReport& r) {
  Json j{{"verdict", r.verdict}, {"undecided", r.undecided}, {"condition", texts(r.condition)}};
  if (r.witnessPoint) {
    Json w = Json::object();
    const auto& names = r.igs.ring.parameters()->names();
    for (std::size_t i = 0; i < names.size(); ++i) w[names[i]] = toString((*r.witnessPoint)[i]);
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  j["member"] = r.witnessPolynomial ? Json(r.witnessPolynomial->toString()) : Json(nullptr);
  return j;
}

std::string divisibilityText(const DivisibilityReport& r) {
  std::string out = std::string("i-divides: ") + (r.verdict ? "yes" : r.undecided ? "undecided" : "no") + "\n";
  if (!r.verdict) return out;
  out += "condition: " + setToString(texts(r.condition)) + "\n";
  out += "witness:";
  const auto& names = r.igs.ring.parameters()->names();
  for (std::size_t i = 0; i < names.size(); ++i) out += " " + names[i] + "=" + toString((*r.witnessPoint)[i]);
  out += "\nmember: " + r.witnessPolynomial->toString() + "\n";
  return out;
}

std::string runIDivides(const std::string& path, const Flags& f) {
  const ProblemFile p = load(path, f);
  if (p.isParametric() || p.polys.size() != 1 || !p.divisor)
    throw UsageError("idivides expects one interval polynomial and a divisor");
  const auto r = iDivides(*p.divisor, p.polys[0], searchOptions(f));
  if (f.json) return divisibilityJson(r).dump(2) + "\n";
  return divisibilityText(r);
}

std::string runEpsDivides(const std::string& path, const Flags& f) {
  const ProblemFile p = load(path, f);
  if (p.isParametric() || p.polys.size() != 1 || !p.divisor || p.schedule.empty())
    throw UsageError("eps-divides expects one exact polynomial, a divisor and a schedule");
  const auto polys = p.exactPolys();
  const auto r = epsilonDivides(polys[0], *p.divisor, p.schedule, searchOptions(f));
  if (f.json) {
    Json trace = Json::array();
    for (const auto& [e, ok] : r.trace) trace.push_back(Json{{"epsilon", toString(e)}, {"verdict", ok}});
    return Json{{"epsilon", r.epsilon ? Json(toString(*r.epsilon)) : Json(nullptr)},
                {"trace", trace},
                {"report", divisibilityJson(r.report)}}
               .dump(2) +
           "\n";
  }
  std::string out;
  for (const auto& [e, ok] : r.trace) out += "epsilon " + toString(e) + ": " + (ok ? "yes" : "no") + "\n";
  out += r.epsilon ? "smallest epsilon: " + toString(*r.epsilon) + "\n" : std::string("schedule exhausted\n");
  if (r.epsilon) out += divisibilityText(r.report);
  return out;
}

std::string runFuzzy(const std::string& path, const Flags& f) {
  const ProblemFile p = load(path, f);
  if (!p.isParametric() || p.parameters.size() != 1) throw UsageError("fuzzy expects exactly one parameter");
  if (f.signs != "enforce" && f.signs != "ignore") throw UsageError("--signs must be enforce or ignore");
  Interval hRange = Interval::closed(0, 1);
  if (!p.boxes.empty()) hRange = p.boxes.front().range;
  std::map<std::string, Interval> signs;
  for (const auto& s : p.signs) signs.emplace(s.name, s.range);
  const auto mode = f.signs == "enforce" ? SignMode::Enforce : SignMode::Ignore;
  const auto r = fuzzySolve(*p.parametric, p.parametricPolys, hRange, signs, mode, searchOptions(f));
  const std::string& h = p.parameters.front();

  Json endpoint = nullptr;
  std::string endText;
  if (r.endpoint) {
    const auto& er = *r.endpointResult;
    Json sol = Json::object();
    endText = h + " = " + toString(*r.endpoint) + ": real solution " + toString(er.status);
    if (er.status == RealStatus::Exists) {
      endText += " (";
      for (std::size_t i = 0; i < p.variables.size(); ++i) {
        sol[p.variables[i]] = er.solution[i].approx();
        endText += (i ? ", " : "") + p.variables[i] + " ~ " + std::to_string(er.solution[i].approx());
      }
      endText += ")";
    }
    endText += "\n";
    endpoint = Json{{"value", toString(*r.endpoint)}, {"status", toString(er.status)}, {"solution", sol}};
  }
  if (f.json) {
    return Json{{"searched", toString(r.searched)},
                {"branches", Json::parse(toJson(branchTable(r.igs)))},
                {"endpoint", endpoint}}
               .dump(2) +
           "\n";
  }
  std::string out = h + " in " + toString(r.searched) + "\n" + renderText(branchTable(r.igs));
  out += endText;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval Groebner systems and related tools"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags flags;
  std::string file;
  app.add_flag("--json", flags.json, "Write JSON instead of text");
  app.add_option("--depth", flags.depth, "Bisection depth of the box search")->capture_default_str();
  app.add_option("--seed", flags.seed, "Seed for --verify sampling")->capture_default_str();
  app.add_option("--order", flags.order, "Variable order, e.g. lex(x > y) or grevlex");
  app.add_option("--verify", flags.verify, "Check cover and specialisation at this many sample points (cgs, igs)");
  app.add_option("--signs", flags.signs, "Sign constraints at the endpoint for fuzzy: enforce or ignore")
      ->capture_default_str();
  app.add_flag("--rejected", flags.rejected, "Also list rejected condition pairs (igs)");

  std::map<std::string, std::string (*)(const std::string&, const Flags&)> handlers{
      {"gb", runGb},         {"cgs", runCgs},     {"igs", runIgs},
      {"solve-uni", runSolveUni}, {"idivides", runIDivides}, {"eps-divides", runEpsDivides},
      {"fuzzy", runFuzzy}};
  const std::map<std::string, std::string> help{
      {"gb", "Reduced Groebner basis of exact polynomials"},
      {"cgs", "Comprehensive Groebner system of a parametric system"},
      {"igs", "Interval Groebner system"},
      {"solve-uni", "Real solutions of a univariate interval polynomial"},
      {"idivides", "Does the divisor i-divide the interval polynomial"},
      {"eps-divides", "Smallest scheduled widening that makes the divisor i-divide"},
      {"fuzzy", "Fuzzy system with one parameter over its box plus the closed endpoint"}};
  for (const auto& [name, desc] : help) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("file", file, "Problem file")->required()->check(CLI::ExistingFile);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    std::cout << handlers.at(name)(file, flags);
    return 0;
  } catch (const ParseError& e) {
    std::cerr << file << ":" << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
