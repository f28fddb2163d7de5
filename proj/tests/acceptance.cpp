// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "checks.hpp"
#include "dwlat/covering.hpp"

using namespace dwlat;
using checks::Outcome;

namespace {

std::string join_counts(const std::map<std::string, std::size_t>& m) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, v] : m) {
    out << (first ? "" : " ") << k << "=" << v;
    first = false;
  }
  return first ? "none" : out.str();
}

Outcome lattice_criterion() {
  Outcome o;
  std::size_t pairs = 0, bad = 0, types = 0;
  for (const auto& id : catalog(4)) {
    const auto c = checks::lattice_suite(build_affine(id), 100, 2024);
    ++types;
    pairs += c.checked;
    bad += c.violations;
    for (const auto& e : c.examples) o.fail(id.str() + ": " + e);
    if (c.checked < 100) o.fail(id.str() + ": only " + std::to_string(c.checked) + " pairs");
  }
  o.summary = std::to_string(types) + " types, " + std::to_string(pairs) + " pairs, " + std::to_string(bad) + " violations";
  if (bad > 0) o.pass = false;
  return o;
}

Outcome cell_criterion() {
  Outcome o;
  std::map<std::string, std::size_t> agree, disagree;
  std::map<CellShape, std::size_t> shapes;
  std::size_t pairs = 0;
  for (const char* t : {"A2-1", "A3-1", "A4-1"}) {
    const auto s = checks::cell_survey(build_affine(t), 4, 6, 40, 11);
    pairs += s.pairs;
    for (const auto& [k, v] : s.agree) agree[std::string(t) + ":" + k] += v;
    for (const auto& [k, v] : s.disagree) {
      disagree[std::string(t) + ":" + k] += v;
      o.pass = false;
    }
    for (const auto& [k, v] : s.shapes_confirmed) shapes[k] += v;
    for (const auto& e : s.examples) o.fail(e, 4);
  }
  for (CellShape sh : {CellShape::Diamond, CellShape::Pentagon, CellShape::DoublePentagon})
    if (shapes[sh] == 0) o.fail(std::string("shape never confirmed: ") + to_string(sh));

  const auto a3 = build_affine("A3-1");
  const Weight lambda = weight_from_labels(a3, {0, 2, 1, 1});
  const auto down = cocovers(a3, lambda);
  try {
    if (down.size() != 2 || basic_cell(a3, lambda, down[0].lower, down[1].lower).shape != CellShape::Pentagon)
      o.fail("A3-1 (0,2,1,1) is not a pentagon");
  } catch (const std::exception& e) {
    o.fail(std::string("A3-1 (0,2,1,1): ") + e.what());
  }

  o.summary = std::to_string(pairs) + " pairs; agree {" + join_counts(agree) + "}; disagree {" + join_counts(disagree) +
              "}; confirmed Diamond=" + std::to_string(shapes[CellShape::Diamond]) +
              " Pentagon=" + std::to_string(shapes[CellShape::Pentagon]) +
              " DoublePentagon=" + std::to_string(shapes[CellShape::DoublePentagon]) + " (W = supports cover every vertex)";
  return o;
}

Outcome lemma_criterion() {
  Outcome o;
  std::size_t rem = 0, affdel = 0, first = 0, mainprop = 0;
  auto take = [&](const std::string& t, const char* what, const checks::Counts& c, std::size_t& total) {
    total += c.checked;
    if (c.violations > 0) o.fail(t + " " + what + ": " + std::to_string(c.violations) + " violations");
    for (const auto& e : c.examples) o.fail(t + " " + what + ": " + e);
  };
  for (const auto& t : checks::sweep_types()) {
    const auto d = build_affine(t);
    const auto r = checks::lemma_pairing_bound(d, 10000, 1);
    if (r.checked < 10000) o.fail(t + ": too few real-root pairs");
    take(t, "pairing bound", r, rem);
    take(t, "dominant multiples", checks::lemma_dominant_is_delta_multiple(d, 4), affdel);
    take(t, "product four", checks::lemma_delta_from_product_four(d, 5000, 2), first);
    take(t, "short root subtraction", checks::prop_subtract_short_root(d, 3), mainprop);
  }
  o.summary = "pairing " + std::to_string(rem) + ", dominant " + std::to_string(affdel) + ", product-four " +
              std::to_string(first) + ", subtraction " + std::to_string(mainprop) + " checks";
  return o;
}

Outcome special_criterion() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    const auto d = build_affine("A" + std::to_string(n) + "-1");
    if (special_vertices(d) != d.vertices()) o.fail(d.type_id().str() + ": not every vertex is special");
  }
  std::size_t types = 0, special = 0;
  for (const auto& id : catalog(8)) {
    const auto d = build_affine(id);
    ++types;
    const Subdiagram sv = special_vertices(d);
    special += sv.vertices().size();
    Rational shortest = d.root_length_sq(0);
    for (int i = 1; i < d.size(); ++i) shortest = std::min(shortest, d.root_length_sq(i));
    for (int v : sv.vertices())
      if (d.root_length_sq(v) != shortest) o.fail(id.str() + ": special vertex " + std::to_string(v) + " is long");
    if (sv != checks::special_vertices_by_definition(d)) o.fail(id.str() + ": the two computations differ");
  }
  o.summary = std::to_string(types) + " types, " + std::to_string(special) + " special vertices";
  return o;
}

std::string run(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int rc = pclose(p);
  return out + "\n<exit " + std::to_string(rc) + ">";
}

Outcome determinism_criterion() {
  Outcome o;
  const std::string cli = DWLAT_CLI_PATH;
  const std::vector<std::string> cmds = {
      " verify --all-types --max-rank 3 --levels 1,2 --samples 30 --pairs 5 --seed 7",
      " verify E6-2 --levels 1,2 --samples 20 --seed 99",
      " cocovers A3-1 --labels 0,2,1,1",
      " interval A4-1 --top 1,1,1,1,1 --bottom '0,0,2,1,2|-1' --format json",
      " cell A2-1 --top 1,1,1 --mu '0,0,3|-1' --mu2 '0,3,0|-1' --format dot",
  };
  for (const auto& c : cmds) {
    const std::string a = run("'" + cli + "'" + c + " 2>&1");
    const std::string b = run("'" + cli + "'" + c + " 2>&1");
    if (a != b) o.fail("output differs between runs:" + c);
    if (a.find("<exit 0>") == std::string::npos && c.find(" cell ") == std::string::npos)
      o.fail("nonzero exit:" + c);
  }
  const auto rt = checks::json_round_trip(100, 8);
  if (rt.violations > 0 || rt.checked != 100) o.fail(std::to_string(rt.violations) + " graph round-trip failures");
  for (const auto& e : rt.examples) o.fail(e);
  o.summary = std::to_string(cmds.size()) + " CLI commands run twice, " + std::to_string(rt.checked) + " graph round trips";
  return o;
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int n, const Outcome& o) {
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << o.summary << "\n";
    for (const auto& f : o.failures) std::cout << "    " << f << "\n";
    std::cout.flush();
    if (!o.pass) ++failed;
  };

  const auto t0 = std::chrono::steady_clock::now();
  const auto sweep = checks::covering_sweep(checks::sweep_types(), {1, 2, 3}, 200, 7, 20);
  Outcome c1 = checks::covering_agreement(sweep);
  if (sweep.seconds > 600) c1.fail("sweep took " + std::to_string(sweep.seconds) + " s");
  report(1, c1);
  report(2, checks::cover_root_membership(sweep));
  report(3, checks::delta_classification(sweep));
  report(4, lattice_criterion());
  report(5, cell_criterion());
  report(6, lemma_criterion());
  report(7, special_criterion());
  report(8, determinism_criterion());
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (8 - failed) << "/8 criteria passed in " << static_cast<int>(total + 0.5) << " s\n";
  return failed == 0 ? 0 : 1;
}
