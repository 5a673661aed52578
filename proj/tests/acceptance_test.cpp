// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Every quantity compared here is exact, so every tolerance is zero.

#include <array>
#include <cstdio>
#include <functional>
#include <sstream>

#include "linearr/boundary_ring.hpp"
#include "linearr/cli.hpp"
#include "linearr/os_algebra.hpp"
#include "linearr/plumbing.hpp"
#include "linearr/resonance.hpp"
#include "test_support.hpp"

using namespace linearr;

namespace {

constexpr int kAuditMinLines = 3;
constexpr int kAuditMaxLines = 8;
constexpr int kAuditPerLineCount = 34;  // 6 line counts x 34 = 204 arrangements
constexpr std::size_t kAuditMinimum = 200;
constexpr int kIdentitySamples = 25;
constexpr int kR11Samples = 50;
constexpr int kSnfMatrices = 1000;
constexpr std::size_t kSnfMaxDim = 6;
constexpr std::int64_t kSnfEntryBound = 9;
constexpr int kChainPoints = 100;
constexpr std::uint64_t kSeed = 1;

// Collects failure notes for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && notes_.size() < 5) notes_.push_back(what);
    failed_ = failed_ || !ok;
  }
  bool failed() const { return failed_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  bool failed_ = false;
  std::vector<std::string> notes_;
};

std::vector<std::pair<std::string, Arrangement>> fixtures() {
  std::vector<std::pair<std::string, Arrangement>> out;
  for (const auto& name : testing::fixture_names()) out.emplace_back(name, testing::load_fixture(name));
  return out;
}

std::vector<Arrangement> audit_arrangements() {
  std::vector<Arrangement> out;
  const double densities[] = {0.25, 0.5, 0.75, 1.0};
  for (int lines = kAuditMinLines; lines <= kAuditMaxLines; ++lines)
    for (int i = 0; i < kAuditPerLineCount; ++i) {
      std::mt19937_64 rng = trial_engine(kSeed, static_cast<std::uint64_t>(lines * 1000 + i));
      out.push_back(random_arrangement(lines, densities[i % 4], rng));
    }
  return out;
}

std::string pencil(int n) { return "pencil_n" + std::to_string(n) + ".json"; }
std::string near_pencil(int n) { return "nearpencil_n" + std::to_string(n) + ".json"; }

void nbc_basis(Check& c) {
  const Arrangement arr = testing::load_fixture("fig2.json");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : nbc_set(arr)) pairs.emplace_back(p.j, p.k);
  c.expect(pairs == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}, {2, 4}}, "nbc set");
  c.expect(incidence_graph(arr).b1() == 4, "b1 of the incidence graph");
  c.expect(pairs.size() == 4, "|nbc|");
}

void boundary_homology(Check& c) {
  const H1Result fig2 = h1_boundary(testing::load_fixture("fig2.json"));
  c.expect(fig2.free_rank == 8 && fig2.torsion.empty(), "fig2 H_1 free of rank 8");
  for (int n = 2; n <= 4; ++n)
    c.expect(h1_boundary(testing::load_fixture(pencil(n))).free_rank == static_cast<std::size_t>(n), pencil(n));
  const H1Result tri = h1_boundary(testing::load_fixture("triangle.json"));
  c.expect(tri.free_rank == 3 && tri.torsion.empty(), "triangle");
}

void isomorphism_audit(Check& c) {
  for (const auto& [name, arr] : fixtures()) c.expect(verify_double_isomorphism(arr).ok, name);
  const auto audit = audit_arrangements();
  c.expect(audit.size() >= kAuditMinimum, "audit size");
  std::size_t mismatches = 0;
  for (const auto& arr : audit) mismatches += verify_double_isomorphism(arr).mismatches.size();
  c.expect(mismatches == 0, std::to_string(mismatches) + " mismatches over random arrangements");
}

void product_tables(Check& c) {
  const Json golden = Json::parse(testing::read_file(testing::golden_path("fig2_ring.json")));
  std::ostringstream live, err;
  const std::string path = testing::fixture_path("fig2.json");
  const char* argv[] = {"linearr", "ring", path.c_str()};
  run_cli(3, argv, live, err);
  c.expect(Json::parse(live.str()) == golden, "golden matches the live ring");

  auto value = [&](const std::string& x, const std::string& y) {
    for (const auto& p : golden.at("products"))
      if (p.at("x") == x && p.at("y") == y) return p.at("value");
    return Json();
  };
  c.expect(value("F2", "tau1,2") == Json::parse(R"({"t1": 1, "t3": 1})"), "F2.tau12");
  c.expect(value("F3", "tau1,2") == Json::parse(R"({"t2": -1})"), "F3.tau12");
  c.expect(value("F3", "F4") == Json::object(), "F3.F4");
  c.expect(value("F1", "F2") == Json::parse(R"({"gamma1,2": 1})"), "F1.F2");
  for (const auto& p : golden.at("products")) {
    const std::string x = p.at("x"), y = p.at("y");
    if (x.rfind("tau", 0) == 0 && y.rfind("tau", 0) == 0) c.expect(p.at("value") == Json::object(), x + "." + y);
  }

  for (const auto& [name, arr] : fixtures()) {
    const IntersectionRing ring = intersection_ring(arr);
    for (std::size_t x = 0; x < ring.rank(); ++x)
      for (std::size_t y = 0; y < ring.rank(); ++y) {
        bool anti = true;
        for (std::size_t k = 0; k < ring.rank(); ++k) anti = anti && ring.products[x][y][k] == -ring.products[y][x][k];
        c.expect(anti, name + " antisymmetry");
      }
  }
}

void generic_dimensions(Check& c) {
  const Arrangement arr = testing::load_fixture("fig2.json");
  const DoubledAlgebra dbl = double_algebra(os_algebra(arr));
  std::array<std::size_t, 4> b{};
  for (int k = 0; k <= 3; ++k) b[k] = generic_betti(dbl, k, kDefaultTrials, kSeed);
  c.expect(b == std::array<std::size_t, 4>{0, 1, 1, 0}, "fig2 generic Betti numbers");
  c.expect(classify(arr).beta == 1, "beta");
  bool certified = false;
  for (std::uint64_t t = 0; t < kDefaultTrials; ++t) {
    const AomotoPoint pt = sample_point(dbl, kSeed, t);
    certified = certified || (is_nonresonant(dbl.base, pt.a) && betti(dbl, pt, 1) == b[1]);
  }
  c.expect(certified, "a nonresonant sample realizes the generic value");
  for (int n = 2; n <= 4; ++n) {
    const DoubledAlgebra p = double_algebra(os_algebra(testing::load_fixture(pencil(n))));
    c.expect(generic_betti(p, 1, kDefaultTrials, kSeed) == static_cast<std::size_t>(n - 1), pencil(n));
  }
}

void zero_a_identity(Check& c) {
  for (const auto& [name, arr] : fixtures()) {
    const DoubledAlgebra dbl = double_algebra(os_algebra(arr));
    if (dbl.r2() == 0) continue;
    int used = 0;
    for (std::uint64_t t = 0; used < kIdentitySamples; ++t) {
      const AomotoPoint pt = sample_point(dbl, kSeed, t);
      if (std::all_of(pt.b.begin(), pt.b.end(), [](const Rational& x) { return x == 0; })) continue;
      const IdentityCheck id = zero_a_identity_check(dbl, pt.b);
      c.expect(id.lhs == id.rhs, name + ": " + std::to_string(id.lhs) + " != " + std::to_string(id.rhs));
      ++used;
    }
  }
}

void r11_classification(Check& c) {
  for (int n = 2; n <= 4; ++n) {
    const R11Prediction p = r11_prediction(testing::load_fixture(pencil(n)));
    c.expect(p.kind == ArrangementClass::Pencil && p.dim == n, pencil(n));
  }
  for (int n = 3; n <= 5; ++n) {
    const R11Prediction p = r11_prediction(testing::load_fixture(near_pencil(n)));
    c.expect(p.kind == ArrangementClass::NearPencil && p.dim == 2 * n - 2, near_pencil(n));
  }
  for (const auto& [name, arr] : fixtures()) {
    const R11Prediction p = r11_prediction(arr);
    if (p.kind != ArrangementClass::General) continue;
    c.expect(p.dim == arr.n() + static_cast<std::int64_t>(nbc_set(arr).size()), name + " predicted dimension");
    const DoubledAlgebra dbl = double_algebra(os_algebra(arr));
    for (int t = 0; t < kR11Samples; ++t)
      c.expect(in_resonance(dbl, sample_point(dbl, kSeed, static_cast<std::uint64_t>(t)), 1, 1), name + " sample");
  }
}

void snf_suite(Check& c) {
  std::mt19937_64 rng = trial_engine(kSeed, 0);
  for (int t = 0; t < kSnfMatrices; ++t) {
    const IntMatrix m = testing::random_int_matrix(rng, kSnfMaxDim, kSnfEntryBound);
    const SnfResult r = snf(m);
    c.expect(r.u * m * r.v == r.s, "U A V = S");
    c.expect(is_unimodular(r.u) && is_unimodular(r.v), "unimodular");
    bool diagonal = true;
    for (std::size_t i = 0; i < r.s.rows(); ++i)
      for (std::size_t j = 0; j < r.s.cols(); ++j) diagonal = diagonal && (i == j || r.s(i, j) == 0);
    c.expect(diagonal, "S diagonal");
    const auto d = r.diagonal();
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] != 0) ++nonzero;
      c.expect(d[i] >= 0, "nonnegative");
      if (i + 1 < d.size()) c.expect(d[i] == 0 ? d[i + 1] == 0 : d[i + 1] % d[i] == 0, "divisibility chain");
    }
    c.expect(rank(to_rational(m)) == nonzero, "rank by elimination equals rank by SNF");
  }
}

void chain_conditions(Check& c) {
  for (const auto& [name, arr] : fixtures()) {
    const DoubledAlgebra dbl = double_algebra(os_algebra(arr));
    for (int t = 0; t < kChainPoints; ++t) {
      const AomotoPoint pt = sample_point(dbl, kSeed, static_cast<std::uint64_t>(t));
      const AomotoComplex cx = aomoto_complex(dbl, pt);
      c.expect((cx.d1 * cx.d2).is_zero() && (cx.d2 * cx.d3).is_zero(), name + " chain condition");
      const auto b = betti_all(dbl, pt);
      c.expect(b[0] + b[2] == b[1] + b[3], name + " Euler characteristic");
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"1 nbc basis and graph cycles", nbc_basis},
      {"2 H_1 of the boundary manifold", boundary_homology},
      {"3 cohomology ring isomorphic to the double", isomorphism_audit},
      {"4 intersection product tables", product_tables},
      {"5 generic resonance dimensions", generic_dimensions},
      {"6 zero-a Betti identity", zero_a_identity},
      {"7 R^1_1 classification", r11_classification},
      {"8 Smith normal form properties", snf_suite},
      {"9 chain conditions and Euler characteristic", chain_conditions},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Check c;
    try {
      run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::printf("%s  %s\n", c.failed() ? "FAIL" : "PASS", name.c_str());
    for (const auto& note : c.notes()) std::printf("      %s\n", note.c_str());
    failures += c.failed() ? 1 : 0;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
