#include "doctest.h"
#include "oracles.hpp"
#include "orconv/spectrum.hpp"

using namespace orconv;

namespace {

std::vector<int> as_vector(const std::set<int>& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("strong orientations of small grids against the oracle") {
  for (auto [n, m] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{4, 2}, std::pair{5, 2}, std::pair{3, 3}}) {
    INFO(n, "x", m);
    const GridSpec s(n, m);
    const auto rep = spectrum(n, m, SpectrumMode::exhaustive);
    CHECK(as_vector(rep.achieved) == oracle::brute_force_strong_spectrum(s.order(), s.edges()));
    std::uint64_t strong = 0;
    for (const auto& g : oracle::all_orientations(s.order(), s.edges())) strong += oracle::strong_by_distances(g);
    CHECK(rep.strong == strong);
    CHECK(rep.total == (std::uint64_t{1} << s.edge_count()));
    for (const auto& [c, w] : rep.witnesses) {
      CHECK(is_strong(w));
      CHECK(convexity_number(w).claimed == c);
    }
  }
}

TEST_CASE("frozen strong orientation counts") {
  CHECK(spectrum(2, 2, SpectrumMode::exhaustive).strong == 2);
  CHECK(spectrum(3, 2, SpectrumMode::exhaustive).strong == 6);
  CHECK(spectrum(3, 3, SpectrumMode::exhaustive).strong == 78);
  CHECK(spectrum(4, 3, SpectrumMode::exhaustive).strong == 1014);
}

TEST_CASE("Gray-code enumeration visits each strong orientation once") {
  const Graph g = GridSpec(3, 3).graph();
  std::vector<std::uint64_t> masks;
  const auto count = enumerate_strong_orientations(g, [&](const OrientedGraph& d, std::uint64_t mask) {
    CHECK(d == orientation_from_mask(g, mask));
    masks.push_back(mask);
    return true;
  });
  CHECK(count == 78);
  std::set<std::uint64_t> unique(masks.begin(), masks.end());
  CHECK(unique.size() == masks.size());

  // Each visit is rebuilt from its mask, so the incremental flips stay in sync.
  const Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  std::vector<std::uint64_t> cyc;
  enumerate_strong_orientations(c4, [&](const OrientedGraph&, std::uint64_t mask) {
    cyc.push_back(mask);
    return true;
  });
  CHECK(cyc.size() == 2);
  CHECK((cyc[0] ^ cyc[1]) == 0xF);  // the two directed 4-cycles
}

TEST_CASE("bridges mean no strong orientation; early stop") {
  const Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(enumerate_strong_orientations(path, [](const OrientedGraph&, std::uint64_t) { return true; }) == 0);
  CHECK(spectrum(path).achieved.empty());
  int visits = 0;
  enumerate_strong_orientations(GridSpec(3, 3).graph(), [&](const OrientedGraph&, std::uint64_t) {
    return ++visits < 5;
  });
  CHECK(visits == 5);
}

TEST_CASE("reversal symmetry and worker count leave the report unchanged") {
  const auto base = spectrum(4, 3, SpectrumMode::exhaustive);
  for (bool sym : {false, true})
    for (int workers : {1, 2, 3}) {
      EnumerationOptions opt;
      opt.reversal_symmetry = sym;
      opt.workers = workers;
      const auto rep = spectrum(4, 3, SpectrumMode::exhaustive, opt);
      CHECK(rep.achieved == base.achieved);
      CHECK(rep.strong == base.strong);
      CHECK(rep.witnesses == base.witnesses);
    }
}

TEST_CASE("all orientations of C4 (S_C)") {
  EnumerationOptions opt;
  opt.strong_only = false;
  const Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  std::vector<int> want;
  for (const auto& g : oracle::all_orientations(4, c4.edges())) want.push_back(oracle::brute_force_con(g));
  std::sort(want.begin(), want.end());
  want.erase(std::unique(want.begin(), want.end()), want.end());
  CHECK(as_vector(spectrum(c4, opt).achieved) == want);
}

TEST_CASE("edge caps") {
  CHECK_THROWS_WITH_AS(spectrum(5, 5, SpectrumMode::exhaustive),
                       "enumeration over 2^40 = 1099511627776 orientations exceeds the cap of 2^20", Error);
  EnumerationOptions opt;
  opt.max_edges = 100;  // clamped to the hard cap
  CHECK_THROWS_AS(spectrum(5, 5, SpectrumMode::exhaustive, opt), Error);
  opt.max_edges = 10;
  CHECK_THROWS_AS(spectrum(3, 3, SpectrumMode::exhaustive, opt), Error);
}

TEST_CASE("closed-form spectra") {
  CHECK(theoretical_spectrum(2, 2) == std::set<int>{1});
  CHECK(theoretical_spectrum(5, 2) == std::set<int>{1, 4, 6, 8});
  CHECK(theoretical_spectrum(2, 7) == std::set<int>{1, 6, 8, 10, 12});
  CHECK(theoretical_spectrum(3, 3) == std::set<int>{1, 4, 6});
  CHECK(theoretical_spectrum(3, 4) == std::set<int>{1, 4, 6, 8, 9});
  CHECK(theoretical_spectrum(5, 3) == std::set<int>{1, 4, 6, 8, 9, 10, 11, 12});
  CHECK(theoretical_spectrum(4, 4) == std::set<int>{1, 4, 6, 7, 8, 9, 10, 11, 12});
  CHECK(theoretical_spectrum(5, 5).size() == 17);  // [1,20] minus 2,3,5
  CHECK(*theoretical_spectrum(7, 6).rbegin() == 36);
  CHECK(*theoretical_spectrum(7, 7).rbegin() == 43);
  CHECK_THROWS_AS(theoretical_spectrum(1, 4), Error);
}

TEST_CASE("excluded values") {
  CHECK(excluded_values(4, 3) == std::set<int>{2, 3, 5, 10, 11});
  CHECK(excluded_values(3, 2) == std::set<int>{2, 3, 5});
  CHECK(excluded_values(6, 6) == std::set<int>{2, 3, 5, 31, 32, 33, 34, 35});
  for (int n = 2; n <= 8; ++n)
    for (int m = 2; m <= 8; ++m)
      for (int v : excluded_values(n, m)) CHECK(theoretical_spectrum(n, m).count(v) == 0);
}

TEST_CASE("constructive spectra and cross-validation") {
  const auto rep = spectrum(5, 5, SpectrumMode::constructive);
  CHECK(rep.achieved == theoretical_spectrum(5, 5));
  for (const auto& [v, w] : rep.witnesses) CHECK(is_strong(w));

  const auto cv = cross_validate(4, 3);
  CHECK(cv.exhaustive_run);
  CHECK(cv.ok());
  CHECK(cv.constructive_complete);
  CHECK(cv.exhaustive == cv.theoretical);

  const auto big = cross_validate(6, 5);
  CHECK_FALSE(big.exhaustive_run);
  CHECK(big.ok());
  CHECK(big.constructive_complete);
}
