#pragma once

#include <string>
#include <vector>

#include "orconv/digraph.hpp"

namespace orconv {

class WitnessCache;

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  int workers = 1;
  WitnessCache* cache = nullptr;  // used for constructor witnesses when set
};

/// Runs one acceptance criterion (1..8).
CriterionResult run_criterion(int id, const AcceptanceOptions& opt = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});

/// Connected graphs on `order` vertices (order <= 6), one per isomorphism class.
std::vector<Graph> connected_graphs(int order);

}  // namespace orconv
