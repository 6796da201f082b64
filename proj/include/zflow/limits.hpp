#pragma once

#include <cstdlib>
#include <sstream>
#include <string>

namespace zflow {

// Hard caps for the exhaustive algorithms. Everything here is exact and
// exponential, so each solver refuses inputs past its cap instead of
// silently running forever. ZFLOW_LIMITS="key=value,key=value" raises them.
struct Limits {
  int census_vertices = 26;    // 2^(n-1) bipartition sweep
  int search_edges = 40;       // backtracking orientation search
  int oracle_edges = 16;       // (k-1)^m flow enumeration
  int flowpoly_edges = 24;     // deletion-contraction recursion
  int z3_vertices = 10;        // 3^(n-1) boundary sweep
  int ltwz_vertices = 22;      // 2^(n-1) subset condition sweep

  static Limits from_env() {
    Limits lim;
    const char* raw = std::getenv("ZFLOW_LIMITS");
    if (!raw) return lim;
    std::istringstream in(raw);
    std::string item;
    while (std::getline(in, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = item.substr(0, eq);
      const int value = std::atoi(item.c_str() + eq + 1);
      if (value <= 0) continue;
      if (key == "census-vertices") lim.census_vertices = value;
      else if (key == "search-edges") lim.search_edges = value;
      else if (key == "oracle-edges") lim.oracle_edges = value;
      else if (key == "flowpoly-edges") lim.flowpoly_edges = value;
      else if (key == "z3-vertices") lim.z3_vertices = value;
      else if (key == "ltwz-vertices") lim.ltwz_vertices = value;
    }
    return lim;
  }
};

}  // namespace zflow
