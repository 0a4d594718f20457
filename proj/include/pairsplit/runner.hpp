#pragma once
#include <string>
#include <vector>

#include "pairsplit/config.hpp"
#include "pairsplit/kvfile.hpp"

namespace pairsplit {

struct RunResult {
  std::vector<std::string> files;  // everything written, summary included
  KvFile summary;
};

// executes cfg.scenario into out_dir (created if missing); all outputs are
// deterministic for a fixed config, the seed is only recorded
RunResult run_scenario(const RunConfig& cfg, const std::string& out_dir,
                       unsigned long seed = 0);

}  // namespace pairsplit
