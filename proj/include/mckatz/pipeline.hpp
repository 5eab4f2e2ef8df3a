#ifndef MCKATZ_PIPELINE_HPP
#define MCKATZ_PIPELINE_HPP

#include <string>
#include <vector>

#include "mckatz/json_io.hpp"

namespace mckatz {

struct StageResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::vector<std::string> notes;
    double ms = 0;
};

struct PipelineReport {
    std::vector<StageResult> stages;
    bool ok = false;
    bool with_timings = false;
};

struct PipelineOptions {
    int up_to_stage = 8;        // run stages 1..up_to_stage
    bool corrupt_chain = false; // negative control: breaks the operator chain input
    bool timings = false;       // per-stage wall time in the report
    bool use_golden = true;     // compare against the golden files on disk
};

// Replays the whole construction: seed tuple, exterior square, middle
// convolution, the rank-6 script, invariant forms, rigidity numerology, the
// operator convolution chain and the Riemann schemes, each checked against
// values pinned here or in the golden files.
PipelineReport run_pipeline(const PipelineOptions& opt = {});

Json pipeline_to_json(const PipelineReport& rep);
std::string format_pipeline(const PipelineReport& rep);

} // namespace mckatz

#endif
