#pragma once

namespace pancyclic {

struct AnalysisParams {
    int k = 1;          // independence bound
    double eps = 0.5;   // epsilon in (0, 1)
    double gamma = 0.1; // BFS partition slack, in (0, 1/2)
    int c = 1;          // shortening radius
    double p = 1;       // density granularity

    // InvalidArgument / InvalidGamma / InvalidK on out-of-range fields.
    void validate() const;
};

} // namespace pancyclic
