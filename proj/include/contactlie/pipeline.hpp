#pragma once

#include <iosfwd>

#include "contactlie/classify.hpp"
#include "contactlie/grid.hpp"

namespace contactlie {

/// Full embedding pipeline output: canonical frame -> classification ->
/// chart -> sampled beta / angle lift -> verification report.
struct EmbeddingReport {
    CanonicalFrame frame;
    ClassificationResult classification;
    SecondKindChart chart;
    std::vector<EmbeddingSample> samples;
    ChartVerification verification;
};

/// Run the pipeline over a grid. Throws UnsupportedCase when the algebra is
/// isomorphic to su(2), which admits no three-subgroup factorization.
EmbeddingReport psi_embedding(const StructureConstants& c, const ContactData& data,
                              const GridSpec& spec, bool parallel = true);

/// CSV emission: header x,y,z,bx,by,f,u,v,w,V,residual; one row per sample.
void write_samples_csv(std::ostream& os, const std::vector<EmbeddingSample>& samples);

} // namespace contactlie
