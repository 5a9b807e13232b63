#include "contactlie/pipeline.hpp"

#include <cstdio>
#include <ostream>

namespace contactlie {

EmbeddingReport psi_embedding(const StructureConstants& c, const ContactData& data,
                              const GridSpec& spec, bool parallel) {
    EmbeddingReport rep;
    rep.frame = canonical_frame(c, data);
    rep.classification = classify(rep.frame);
    rep.chart = rep.classification.chart(); // throws UnsupportedCase for su(2)
    rep.samples = evaluate_chart_grid(rep.chart, spec, parallel);
    rep.verification = verify_chart(rep.chart, spec, parallel);
    return rep;
}

void write_samples_csv(std::ostream& os, const std::vector<EmbeddingSample>& samples) {
    os << "x,y,z,bx,by,f,u,v,w,V,residual\n";
    char buf[512];
    for (const auto& s : samples) {
        std::snprintf(buf, sizeof(buf),
                      "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", s.x,
                      s.y, s.z, s.bx, s.by, s.f, s.u, s.v, s.w, s.V, s.residual);
        os << buf;
    }
}

} // namespace contactlie
