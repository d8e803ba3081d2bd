#ifndef TMSPLINE_CLI_HPP
#define TMSPLINE_CLI_HPP

#include <iosfwd>
#include <optional>

#include "tmspline/dimension.hpp"
#include "tmspline/smoothness.hpp"

namespace tmspline {

enum class DimMethod { chi, homology, oracle, all };
enum class ReportFormat { text, machine };

// Everything one dimension run produced; fields are set only when the chosen
// method computes them.  agreement == (dim_homology == dim_oracle),
// chi_alone == (h0 == 0).
struct RunReport {
    int n0 = 0, n1 = 0, n2 = 0;
    int m = 0, mp = 0;
    std::optional<ChiBreakdown> chi;
    std::optional<long long> h0;
    std::optional<long long> dim_homology;
    std::optional<long long> dim_oracle;
    std::optional<bool> agreement;
    std::optional<bool> chi_alone;
};

RunReport compute_run_report(const SmoothnessDistribution& dist, int m, int mp, DimMethod method);
void render_run_report(const RunReport& report, ReportFormat format, std::ostream& out);

// Full command-line surface (validate / dim / certify / gen).  Streams are
// injected so tests can run commands in process.  Exit codes: 0 success,
// 1 validation or certification failure, 2 usage or parse error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace tmspline

#endif
