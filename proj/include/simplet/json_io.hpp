#pragma once

#include <iosfwd>
#include <vector>

#include "json.hpp"
#include "simplet/approx.hpp"
#include "simplet/catalog.hpp"
#include "simplet/experiment.hpp"
#include "simplet/sfd.hpp"

namespace simplet {

/// [{"k": 3, "simplices": [[0,1],[0,2],[1,2]]}, ...] in catalog order.
nlohmann::json catalog_to_json(const SimpletCatalog& catalog);

/// {"m", "catalog", "counts", "frequencies", "total", "mode"}.
nlohmann::json sfd_to_json(const SfdVector& sfd, const SimpletCatalog& catalog);

/// Reads back the fields written by sfd_to_json. Throws InputError on a
/// malformed document.
SfdVector sfd_from_json(const nlohmann::json& doc);

/// sfd_to_json plus the estimator parameters.
nlohmann::json approx_to_json(const SfdVector& sfd, const SimpletCatalog& catalog, const ApproxParams& params);

nlohmann::json summary_to_json(const ComplexSummary& summary);
/// Wall-clock timings are included only on request so that reports for a
/// fixed seed are reproducible byte for byte.
nlohmann::json validation_to_json(const ValidationReport& report, const SimpletCatalog& catalog,
                                  bool include_timings = false);

inline constexpr const char* kBenchCsvHeader = "n,edges,max_degree,diameter,burn_in,samples,seconds";
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace simplet
