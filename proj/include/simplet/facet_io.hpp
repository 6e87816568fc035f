#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "simplet/complex.hpp"

namespace simplet {

/// A complex together with the original token for each dense vertex id.
struct LabeledComplex {
    SimplicialComplex complex;
    std::vector<std::string> labels;
};

/// Parses the facet text format: one facet per line, whitespace-separated
/// vertex labels, `#` comment lines, blank lines ignored. Labels are mapped
/// to dense ids in order of first appearance. Throws InputError on an input
/// without any facet.
LabeledComplex read_facets(std::istream& in);
LabeledComplex read_facet_file(const std::filesystem::path& path);

/// Writes one facet per line. When `labels` is empty, vertex ids are written.
void write_facets(std::ostream& out, const SimplicialComplex& complex,
                  const std::vector<std::string>& labels = {});

}  // namespace simplet
