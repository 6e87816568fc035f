#include "simplet/facet_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "simplet/errors.hpp"

namespace simplet {

LabeledComplex read_facets(std::istream& in)
{
    std::unordered_map<std::string, Vertex> ids;
    std::vector<std::string> labels;
    std::vector<VertexSet> facets;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream tokens(line);
        std::string token;
        if (!(tokens >> token) || token.front() == '#') {
            continue;
        }
        VertexSet facet;
        do {
            auto [it, inserted] = ids.try_emplace(token, static_cast<Vertex>(labels.size()));
            if (inserted) {
                labels.push_back(token);
            }
            facet.push_back(it->second);
        } while (tokens >> token);
        facets.push_back(std::move(facet));
    }
    if (facets.empty()) {
        throw InputError("facet input contains no facets");
    }
    auto complex = build_complex(std::move(facets), labels.size());
    return {std::move(complex), std::move(labels)};
}

LabeledComplex read_facet_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open facet file '" + path.string() + "'");
    }
    return read_facets(in);
}

void write_facets(std::ostream& out, const SimplicialComplex& complex, const std::vector<std::string>& labels)
{
    for (const auto& facet : complex.facets()) {
        for (std::size_t i = 0; i < facet.size(); ++i) {
            if (i > 0) {
                out << ' ';
            }
            if (labels.empty()) {
                out << facet[i];
            } else {
                out << labels[facet[i]];
            }
        }
        out << '\n';
    }
}

}  // namespace simplet
