#include "tcfkit/catalog.hpp"

#include "tcfkit/combinat.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace tcfkit::catalog {

namespace {

std::vector<std::vector<std::string>> tokenize_lines(const char* text) {
    std::vector<std::vector<std::string>> out;
    std::istringstream all(text);
    std::string line;
    while (std::getline(all, line)) {
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (!tokens.empty()) out.push_back(std::move(tokens));
    }
    return out;
}

std::vector<VertexOrbit> parse_vertex_rows(int n, const char* text) {
    const std::size_t m = combinat::edge_count(n);
    std::vector<VertexOrbit> out;
    for (const auto& tokens : tokenize_lines(text)) {
        if (tokens.size() != m + 1)
            throw std::logic_error("catalog: malformed vertex row");
        std::vector<Rational> chi;
        chi.reserve(m);
        for (std::size_t k = 0; k < m; ++k) chi.push_back(parse_rational(tokens[k]));
        out.push_back({tcf::TcfPoint(n, std::move(chi)), std::stol(tokens[m])});
    }
    return out;
}

// clique partition points grouped into permutation orbits, smallest
// canonical form first; covers every vertex of TCF_n for n <= 4
std::vector<VertexOrbit> clique_partition_orbits(int n) {
    std::map<std::vector<Rational>, long> orbits;
    for (const auto& x : tcf::all_clique_partition_points(n))
        orbits[combinat::canonical_representative(x.chi, n)] += 1;
    std::vector<VertexOrbit> out;
    for (const auto& [chi, size] : orbits)
        out.push_back({tcf::TcfPoint(n, chi), size});
    return out;
}

// 11 orbit representatives for the 214 extreme points of TCF_5,
// coordinates chi_12 .. chi_45 followed by the orbit length
const char* const kTcf5Vertices = R"(
0 0 0 0 0 0 0 0 0 0  1
0 0 0 0 0 0 0 0 0 1  10
0 0 0 0 0 0 0 1 1 1  10
0 0 0 0 0 0 1 1 0 0  15
0 0 0 0 1 1 1 1 1 1  5
0 0 0 1 1 1 0 1 0 0  10
1 1 1 1 1 1 1 1 1 1  1
0 0 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2  30
0 0 1/2 1/2 1/2 0 1/2 1/2 1/2 1/2  60
0 0 0 1/2 1/2 1/2 0 1/2 1/2 1/2  60
1/2 0 0 1/2 1/2 0 0 1/2 0 1/2  12
)";

// 88 orbit representatives for the 28895 extreme points of TCF_6,
// coordinates chi_12 .. chi_56 followed by the orbit length; grouped by
// value set: {0,1} (11 rows), {0,1/2} (16), {0,1/2,1} (11), {0,1/3,2/3} (50)
const char* const kTcf6Vertices = R"(
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0  1
0 0 0 0 0 0 0 0 0 0 0 0 0 0 1  15
0 0 0 0 0 0 0 0 0 0 0 0 1 1 1  20
0 0 0 0 0 0 0 0 0 0 0 1 1 0 0  45
0 0 0 0 0 0 0 0 0 1 1 1 1 1 1  15
0 0 0 0 0 0 0 0 1 1 1 0 1 0 0  60
0 0 0 0 0 1 1 1 1 1 1 1 1 1 1  6
0 0 0 0 1 0 0 1 0 1 0 0 0 0 0  15
0 0 0 0 1 1 1 1 0 1 1 0 1 0 0  15
0 0 0 1 1 1 1 0 0 1 0 0 0 0 1  10
1 1 1 1 1 1 1 1 1 1 1 1 1 1 1  1
0 0 0 0 0 0 0 0 1/2 1/2 1/2 0 1/2 1/2 1/2  360
0 0 0 0 0 0 0 1/2 1/2 1/2 0 1/2 1/2 0 0  72
0 0 0 0 0 0 0 1/2 1/2 1/2 0 1/2 1/2 1/2 1/2  360
0 0 0 0 0 0 0 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2  180
0 0 0 0 1/2 0 1/2 1/2 0 1/2 1/2 1/2 1/2 0 0  360
0 0 0 0 1/2 0 1/2 1/2 0 1/2 1/2 1/2 1/2 0 1/2  720
0 0 0 0 1/2 0 1/2 1/2 0 1/2 1/2 1/2 1/2 1/2 1/2  360
0 0 0 1/2 1/2 0 1/2 0 1/2 1/2 1/2 0 0 0 1/2  360
0 0 0 1/2 1/2 0 1/2 0 1/2 1/2 1/2 0 1/2 1/2 1/2  120
0 0 0 1/2 1/2 1/2 1/2 0 0 1/2 0 0 1/2 1/2 1/2  180
0 0 0 1/2 1/2 1/2 1/2 0 0 1/2 1/2 1/2 1/2 1/2 1/2  90
0 0 0 1/2 1/2 1/2 1/2 0 1/2 1/2 0 1/2 1/2 1/2 1/2  360
0 0 0 1/2 1/2 1/2 1/2 0 1/2 1/2 1/2 0 1/2 1/2 0  360
0 0 0 1/2 1/2 1/2 1/2 0 1/2 1/2 1/2 0 1/2 1/2 1/2  360
0 0 0 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2  60
0 0 1/2 1/2 1/2 1/2 0 1/2 1/2 1/2 0 1/2 1/2 1/2 1/2  360
0 0 0 0 1/2 1 1/2 1/2 0 1/2 1/2 0 1/2 1/2 1/2  180
0 0 0 0 1/2 1 1/2 1/2 1/2 1/2 1/2 1/2 1/2 0 1/2  360
0 0 0 1 1/2 1/2 1/2 0 0 1/2 0 1/2 0 1/2 1/2  180
0 0 0 1/2 1/2 1 1/2 0 1/2 1/2 0 1/2 1/2 0 0  180
0 0 0 1/2 1/2 1 1/2 0 1/2 1/2 0 1/2 1/2 1/2 1/2  360
0 0 0 1/2 1/2 1 1/2 1/2 1/2 1/2 1/2 1/2 0 0 1/2  180
0 0 0 1/2 1/2 1 1/2 1/2 1/2 1/2 1/2 1/2 0 1/2 1/2  360
0 0 0 1/2 1/2 1 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2  180
0 0 1 1/2 1/2 1/2 0 1/2 1/2 0 1/2 1/2 1/2 1/2 1/2  90
0 0 1/2 1/2 1/2 1/2 0 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1  180
0 0 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1/2 1 1/2 1/2  180
0 0 0 0 1/3 1/3 1/3 1/3 0 2/3 2/3 2/3 2/3 2/3 2/3  120
0 0 0 0 1/3 1/3 1/3 1/3 2/3 2/3 2/3 0 2/3 1/3 1/3  360
0 0 0 0 1/3 2/3 2/3 2/3 1/3 2/3 2/3 1/3 2/3 2/3 2/3  180
0 0 0 0 2/3 1/3 1/3 1/3 1/3 2/3 2/3 0 2/3 0 1/3  360
0 0 0 0 2/3 2/3 2/3 2/3 0 2/3 2/3 1/3 2/3 1/3 1/3  120
0 0 0 1/3 1/3 1/3 1/3 0 2/3 2/3 2/3 1/3 2/3 1/3 1/3  360
0 0 0 1/3 1/3 1/3 1/3 2/3 2/3 2/3 0 1/3 1/3 1/3 2/3  720
0 0 0 1/3 1/3 2/3 2/3 0 2/3 2/3 1/3 2/3 1/3 2/3 1/3  360
0 0 0 1/3 1/3 2/3 2/3 1/3 1/3 2/3 1/3 2/3 2/3 2/3 2/3  720
0 0 0 1/3 1/3 2/3 2/3 1/3 2/3 2/3 1/3 2/3 2/3 1/3 1/3  360
0 0 0 1/3 2/3 1/3 1/3 0 1/3 2/3 2/3 0 2/3 0 0  360
0 0 0 1/3 2/3 1/3 1/3 2/3 1/3 2/3 0 0 1/3 0 1/3  360
0 0 0 1/3 2/3 1/3 1/3 2/3 1/3 2/3 1/3 0 1/3 1/3 1/3  720
0 0 0 1/3 2/3 2/3 2/3 0 0 2/3 1/3 0 1/3 1/3 1/3  720
0 0 0 1/3 2/3 2/3 2/3 1/3 0 2/3 1/3 1/3 2/3 1/3 1/3  720
0 0 0 1/3 2/3 2/3 2/3 1/3 1/3 2/3 1/3 1/3 2/3 0 0  360
0 0 0 1/3 2/3 2/3 2/3 1/3 1/3 2/3 2/3 1/3 2/3 1/3 1/3  360
0 0 0 2/3 2/3 2/3 2/3 0 1/3 2/3 1/3 1/3 1/3 1/3 2/3  360
0 0 1/3 1/3 1/3 1/3 0 1/3 1/3 2/3 2/3 2/3 2/3 2/3 2/3  180
0 0 1/3 1/3 1/3 1/3 0 2/3 2/3 2/3 1/3 1/3 1/3 1/3 2/3  360
0 0 1/3 1/3 1/3 2/3 0 1/3 2/3 1/3 1/3 2/3 2/3 1/3 1/3  720
0 0 1/3 1/3 1/3 2/3 1/3 1/3 1/3 1/3 2/3 2/3 2/3 2/3 2/3  360
0 0 1/3 1/3 1/3 2/3 1/3 1/3 2/3 1/3 1/3 2/3 2/3 0 0  180
0 0 1/3 1/3 1/3 2/3 1/3 1/3 2/3 1/3 1/3 2/3 2/3 0 1/3  360
0 0 1/3 1/3 1/3 2/3 1/3 1/3 2/3 1/3 2/3 1/3 2/3 2/3 1/3  360
0 0 1/3 1/3 1/3 2/3 1/3 1/3 2/3 1/3 2/3 2/3 2/3 1/3 2/3  720
0 0 1/3 1/3 1/3 2/3 1/3 1/3 2/3 2/3 2/3 2/3 2/3 2/3 2/3  360
0 0 1/3 1/3 1/3 2/3 1/3 2/3 2/3 1/3 2/3 2/3 0 1/3 2/3  360
0 0 1/3 1/3 1/3 2/3 1/3 2/3 2/3 2/3 1/3 2/3 1/3 2/3 2/3  360
0 0 1/3 1/3 1/3 2/3 2/3 2/3 2/3 2/3 2/3 2/3 2/3 2/3 2/3  60
0 0 1/3 1/3 2/3 1/3 0 2/3 1/3 2/3 0 1/3 0 1/3 1/3  360
0 0 1/3 1/3 2/3 1/3 1/3 1/3 1/3 2/3 2/3 1/3 2/3 1/3 1/3  360
0 0 1/3 1/3 2/3 2/3 1/3 1/3 0 1/3 1/3 1/3 2/3 1/3 2/3  720
0 0 1/3 1/3 2/3 2/3 1/3 1/3 0 1/3 1/3 1/3 2/3 2/3 2/3  360
0 0 1/3 1/3 2/3 2/3 1/3 1/3 1/3 1/3 2/3 0 2/3 1/3 0  720
0 0 1/3 1/3 2/3 2/3 1/3 1/3 1/3 1/3 2/3 1/3 2/3 0 1/3  720
0 0 1/3 1/3 2/3 2/3 1/3 2/3 0 1/3 2/3 1/3 0 1/3 1/3  720
0 0 1/3 1/3 2/3 2/3 1/3 2/3 0 1/3 2/3 1/3 1/3 2/3 1/3  720
0 0 1/3 1/3 2/3 2/3 1/3 2/3 1/3 1/3 2/3 1/3 1/3 0 1/3  360
0 0 1/3 1/3 2/3 2/3 1/3 2/3 1/3 2/3 2/3 1/3 2/3 1/3 1/3  720
0 0 1/3 1/3 2/3 2/3 2/3 2/3 0 2/3 2/3 1/3 2/3 1/3 1/3  360
0 0 1/3 2/3 2/3 2/3 1/3 1/3 1/3 2/3 0 1/3 0 1/3 2/3  360
0 0 1/3 2/3 2/3 2/3 2/3 1/3 1/3 2/3 1/3 1/3 1/3 1/3 2/3  180
0 0 2/3 2/3 2/3 1/3 1/3 1/3 1/3 1/3 1/3 1/3 2/3 2/3 2/3  60
0 1/3 1/3 1/3 1/3 1/3 1/3 1/3 2/3 2/3 2/3 1/3 2/3 2/3 2/3  360
0 1/3 1/3 1/3 1/3 1/3 1/3 2/3 2/3 2/3 1/3 2/3 2/3 2/3 2/3  720
0 1/3 1/3 1/3 1/3 1/3 2/3 2/3 2/3 1/3 2/3 2/3 2/3 2/3 2/3  360
0 1/3 1/3 1/3 2/3 1/3 1/3 2/3 1/3 2/3 0 2/3 1/3 2/3 1/3  720
0 1/3 1/3 1/3 2/3 1/3 2/3 2/3 1/3 0 1/3 2/3 2/3 1/3 1/3  360
0 1/3 1/3 1/3 2/3 1/3 2/3 2/3 1/3 2/3 2/3 1/3 2/3 1/3 1/3  360
)";

// 67 facet orbit representatives of TCF_6: coefficients c_12 .. c_56, the
// constant c0, the number of extreme points meeting the facet, and the
// orbit length; one block per ancestral CUT_7 generator
struct FacetBlock {
    int generator;
    const char* rows;
};

const FacetBlock kTcf6FacetBlocks[] = {
    {1, R"(
-1 0 0 0 0 0 0 0 0 0 0 0 0 0 0  0 7657 15
-1 1 0 0 0 1 0 0 0 0 0 0 0 0 0  1 3521 60
)"},
    {2, R"(
-1 -1 1 0 0 -1 1 0 0 1 0 0 0 0 0  1 1554 60
-1 -1 1 1 0 -1 1 1 0 1 1 0 -1 0 0  2 1043 60
)"},
    {3, R"(
-1 -1 -1 1 0 -1 -1 1 0 -1 1 0 1 0 0  1 110 30
-2 -2 2 2 0 -1 1 1 0 1 1 0 -1 0 0  3 135 180
-1 -1 -1 2 0 -1 -1 2 0 -1 2 0 2 0 0  3 102 30
-2 -2 2 2 2 -1 1 1 1 1 1 1 -1 -1 -1  4 129 60
-1 -1 -1 1 2 -1 -1 1 2 -1 1 2 1 2 -2  4 129 30
)"},
    {4, R"(
-1 -1 -1 1 1 -1 -1 1 1 -1 1 1 1 1 -1  2 554 15
)"},
    {5, R"(
-2 -2 -2 2 2 -1 -1 1 1 -1 1 1 1 1 -1  3 20 60
-1 -1 -1 -1 2 -1 -1 -1 2 -1 -1 2 -1 2 2  3 20 6
-4 -2 2 2 2 -2 2 2 2 1 1 1 -1 -1 -1  5 61 60
-2 -2 -2 2 4 -1 -1 1 2 -1 1 2 1 2 -2  5 53 120
)"},
    {6, R"(
-1 -1 -1 -1 1 -1 -1 -1 1 -1 -1 1 -1 1 1  1 15 6
-3 -3 3 3 3 -1 1 1 1 1 1 1 -1 -1 -1  6 15 60
-1 -1 -1 -1 3 -1 -1 -1 3 -1 -1 3 -1 3 3  6 15 6
)"},
    {7, R"(
-1 -1 -1 1 1 -1 -1 1 1 0 0 1 1 0 -1  2 95 180
-1 -1 0 0 1 0 -1 0 1 0 -1 1 -1 1 1  2 95 72
-1 -1 -1 1 1 -1 -1 1 1 0 0 1 1 1 0  3 15 360
-1 -1 -1 1 1 -1 0 0 1 0 1 0 1 1 0  3 15 360
-1 -1 -1 1 1 -1 0 0 1 0 1 1 1 1 -1  3 15 720
-1 -1 0 0 1 -1 1 1 1 1 1 1 -1 -1 0  3 15 360
-1 -1 0 0 1 0 -1 0 1 0 1 1 1 1 -1  3 15 360
-1 -1 0 1 1 -1 1 0 1 1 1 1 0 -1 -1  3 15 360
)"},
    {8, R"(
-2 -2 -2 1 2 -1 -1 1 1 -1 1 1 1 1 0  3 18 120
-2 -2 -1 2 2 -1 -1 1 1 -1 1 1 0 1 -1  3 18 360
-1 -1 -1 -1 2 -1 -1 -1 2 -1 -1 2 0 1 2  3 18 120
-3 -2 -1 2 2 -1 -2 2 2 0 1 1 1 1 -1  4 83 180
-2 -2 -2 1 3 -1 -1 1 2 -1 1 2 1 2 -2  4 86 120
-3 -2 1 2 2 -2 2 1 2 1 1 1 0 -1 -1  5 15 360
-3 -2 1 2 2 -2 2 2 2 1 1 1 -1 -1 -1  5 15 360
-3 -2 1 2 2 -1 2 2 2 0 1 1 -1 -1 -1  5 15 360
-2 -2 -2 2 3 -1 -1 1 2 -1 1 2 1 2 -1  5 15 120
-2 -2 -1 2 3 -1 -1 1 2 -1 1 2 0 2 -1  5 15 360
-2 -2 -1 2 3 -1 -1 1 2 -1 1 2 1 2 -2  5 15 360
-2 -2 -1 2 3 -1 -1 1 2 0 1 1 1 2 -2  5 15 720
-2 -2 1 2 3 -1 1 1 2 1 1 2 -1 -2 -2  5 15 360
)"},
    {9, R"(
-2 -2 -2 -2 3 -1 -1 -1 2 -1 -1 2 -1 2 2  3 15 30
-3 -3 -3 3 5 -1 -1 1 2 -1 1 2 1 2 -2  6 15 120
-2 -2 -2 -2 5 -1 -1 -1 3 -1 -1 3 -1 3 3  6 15 30
-5 -5 3 3 3 -3 2 2 2 2 2 2 -1 -1 -1  7 73 60
-5 -3 3 3 5 -2 2 2 3 1 1 2 -1 -2 -2  8 15 360
-3 -3 -3 5 5 -1 -1 2 2 -1 2 2 2 2 -3  8 15 60
-3 -2 -2 2 5 -2 -2 2 5 -1 1 3 1 3 -3  8 15 180
)"},
    {10, R"(
-1 -1 0 0 1 0 -1 0 1 1 -1 0 1 1 -1  2 93 360
-1 -1 0 0 1 -1 0 1 0 1 0 1 1 -1 1  3 15 720
-1 -1 0 0 1 -1 0 1 1 1 1 0 -1 1 0  3 15 720
-1 -1 0 0 1 0 -1 0 1 1 -1 1 1 0 1  3 15 720
-1 -1 0 0 1 0 -1 1 0 1 -1 1 1 0 1  3 15 720
-1 -1 0 0 1 0 -1 1 1 1 0 1 1 0 -1  3 15 720
)"},
    {11, R"(
-1 -1 -1 0 1 -1 -1 0 1 -1 1 0 1 0 1  2 19 90
-1 -1 -1 0 1 -1 -1 0 1 0 -1 1 1 0 1  2 19 360
-2 -2 -1 1 2 -1 0 1 1 0 1 1 -1 1 0  3 87 360
-2 -2 1 2 2 -1 0 1 1 0 1 1 -1 -1 -1  3 88 180
-2 -2 -1 2 2 -1 0 1 1 0 1 1 1 1 -1  4 15 180
-2 -2 1 1 2 -1 0 1 1 0 1 1 1 -1 0  4 15 360
-2 -2 1 1 2 -1 0 1 1 1 0 1 1 -1 0  4 15 720
-2 -2 1 2 2 -1 0 1 1 1 1 1 -1 0 -1  4 15 720
-2 -1 -1 2 2 -1 0 1 1 1 0 0 1 1 -1  4 15 360
-2 -1 -1 2 2 -1 0 1 1 1 0 1 1 0 -1  4 15 720
-2 -1 1 1 1 -1 2 2 2 0 0 1 -1 -1 -1  4 15 360
-2 -1 1 2 2 0 1 1 1 -1 0 1 -1 0 -1  4 15 720
-2 0 1 1 1 1 2 2 2 -1 -1 0 -1 -1 -1  4 15 360
-1 -1 -1 0 2 -1 -1 0 2 -1 1 2 1 2 -1  4 15 180
-1 -1 -1 0 2 -1 -1 0 2 0 -1 2 1 1 1  4 15 360
-1 -1 -1 0 2 -1 0 1 2 0 1 2 -1 1 -1  4 15 360
)"},
};

// hypermetric facet orbit tables as b-vectors: entries of b, orbit length,
// then an incidence mark (v0, v1 or -)
const char* const kHypFacets2 = R"(
1 1  1 v0
1 -1  1 v1
)";
const char* const kHypFacets3 = R"(
1 1 0  3 v0
1 1 -1  3 v1
)";
const char* const kHypFacets4 = R"(
1 1 0 0  6 v0
1 1 -1 0  12 v1
1 1 1 -1  4 -
)";
const char* const kHypFacets5 = R"(
1 1 0 0 0  10 v0
1 1 -1 0 0  30 v1
1 1 1 -1 0  20 -
1 1 1 1 -1  5 -
1 1 1 1 -2  5 -
1 1 1 -1 -1  10 v1
2 1 1 -1 -1  30 -
)";
// same order as the generator 1..6 rows of the facet table
const char* const kHypFacets6 = R"(
1 1 0 0 0 0  15 v0
1 1 -1 0 0 0  60 v1
1 1 1 -1 0 0  60 -
1 1 1 -1 -1 0  60 v1
1 1 1 1 -1 0  30 -
2 1 1 -1 -1 0  180 -
1 1 1 1 -2 0  30 -
2 1 1 -1 -1 -1  60 v1
1 1 1 1 -1 -2  30 v1
1 1 1 1 -1 -1  15 -
2 1 1 1 -1 -1  60 -
1 1 1 1 1 -2  6 -
2 2 1 -1 -1 -1  60 -
2 1 1 1 -1 -2  120 -
1 1 1 1 1 -1  6 -
3 1 1 -1 -1 -1  60 -
1 1 1 1 1 -3  6 -
)";

// the 11 homogeneous CUT_7 generators, coefficients c_12 .. c_67
const char* const kCut7Generators = R"(
1 -1 0 0 0 0 -1 0 0 0 0 0 0 0 0 0 0 0 0 0 0
1 1 -1 -1 0 0 1 -1 -1 0 0 -1 -1 0 0 1 0 0 0 0 0
2 2 -2 -2 -2 0 1 -1 -1 -1 0 -1 -1 -1 0 1 1 0 1 0 0
1 1 1 -1 -1 -1 1 1 -1 -1 -1 1 -1 -1 -1 -1 -1 -1 1 1 1
4 2 -2 -2 -2 -2 2 -2 -2 -2 -2 -1 -1 -1 -1 1 1 1 1 1 1
3 3 -3 -3 -3 -3 1 -1 -1 -1 -1 -1 -1 -1 -1 1 1 1 1 1 1
0 1 1 0 -1 -1 0 1 1 -1 -1 0 1 -1 -1 0 -1 -1 -1 -1 1
3 2 1 -2 -2 -2 1 2 -2 -2 -2 0 -1 -1 -1 -1 -1 -1 1 1 1
5 5 -3 -3 -3 -3 3 -2 -2 -2 -2 -2 -2 -2 -2 1 1 1 1 1 1
-1 -1 0 -1 -1 0 1 0 1 0 -1 1 0 0 -1 -1 -1 -1 1 0 1
1 1 1 -2 -1 0 1 1 -2 0 -1 1 -2 -1 0 -2 0 -1 1 1 -1
)";

std::vector<HypermetricFacet> parse_hyp_rows(int n, const char* text) {
    std::vector<HypermetricFacet> out;
    for (const auto& tokens : tokenize_lines(text)) {
        if (tokens.size() != (std::size_t)n + 2)
            throw std::logic_error("catalog: malformed hypermetric row");
        HypermetricFacet row;
        for (int k = 0; k < n; ++k) row.b.emplace_back(tokens[(std::size_t)k]);
        row.orbit_length = std::stol(tokens[(std::size_t)n]);
        const std::string& mark = tokens[(std::size_t)n + 1];
        row.at_v0 = (mark == "v0");
        row.at_v1 = (mark == "v1");
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace

Counts tcf_counts(int n) {
    switch (n) {
        case 2: return {2, 2, 2, 2};
        case 3: return {5, 6, 3, 2};
        case 4: return {15, 22, 5, 3};
        case 5: return {214, 110, 11, 7};
        case 6: return {28895, 18720, 88, 67};
        default: throw tcf::UnsupportedSize("tcf_counts: n must be in [2,6]");
    }
}

Counts theta_counts(int n) {
    switch (n) {
        case 2: return {2, 2, 2, 2};
        case 3: return {6, 7, 4, 3};
        case 4: return {42, 15, 10, 4};
        case 5: return {1292, 31, 45, 5};
        case 6: return {200214, 63, 583, 6};
        default: throw tcf::UnsupportedSize("theta_counts: n must be in [2,6]");
    }
}

long cut_facet_count(int n) {
    switch (n) {
        case 2: return 4;
        case 3: return 16;
        case 4: return 56;
        case 5: return 368;
        case 6: return 116764;
        default: throw tcf::UnsupportedSize("cut_facet_count: n must be in [2,6]");
    }
}

const std::vector<VertexOrbit>& vertex_orbit_table(int n) {
    static const std::vector<VertexOrbit> t2 = clique_partition_orbits(2);
    static const std::vector<VertexOrbit> t3 = clique_partition_orbits(3);
    static const std::vector<VertexOrbit> t4 = clique_partition_orbits(4);
    static const std::vector<VertexOrbit> t5 = parse_vertex_rows(5, kTcf5Vertices);
    static const std::vector<VertexOrbit> t6 = parse_vertex_rows(6, kTcf6Vertices);
    switch (n) {
        case 2: return t2;
        case 3: return t3;
        case 4: return t4;
        case 5: return t5;
        case 6: return t6;
        default: throw tcf::UnsupportedSize("vertex_orbit_table: n must be in [2,6]");
    }
}

const std::vector<HypermetricFacet>& hypermetric_facet_table(int n) {
    static const std::vector<HypermetricFacet> t2 = parse_hyp_rows(2, kHypFacets2);
    static const std::vector<HypermetricFacet> t3 = parse_hyp_rows(3, kHypFacets3);
    static const std::vector<HypermetricFacet> t4 = parse_hyp_rows(4, kHypFacets4);
    static const std::vector<HypermetricFacet> t5 = parse_hyp_rows(5, kHypFacets5);
    static const std::vector<HypermetricFacet> t6 = parse_hyp_rows(6, kHypFacets6);
    switch (n) {
        case 2: return t2;
        case 3: return t3;
        case 4: return t4;
        case 5: return t5;
        case 6: return t6;
        default: throw tcf::UnsupportedSize("hypermetric_facet_table: n must be in [2,6]");
    }
}

const std::vector<FacetOrbit>& tcf6_facet_table() {
    static const std::vector<FacetOrbit> table = [] {
        std::vector<FacetOrbit> out;
        const std::size_t m = combinat::edge_count(6);
        for (const FacetBlock& block : kTcf6FacetBlocks) {
            int index = 0;
            for (const auto& tokens : tokenize_lines(block.rows)) {
                if (tokens.size() != m + 3)
                    throw std::logic_error("catalog: malformed facet row");
                std::vector<Integer> c;
                c.reserve(m);
                for (std::size_t k = 0; k < m; ++k) c.emplace_back(tokens[k]);
                ++index;
                std::string name =
                    "g" + std::to_string(block.generator) + "-" + std::to_string(index);
                FacetOrbit row;
                row.representative =
                    tcf::AffineInequality(6, std::move(c), Integer(tokens[m]), name);
                row.generator = block.generator;
                row.tight_vertices = std::stol(tokens[m + 1]);
                row.orbit_length = std::stol(tokens[m + 2]);
                out.push_back(std::move(row));
            }
        }
        if (out.size() != 67) throw std::logic_error("catalog: expected 67 facet orbits");
        return out;
    }();
    return table;
}

const std::vector<tcf::AffineInequality>& facet_orbit_representatives(int n) {
    static const auto build = [](int nn) {
        std::vector<tcf::AffineInequality> out;
        if (nn == 6) {
            for (const auto& row : tcf6_facet_table()) out.push_back(row.representative);
            return out;
        }
        const char* names2[] = {"positivity", "upper-bound"};
        const char* names3[] = {"positivity", "triangle"};
        const char* names4[] = {"positivity", "triangle", "tetrahedron"};
        const char* names5[] = {"positivity",  "triangle",      "tetrahedron", "pyramid",
                                "2w-pyramid", "pentagonal", "2w-pentagonal"};
        const char* const* names = nn == 2 ? names2 : nn == 3 ? names3 : nn == 4 ? names4 : names5;
        std::size_t index = 0;
        for (const auto& row : hypermetric_facet_table(nn)) {
            tcf::AffineInequality q = tcf::hypermetric_inequality(row.b);
            q.name = names[index++];
            out.push_back(std::move(q));
        }
        return out;
    };
    static const std::vector<tcf::AffineInequality> t2 = build(2);
    static const std::vector<tcf::AffineInequality> t3 = build(3);
    static const std::vector<tcf::AffineInequality> t4 = build(4);
    static const std::vector<tcf::AffineInequality> t5 = build(5);
    static const std::vector<tcf::AffineInequality> t6 = build(6);
    switch (n) {
        case 2: return t2;
        case 3: return t3;
        case 4: return t4;
        case 5: return t5;
        case 6: return t6;
        default:
            throw tcf::UnsupportedSize("facet_orbit_representatives: n must be in [2,6]");
    }
}

const std::vector<tcf::AffineInequality>& stored_facets(int n) {
    static const auto build = [](int nn) {
        std::vector<tcf::AffineInequality> out;
        for (const auto& rep : facet_orbit_representatives(nn))
            for (const auto& q : tcf::inequality_orbit(rep)) out.push_back(q);
        return out;
    };
    static const std::vector<tcf::AffineInequality> t2 = build(2);
    static const std::vector<tcf::AffineInequality> t3 = build(3);
    static const std::vector<tcf::AffineInequality> t4 = build(4);
    static const std::vector<tcf::AffineInequality> t5 = build(5);
    static const std::vector<tcf::AffineInequality> t6 = build(6);
    switch (n) {
        case 2: return t2;
        case 3: return t3;
        case 4: return t4;
        case 5: return t5;
        case 6: return t6;
        default: throw tcf::UnsupportedSize("stored_facets: n must be in [2,6]");
    }
}

const std::vector<tcf::TcfPoint>& stored_vertices(int n) {
    static const auto build = [](int nn) {
        std::vector<tcf::TcfPoint> out;
        for (const auto& row : vertex_orbit_table(nn)) {
            auto orb = combinat::orbit(row.representative.chi, nn);
            if ((long)orb.size() != row.orbit_length)
                throw std::logic_error("catalog: stored orbit length mismatch");
            for (auto& chi : orb) out.emplace_back(nn, std::move(chi));
        }
        return out;
    };
    static const std::vector<tcf::TcfPoint> t2 = build(2);
    static const std::vector<tcf::TcfPoint> t3 = build(3);
    static const std::vector<tcf::TcfPoint> t4 = build(4);
    static const std::vector<tcf::TcfPoint> t5 = build(5);
    static const std::vector<tcf::TcfPoint> t6 = build(6);
    switch (n) {
        case 2: return t2;
        case 3: return t3;
        case 4: return t4;
        case 5: return t5;
        case 6: return t6;
        default: throw tcf::UnsupportedSize("stored_vertices: n must be in [2,6]");
    }
}

const std::vector<tcf::AffineInequality>& cut7_generators() {
    static const std::vector<tcf::AffineInequality> gens = [] {
        std::vector<tcf::AffineInequality> out;
        const std::size_t m = combinat::edge_count(7);
        int index = 0;
        for (const auto& tokens : tokenize_lines(kCut7Generators)) {
            if (tokens.size() != m) throw std::logic_error("catalog: malformed generator row");
            std::vector<Integer> c;
            c.reserve(m);
            for (const auto& tok : tokens) c.emplace_back(tok);
            ++index;
            out.emplace_back(7, std::move(c), Integer(0), "gen" + std::to_string(index));
        }
        if (out.size() != 11) throw std::logic_error("catalog: expected 11 generators");
        return out;
    }();
    return gens;
}

std::vector<tcf::AffineInequality> violated_stored_facets(const tcf::TcfPoint& x) {
    std::vector<tcf::AffineInequality> out;
    for (const auto& q : stored_facets(x.n))
        if (!q.satisfied_by(x)) out.push_back(q);
    return out;
}

tcf::MembershipResult checked_membership(const tcf::TcfPoint& x) {
    if (x.n >= 2 && x.n <= 6) {
        const tcf::AffineInequality* best = nullptr;
        Rational best_gap(0);
        for (const auto& q : stored_facets(x.n)) {
            Rational gap = q.evaluate(x) - Rational(q.c0);
            if (gap <= 0) continue;
            if (!best || gap > best_gap ||
                (gap == best_gap && std::tie(q.c, q.c0) < std::tie(best->c, best->c0))) {
                best = &q;
                best_gap = gap;
            }
        }
        if (best) {
            tcf::MembershipResult out;
            out.member = false;
            out.separator = *best;
            out.separator_lhs = best->evaluate(x);
            return out;
        }
    }
    return tcf::membership(x);
}

}  // namespace tcfkit::catalog

namespace tcfkit::tcf {

SpindleHRep spindle_h_representation(int n) {
    if (n < 2 || n > 6)
        throw UnsupportedSize("spindle_h_representation: stored facets cover n in [2,6]");
    const std::size_t m = combinat::edge_count(n);
    TcfPoint v0(n, std::vector<Rational>(m, Rational(0)));
    TcfPoint v1(n, std::vector<Rational>(m, Rational(1)));
    SpindleHRep out;
    for (const auto& q : catalog::stored_facets(n)) {
        auto rec = recognize_hypermetric(q);
        bool pure = rec.hypermetric;
        if (pure)
            for (const auto& bi : rec.b)
                if (bi < -1 || bi > 1) pure = false;
        if (q.tight_at(v0)) {
            out.at_v0.push_back(q);
            out.at_v0_pure.push_back(pure);
        } else if (q.tight_at(v1)) {
            out.at_v1.push_back(q);
            out.at_v1_pure.push_back(pure);
        } else {
            out.elsewhere.push_back(q);
        }
    }
    return out;
}

}  // namespace tcfkit::tcf
