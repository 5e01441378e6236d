#ifndef TCFKIT_IO_HPP
#define TCFKIT_IO_HPP

/**
 * Serialization for points, inequalities, set functions, and models.
 * Every numeric payload is an exact "p/q" string (plain "k" for
 * integers); no floats ever reach a persisted artifact.  Bulk data lives
 * in JSON-lines files, one object per line, each tagged with a "type"
 * field so mixed files stay self-describing.
 */

#include "tcfkit/setfunction.hpp"
#include "tcfkit/tcf.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace tcfkit::io {

class MalformedMatrix : public std::runtime_error {
  public:
    explicit MalformedMatrix(const std::string& what) : std::runtime_error(what) {}
};

class BadDocument : public std::runtime_error {
  public:
    explicit BadDocument(const std::string& what) : std::runtime_error(what) {}
};

using Json = nlohmann::json;

/** Tagged JSON objects; from_* functions validate the "type" field. */
Json to_json(const tcf::TcfPoint& x);
tcf::TcfPoint point_from_json(const Json& j);

Json to_json(const tcf::AffineInequality& q);
tcf::AffineInequality inequality_from_json(const Json& j);

Json to_json(const ecf::SetFunction& f);
ecf::SetFunction set_function_from_json(const Json& j);

Json to_json(const ecf::TmSpectralWeights& w);
ecf::TmSpectralWeights weights_from_json(const Json& j);

Json to_json(const ecf::BinaryModel& m);
ecf::BinaryModel model_from_json(const Json& j);

/**
 * Full n x n matrix as CSV with exact rational entries, unit diagonal
 * and symmetric off-diagonal pair coordinates.
 */
std::string matrix_csv(const tcf::TcfPoint& x);
tcf::TcfPoint parse_matrix_csv(const std::string& text);

/**
 * Read a point from a file holding either a full-matrix CSV or a
 * tagged JSON object with pair coordinates; the format is sniffed from
 * the first non-space character.
 * @throws MalformedMatrix when neither parse succeeds.
 */
tcf::TcfPoint read_point_file(const std::string& path);

/** JSON-lines helpers; write_lines creates or truncates the file. */
void write_lines(const std::string& path, const std::vector<Json>& lines);
std::vector<Json> read_lines(const std::string& path);

/** All "tcf_point" lines of a JSON-lines file. */
std::vector<tcf::TcfPoint> read_points(const std::string& path);

/** All "inequality" lines of a JSON-lines file. */
std::vector<tcf::AffineInequality> read_inequalities(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace tcfkit::io

#endif  // TCFKIT_IO_HPP
