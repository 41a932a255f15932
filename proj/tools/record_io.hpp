#ifndef CKC_TOOLS_RECORD_IO_HPP
#define CKC_TOOLS_RECORD_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ckc/chain.hpp"

namespace ckc::cli {

// decimal float with 17 significant digits; round-trips exactly
std::string fmt(double v);

// One sampled closed configuration, flat for serialization.
struct Record {
    std::vector<double> links;
    std::vector<double> alpha;
    std::vector<double> beta;
    std::vector<Point3> joints;
    std::vector<double> diagonals;
    std::vector<std::string> cases;
    double residual = 0.0;
    std::uint64_t seed = 0;
};

// one JSON object, no trailing newline
std::string to_json_line(const Record& r);

// Accepts a stream holding either one JSON object per line or a single
// JSON array of objects.  Throws std::invalid_argument on malformed
// input or missing fields.
std::vector<Record> read_records(std::istream& in);

} // namespace ckc::cli

#endif // CKC_TOOLS_RECORD_IO_HPP
