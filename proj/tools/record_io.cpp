#include "record_io.hpp"

#include <cstdio>
#include <istream>
#include <stdexcept>

#include "json.hpp"

namespace ckc::cli {

std::string fmt(double v) {
    if (v == 0.0) v = 0.0; // drop the sign of negative zero
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void append_array(std::string& s, const char* key, const std::vector<double>& v) {
    s += '"';
    s += key;
    s += "\":[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += fmt(v[i]);
    }
    s += ']';
}

} // namespace

std::string to_json_line(const Record& r) {
    std::string s = "{";
    append_array(s, "links", r.links);
    s += ',';
    append_array(s, "alpha", r.alpha);
    s += ',';
    append_array(s, "beta", r.beta);
    s += ",\"joints\":[";
    for (std::size_t i = 0; i < r.joints.size(); ++i) {
        if (i) s += ',';
        s += '[';
        s += fmt(r.joints[i].x);
        s += ',';
        s += fmt(r.joints[i].y);
        s += ',';
        s += fmt(r.joints[i].z);
        s += ']';
    }
    s += "],";
    append_array(s, "diagonals", r.diagonals);
    s += ",\"cases\":[";
    for (std::size_t i = 0; i < r.cases.size(); ++i) {
        if (i) s += ',';
        s += '"';
        s += r.cases[i];
        s += '"';
    }
    s += "],\"residual\":";
    s += fmt(r.residual);
    s += ",\"seed\":";
    s += std::to_string(r.seed);
    s += '}';
    return s;
}

namespace {

Record record_from_json(const nlohmann::json& j) {
    Record r;
    try {
        r.links = j.at("links").get<std::vector<double>>();
        r.alpha = j.at("alpha").get<std::vector<double>>();
        r.beta = j.at("beta").get<std::vector<double>>();
        for (const auto& p : j.at("joints")) {
            if (!p.is_array() || p.size() != 3) {
                throw std::invalid_argument("joint entries must be [x, y, z]");
            }
            r.joints.push_back({p[0].get<double>(), p[1].get<double>(), p[2].get<double>()});
        }
        r.diagonals = j.at("diagonals").get<std::vector<double>>();
        if (j.contains("cases")) {
            r.cases = j.at("cases").get<std::vector<std::string>>();
        }
        r.residual = j.at("residual").get<double>();
        r.seed = j.at("seed").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad configuration record: ") + e.what());
    }
    return r;
}

} // namespace

std::vector<Record> read_records(std::istream& in) {
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::size_t pos = content.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) {
        throw std::invalid_argument("empty record input");
    }
    std::vector<Record> out;
    try {
        if (content[pos] == '[') {
            nlohmann::json arr = nlohmann::json::parse(content);
            for (const auto& j : arr) out.push_back(record_from_json(j));
        } else {
            std::size_t start = 0;
            while (start < content.size()) {
                std::size_t end = content.find('\n', start);
                if (end == std::string::npos) end = content.size();
                std::string line = content.substr(start, end - start);
                start = end + 1;
                if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                out.push_back(record_from_json(nlohmann::json::parse(line)));
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("cannot parse record JSON: ") + e.what());
    }
    return out;
}

} // namespace ckc::cli
