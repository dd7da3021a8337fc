#include "hardy/weight_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hardy/error.hpp"

namespace hardy {

namespace {

using json = nlohmann::json;

void check_entries(const std::vector<double>& values, const char* name) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i]) || !(values[i] > 0.0)) {
            std::ostringstream os;
            os << name << "[" << i << "] = " << values[i] << " must be finite and > 0";
            fail(ErrorKind::BadInput, os.str());
        }
    }
}

std::vector<double> json_array(const json& doc, const char* key) {
    const auto it = doc.find(key);
    if (it == doc.end()) fail(ErrorKind::BadInput, std::string("weight file has no \"") + key + "\" array");
    if (!it->is_array()) fail(ErrorKind::BadInput, std::string("\"") + key + "\" must be an array");
    std::vector<double> out;
    out.reserve(it->size());
    for (std::size_t i = 0; i < it->size(); ++i) {
        const json& item = (*it)[i];
        if (!item.is_number()) {
            std::ostringstream os;
            os << key << "[" << i << "] is not a number";
            fail(ErrorKind::BadInput, os.str());
        }
        out.push_back(item.get<double>());
    }
    return out;
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(trim(std::string_view(line).substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return fields;
}

template <typename T>
T parse_field(const std::string& field, std::size_t row, const char* column) {
    T value{};
    const char* begin = field.data();
    const char* end = begin + field.size();
    if (!field.empty() && *begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (field.empty() || ec != std::errc() || ptr != end) {
        std::ostringstream os;
        os << "row " << row << ": column " << column << " value '" << field << "' is not a number";
        fail(ErrorKind::BadInput, os.str());
    }
    return value;
}

}  // namespace

WeightedInterval WeightFile::to_interval(double p) const {
    require(!u.empty(), ErrorKind::BadInput, "weight file has no entries");
    if (u.size() != v.size()) {
        std::ostringstream os;
        os << "u has " << u.size() << " entries but v has " << v.size();
        fail(ErrorKind::BadInput, os.str());
    }
    check_entries(u, "u");
    check_entries(v, "v");
    return WeightedInterval(offset, u, v, p);
}

WeightFile WeightFile::from_interval(const WeightedInterval& w) {
    return {w.first(), std::vector<double>(w.u().begin(), w.u().end()),
            std::vector<double>(w.v().begin(), w.v().end())};
}

WeightFile parse_weights_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& ex) {
        fail(ErrorKind::BadInput, std::string("weight file is not valid JSON: ") + ex.what());
    }
    if (!doc.is_object()) fail(ErrorKind::BadInput, "weight file must be a JSON object");
    WeightFile f;
    const auto off = doc.find("offset");
    if (off == doc.end() || !off->is_number_integer())
        fail(ErrorKind::BadInput, "weight file needs an integer \"offset\"");
    f.offset = off->get<Index>();
    f.u = json_array(doc, "u");
    f.v = json_array(doc, "v");
    if (f.u.empty()) fail(ErrorKind::BadInput, "weight arrays must be nonempty");
    if (f.u.size() != f.v.size()) {
        std::ostringstream os;
        os << "u has " << f.u.size() << " entries but v has " << f.v.size();
        fail(ErrorKind::BadInput, os.str());
    }
    check_entries(f.u, "u");
    check_entries(f.v, "v");
    return f;
}

WeightFile parse_weights_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    WeightFile f;
    Index expected = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split_fields(line);
        if (!header) {
            if (fields.size() != 3 || fields[0] != "n" || fields[1] != "u" || fields[2] != "v")
                fail(ErrorKind::BadInput, "CSV weight file must start with the header n,u,v");
            header = true;
            continue;
        }
        const std::size_t row = line_no;
        if (fields.size() != 3) {
            std::ostringstream os;
            os << "row " << row << ": expected 3 columns n,u,v but found " << fields.size();
            if (fields.size() == 2) os << " (missing v)";
            fail(ErrorKind::BadInput, os.str());
        }
        const auto n = parse_field<Index>(fields[0], row, "n");
        const auto u = parse_field<double>(fields[1], row, "u");
        const auto v = parse_field<double>(fields[2], row, "v");
        if (f.u.empty()) {
            f.offset = n;
        } else if (n != expected) {
            std::ostringstream os;
            os << "row " << row << ": index n = " << n << " breaks contiguity (expected " << expected << ")";
            fail(ErrorKind::BadInput, os.str());
        }
        expected = n + 1;
        if (!std::isfinite(u) || !(u > 0.0) || !std::isfinite(v) || !(v > 0.0)) {
            std::ostringstream os;
            os << "row " << row << ": weights must be finite and > 0";
            fail(ErrorKind::BadInput, os.str());
        }
        f.u.push_back(u);
        f.v.push_back(v);
    }
    if (!header) fail(ErrorKind::BadInput, "CSV weight file is empty");
    if (f.u.empty()) fail(ErrorKind::BadInput, "CSV weight file has no data rows");
    return f;
}

WeightFile read_weights(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::BadInput, "cannot open weight file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (path.extension() == ".csv") return parse_weights_csv(text);
    if (path.extension() == ".json") return parse_weights_json(text);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_weights_json(text);
    return parse_weights_csv(text);
}

std::string weights_to_json(const WeightFile& f) {
    json doc;
    doc["offset"] = f.offset;
    doc["u"] = f.u;
    doc["v"] = f.v;
    return doc.dump() + "\n";
}

std::string weights_to_csv(const WeightFile& f) {
    std::string out = "n,u,v\n";
    char buf[64];
    for (std::size_t i = 0; i < f.u.size(); ++i) {
        out += std::to_string(f.offset + static_cast<Index>(i));
        for (double x : {f.u[i], f.v[i]}) {
            const auto res = std::to_chars(buf, buf + sizeof buf, x);
            out += ',';
            out.append(buf, res.ptr);
        }
        out += '\n';
    }
    return out;
}

void write_weights(const std::filesystem::path& path, const WeightFile& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::BadInput, "cannot write weight file " + path.string());
    out << (path.extension() == ".csv" ? weights_to_csv(f) : weights_to_json(f));
}

}  // namespace hardy
