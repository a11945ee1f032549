#include "dedekind/scan_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "dedekind/version.hpp"

namespace dedekind {

namespace {

std::pair<std::string, std::string> row_labels(const ScanResult& scan) {
    if (scan.meta.intersection || scan.meta.pair_labels.size() != 1) return {"*", "*"};
    const std::string& label = scan.meta.pair_labels.front();
    const auto x = label.find('x');
    return {label.substr(0, x), label.substr(x + 1)};
}

std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

std::string scan_to_csv(const ScanResult& scan) {
    std::ostringstream out;
    out << "# dedekind " << kVersion << " scan\n";
    out << "# q1=" << scan.meta.q1 << " q2=" << scan.meta.q2
        << " c_max=" << scan.meta.c_max << " subgroup=" << subgroup_name(scan.meta.subgroup)
        << " seed=" << scan.meta.seed << " scanned=" << scan.meta.scanned_label << "\n";
    if (scan.meta.pair_labels.size() > 1 && !scan.meta.intersection) {
        out << "# valid_for=";
        for (size_t i = 0; i < scan.meta.pair_labels.size(); ++i)
            out << (i ? "," : "") << scan.meta.pair_labels[i];
        out << "\n";
    }
    out << "q1,q2,chi1,chi2,a,c,subgroup,predicted_by\n";
    const auto [chi1, chi2] = row_labels(scan);
    for (const auto& p : scan.points) {
        out << scan.meta.q1 << "," << scan.meta.q2 << "," << chi1 << "," << chi2 << ","
            << p.a << "," << p.c << "," << subgroup_name(scan.meta.subgroup) << ","
            << predicted_by_name(p.predicted_by) << "\n";
    }
    return out.str();
}

std::string scan_to_json(const ScanResult& scan) {
    nlohmann::json doc;
    doc["tool"] = "dedekind";
    doc["version"] = kVersion;
    doc["q1"] = scan.meta.q1;
    doc["q2"] = scan.meta.q2;
    doc["c_max"] = scan.meta.c_max;
    doc["subgroup"] = subgroup_name(scan.meta.subgroup);
    doc["seed"] = scan.meta.seed;
    doc["intersection"] = scan.meta.intersection;
    doc["scanned"] = scan.meta.scanned_label;
    doc["pairs"] = scan.meta.pair_labels;
    auto& points = doc["points"];
    points = nlohmann::json::array();
    for (const auto& p : scan.points) {
        points.push_back({{"a", p.a},
                          {"c", p.c},
                          {"gamma1", p.in_gamma1},
                          {"predicted_by", predicted_by_name(p.predicted_by)}});
    }
    return doc.dump(2) + "\n";
}

std::string scan_to_svg(const ScanResult& scan) {
    constexpr double lo = 70.0;
    constexpr double hi = 760.0;
    const double span = static_cast<double>(std::max<long>(scan.meta.c_max, 1));
    auto map_x = [&](double a) { return lo + (hi - lo) * a / span; };
    auto map_y = [&](double c) { return hi - (hi - lo) * c / span; };  // c grows upward

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";
    std::string title = "K";
    title += scan.meta.intersection
                 ? "[" + std::to_string(scan.meta.q1) + "," + std::to_string(scan.meta.q2) + "]"
                 : "[" + scan.meta.scanned_label + "]";
    if (scan.meta.subgroup == Subgroup::gamma1) title += " on Gamma1";
    out << "  <text x=\"400\" y=\"40\" font-family=\"monospace\" font-size=\"20\" "
           "text-anchor=\"middle\">" << title << ", c &lt;= " << scan.meta.c_max
        << "</text>\n";
    // axes
    out << "  <line x1=\"" << fixed2(lo) << "\" y1=\"" << fixed2(hi) << "\" x2=\""
        << fixed2(hi) << "\" y2=\"" << fixed2(hi) << "\" stroke=\"black\"/>\n";
    out << "  <line x1=\"" << fixed2(lo) << "\" y1=\"" << fixed2(hi) << "\" x2=\""
        << fixed2(lo) << "\" y2=\"" << fixed2(lo) << "\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << fixed2((lo + hi) / 2) << "\" y=\"795\" font-family=\"monospace\" "
           "font-size=\"16\" text-anchor=\"middle\">a</text>\n";
    out << "  <text x=\"20\" y=\"" << fixed2((lo + hi) / 2)
        << "\" font-family=\"monospace\" font-size=\"16\" text-anchor=\"middle\">c</text>\n";
    // quarter ticks with labels
    for (int i = 0; i <= 4; ++i) {
        const double v = span * i / 4.0;
        const double x = map_x(v), y = map_y(v);
        out << "  <line x1=\"" << fixed2(x) << "\" y1=\"" << fixed2(hi) << "\" x2=\""
            << fixed2(x) << "\" y2=\"" << fixed2(hi + 6) << "\" stroke=\"black\"/>\n";
        out << "  <text x=\"" << fixed2(x) << "\" y=\"" << fixed2(hi + 22)
            << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">"
            << static_cast<long>(v) << "</text>\n";
        out << "  <line x1=\"" << fixed2(lo - 6) << "\" y1=\"" << fixed2(y) << "\" x2=\""
            << fixed2(lo) << "\" y2=\"" << fixed2(y) << "\" stroke=\"black\"/>\n";
        out << "  <text x=\"" << fixed2(lo - 10) << "\" y=\"" << fixed2(y + 4)
            << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"end\">"
            << static_cast<long>(v) << "</text>\n";
    }
    out << "  <g fill=\"black\">\n";
    for (const auto& p : scan.points) {
        out << "    <circle cx=\"" << fixed2(map_x(static_cast<double>(p.a))) << "\" cy=\""
            << fixed2(map_y(static_cast<double>(p.c))) << "\" r=\"2\"/>\n";
    }
    out << "  </g>\n";
    out << "</svg>\n";
    return out.str();
}

ScanResult scan_from_csv(const std::string& text) {
    ScanResult scan;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    auto meta_value = [](const std::string& s, const std::string& key) -> std::string {
        const auto pos = s.find(key + "=");
        if (pos == std::string::npos) return "";
        const auto start = pos + key.size() + 1;
        const auto end = s.find(' ', start);
        return s.substr(start, end == std::string::npos ? std::string::npos : end - start);
    };
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (auto v = meta_value(line, "q1"); !v.empty()) scan.meta.q1 = std::stol(v);
            if (auto v = meta_value(line, "q2"); !v.empty()) scan.meta.q2 = std::stol(v);
            if (auto v = meta_value(line, "c_max"); !v.empty()) scan.meta.c_max = std::stol(v);
            if (auto v = meta_value(line, "seed"); !v.empty()) scan.meta.seed = std::stoull(v);
            if (auto v = meta_value(line, "scanned"); !v.empty()) scan.meta.scanned_label = v;
            if (auto v = meta_value(line, "subgroup"); !v.empty())
                scan.meta.subgroup = v == "gamma1" ? Subgroup::gamma1 : Subgroup::gamma0;
            continue;
        }
        if (!header_seen) {  // column header row
            header_seen = true;
            continue;
        }
        std::istringstream row(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(row, field, ',')) fields.push_back(field);
        if (fields.size() != 8) throw std::runtime_error("scan_from_csv: malformed row");
        KernelPoint p;
        p.a = std::stol(fields[4]);
        p.c = std::stol(fields[5]);
        const long level = scan.meta.q1 * scan.meta.q2;
        p.in_gamma1 = level > 0 && p.a % level == 1;
        for (int t = 0; t <= static_cast<int>(PredictedBy::none); ++t)
            if (fields[7] == predicted_by_name(static_cast<PredictedBy>(t)))
                p.predicted_by = static_cast<PredictedBy>(t);
        if (fields[2] == "*") scan.meta.intersection = true;
        scan.points.push_back(p);
    }
    return scan;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace dedekind
