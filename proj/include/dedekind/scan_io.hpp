#pragma once

#include <string>

#include "dedekind/kernel.hpp"

namespace dedekind {

// CSV with the fixed column set q1,q2,chi1,chi2,a,c,subgroup,predicted_by,
// rows sorted by (c, a); comment lines carry the tool version, seed and
// c-max.  Intersection scans use "*" for both character labels.
std::string scan_to_csv(const ScanResult& scan);

// Same rows as a JSON document.
std::string scan_to_json(const ScanResult& scan);

// Standalone 800x800 SVG scatter, x = a, y = c, one circle per point;
// byte-identical for identical scans.
std::string scan_to_svg(const ScanResult& scan);

// Inverse of scan_to_csv (points and the recorded metadata).
ScanResult scan_from_csv(const std::string& text);

// Writes atomically-ish; throws std::runtime_error on I/O failure.
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace dedekind
