#pragma once

#include <map>
#include <string>
#include <utility>

#include "gvkit/cech.hpp"
#include "gvkit/grr.hpp"
#include "gvkit/rational.hpp"

namespace gvkit::cli {

/* BPS tables on the wire: (k, h) -> n. The key order (k ascending, then h)
 * is also the CSV row order. For the GV/GW bridge k is the degree d. */
using GvEntries = std::map<std::pair<int, int>, Integer>;

/* GW tables: (d, g) -> N_g(d), exact rationals. */
using GwEntries = std::map<std::pair<int, int>, Rational>;

std::string gv_entries_to_json(const GvEntries& entries);
std::string gv_entries_to_csv(const GvEntries& entries);
GvEntries parse_gv_entries_json(const std::string& text);

std::string gw_entries_to_json(const GwEntries& entries);
std::string gw_entries_to_csv(const GwEntries& entries);
GwEntries parse_gw_entries_json(const std::string& text);

struct ChernInput {
    grr::GrrContext ctx;
    grr::ChernData data;
};

/* Chern JSON: rank, generators (name/degree/side), alpha1..alpha3 and
 * delta4 as term lists, cy3 tables keyed by the declared y-generator
 * order. */
ChernInput parse_chern_json(const std::string& text);

struct CoverInput {
    cech::Nerve nerve;
    std::map<cech::Face, int> pair_signs;
    std::map<cech::Face, int> triple_signs;
};

/* Cover JSON: vertices, faces by size ("2"/"3"/"4"), optional pair and
 * triple sign assignments keyed "a,b" / "a,b,c". */
CoverInput parse_cover_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace gvkit::cli
