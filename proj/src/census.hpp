#pragma once

#include "lmod.hpp"
#include "sprdata.hpp"
#include "weylchar.hpp"

#include <string>
#include <vector>

namespace unip::census {

using rootsys::CartanType;

struct ClassRow {
    std::string class_name;
    std::string agroup;
    bool ell_special = false;
    std::string source;            // "computed-j-induction" or "curated"
    std::string quotient;          // computed quotient label ("" when not ell-special)
    long long alpha = 0;           // computed
    std::string expected_quotient; // from the data files
    long long expected_alpha = -1;
    std::string verdict;           // match | mismatch | disputed | not-special
};

struct CensusReport {
    std::string type;
    int ell = 0;
    std::vector<ClassRow> rows;
    long long total = 0;
    long long expected_m1 = -1;
    std::string overall; // match | mismatch
    std::vector<std::string> notes;
};

// step 1: the ell-special classes with provenance; computed via subsystems +
// j-induction + Springer lookup for G2/F4, curated flags for E6/E7/E8
std::vector<std::pair<std::string, std::string>> ell_special_classes(const CartanType& t, int ell,
                                                                     const std::string& datadir = "");

// step 2 + aggregation
CensusReport alpha(const CartanType& t, int ell, const std::string& datadir = "");

struct GoodCountRow {
    std::string class_name;
    std::string quotient;
    long long count = 0;
};
struct GoodCount {
    std::string type;
    std::vector<GoodCountRow> rows; // one per special class
    long long total = 0;
    long long expected = -1;
    bool match = false;
};
GoodCount unipotent_character_count(const CartanType& t, const std::string& datadir = "");

std::string render_human(const CensusReport& r);
std::string render_structured(const CensusReport& r);
CensusReport parse_structured(const std::string& text);
std::string render_human(const GoodCount& g);

} // namespace unip::census
