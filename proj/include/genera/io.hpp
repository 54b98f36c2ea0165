// Readers and writers for the line-oriented data formats: stratified-space
// files, map files, fan files, stalk tables and ambient class tables.
// '#' starts a comment; blank lines are ignored; all polynomial payloads use
// the canonical text syntax of the ring types.
#pragma once

#include <map>
#include <string>

#include "genera/classes.hpp"
#include "genera/genus.hpp"
#include "genera/toric.hpp"

namespace genera {

StratifiedSpace parse_space_text(const std::string& text, const std::string& fallback_name = "");
StratifiedSpace read_space_file(const std::string& path);

// A map file names its space file; relative paths resolve against the map
// file's directory.
StratifiedMapData parse_map_text(const std::string& text, const std::string& base_dir);
StratifiedMapData read_map_file(const std::string& path);

Fan parse_fan_text(const std::string& text);
Fan read_fan_file(const std::string& path);

std::map<std::string, HodgeClass> parse_stalks_text(const std::string& text);
std::map<std::string, HodgeClass> read_stalks_file(const std::string& path);

struct AmbientClasses {
    std::string ambient;
    int dim = 0;
    std::map<std::string, GradedClass> classes;
};
AmbientClasses parse_classes_text(const std::string& text);
AmbientClasses read_classes_file(const std::string& path);

std::string space_to_text(const StratifiedSpace& s);
std::string map_to_text(const StratifiedMapData& m, const std::string& space_path);
std::string fan_to_text(const Fan& f);

}  // namespace genera
