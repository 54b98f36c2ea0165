#include "genera/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "genera/errors.hpp"

namespace genera {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// Comment-stripped, trimmed, non-empty lines.
std::vector<std::string> logical_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

bool is_section(const std::string& line) { return line.size() >= 2 && line.front() == '['; }

std::vector<std::string> section_words(const std::string& line) {
    if (line.back() != ']') throw parse_error("unterminated section header: " + line);
    std::istringstream in(line.substr(1, line.size() - 2));
    std::vector<std::string> words;
    std::string w;
    while (in >> w) words.push_back(w);
    if (words.empty()) throw parse_error("empty section header");
    return words;
}

// "key = value" split; returns false if there is no '='.
bool key_value(const std::string& line, std::string& key, std::string& value) {
    auto eq = line.find('=');
    if (eq == std::string::npos) return false;
    key = trim(line.substr(0, eq));
    value = trim(line.substr(eq + 1));
    return true;
}

bool parse_bool(const std::string& v, const std::string& context) {
    if (v == "true") return true;
    if (v == "false") return false;
    throw parse_error("expected true/false for " + context + ", got '" + v + "'");
}

int parse_int_strict(const std::string& v, const std::string& context) {
    try {
        size_t used = 0;
        int n = std::stoi(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return n;
    } catch (const std::exception&) {
        throw parse_error("expected integer for " + context + ", got '" + v + "'");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Stratified-space files

StratifiedSpace parse_space_text(const std::string& text, const std::string& fallback_name) {
    StratifiedSpace space;
    space.name = fallback_name;

    struct PendingStratum {
        Stratum s;
        std::optional<LevelData> closure;
    };
    std::vector<PendingStratum> pending;
    std::vector<std::pair<IdPair, LevelData>> links;

    enum class Sec { none, space, stratum, order, link };
    Sec sec = Sec::none;
    IdPair link_pair;
    std::optional<LevelData> link_data;

    auto flush_link = [&]() {
        if (sec != Sec::link) return;
        if (!link_data)
            throw parse_error("link (" + link_pair.first + ", " + link_pair.second +
                              ") has no class or chi entry");
        links.emplace_back(link_pair, std::move(*link_data));
        link_data.reset();
    };

    for (const auto& line : logical_lines(text)) {
        if (is_section(line)) {
            flush_link();
            auto words = section_words(line);
            if (words[0] == "space" && words.size() == 1) {
                sec = Sec::space;
            } else if (words[0] == "stratum" && words.size() == 2) {
                sec = Sec::stratum;
                pending.push_back({Stratum{words[1], 0, true, false}, std::nullopt});
            } else if (words[0] == "order" && words.size() == 1) {
                sec = Sec::order;
            } else if (words[0] == "link" && words.size() == 3) {
                sec = Sec::link;
                link_pair = {words[1], words[2]};
            } else {
                throw parse_error("unknown section in space file: " + line);
            }
            continue;
        }
        std::string key, value;
        switch (sec) {
            case Sec::none:
                throw parse_error("content before first section: " + line);
            case Sec::space: {
                if (!key_value(line, key, value)) throw parse_error("expected key = value: " + line);
                if (key == "name")
                    space.name = value;
                else if (key == "monodromy_ok")
                    space.monodromy_ok = parse_bool(value, "monodromy_ok");
                else
                    throw parse_error("unknown space key '" + key + "'");
                break;
            }
            case Sec::stratum: {
                if (!key_value(line, key, value)) throw parse_error("expected key = value: " + line);
                auto& p = pending.back();
                if (key == "dim") {
                    p.s.dim = parse_int_strict(value, "dim");
                    if (p.s.dim < 0) throw parse_error("stratum dimension must be nonnegative");
                } else if (key == "simply_connected") {
                    p.s.simply_connected = parse_bool(value, "simply_connected");
                } else if (key == "smooth") {
                    p.s.smooth = parse_bool(value, "smooth");
                } else if (key == "ichi_closure") {
                    p.closure = LevelData::from_hodge(HodgeClass::parse(value));
                } else if (key == "ichi_closure_chi") {
                    p.closure = LevelData::from_chi(LaurentPoly::parse(value));
                } else {
                    throw parse_error("unknown stratum key '" + key + "'");
                }
                break;
            }
            case Sec::order: {
                // "<idW> < <idV>"
                auto lt = line.find('<');
                if (lt == std::string::npos) throw parse_error("expected 'W < V' in order section: " + line);
                std::string w = trim(line.substr(0, lt));
                std::string v = trim(line.substr(lt + 1));
                if (w.empty() || v.empty()) throw parse_error("malformed order relation: " + line);
                space.add_order(w, v);
                break;
            }
            case Sec::link: {
                if (!key_value(line, key, value)) throw parse_error("expected key = value: " + line);
                if (key == "class")
                    link_data = LevelData::from_hodge(HodgeClass::parse(value));
                else if (key == "chi")
                    link_data = LevelData::from_chi(LaurentPoly::parse(value));
                else
                    throw parse_error("unknown link key '" + key + "'");
                break;
            }
        }
    }
    flush_link();

    for (auto& p : pending) {
        if (!p.closure)
            throw parse_error("stratum '" + p.s.id + "' has no ichi_closure or ichi_closure_chi entry");
        space.add_stratum(std::move(p.s), std::move(*p.closure));
    }
    for (auto& [pair, data] : links) space.add_link(pair.first, pair.second, std::move(data));
    return space;
}

StratifiedSpace read_space_file(const std::string& path) {
    return parse_space_text(read_file(path), std::filesystem::path(path).stem().string());
}

// ---------------------------------------------------------------------------
// Map files

StratifiedMapData parse_map_text(const std::string& text, const std::string& base_dir) {
    StratifiedMapData m;
    bool have_space = false;

    enum class Sec { none, map, fiber, icone };
    Sec sec = Sec::none;
    std::string current_id;

    for (const auto& line : logical_lines(text)) {
        if (is_section(line)) {
            auto words = section_words(line);
            if (words[0] == "map" && words.size() == 1) {
                sec = Sec::map;
            } else if (words[0] == "fiber" && words.size() == 2) {
                sec = Sec::fiber;
                current_id = words[1];
            } else if (words[0] == "icone_preimage" && words.size() == 2) {
                sec = Sec::icone;
                current_id = words[1];
            } else {
                throw parse_error("unknown section in map file: " + line);
            }
            continue;
        }
        std::string key, value;
        if (!key_value(line, key, value)) throw parse_error("expected key = value: " + line);
        switch (sec) {
            case Sec::none:
                throw parse_error("content before first section: " + line);
            case Sec::map: {
                if (key != "space") throw parse_error("unknown map key '" + key + "'");
                std::filesystem::path p(value);
                if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
                m.space = read_space_file(p.string());
                have_space = true;
                break;
            }
            case Sec::fiber:
            case Sec::icone: {
                LevelData d;
                if (key == "class")
                    d = LevelData::from_hodge(HodgeClass::parse(value));
                else if (key == "chi")
                    d = LevelData::from_chi(LaurentPoly::parse(value));
                else
                    throw parse_error("unknown key '" + key + "' in fiber/icone section");
                if (sec == Sec::fiber)
                    m.fiber[current_id] = std::move(d);
                else
                    m.icone_preimage[current_id] = std::move(d);
                break;
            }
        }
    }
    if (!have_space) throw parse_error("map file names no space file");
    for (const auto& [id, d] : m.fiber)
        if (!m.space.has_stratum(id)) throw parse_error("fiber data for unknown stratum '" + id + "'");
    for (const auto& [id, d] : m.icone_preimage)
        if (!m.space.has_stratum(id))
            throw parse_error("icone_preimage data for unknown stratum '" + id + "'");
    return m;
}

StratifiedMapData read_map_file(const std::string& path) {
    return parse_map_text(read_file(path), std::filesystem::path(path).parent_path().string());
}

// ---------------------------------------------------------------------------
// Fan files

Fan parse_fan_text(const std::string& text) {
    Fan f;
    bool in_fan = false, have_dim = false;
    for (const auto& line : logical_lines(text)) {
        if (is_section(line)) {
            auto words = section_words(line);
            if (words[0] == "fan" && words.size() == 1) {
                in_fan = true;
                continue;
            }
            throw parse_error("unknown section in fan file: " + line);
        }
        if (!in_fan) throw parse_error("content before [fan] section: " + line);
        std::string key, value;
        if (key_value(line, key, value)) {
            if (key != "dim") throw parse_error("unknown fan key '" + key + "'");
            f.dim = parse_int_strict(value, "fan dim");
            have_dim = true;
            continue;
        }
        // "cone <id> dim=<k>"
        std::istringstream in(line);
        std::string word, id, dimspec;
        in >> word >> id >> dimspec;
        if (word != "cone" || id.empty() || dimspec.rfind("dim=", 0) != 0)
            throw parse_error("expected 'cone <id> dim=<k>': " + line);
        Cone c;
        c.id = id;
        c.dim = parse_int_strict(dimspec.substr(4), "cone dim");
        f.cones.push_back(std::move(c));
    }
    if (!have_dim) throw parse_error("fan file has no dim entry");
    return f;
}

Fan read_fan_file(const std::string& path) { return parse_fan_text(read_file(path)); }

// ---------------------------------------------------------------------------
// Stalk tables

std::map<std::string, HodgeClass> parse_stalks_text(const std::string& text) {
    std::map<std::string, HodgeClass> out;
    bool in_section = false;
    for (const auto& line : logical_lines(text)) {
        if (is_section(line)) {
            auto words = section_words(line);
            if (words[0] == "stalks" && words.size() == 1) {
                in_section = true;
                continue;
            }
            throw parse_error("unknown section in stalks file: " + line);
        }
        if (!in_section) throw parse_error("content before [stalks] section: " + line);
        std::string key, value;
        if (!key_value(line, key, value)) throw parse_error("expected '<id> = <class>': " + line);
        if (out.count(key)) throw parse_error("duplicate stalk entry for '" + key + "'");
        out[key] = HodgeClass::parse(value);
    }
    return out;
}

std::map<std::string, HodgeClass> read_stalks_file(const std::string& path) {
    return parse_stalks_text(read_file(path));
}

// ---------------------------------------------------------------------------
// Ambient class tables

AmbientClasses parse_classes_text(const std::string& text) {
    AmbientClasses out;
    enum class Sec { none, header, cls };
    Sec sec = Sec::none;
    std::string current_id;

    for (const auto& line : logical_lines(text)) {
        if (is_section(line)) {
            auto words = section_words(line);
            if (words[0] == "classes" && words.size() == 1) {
                sec = Sec::header;
            } else if (words[0] == "class" && words.size() == 2) {
                sec = Sec::cls;
                current_id = words[1];
                GradedClass g;
                g.basis = out.ambient;
                out.classes[current_id] = std::move(g);
            } else {
                throw parse_error("unknown section in classes file: " + line);
            }
            continue;
        }
        if (sec == Sec::none) throw parse_error("content before [classes] section: " + line);
        if (sec == Sec::header) {
            std::string key, value;
            if (!key_value(line, key, value)) throw parse_error("expected key = value: " + line);
            if (key == "ambient")
                out.ambient = value;
            else if (key == "dim")
                out.dim = parse_int_strict(value, "classes dim");
            else
                throw parse_error("unknown classes key '" + key + "'");
            continue;
        }
        // "k: <LocalizedElem>"
        auto colon = line.find(':');
        if (colon == std::string::npos) throw parse_error("expected 'k: <coefficient>': " + line);
        int k = parse_int_strict(trim(line.substr(0, colon)), "homological degree");
        if (k < 0 || k > out.dim)
            throw parse_error("homological degree " + std::to_string(k) + " outside [0, " +
                              std::to_string(out.dim) + "]");
        out.classes[current_id].set(k, LocalizedElem::parse(trim(line.substr(colon + 1))));
    }
    for (auto& [id, g] : out.classes) g.basis = out.ambient;
    return out;
}

AmbientClasses read_classes_file(const std::string& path) {
    return parse_classes_text(read_file(path));
}

// ---------------------------------------------------------------------------
// Writers

namespace {

void write_level(std::ostringstream& out, const std::string& hodge_key, const std::string& chi_key,
                 const LevelData& d) {
    if (d.hodge)
        out << hodge_key << " = " << d.hodge->to_string() << "\n";
    else
        out << chi_key << " = " << d.chi.to_string() << "\n";
}

}  // namespace

std::string space_to_text(const StratifiedSpace& s) {
    std::ostringstream out;
    out << "[space]\n";
    out << "name = " << s.name << "\n";
    out << "monodromy_ok = " << (s.monodromy_ok ? "true" : "false") << "\n";
    auto order = s.topo_order();
    for (const auto& id : order) {
        const Stratum& st = s.strata().at(id);
        out << "\n[stratum " << id << "]\n";
        out << "dim = " << st.dim << "\n";
        out << "simply_connected = " << (st.simply_connected ? "true" : "false") << "\n";
        if (st.smooth) out << "smooth = true\n";
        LevelData d;
        d.chi = s.chi_closure(id);
        if (s.hodge_level()) d.hodge = s.hodge_closure(id);
        write_level(out, "ichi_closure", "ichi_closure_chi", d);
    }
    out << "\n[order]\n";
    for (const auto& w : order)
        for (const auto& v : order)
            if (s.less(w, v)) out << w << " < " << v << "\n";
    for (const auto& w : order)
        for (const auto& v : order) {
            if (!s.less(w, v)) continue;
            out << "\n[link " << w << " " << v << "]\n";
            LevelData d;
            d.chi = s.chi_link(w, v);
            if (s.hodge_level()) d.hodge = s.hodge_link(w, v);
            write_level(out, "class", "chi", d);
        }
    return out.str();
}

std::string map_to_text(const StratifiedMapData& m, const std::string& space_path) {
    std::ostringstream out;
    out << "[map]\n";
    out << "space = " << space_path << "\n";
    for (const auto& [id, d] : m.fiber) {
        out << "\n[fiber " << id << "]\n";
        write_level(out, "class", "chi", d);
    }
    for (const auto& [id, d] : m.icone_preimage) {
        out << "\n[icone_preimage " << id << "]\n";
        write_level(out, "class", "chi", d);
    }
    return out.str();
}

std::string fan_to_text(const Fan& f) {
    std::ostringstream out;
    out << "[fan]\n";
    out << "dim = " << f.dim << "\n";
    for (const auto& c : f.cones) out << "cone " << c.id << " dim=" << c.dim << "\n";
    return out.str();
}

}  // namespace genera
