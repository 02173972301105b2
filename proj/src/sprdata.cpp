#include "sprdata.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace unip::sprdata {

namespace {

uint32_t crc32_update(uint32_t crc, const std::string& s) {
    static uint32_t table[256];
    static bool init = false;
    if (!init) {
        for (uint32_t i = 0; i < 256; ++i) {
            uint32_t c = i;
            for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
            table[i] = c;
        }
        init = true;
    }
    crc = ~crc;
    for (unsigned char ch : s) crc = table[(crc ^ ch) & 0xFF] ^ (crc >> 8);
    return ~crc;
}

std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

// key=value option
std::optional<std::string> opt(const std::vector<std::string>& toks, const std::string& key) {
    for (const auto& t : toks) {
        if (t.size() > key.size() + 1 && t.compare(0, key.size(), key) == 0 && t[key.size()] == '=')
            return t.substr(key.size() + 1);
    }
    return std::nullopt;
}

struct FileLines {
    std::vector<std::string> lines;
    uint32_t checksum = 0;   // of payload after the checksum line
    uint32_t declared = 0;
    bool has_checksum = false;
};

FileLines read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DataError("cannot open data file: " + path);
    FileLines out;
    std::string line;
    bool past_checksum = false;
    while (std::getline(f, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = tokens(line);
        if (!past_checksum && !toks.empty() && toks[0] == "checksum") {
            out.declared = (uint32_t)std::stoul(toks.at(1), nullptr, 16);
            out.has_checksum = true;
            past_checksum = true;
            continue;
        }
        if (past_checksum) out.checksum = crc32_update(out.checksum, line + "\n");
        out.lines.push_back(line);
    }
    if (out.has_checksum && out.checksum != out.declared)
        throw DataError("checksum mismatch in " + path);
    return out;
}

const std::map<std::string, int>& record_counts() {
    static const std::map<std::string, int> m = {
        {"G2", 5}, {"F4", 16}, {"E6", 21}, {"E7", 45}, {"E8", 70}};
    return m;
}

const std::map<std::string, int>& family_counts() {
    static const std::map<std::string, int> m = {
        {"G2", 3}, {"F4", 11}, {"E6", 17}, {"E7", 35}, {"E8", 46}};
    return m;
}

} // namespace

const EllData* UnipotentClassRecord::ell(int l) const {
    for (const auto& e : ells)
        if (e.ell == l) return &e;
    return nullptr;
}

long long UnipotentClassRecord::a_top() const {
    long long m = 0;
    for (const auto& s : springer) m = std::max(m, s.a);
    return m;
}

const UnipotentClassRecord* ClassTable::find(const std::string& name) const {
    for (const auto& r : records)
        if (r.name == name) return &r;
    return nullptr;
}

std::pair<std::string, std::string> ClassTable::springer_class_of(const std::string& key) const {
    for (const auto& r : records)
        for (const auto& s : r.springer)
            if (s.char_key == key) return {r.name, s.psi};
    throw DataError("Springer lookup: key not in the image: " + key);
}

std::vector<int> ClassTable::bad_primes() const {
    if (type.str_plain() == "E8") return {2, 3, 5};
    return {2, 3};
}

std::string default_data_dir() {
    if (const char* env = std::getenv("UNIPCOUNT_DATA")) return env;
    return "data";
}

CharKey parse_char_key(const std::string& s) {
    CharKey k;
    if (s.size() < 6 || s.compare(0, 4, "phi[") != 0 || s.back() != ']')
        throw DataError("bad character key: " + s);
    std::string body = s.substr(4, s.size() - 5);
    std::string main = body, traits;
    if (auto pos = body.find(';'); pos != std::string::npos) {
        main = body.substr(0, pos);
        traits = body.substr(pos + 1);
    }
    auto comma = main.find(',');
    if (comma == std::string::npos) throw DataError("bad character key: " + s);
    k.degree = std::stoll(main.substr(0, comma));
    k.b = std::stoi(main.substr(comma + 1));
    while (!traits.empty()) {
        std::string part = traits;
        if (auto pos = traits.find(','); pos != std::string::npos) {
            part = traits.substr(0, pos);
            traits = traits.substr(pos + 1);
        } else
            traits.clear();
        if (part.empty()) continue;
        if (part[0] == 's') k.short_trait = std::stoll(part.substr(1));
        else if (part[0] == 'l') k.long_trait = std::stoll(part.substr(1));
        else if (part[0] == 'm') k.mixed_trait = std::stoll(part.substr(1));
        else throw DataError("bad character key trait: " + s);
    }
    return k;
}

ClassTable load_class_table(const rootsys::CartanType& t, const std::string& datadir) {
    std::string dir = datadir.empty() ? default_data_dir() : datadir;
    std::string name = t.str_plain();
    std::string lower = name;
    for (auto& c : lower) c = (char)tolower((unsigned char)c);
    auto file = read_file(dir + "/" + lower + ".classes");
    if (!file.has_checksum) throw DataError("missing checksum header: " + name);

    ClassTable table;
    table.type = t;
    UnipotentClassRecord cur;
    bool in_class = false;
    int lineno = 0;
    for (const auto& line : file.lines) {
        ++lineno;
        auto toks = tokens(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        const std::string& cmd = toks[0];
        auto fail = [&](const std::string& msg) {
            throw DataError(name + ".classes:" + std::to_string(lineno) + ": " + msg);
        };
        if (cmd == "schema") {
            if (toks.size() < 3 || toks[1] != "unip-classes" || toks[2] != "1")
                fail("unsupported schema version");
        } else if (cmd == "type") {
            if (toks.at(1) != name) fail("type mismatch");
        } else if (cmd == "normalization") {
            table.normalization = line.substr(line.find(' ') + 1);
        } else if (cmd == "class") {
            if (in_class) fail("nested class stanza");
            cur = UnipotentClassRecord{};
            cur.name = toks.at(1);
            in_class = true;
        } else if (cmd == "agroup") {
            cur.agroup = toks.at(1);
        } else if (cmd == "special") {
            cur.special = toks.at(1) == "yes";
        } else if (cmd == "b") {
            cur.b = std::stoi(toks.at(1));
        } else if (cmd == "springer") {
            SpringerChar sc;
            sc.psi = toks.at(1);
            sc.char_key = toks.at(2);
            auto a = opt(toks, "a");
            if (!a) fail("springer line without a-value");
            sc.a = std::stoll(*a);
            cur.springer.push_back(std::move(sc));
        } else if (cmd == "ell") {
            EllData ed;
            ed.ell = std::stoi(toks.at(1));
            if (toks.at(2) == "none") {
                ed.is_special = false;
            } else {
                ed.is_special = true;
                auto q = opt(toks, "quotient"), al = opt(toks, "alpha");
                if (!q || !al) fail("ell line needs quotient= and alpha=");
                ed.quotient_label = *q;
                ed.alpha = std::stoll(*al);
            }
            cur.ells.push_back(ed);
        } else if (cmd == "end") {
            if (!in_class) fail("end outside class stanza");
            table.records.push_back(std::move(cur));
            in_class = false;
        } else {
            fail("unknown directive: " + cmd);
        }
    }
    if (in_class) throw DataError(name + ".classes: unterminated class stanza");
    return table;
}

ExpectedTotals load_expected_totals(const std::string& datadir) {
    std::string dir = datadir.empty() ? default_data_dir() : datadir;
    auto file = read_file(dir + "/expected_totals");
    ExpectedTotals out;
    for (const auto& line : file.lines) {
        auto toks = tokens(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "schema") {
            if (toks.size() < 3 || toks[1] != "expected-totals" || toks[2] != "1")
                throw DataError("expected_totals: unsupported schema");
            continue;
        }
        if (toks.size() != 3) throw DataError("expected_totals: bad row: " + line);
        out.rows.emplace_back(toks[0], toks[1], std::stoll(toks[2]));
    }
    return out;
}

std::optional<long long> ExpectedTotals::get(const std::string& type, const std::string& ell) const {
    for (auto& [t, e, v] : rows)
        if (t == type && e == ell) return v;
    return std::nullopt;
}

std::vector<Discrepancy> load_discrepancies(const std::string& datadir) {
    std::string dir = datadir.empty() ? default_data_dir() : datadir;
    auto file = read_file(dir + "/discrepancies");
    std::vector<Discrepancy> out;
    for (const auto& line : file.lines) {
        auto toks = tokens(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "schema") {
            if (toks.size() < 3 || toks[1] != "discrepancies" || toks[2] != "1")
                throw DataError("discrepancies: unsupported schema");
            continue;
        }
        if (toks[0] != "entry") throw DataError("discrepancies: bad row: " + line);
        Discrepancy d;
        // quoted fields: re-parse on key=" boundaries
        auto grab = [&](const std::string& key) -> std::string {
            auto pos = line.find(key + "=\"");
            if (pos == std::string::npos) return "";
            pos += key.size() + 2;
            auto end = line.find('"', pos);
            return line.substr(pos, end - pos);
        };
        if (auto v = opt(toks, "type")) d.type = *v;
        if (auto v = opt(toks, "class")) d.cls = *v;
        if (auto v = opt(toks, "field")) d.field = *v;
        d.printed = grab("printed");
        d.corrected = grab("corrected");
        d.note = grab("note");
        out.push_back(std::move(d));
    }
    return out;
}

void validate(const ClassTable& table, const ExpectedTotals& totals,
              const std::vector<Discrepancy>& disc) {
    const std::string name = table.type.str_plain();
    std::vector<std::string> errors;
    auto err = [&](const std::string& m) { errors.push_back(name + ": " + m); };

    auto rc = record_counts().find(name);
    if (rc == record_counts().end()) err("unknown exceptional type");
    else if ((int)table.records.size() != rc->second)
        err("record count " + std::to_string(table.records.size()) + ", expected " +
            std::to_string(rc->second));

    int specials = 0;
    std::set<std::string> names;
    std::set<std::string> keys;
    auto bad = table.bad_primes();
    for (const auto& r : table.records) {
        if (!names.insert(r.name).second) err("duplicate class " + r.name);
        if (r.springer.empty()) {
            err(r.name + ": empty springer list");
            continue;
        }
        bool has_triv = false;
        for (const auto& s : r.springer) {
            // the trivial local system is the full partition label for S_n
            if (s.psi == "1" || s.psi == "2" || s.psi == "3" || s.psi == "4" || s.psi == "5")
                has_triv = true;
            if (s.char_key != "-" && !keys.insert(s.char_key).second)
                err(r.name + ": duplicate character key " + s.char_key);
            if (s.char_key != "-") parse_char_key(s.char_key); // syntax check
        }
        if (!has_triv) err(r.name + ": trivial local system missing");
        // trivial system carries the maximal a-value
        long long atop = r.a_top();
        for (const auto& s : r.springer)
            if ((s.psi == "1" || s.psi == "2" || s.psi == "3" || s.psi == "4" || s.psi == "5") &&
                s.a != atop)
                err(r.name + ": trivial local system does not attain the top a-value");
        if (r.b && r.special && r.a_top() != *r.b)
            err(r.name + ": special class with a(trivial) != b");
        if (r.special) ++specials;
        // per-ell coverage
        for (int l : bad) {
            const EllData* e = r.ell(l);
            if (!e) {
                err(r.name + ": missing ell " + std::to_string(l) + " line");
                continue;
            }
            if (r.special && !e->is_special)
                err(r.name + ": special class flagged not " + std::to_string(l) + "-special");
            if (e->is_special && (e->quotient_label.empty() || e->alpha < 0))
                err(r.name + ": ell-special row without quotient/alpha");
        }
    }
    auto fc = family_counts().find(name);
    if (fc != family_counts().end() && specials != fc->second)
        err("special classes: " + std::to_string(specials) + ", families: " +
            std::to_string(fc->second));

    // per-ell sums against the expected totals; a table-level discrepancy
    // entry (field "totals") declares the corrected sums instead
    bool totals_disputed = false;
    for (const auto& d : disc)
        if (d.type == name && d.field == "totals") totals_disputed = true;
    for (int l : bad) {
        long long sum = 0;
        for (const auto& r : table.records) {
            const EllData* e = r.ell(l);
            if (e && e->is_special) sum += e->alpha;
        }
        auto want = totals.get(name, std::to_string(l));
        if (!want) {
            err("no expected total for ell=" + std::to_string(l));
            continue;
        }
        if (!totals_disputed && sum != *want)
            err("alpha_" + std::to_string(l) + " sums to " + std::to_string(sum) +
                ", expected " + std::to_string(*want));
        if (totals_disputed) {
            // the declared corrected sums must match exactly
            bool found = false;
            for (const auto& d : disc) {
                if (d.type != name || d.field != "totals") continue;
                std::string tag = "alpha_" + std::to_string(l) + "=" + std::to_string(sum);
                if (d.corrected.find(tag) != std::string::npos) found = true;
            }
            if (!found)
                err("disputed totals: per-class sum alpha_" + std::to_string(l) + "=" +
                    std::to_string(sum) + " not covered by a discrepancy entry");
        }
    }
    if (!errors.empty()) {
        std::string all = "validation failed:";
        for (const auto& e : errors) all += "\n  " + e;
        throw DataError(all);
    }
}

std::vector<std::string> validate_all(const std::string& datadir) {
    auto totals = load_expected_totals(datadir);
    auto disc = load_discrepancies(datadir);
    std::vector<std::string> out;
    for (const char* t : {"G2", "F4", "E6", "E7", "E8"}) {
        auto table = load_class_table(rootsys::CartanType::parse(t), datadir);
        validate(table, totals, disc);
        int sp = 0;
        for (auto& r : table.records) sp += r.special;
        out.push_back(std::string(t) + ": " + std::to_string(table.records.size()) +
                      " classes, " + std::to_string(sp) + " special, ok");
    }
    out.push_back("expected_totals: " + std::to_string(totals.rows.size()) + " rows");
    out.push_back("discrepancies: " + std::to_string(disc.size()) + " entries");
    return out;
}

} // namespace unip::sprdata
