#include "census.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace unip::census {

using permgrp::IntegrityError;
using rootsys::RootSystem;
using weylchar::WeylContext;

namespace {

// cached ambient data for the computed path
struct AmbientData {
    RootSystem rs;
    WeylContext W;
    int short_refl_class = -1, long_refl_class = -1, mixed_class = -1;
    // char index -> (class name, psi label); only entries with stored keys
    std::map<int, std::pair<std::string, std::string>> springer_map;
};

long long char_value_int(const permgrp::ClassFunction& cf, int cls) {
    const Cyc& v = cf.values[cls];
    if (!v.is_integer()) throw IntegrityError("census: non-integral Weyl character value");
    return v.integer_value();
}

const AmbientData& ambient_for(const CartanType& t, const std::string& datadir) {
    static std::map<std::string, std::unique_ptr<AmbientData>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    std::string key = t.str_plain() + "|" + datadir;
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    auto data = std::make_unique<AmbientData>();
    data->rs = RootSystem::build(t);
    data->W = weylchar::make_ambient(data->rs);
    const auto& rs = data->rs;
    int si = -1, li = -1;
    for (int i = 0; i < rs.rank(); ++i) {
        if (rs.is_short(rs.simple_roots()[i]) && si < 0) si = i;
        if (!rs.is_short(rs.simple_roots()[i]) && li < 0) li = i;
    }
    if (si >= 0)
        data->short_refl_class = data->W.group.class_of_perm(rs.reflection_perm(rs.simple_roots()[si]));
    if (li >= 0)
        data->long_refl_class = data->W.group.class_of_perm(rs.reflection_perm(rs.simple_roots()[li]));
    if (si >= 0 && li >= 0) {
        Perm prod = perm_mul(rs.reflection_perm(rs.simple_roots()[si]),
                             rs.reflection_perm(rs.simple_roots()[li]));
        data->mixed_class = data->W.group.class_of_perm(prod);
    }

    // resolve the stored character keys against the computed table
    auto table = sprdata::load_class_table(t, datadir);
    for (const auto& rec : table.records)
        for (const auto& s : rec.springer) {
            if (s.char_key == "-") continue;
            auto key2 = sprdata::parse_char_key(s.char_key);
            int found = -1;
            for (int i = 0; i < data->W.num_chars(); ++i) {
                if (data->W.char_degree(i) != key2.degree) continue;
                if (data->W.fake[i].valuation != key2.b) continue;
                const auto& cf = data->W.group.character_table()[i];
                if (key2.short_trait &&
                    char_value_int(cf, data->short_refl_class) != *key2.short_trait)
                    continue;
                if (key2.long_trait && char_value_int(cf, data->long_refl_class) != *key2.long_trait)
                    continue;
                if (key2.mixed_trait && char_value_int(cf, data->mixed_class) != *key2.mixed_trait)
                    continue;
                if (found >= 0)
                    throw IntegrityError("census: ambiguous character key " + s.char_key);
                found = i;
            }
            if (found < 0) throw IntegrityError("census: unmatched character key " + s.char_key);
            if (data->springer_map.count(found))
                throw IntegrityError("census: two keys resolve to one character");
            data->springer_map[found] = {rec.name, s.psi};
        }
    return *cache.emplace(key, std::move(data)).first->second;
}

bool is_trivial_psi(const std::string& psi) {
    // the trivial local system carries the one-part partition label
    return psi.find('.') == std::string::npos;
}

bool computed_path(const CartanType& t) {
    auto p = t.str_plain();
    return p == "G2" || p == "F4";
}

std::vector<std::string> computed_ell_special(const CartanType& t, int ell,
                                              const std::string& datadir) {
    const auto& amb = ambient_for(t, datadir);
    std::set<int> image;
    for (const auto& rec : amb.rs.ell_relevant_subsystems(ell)) {
        if (rec.deleted_node == 0) {
            for (int s : weylchar::special_characters(amb.W)) image.insert(s);
            continue;
        }
        auto sub = weylchar::make_reflection_subgroup(amb.rs, amb.W.group, rec.sub_type,
                                                      rec.base_roots);
        for (int s : weylchar::special_characters(sub))
            image.insert(weylchar::j_induce(amb.W, sub, s));
    }
    std::vector<std::string> out;
    for (int chi : image) {
        auto it = amb.springer_map.find(chi);
        if (it == amb.springer_map.end())
            throw IntegrityError("census: j-image without a Springer entry (char degree " +
                                 std::to_string(amb.W.char_degree(chi)) + ", b=" +
                                 std::to_string(amb.W.fake[chi].valuation) + ")");
        if (!is_trivial_psi(it->second.second))
            throw IntegrityError("census: j-image lands on a non-trivial local system of " +
                                 it->second.first);
        out.push_back(it->second.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<std::pair<std::string, std::string>> ell_special_classes(const CartanType& t, int ell,
                                                                     const std::string& datadir) {
    auto table = sprdata::load_class_table(t, datadir);
    std::vector<std::pair<std::string, std::string>> out;
    if (computed_path(t)) {
        auto names = computed_ell_special(t, ell, datadir);
        std::set<std::string> got(names.begin(), names.end());
        // keep data-file order
        for (const auto& rec : table.records)
            if (got.count(rec.name)) out.push_back({rec.name, "computed-j-induction"});
        if (out.size() != names.size())
            throw IntegrityError("census: computed class set contains unknown class names");
        // every special class must be present
        for (const auto& rec : table.records)
            if (rec.special && !got.count(rec.name))
                throw IntegrityError("census: special class " + rec.name +
                                     " missing from the computed ell-special set");
    } else {
        auto bad = table.bad_primes();
        bool is_bad = std::find(bad.begin(), bad.end(), ell) != bad.end();
        for (const auto& rec : table.records) {
            if (!is_bad) {
                // good primes: exactly the special classes
                if (rec.special) out.push_back({rec.name, "curated"});
                continue;
            }
            const auto* e = rec.ell(ell);
            if (e && e->is_special) out.push_back({rec.name, "curated"});
        }
    }
    return out;
}

CensusReport alpha(const CartanType& t, int ell, const std::string& datadir) {
    auto table = sprdata::load_class_table(t, datadir);
    auto totals = sprdata::load_expected_totals(datadir);
    auto disc = sprdata::load_discrepancies(datadir);
    auto specials = ell_special_classes(t, ell, datadir);
    std::map<std::string, std::string> provenance;
    for (auto& [n, p] : specials) provenance[n] = p;

    CensusReport rep;
    rep.type = t.str_plain();
    rep.ell = ell;

    // curated flags vs computed set (both exist only for G2/F4)
    if (computed_path(t)) {
        for (const auto& rec : table.records) {
            const auto* e = rec.ell(ell);
            bool curated = e && e->is_special;
            bool computed = provenance.count(rec.name) > 0;
            if (curated != computed)
                rep.notes.push_back("dispute: class " + rec.name + " is " +
                                    (computed ? "computed" : "not computed") +
                                    " ell-special but curated flags say otherwise");
        }
    }

    for (const auto& rec : table.records) {
        ClassRow row;
        row.class_name = rec.name;
        row.agroup = rec.agroup;
        row.ell_special = provenance.count(rec.name) > 0;
        if (row.ell_special) row.source = provenance[rec.name];
        const auto* e = rec.ell(ell);
        if (e && e->is_special) {
            row.expected_quotient = e->quotient_label;
            row.expected_alpha = e->alpha;
        }
        if (row.ell_special) {
            auto q = lmod::ell_special_quotient(rec, ell);
            row.quotient = q.label;
            row.alpha = lmod::m_tilde_ell(q.group, ell);
            rep.total += row.alpha;
            bool has_expected = !row.expected_quotient.empty();
            if (has_expected && row.quotient == row.expected_quotient &&
                row.alpha == row.expected_alpha)
                row.verdict = "match";
            else if (!has_expected)
                row.verdict = "disputed";
            else
                row.verdict = "mismatch";
        } else {
            row.verdict = e && e->is_special ? "disputed" : "not-special";
        }
        // annotate with shipped discrepancy entries for this row
        for (const auto& d : disc)
            if (d.type == rep.type && d.cls == rec.name)
                rep.notes.push_back("corrected row " + rec.name + " [" + d.field + "]: printed \"" +
                                    d.printed + "\" -> \"" + d.corrected + "\" (" + d.note + ")");
        rep.rows.push_back(std::move(row));
    }

    if (auto m1 = totals.get(rep.type, std::to_string(ell))) rep.expected_m1 = *m1;
    else {
        // good primes compare against the unipotent character count
        auto bad = table.bad_primes();
        if (std::find(bad.begin(), bad.end(), ell) == bad.end())
            if (auto g = totals.get(rep.type, "good")) rep.expected_m1 = *g;
    }
    rep.overall = rep.total == rep.expected_m1 ? "match" : "mismatch";
    if (rep.overall == "mismatch") {
        for (const auto& d : disc)
            if (d.type == rep.type && d.field == "totals")
                rep.notes.push_back("totals dispute: printed \"" + d.printed + "\", computed \"" +
                                    d.corrected + "\" (" + d.note + ")");
    }
    return rep;
}

GoodCount unipotent_character_count(const CartanType& t, const std::string& datadir) {
    auto table = sprdata::load_class_table(t, datadir);
    auto totals = sprdata::load_expected_totals(datadir);
    GoodCount out;
    out.type = t.str_plain();
    for (const auto& rec : table.records) {
        if (!rec.special) continue;
        auto q = lmod::canonical_quotient(rec);
        GoodCountRow row;
        row.class_name = rec.name;
        row.quotient = q.label;
        row.count = lmod::m_tilde(q.group);
        out.total += row.count;
        out.rows.push_back(std::move(row));
    }
    if (auto v = totals.get(out.type, "good")) out.expected = *v;
    out.match = out.total == out.expected;
    return out;
}

// -------------------------------------------------------------- rendering --

std::string render_human(const CensusReport& r) {
    std::ostringstream os;
    os << "census " << r.type << "  ell=" << r.ell << "\n";
    os << "  class          A(u)   Gamma^l  alpha  expected        verdict\n";
    for (const auto& row : r.rows) {
        char buf[160];
        std::string exp = row.expected_quotient.empty()
                              ? std::string("-")
                              : row.expected_quotient + "," + std::to_string(row.expected_alpha);
        if (!row.ell_special) {
            snprintf(buf, sizeof buf, "  %-14s %-6s %-8s %-6s %-15s %s\n", row.class_name.c_str(),
                     row.agroup.c_str(), "-", "-", exp.c_str(), row.verdict.c_str());
        } else {
            snprintf(buf, sizeof buf, "  %-14s %-6s %-8s %-6lld %-15s %s\n", row.class_name.c_str(),
                     row.agroup.c_str(), row.quotient.c_str(), row.alpha, exp.c_str(),
                     row.verdict.c_str());
        }
        os << buf;
    }
    os << "  total alpha_" << r.ell << " = " << r.total << "   expected m1 = " << r.expected_m1
       << "   overall " << r.overall << "\n";
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
    return os.str();
}

std::string render_structured(const CensusReport& r) {
    std::ostringstream os;
    os << "census type=" << r.type << " ell=" << r.ell << "\n";
    for (const auto& row : r.rows) {
        os << "row class=" << row.class_name << " agroup=" << row.agroup
           << " special=" << (row.ell_special ? "yes" : "no");
        if (row.ell_special)
            os << " source=" << row.source << " quotient=" << row.quotient
               << " alpha=" << row.alpha;
        if (!row.expected_quotient.empty())
            os << " expected-quotient=" << row.expected_quotient
               << " expected-alpha=" << row.expected_alpha;
        os << " verdict=" << row.verdict << "\n";
    }
    os << "total " << r.total << "\n";
    os << "expected " << r.expected_m1 << "\n";
    os << "overall " << r.overall << "\n";
    for (const auto& n : r.notes) os << "note " << n << "\n";
    os << "end\n";
    return os.str();
}

CensusReport parse_structured(const std::string& text) {
    CensusReport r;
    std::istringstream is(text);
    std::string line;
    auto opt = [](const std::string& l, const std::string& key) -> std::string {
        auto pos = l.find(" " + key + "=");
        if (pos == std::string::npos) {
            if (l.rfind(key + "=", 0) == 0) pos = 0;
            else return "";
        } else
            pos += 1;
        pos += key.size() + 1;
        auto end = l.find(' ', pos);
        return l.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    };
    while (std::getline(is, line)) {
        if (line.rfind("census ", 0) == 0) {
            r.type = opt(line, "type");
            r.ell = std::stoi(opt(line, "ell"));
        } else if (line.rfind("row ", 0) == 0) {
            ClassRow row;
            row.class_name = opt(line, "class");
            row.agroup = opt(line, "agroup");
            row.ell_special = opt(line, "special") == "yes";
            if (row.ell_special) {
                row.source = opt(line, "source");
                row.quotient = opt(line, "quotient");
                row.alpha = std::stoll(opt(line, "alpha"));
            }
            auto eq = opt(line, "expected-quotient");
            if (!eq.empty()) {
                row.expected_quotient = eq;
                row.expected_alpha = std::stoll(opt(line, "expected-alpha"));
            }
            row.verdict = opt(line, "verdict");
            r.rows.push_back(std::move(row));
        } else if (line.rfind("total ", 0) == 0) {
            r.total = std::stoll(line.substr(6));
        } else if (line.rfind("expected ", 0) == 0) {
            r.expected_m1 = std::stoll(line.substr(9));
        } else if (line.rfind("overall ", 0) == 0) {
            r.overall = line.substr(8);
        } else if (line.rfind("note ", 0) == 0) {
            r.notes.push_back(line.substr(5));
        }
    }
    return r;
}

std::string render_human(const GoodCount& g) {
    std::ostringstream os;
    os << "unipotent character count  " << g.type << "\n";
    os << "  class          Gamma_u  |M~|\n";
    for (const auto& row : g.rows) {
        char buf[120];
        snprintf(buf, sizeof buf, "  %-14s %-8s %lld\n", row.class_name.c_str(),
                 row.quotient.c_str(), row.count);
        os << buf;
    }
    os << "  total = " << g.total << "   expected = " << g.expected << "   "
       << (g.match ? "match" : "MISMATCH") << "\n";
    return os.str();
}

} // namespace unip::census
