#pragma once

#include "rootsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace unip::sprdata {

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// one local system (u, psi) with E_{u,psi} != 0
struct SpringerChar {
    std::string psi;      // partition label in A_G(u), "1" for the trivial group
    std::string char_key; // W-character key "phi[d,b]" or "phi[d,b;s<v>,l<v>]"; "-" if absent
    long long a = 0;      // a-value of the W-character
};

struct EllData {
    int ell = 0;
    bool is_special = false;
    std::string quotient_label; // expected quotient of A_G(u)
    long long alpha = -1;       // expected |M~_ell|
};

struct UnipotentClassRecord {
    std::string name;
    std::string agroup; // "1", "S2", ..., "S5"
    bool special = false;
    std::optional<int> b; // dim of the Borel variety (carried for G2/F4)
    std::vector<SpringerChar> springer;
    std::vector<EllData> ells;

    const EllData* ell(int l) const;
    long long a_top() const; // max a-value = a of the trivial local system
};

struct ClassTable {
    rootsys::CartanType type;
    std::string normalization;
    std::vector<UnipotentClassRecord> records;

    const UnipotentClassRecord* find(const std::string& name) const;
    // inverse Springer lookup: char key -> (class name, psi)
    std::pair<std::string, std::string> springer_class_of(const std::string& char_key) const;
    std::vector<int> bad_primes() const;
};

struct Discrepancy {
    std::string type;
    std::string cls;   // empty for table-level entries
    std::string field; // e.g. "ell2", "totals", "agroup"
    std::string printed;
    std::string corrected;
    std::string note;
};

struct ExpectedTotals {
    // key: (type string, ell as string; "good" for the semisimple-prime column)
    std::vector<std::tuple<std::string, std::string, long long>> rows;
    std::optional<long long> get(const std::string& type, const std::string& ell) const;
};

// data directory: explicit argument, else UNIPCOUNT_DATA, else ./data
std::string default_data_dir();

ClassTable load_class_table(const rootsys::CartanType& t, const std::string& datadir = "");
ExpectedTotals load_expected_totals(const std::string& datadir = "");
std::vector<Discrepancy> load_discrepancies(const std::string& datadir = "");

// structural validation; throws DataError listing offending rows
void validate(const ClassTable& table, const ExpectedTotals& totals,
              const std::vector<Discrepancy>& disc);

// runs validate() on every shipped table; returns human-readable summary lines
std::vector<std::string> validate_all(const std::string& datadir = "");

// parse "phi[d,b]" / "phi[d,b;s<v>,l<v>]" keys
struct CharKey {
    long long degree = 0;
    int b = 0;
    std::optional<long long> short_trait; // value on the short-simple reflection class
    std::optional<long long> long_trait;  // value on the long-simple reflection class
    std::optional<long long> mixed_trait; // value on the class of (first short)*(first long)
};
CharKey parse_char_key(const std::string& s);

} // namespace unip::sprdata
