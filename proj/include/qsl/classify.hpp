#ifndef QSL_CLASSIFY_HPP
#define QSL_CLASSIFY_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsl/comitants.hpp"
#include "qsl/invlines.hpp"
#include "qsl/system.hpp"

namespace qsl {

// Config6.k for k=1..11, Config5.k for k=1..30, plus the two non-verdicts.
class ConfigLabel {
public:
    static ConfigLabel six(int k);
    static ConfigLabel five(int k);
    static ConfigLabel not_in_class() { return ConfigLabel(0); }
    static ConfigLabel degenerate() { return ConfigLabel(-1); }
    static std::optional<ConfigLabel> parse(const std::string& s);

    bool is_six() const { return code_ >= 601 && code_ <= 611; }
    bool is_five() const { return code_ >= 501 && code_ <= 530; }
    bool is_config() const { return is_six() || is_five(); }
    int index() const { return code_ % 100; }
    std::string str() const;
    bool operator==(const ConfigLabel& o) const { return code_ == o.code_; }
    bool operator!=(const ConfigLabel& o) const { return code_ != o.code_; }
    bool operator<(const ConfigLabel& o) const { return code_ < o.code_; }

private:
    explicit ConfigLabel(int code) : code_(code) {}
    int code_;
};

enum class Pred { EQ0, NE0, GT0, LT0 };

struct Condition {
    std::string comitant;
    Pred pred;
    std::string text() const;
};

struct TableRow {
    ConfigLabel label;
    std::vector<Condition> conditions;  // in printed order, gate first
};

const std::vector<TableRow>& table_rows();

struct EvidenceItem {
    std::string condition;
    std::string value;   // comitant value or sign actually seen
    bool verdict;
};

struct EvidenceTrace {
    std::vector<EvidenceItem> items;
};

std::pair<ConfigLabel, EvidenceTrace> classify(const QuadraticSystem& s);

// Orbit representatives with their printed parameter constraints.
struct Representative {
    std::vector<std::string> params;
    std::string constraint_text;  // "" when unconstrained
    std::function<bool(const std::map<std::string, Rational>&)> legal;
    std::function<QuadraticSystem(const std::map<std::string, Rational>&)> build;
    std::vector<std::vector<Rational>> sample_grid;  // per-parameter legal samples
};

const std::map<ConfigLabel, Representative>& representatives();
QuadraticSystem representative(const ConfigLabel& label,
                               const std::map<std::string, Rational>& params);

enum class CanonicalFamily { S_I, S_II, S_III, S_IV, S_V };
std::string family_str(CanonicalFamily f);

struct CanonicalForm {
    CanonicalFamily family;
    std::optional<AffineTransform> transform;  // absent when it would need an
                                               // irrational coordinate change
    std::string note;
};

CanonicalForm canonical_form(const QuadraticSystem& s);

struct ConsistencyReport {
    bool gcd_degree_ok = false;
    bool m_il_ok = false;
    int expected_gcd = 0, actual_gcd = 0;
    int expected_m_il = 0, actual_m_il = 0;
    std::string detail;
    bool pass() const { return gcd_degree_ok && m_il_ok; }
};

ConsistencyReport consistency_check(const QuadraticSystem& s, const ConfigLabel& label,
                                    const LineConfiguration& cfg);

} // namespace qsl

#endif
