#include "qseq/textio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "qseq/correlation.hpp"
#include "parallel.hpp"

namespace qseq {

namespace {

constexpr std::string_view q8_tokens = "+-iIjJkK";

// Q8 unit for a token character, or -1.
int q8_index(char c) {
    const auto pos = q8_tokens.find(c);
    return pos == std::string_view::npos ? -1 : static_cast<int>(pos);
}

}  // namespace

Seq parse_sequence(std::string_view text) {
    Seq out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == 'q') {
            out.push_back(unit_q);
            continue;
        }
        if (c == 'Q') {
            out.push_back(-unit_q);
            continue;
        }
        if (c == '~') {
            if (i + 1 >= text.size())
                throw SeqParseError("parse_sequence: dangling '~' at position " + std::to_string(i));
            const int idx = q8_index(text[i + 1]);
            if (idx < 0)
                throw SeqParseError(std::string("parse_sequence: invalid token '~") + text[i + 1] +
                                     "' at position " + std::to_string(i));
            out.push_back(unit_q * Unit::from_index(idx));
            ++i;
            continue;
        }
        const int idx = q8_index(c);
        if (idx < 0)
            throw SeqParseError(std::string("parse_sequence: unknown token '") + c +
                                 "' at position " + std::to_string(i));
        out.push_back(Unit::from_index(idx));
    }
    if (out.empty()) throw SeqParseError("parse_sequence: empty sequence");
    return out;
}

std::string format_entry(Unit u) {
    if (u.in_q8()) return std::string(1, q8_tokens[static_cast<std::size_t>(u.index())]);
    if (const auto f = u.qq8_factor()) {
        if (*f == unit_one) return "q";
        if (*f == unit_minus_one) return "Q";
        return std::string("~") + q8_tokens[static_cast<std::size_t>(f->index())];
    }
    throw SeqParseError("format_entry: entry outside Q+ has no compact form");
}

std::string format_sequence(const Seq& s) {
    std::string out;
    out.reserve(s.size());
    for (Unit u : s) out += format_entry(u);
    return out;
}

nlohmann::json sequence_to_json(const Seq& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (Unit u : s) {
        const Quat& v = u.value();
        arr.push_back({v.w2, v.x2, v.y2, v.z2});
    }
    return arr;
}

Seq sequence_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty())
        throw SeqParseError("sequence_from_json: expected a nonempty array");
    Seq out;
    out.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 4)
            throw SeqParseError("sequence_from_json: entries must be [w2,x2,y2,z2]");
        const Quat v{e[0].get<std::int64_t>(), e[1].get<std::int64_t>(),
                     e[2].get<std::int64_t>(), e[3].get<std::int64_t>()};
        const auto u = Unit::from_quat(v);
        if (!u) throw SeqParseError("sequence_from_json: entry is not a unit Hurwitz quaternion");
        out.push_back(*u);
    }
    return out;
}

namespace {

// Verifies one declared property; returns an empty string on pass and the
// first violated check otherwise.
std::string check_property(const std::string& prop, const Seq& s) {
    const auto n = static_cast<std::int64_t>(s.size());
    if (prop == "palindromic")
        return is_palindromic(s) ? "" : "not palindromic";
    if (prop == "antipalindromic")
        return is_antipalindromic(s) ? "" : "not antipalindromic";
    if (prop == "symmetric")
        return is_symmetric(s) ? "" : "not symmetric";
    if (prop == "antisymmetric")
        return is_antisymmetric(s) ? "" : "not antisymmetric";
    if (prop == "perfect") {
        for (std::int64_t t = 1; t < n; ++t)
            if (!periodic_auto(s, t).is_zero())
                return "not perfect: first nonzero periodic autocorrelation at t=" +
                       std::to_string(t);
        return "";
    }
    if (prop == "odd-perfect") {
        for (std::int64_t t = 1; t < n; ++t)
            if (!negaperiodic_auto(s, t).is_zero())
                return "not odd perfect: first nonzero negaperiodic autocorrelation at t=" +
                       std::to_string(t);
        return "";
    }
    if (prop == "q8") {
        for (std::size_t r = 0; r < s.size(); ++r)
            if (!s[r].in_q8()) return "entry " + std::to_string(r) + " outside Q8";
        return "";
    }
    if (prop == "qplus") {
        for (std::size_t r = 0; r < s.size(); ++r)
            if (!s[r].in_qplus()) return "entry " + std::to_string(r) + " outside Q+";
        return "";
    }
    return "unknown property token '" + prop + "'";
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

}  // namespace

CatalogReport verify_catalog(std::istream& in) {
    CatalogReport report;
    std::vector<CatalogEntry> entries;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        CatalogEntry entry;
        if (!(fields >> entry.name)) continue;  // blank line
        std::string props;
        if (!(fields >> entry.declared_length >> props)) {
            report.parse_errors.push_back("line " + std::to_string(lineno) +
                                          ": expected 'name length properties sequence'");
            continue;
        }
        entry.properties = split_commas(props);
        std::getline(fields, entry.sequence_text);
        entries.push_back(std::move(entry));
    }

    report.entries.resize(entries.size());
    detail::parallel_for(entries.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            const CatalogEntry& e = entries[idx];
            CatalogEntryReport& r = report.entries[idx];
            r.name = e.name;
            Seq s;
            try {
                s = parse_sequence(e.sequence_text);
            } catch (const SeqParseError& err) {
                r.pass = false;
                r.detail = err.what();
                continue;
            }
            if (s.size() != e.declared_length) {
                r.pass = false;
                r.detail = "declared length " + std::to_string(e.declared_length) +
                           " but parsed " + std::to_string(s.size()) + " entries";
                continue;
            }
            r.pass = true;
            for (const std::string& prop : e.properties) {
                const std::string fail = check_property(prop, s);
                if (!fail.empty()) {
                    r.pass = false;
                    r.detail = fail;
                    break;
                }
            }
        }
    });

    report.all_pass = report.parse_errors.empty();
    for (const auto& e : report.entries) report.all_pass = report.all_pass && e.pass;
    return report;
}

CatalogReport verify_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        CatalogReport report;
        report.parse_errors.push_back("cannot open catalog file: " + path);
        report.all_pass = false;
        return report;
    }
    return verify_catalog(in);
}

}  // namespace qseq
