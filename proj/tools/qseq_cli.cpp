// Command-line surface for the quaternion sequence library: verification,
// constructions, exhaustive search, and catalog checking.  Exit codes:
// 0 success, 1 property or precondition failure, 2 usage or parse error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qseq/construct.hpp"
#include "qseq/search.hpp"
#include "qseq/textio.hpp"

namespace {

using nlohmann::json;
using namespace qseq;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Input loading: '-' reads standard input, an existing file path reads the
// file, anything else is taken as inline text.  Members are separated by
// commas; whitespace inside a member is ignored.

std::string resolve_text(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream all;
        all << std::cin.rdbuf();
        return all.str();
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        if (!in) throw UsageError("cannot open input file: " + arg);
        std::ostringstream all;
        all << in.rdbuf();
        return all.str();
    }
    return arg;
}

std::vector<Seq> parse_members(const std::vector<std::string>& args) {
    std::vector<Seq> members;
    for (const std::string& arg : args) {
        const std::string text = resolve_text(arg);
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t comma = text.find(',', start);
            const std::string piece =
                text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            members.push_back(parse_sequence(piece));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return members;
}

std::vector<Seq> expect_members(const std::vector<std::string>& args, std::size_t want,
                                const std::string& what) {
    std::vector<Seq> members = parse_members(args);
    if (members.size() != want)
        throw UsageError(what + " expects " + std::to_string(want) + " comma-separated sequence" +
                         (want == 1 ? "" : "s") + ", got " + std::to_string(members.size()));
    return members;
}

Seq expect_one(const std::vector<std::string>& args, const std::string& what) {
    return expect_members(args, 1, what)[0];
}

Quad expect_quad(const std::vector<std::string>& args, const std::string& what) {
    auto members = expect_members(args, 4, what);
    return Quad{{members[0], members[1], members[2], members[3]}};
}

// ---------------------------------------------------------------------------
// Formatting.

std::string coord_str(std::int64_t doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

std::string quat_str(const Quat& v) {
    const std::pair<std::int64_t, const char*> parts[4] = {
        {v.w2, ""}, {v.x2, "i"}, {v.y2, "j"}, {v.z2, "k"}};
    std::string out;
    for (const auto& [c2, suffix] : parts) {
        if (c2 == 0) continue;
        std::string piece = coord_str(c2) + suffix;
        if (!out.empty() && piece[0] != '-') out += '+';
        out += piece;
    }
    return out.empty() ? "0" : out;
}

json receipt_to_json(const Receipt& r) {
    json j;
    j["construction"] = r.construction;
    j["inputs"] = r.inputs;
    j["verified"] = r.verified;
    if (!r.notes.empty()) j["notes"] = r.notes;
    json steps = json::array();
    for (const Receipt& s : r.steps) steps.push_back(receipt_to_json(s));
    if (!steps.empty()) j["steps"] = steps;
    return j;
}

void print_receipt(std::ostream& os, const Receipt& r, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    os << pad << "construction: " << r.construction << "\n";
    for (const auto& s : r.inputs) os << pad << "  input: " << s << "\n";
    for (const auto& s : r.verified) os << pad << "  verified: " << s << "\n";
    for (const auto& s : r.notes) os << pad << "  note: " << s << "\n";
    for (const Receipt& step : r.steps) print_receipt(os, step, depth + 1);
}

std::string quad_line(const Quad& q) {
    return format_sequence(q.m[0]) + "," + format_sequence(q.m[1]) + "," + format_sequence(q.m[2]) +
           "," + format_sequence(q.m[3]);
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOutcome {
    bool pass = true;
    std::string detail;
};

VerifyOutcome check_sequence_correlation(const Seq& s, bool odd) {
    const auto n = static_cast<std::int64_t>(s.size());
    for (std::int64_t t = 1; t < n; ++t) {
        const Quat v = odd ? negaperiodic_auto(s, t) : periodic_auto(s, t);
        if (!v.is_zero())
            return {false, std::string("first violation at t = ") + std::to_string(t) + ": " +
                               (odd ? "R^(t) = " : "R(t) = ") + quat_str(v)};
    }
    return {};
}

VerifyOutcome check_golay(const Seq& a, const Seq& b) {
    if (a.size() != b.size()) return {false, "members differ in length"};
    if (!is_pm1(a) || !is_pm1(b)) return {false, "entries must be +1 or -1"};
    const auto n = static_cast<std::int64_t>(a.size());
    for (std::int64_t t = 1; t < n; ++t) {
        const Quat v = aperiodic_auto(a, t) + aperiodic_auto(b, t);
        if (!v.is_zero())
            return {false, "first violation at t = " + std::to_string(t) +
                               ": C_A(t) + C_B(t) = " + quat_str(v)};
    }
    return {};
}

VerifyOutcome check_quad_shape(const Quad& q) {
    try {
        require_pm1_quad(q);
    } catch (const std::invalid_argument& e) {
        return {false, e.what()};
    }
    return {};
}

VerifyOutcome check_complementary(const Quad& q, CorrKind kind) {
    const auto n = static_cast<std::int64_t>(q.length());
    for (std::int64_t t = 1; t < n; ++t) {
        Quat sum{};
        for (const Seq& s : q.m)
            sum += kind == CorrKind::periodic ? periodic_auto(s, t) : negaperiodic_auto(s, t);
        if (!sum.is_zero())
            return {false, std::string("first violation at t = ") + std::to_string(t) + ": sum of " +
                               (kind == CorrKind::periodic ? "R(t)" : "R^(t)") + " = " +
                               quat_str(sum)};
    }
    return {};
}

VerifyOutcome check_williamson(const Quad& q) {
    if (auto shape = check_quad_shape(q); !shape.pass) return shape;
    static const char* names[4] = {"A", "B", "C", "D"};
    for (int i = 0; i < 4; ++i)
        if (!is_symmetric(q.m[i]))
            return {false, std::string("member ") + names[i] + " is not symmetric"};
    return check_complementary(q, CorrKind::periodic);
}

VerifyOutcome check_nega_williamson(const Quad& q, NegaSymmetry sym) {
    if (auto shape = check_quad_shape(q); !shape.pass) return shape;
    static const char* names[4] = {"A", "B", "C", "D"};
    for (int i = 0; i < 4; ++i) {
        if (sym == NegaSymmetry::palindromic && !is_palindromic(q.m[i]))
            return {false, std::string("member ") + names[i] + " is not palindromic"};
        if (sym == NegaSymmetry::antipalindromic && !is_antipalindromic(q.m[i]))
            return {false, std::string("member ") + names[i] + " is not antipalindromic"};
    }
    return check_complementary(q, CorrKind::negaperiodic);
}

VerifyOutcome check_q8_property(const Quad& q) {
    for (std::size_t r = 0; r < q.length(); ++r) {
        const Unit p = q.m[0][r] * q.m[1][r] * q.m[2][r] * q.m[3][r];
        if (!(p == unit_one))
            return {false, "entry product at position " + std::to_string(r) + " is " +
                               format_entry(p) + ", not +1"};
    }
    return {};
}

Matrix reshape(const Seq& s, std::size_t cols) {
    if (cols == 0) throw UsageError("--cols must be positive");
    if (s.size() % cols != 0)
        throw UsageError("sequence length " + std::to_string(s.size()) +
                         " is not divisible by --cols " + std::to_string(cols));
    Matrix m;
    m.rows = s.size() / cols;
    m.cols = cols;
    m.cells = s;
    return m;
}

VerifyOutcome check_array_orthogonality(const Matrix& m) {
    if (m.rows % m.cols != 0)
        return {false, "column length " + std::to_string(m.rows) +
                           " is not a multiple of the column count " + std::to_string(m.cols)};
    std::vector<Seq> cols;
    for (std::size_t c = 0; c < m.cols; ++c) cols.push_back(m.column(c));
    const auto n = static_cast<std::int64_t>(m.rows);
    for (std::int64_t t = 1; t < n; ++t) {
        Quat sum{};
        for (const Seq& c : cols) sum += periodic_auto(c, t);
        if (!sum.is_zero())
            return {false, "columns are not periodic complementary: sum of R(t) = " + quat_str(sum) +
                               " at t = " + std::to_string(t)};
    }
    for (std::size_t i = 0; i < cols.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (i == j) continue;
            for (std::int64_t t = 0; t < n; ++t) {
                const Quat v = periodic_cross(cols[i], cols[j], t);
                if (!v.is_zero())
                    return {false, "columns " + std::to_string(i) + " and " + std::to_string(j) +
                                       " correlate: R(t) = " + quat_str(v) + " at t = " +
                                       std::to_string(t)};
            }
        }
    return {};
}

VerifyOutcome check_perfect_array(const Matrix& m) {
    const auto rows = static_cast<std::int64_t>(m.rows);
    const auto cols = static_cast<std::int64_t>(m.cols);
    for (std::int64_t t = 0; t < rows; ++t)
        for (std::int64_t tp = 0; tp < cols; ++tp) {
            if (t == 0 && tp == 0) continue;
            Quat sum{};
            for (std::int64_t r = 0; r < rows; ++r)
                for (std::int64_t s = 0; s < cols; ++s)
                    sum += (m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(s)) *
                            m.at(static_cast<std::size_t>((r + t) % rows),
                                 static_cast<std::size_t>((s + tp) % cols))
                                .conj())
                               .value();
            if (!sum.is_zero())
                return {false, "first violation at (t, t') = (" + std::to_string(t) + ", " +
                                   std::to_string(tp) + "): value " + quat_str(sum)};
        }
    return {};
}

struct VerifyArgs {
    std::string property;
    std::vector<std::string> inputs;
    std::size_t cols = 4;
    std::string symmetry = "none";
    bool as_json = false;
};

NegaSymmetry symmetry_from_name(const std::string& name) {
    if (name == "palindromic") return NegaSymmetry::palindromic;
    if (name == "antipalindromic") return NegaSymmetry::antipalindromic;
    return NegaSymmetry::none;
}

int run_verify(const VerifyArgs& args) {
    const std::vector<Seq> members = parse_members(args.inputs);
    auto need = [&](std::size_t want) {
        if (members.size() != want)
            throw UsageError("property '" + args.property + "' expects " + std::to_string(want) +
                             " sequence" + (want == 1 ? "" : "s") + ", got " +
                             std::to_string(members.size()));
    };

    VerifyOutcome outcome;
    if (args.property == "perfect") {
        need(1);
        outcome = check_sequence_correlation(members[0], false);
    } else if (args.property == "odd-perfect") {
        need(1);
        outcome = check_sequence_correlation(members[0], true);
    } else if (args.property == "golay") {
        need(2);
        outcome = check_golay(members[0], members[1]);
    } else if (args.property == "williamson") {
        need(4);
        outcome = check_williamson(Quad{{members[0], members[1], members[2], members[3]}});
    } else if (args.property == "nega-williamson") {
        need(4);
        outcome = check_nega_williamson(Quad{{members[0], members[1], members[2], members[3]}},
                                        symmetry_from_name(args.symmetry));
    } else if (args.property == "q8-property") {
        need(4);
        outcome = check_q8_property(Quad{{members[0], members[1], members[2], members[3]}});
    } else if (args.property == "array-orthogonality") {
        need(1);
        outcome = check_array_orthogonality(reshape(members[0], args.cols));
    } else if (args.property == "perfect-array") {
        need(1);
        outcome = check_perfect_array(reshape(members[0], args.cols));
    } else {
        throw UsageError("unknown property: " + args.property);
    }

    if (args.as_json) {
        json j;
        j["command"] = "verify";
        j["property"] = args.property;
        json mem = json::array();
        for (const Seq& s : members) mem.push_back(format_sequence(s));
        j["members"] = mem;
        j["pass"] = outcome.pass;
        if (!outcome.pass) j["detail"] = outcome.detail;
        std::cout << j.dump(2) << "\n";
    } else if (outcome.pass) {
        std::cout << "pass: " << args.property << "\n";
    } else {
        std::cout << "fail: " << args.property << ": " << outcome.detail << "\n";
    }
    return outcome.pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// construct

void emit_quad_result(const std::string& sub, const Quad& q, const Receipt& receipt, bool as_json) {
    if (as_json) {
        json j;
        j["command"] = "construct";
        j["subcommand"] = sub;
        j["members"] = {format_sequence(q.m[0]), format_sequence(q.m[1]), format_sequence(q.m[2]),
                        format_sequence(q.m[3])};
        j["receipt"] = receipt_to_json(receipt);
        std::cout << j.dump(2) << "\n";
        return;
    }
    print_receipt(std::cout, receipt, 0);
    std::cout << "output:\n";
    static const char* names[4] = {"A", "B", "C", "D"};
    for (int i = 0; i < 4; ++i)
        std::cout << "  " << names[i] << " = " << format_sequence(q.m[i]) << "\n";
}

void emit_seq_result(const std::string& sub, const Seq& s, const Receipt& receipt, bool as_json) {
    if (as_json) {
        json j;
        j["command"] = "construct";
        j["subcommand"] = sub;
        j["sequence"] = format_sequence(s);
        j["sequence_json"] = sequence_to_json(s);
        j["receipt"] = receipt_to_json(receipt);
        std::cout << j.dump(2) << "\n";
        return;
    }
    print_receipt(std::cout, receipt, 0);
    std::cout << "output:\n  " << format_sequence(s) << "\n";
}

// ---------------------------------------------------------------------------
// search

struct SearchArgs {
    std::string kind;
    std::size_t length = 1;
    std::string alphabet = "q8";
    std::string symmetry = "none";
    bool q8_property = false;
    std::size_t cap = 0;
    bool as_json = false;
};

SearchSpec spec_from_args(const SearchArgs& args) {
    SearchSpec spec;
    spec.length = args.length;
    spec.alphabet = args.alphabet == "qplus" ? SearchAlphabet::qplus : SearchAlphabet::q8;
    spec.require_q8_property = args.q8_property;
    spec.result_cap = args.cap;
    if (args.kind == "perfect") {
        spec.kind = SearchKind::perfect;
    } else if (args.kind == "odd-perfect") {
        spec.kind = SearchKind::odd_perfect;
    } else if (args.kind == "golay") {
        spec.kind = SearchKind::golay_pair;
    } else if (args.kind == "williamson") {
        spec.kind = SearchKind::williamson;
    } else if (args.kind == "williamson-type") {
        spec.kind = SearchKind::williamson_type;
    } else if (args.kind == "nega-williamson") {
        spec.kind = SearchKind::nega_williamson;
        spec.nega_symmetry = symmetry_from_name(args.symmetry);
    } else if (args.kind == "pal-nega-williamson") {
        spec.kind = SearchKind::nega_williamson;
        spec.nega_symmetry = NegaSymmetry::palindromic;
    } else if (args.kind == "antipal-nega-williamson") {
        spec.kind = SearchKind::nega_williamson;
        spec.nega_symmetry = NegaSymmetry::antipalindromic;
    } else {
        throw UsageError("unknown search kind: " + args.kind);
    }
    return spec;
}

int run_search(const SearchArgs& args) {
    const SearchSpec spec = spec_from_args(args);
    const SearchResult result = enumerate_designs(spec);

    if (args.as_json) {
        json j;
        j["command"] = "search";
        j["kind"] = args.kind;
        j["length"] = spec.length;
        j["candidates"] = result.candidates;
        j["matches"] = result.matches;
        json items = json::array();
        for (const Seq& s : result.seqs) items.push_back(format_sequence(s));
        for (const auto& [a, b] : result.pairs)
            items.push_back({format_sequence(a), format_sequence(b)});
        for (const Quad& q : result.quads)
            items.push_back({format_sequence(q.m[0]), format_sequence(q.m[1]),
                             format_sequence(q.m[2]), format_sequence(q.m[3])});
        j["results"] = items;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const Seq& s : result.seqs) std::cout << format_sequence(s) << "\n";
        for (const auto& [a, b] : result.pairs)
            std::cout << format_sequence(a) << "," << format_sequence(b) << "\n";
        for (const Quad& q : result.quads) std::cout << quad_line(q) << "\n";
        std::cout << "candidates: " << result.candidates << "\n";
        std::cout << "matches: " << result.matches << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// catalog

int run_catalog_verify(const std::string& path, bool as_json) {
    const CatalogReport report = verify_catalog_file(path);
    const bool ok = report.all_pass && report.parse_errors.empty();

    if (as_json) {
        json j;
        j["command"] = "catalog";
        j["file"] = path;
        json entries = json::array();
        for (const auto& e : report.entries) {
            json je;
            je["name"] = e.name;
            je["pass"] = e.pass;
            if (!e.pass) je["detail"] = e.detail;
            entries.push_back(je);
        }
        j["entries"] = entries;
        j["parse_errors"] = report.parse_errors;
        j["all_pass"] = ok;
        std::cout << j.dump(2) << "\n";
    } else {
        std::size_t passed = 0;
        for (const auto& e : report.entries) {
            if (e.pass) {
                ++passed;
                std::cout << "PASS " << e.name << "\n";
            } else {
                std::cout << "FAIL " << e.name << ": " << e.detail << "\n";
            }
        }
        for (const auto& err : report.parse_errors) std::cout << "PARSE ERROR: " << err << "\n";
        std::cout << passed << "/" << report.entries.size() << " entries passed";
        if (!report.parse_errors.empty())
            std::cout << ", " << report.parse_errors.size() << " parse error(s)";
        std::cout << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Perfect and odd perfect quaternion sequences: constructions, verification,\n"
        "exhaustive search, and catalog checking.  Set QSEQ_THREADS to bound the\n"
        "worker count (default: available parallelism)."};
    app.require_subcommand(1);
    app.footer(
        "Inline sequences that begin with '-' (or the bare token '++') read as\n"
        "option syntax; put '--' before them, e.g. 'qseq verify --property perfect -- --+-'.");
    int rc = 0;

    // verify ----------------------------------------------------------------
    auto verify_args = std::make_shared<VerifyArgs>();
    CLI::App* v = app.add_subcommand("verify", "Check a property of sequences");
    v->add_option("--property", verify_args->property,
                  "One of: perfect, odd-perfect, golay, williamson, nega-williamson, "
                  "q8-property, array-orthogonality, perfect-array")
        ->required();
    v->add_option("input", verify_args->inputs,
                  "Sequences: inline text, a file path, or '-' for standard input; "
                  "members separated by commas")
        ->required()
        ->expected(-1);
    v->add_option("--cols", verify_args->cols, "Column count for the array properties (default 4)");
    v->add_option("--symmetry", verify_args->symmetry,
                  "Member symmetry required by nega-williamson: none, palindromic, antipalindromic")
        ->check(CLI::IsMember({"none", "palindromic", "antipalindromic"}));
    v->add_flag("--json", verify_args->as_json, "Emit a JSON payload");
    v->callback([verify_args, &rc] { rc = run_verify(*verify_args); });

    // construct ---------------------------------------------------------------
    CLI::App* c = app.add_subcommand("construct", "Run a construction and print its receipt");
    c->require_subcommand(1);

    struct ConstructState {
        int t = 0;
        std::vector<std::string> williamson, nega, golay, x, y, perfect;
        int set = 2;
        std::string mode = "periodic";
        std::size_t cols = 4;
        bool as_json = false;
    };
    auto cs = std::make_shared<ConstructState>();

    CLI::App* power2 = c->add_subcommand("power2", "Power-of-two pipeline: length 2^t");
    power2->add_option("--t", cs->t, "Exponent (0..14)")->required();
    power2->add_flag("--json", cs->as_json);
    power2->callback([cs, &rc] {
        PipelineResult r = power_of_two_pipeline(cs->t);
        if (cs->as_json) {
            json j;
            j["command"] = "construct";
            j["subcommand"] = "power2";
            j["t"] = cs->t;
            j["williamson"] = {format_sequence(r.williamson.m[0]), format_sequence(r.williamson.m[1]),
                               format_sequence(r.williamson.m[2]), format_sequence(r.williamson.m[3])};
            j["perfect"] = format_sequence(r.perfect);
            j["receipt"] = receipt_to_json(r.receipt);
            std::cout << j.dump(2) << "\n";
        } else {
            print_receipt(std::cout, r.receipt, 0);
            std::cout << "output:\n";
            static const char* names[4] = {"A", "B", "C", "D"};
            for (int i = 0; i < 4; ++i)
                std::cout << "  " << names[i] << " = " << format_sequence(r.williamson.m[i]) << "\n";
            std::cout << "  perfect = " << format_sequence(r.perfect) << "\n";
        }
        rc = 0;
    });

    CLI::App* cmain = c->add_subcommand("main", "Even-length doubling: Williamson + nega -> 4n");
    cmain->add_option("--williamson", cs->williamson, "Four comma-separated members")->required();
    cmain->add_option("--nega", cs->nega, "Four comma-separated members")->required();
    cmain->add_flag("--json", cs->as_json);
    cmain->callback([cs, &rc] {
        auto out = williamson_double_even(expect_quad(cs->williamson, "--williamson"),
                                          expect_quad(cs->nega, "--nega"));
        emit_quad_result("main", out.value, out.receipt, cs->as_json);
        rc = 0;
    });

    CLI::App* oddv = c->add_subcommand("odd-variant", "Odd-length doubling: Williamson + nega -> 4n");
    oddv->add_option("--williamson", cs->williamson, "Four comma-separated members")->required();
    oddv->add_option("--nega", cs->nega, "Four comma-separated members")->required();
    oddv->add_flag("--json", cs->as_json);
    oddv->callback([cs, &rc] {
        auto out = williamson_double_odd_from_designs(expect_quad(cs->williamson, "--williamson"),
                                                      expect_quad(cs->nega, "--nega"));
        emit_quad_result("odd-variant", out.value, out.receipt, cs->as_json);
        rc = 0;
    });

    CLI::App* negcon = c->add_subcommand("negcon", "Nega-Williamson quadruple from a Golay pair");
    negcon->add_option("--golay", cs->golay, "Two comma-separated members")->required();
    negcon->add_option("--set", cs->set, "Family: 1 (length 4n) or 2 (length 8n)")
        ->check(CLI::IsMember({1, 2}));
    negcon->add_flag("--json", cs->as_json);
    negcon->callback([cs, &rc] {
        auto members = expect_members(cs->golay, 2, "--golay");
        auto out = nega_quad_from_golay(members[0], members[1], cs->set);
        emit_quad_result("negcon", out.value, out.receipt, cs->as_json);
        rc = 0;
    });

    CLI::App* oddp = c->add_subcommand("odd-perfect", "Odd perfect Q8-sequence from a Golay pair");
    oddp->add_option("--golay", cs->golay, "Two comma-separated members")->required();
    oddp->add_flag("--json", cs->as_json);
    oddp->callback([cs, &rc] {
        auto members = expect_members(cs->golay, 2, "--golay");
        auto out = odd_perfect_from_golay(members[0], members[1]);
        emit_seq_result("odd-perfect", out.value, out.receipt, cs->as_json);
        rc = 0;
    });

    CLI::App* product = c->add_subcommand("product", "Coprime-length product of perfect sequences");
    product->add_option("--x", cs->x, "First sequence")->required();
    product->add_option("--y", cs->y, "Second sequence")->required();
    product->add_option("--mode", cs->mode, "periodic or odd")
        ->check(CLI::IsMember({"periodic", "odd"}));
    product->add_flag("--json", cs->as_json);
    product->callback([cs, &rc] {
        const Seq x = expect_one(cs->x, "--x");
        const Seq y = expect_one(cs->y, "--y");
        auto out = cs->mode == "odd" ? odd_product(x, y) : periodic_product(x, y);
        emit_seq_result("product", out.value, out.receipt, cs->as_json);
        rc = 0;
    });

    CLI::App* matrix = c->add_subcommand("matrix", "Row-major matrix from a perfect sequence");
    matrix->add_option("--perfect", cs->perfect, "Perfect sequence")->required();
    matrix->add_option("--cols", cs->cols, "Column count (default 4)");
    matrix->add_flag("--json", cs->as_json);
    matrix->callback([cs, &rc] {
        auto out = matrix_from_perfect(expect_one(cs->perfect, "--perfect"), cs->cols);
        const Matrix& m = out.value;
        std::vector<std::string> rows;
        for (std::size_t r = 0; r < m.rows; ++r) {
            Seq row(m.cells.begin() + static_cast<std::ptrdiff_t>(r * m.cols),
                    m.cells.begin() + static_cast<std::ptrdiff_t>((r + 1) * m.cols));
            rows.push_back(format_sequence(row));
        }
        if (cs->as_json) {
            json j;
            j["command"] = "construct";
            j["subcommand"] = "matrix";
            j["rows"] = rows;
            j["receipt"] = receipt_to_json(out.receipt);
            std::cout << j.dump(2) << "\n";
        } else {
            print_receipt(std::cout, out.receipt, 0);
            std::cout << "output:\n";
            for (const auto& row : rows) std::cout << "  " << row << "\n";
        }
        rc = 0;
    });

    // search ------------------------------------------------------------------
    auto search_args = std::make_shared<SearchArgs>();
    CLI::App* s = app.add_subcommand("search", "Exhaustive enumeration at small lengths");
    s->add_option("--kind", search_args->kind,
                  "One of: perfect, odd-perfect, golay, williamson, williamson-type, "
                  "nega-williamson, pal-nega-williamson, antipal-nega-williamson")
        ->required();
    s->add_option("--length", search_args->length, "Sequence length")->required();
    s->add_option("--alphabet", search_args->alphabet, "q8 or qplus (sequence kinds)")
        ->check(CLI::IsMember({"q8", "qplus"}));
    s->add_option("--symmetry", search_args->symmetry,
                  "Member symmetry for nega-williamson: none, palindromic, antipalindromic")
        ->check(CLI::IsMember({"none", "palindromic", "antipalindromic"}));
    s->add_flag("--q8", search_args->q8_property, "Require the Q8-property (quadruple kinds)");
    s->add_option("--cap", search_args->cap, "Keep at most this many results (0 = all)");
    s->add_flag("--json", search_args->as_json, "Emit a JSON payload");
    s->callback([search_args, &rc] { rc = run_search(*search_args); });

    // catalog -----------------------------------------------------------------
    CLI::App* cat = app.add_subcommand("catalog", "Catalog file operations");
    cat->require_subcommand(1);
    auto cat_path = std::make_shared<std::string>();
    auto cat_json = std::make_shared<bool>(false);
    CLI::App* catv = cat->add_subcommand("verify", "Verify every entry of a catalog file");
    catv->add_option("file", *cat_path, "Catalog file path")->required();
    catv->add_flag("--json", *cat_json, "Emit a JSON payload");
    catv->callback([cat_path, cat_json, &rc] { rc = run_catalog_verify(*cat_path, *cat_json); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ConstructionError& e) {
        std::cerr << "construction failed: " << e.what() << "\n";
        return 1;
    } catch (const SearchBoundsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SeqParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
