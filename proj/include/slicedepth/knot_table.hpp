#pragma once

#include <algorithm>
#include <cctype>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "slicedepth/classify.hpp"

namespace slicedepth {

/// One Rolfsen-table entry of a 2-bridge knot.
struct KnotRecord {
    std::string name;
    int crossings = 0;
    Fraction fraction;
    std::optional<EvenCF> even_cf;  // precomputed override
    Int determinant;
    /// Set when the even_cf override evaluates to an equivalent
    /// presentation of the knot rather than to the fraction itself.
    bool alternate_representative = false;
};

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

inline Int parse_int(const std::string& field, std::size_t row, std::size_t column) {
    std::string t = trim(field);
    if (t.empty()) throw ParseError(row, column, "expected an integer, got an empty field");
    bool negative = t[0] == '-';
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) throw ParseError(row, column, "expected an integer, got \"" + t + "\"");
    for (std::size_t j = i; j < t.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(t[j])))
            throw ParseError(row, column, "expected an integer, got \"" + t + "\"");
    Int value(t.substr(i));
    return negative ? -value : value;
}

/// Sort key for knot names of the form "<crossings>_<index>".
inline std::pair<long long, std::string> name_index(const std::string& name) {
    std::size_t us = name.find('_');
    if (us != std::string::npos && us + 1 < name.size()) {
        std::string suffix = name.substr(us + 1);
        if (std::all_of(suffix.begin(), suffix.end(),
                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            return {std::stoll(suffix), name};
    }
    return {std::numeric_limits<long long>::max(), name};
}

}  // namespace detail

/// Reads the knot table CSV: header `name,crossings,p,q,even_cf`
/// (optionally with a trailing `determinant` column), `#` comments,
/// UTF-8, LF line endings. The even_cf column holds semicolon-
/// separated signed integers. Every record is validated against the
/// KnotRecord invariants before it is returned.
inline std::vector<KnotRecord> load_table(std::istream& in) {
    std::vector<KnotRecord> records;
    std::string line;
    std::size_t row = 0;
    bool header_seen = false;
    bool has_det_column = false;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string stripped = detail::trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        if (!header_seen) {
            if (stripped == "name,crossings,p,q,even_cf") {
                header_seen = true;
            } else if (stripped == "name,crossings,p,q,even_cf,determinant") {
                header_seen = true;
                has_det_column = true;
            } else {
                throw ParseError(row, 1, "expected header \"name,crossings,p,q,even_cf\"");
            }
            continue;
        }

        std::vector<std::string> fields = detail::split(line, ',');
        const std::size_t expected = has_det_column ? 6 : 5;
        if (fields.size() != expected)
            throw ParseError(row, fields.size(),
                             "expected " + std::to_string(expected) + " fields, got " +
                                 std::to_string(fields.size()));

        KnotRecord rec;
        rec.name = detail::trim(fields[0]);
        if (rec.name.empty()) throw ParseError(row, 1, "empty knot name");

        Int crossings = detail::parse_int(fields[1], row, 2);
        if (crossings < 1 || crossings > 10)
            throw InvariantError(row, "crossing number must be in 1..10, got " + crossings.str());
        rec.crossings = static_cast<int>(crossings);

        Int p = detail::parse_int(fields[2], row, 3);
        Int q = detail::parse_int(fields[3], row, 4);
        if (p % 2 == 0) throw InvariantError(row, "p must be odd, got " + p.str());
        if (q <= 0 || q >= boost::multiprecision::abs(p))
            throw InvariantError(row, "need 0 < q < |p|, got q = " + q.str());
        if (boost::multiprecision::gcd(p, q) != 1)
            throw InvariantError(row, "fraction " + p.str() + "/" + q.str() + " is not reduced");
        rec.fraction = Fraction(p, q);
        rec.determinant = boost::multiprecision::abs(p);

        if (has_det_column) {
            Int det = detail::parse_int(fields[5], row, 6);
            if (det != rec.determinant)
                throw InvariantError(row, "determinant column " + det.str() +
                                              " does not equal |p| = " + rec.determinant.str());
        }

        std::string cf_field = detail::trim(fields[4]);
        if (!cf_field.empty()) {
            std::vector<Int> coeffs;
            std::size_t col = 5;
            for (const std::string& part : detail::split(cf_field, ';'))
                coeffs.push_back(detail::parse_int(part, row, col));
            EvenCF cf;
            try {
                cf = EvenCF(std::move(coeffs));
            } catch (const Error& e) {
                throw InvariantError(row, std::string("even_cf override: ") + e.what());
            }
            Fraction value = eval_cf(cf);
            if (value == rec.fraction) {
                rec.even_cf = std::move(cf);
            } else {
                Int vp = boost::multiprecision::abs(value.numerator());
                Int vq = value.denominator() % vp;
                bool alternate = vp == rec.determinant &&
                                 detail::denominator_class(vp, rec.fraction.denominator())
                                         .count(vq) > 0;
                if (!alternate)
                    throw InvariantError(row, "even_cf override evaluates to " + value.str() +
                                                  ", which does not present " +
                                                  rec.fraction.str());
                rec.even_cf = std::move(cf);
                rec.alternate_representative = true;
            }
        }
        records.push_back(std::move(rec));
    }
    if (!header_seen && !records.empty())
        throw ParseError(1, 1, "missing header");
    return records;
}

/// One row of the survey report.
struct SurveyRow {
    std::string name;
    int crossings = 0;
    Fraction fraction;
    OEWord word;
    bool accepted = false;
    std::optional<SliceDepthVerdict> verdict;  // absent for errored records
    std::optional<std::string> error;
};

struct SurveyReport {
    std::vector<SurveyRow> rows;                // sorted by (crossings, name index)
    std::vector<std::string> qualifying;        // names of accepted rows, same order
    std::size_t count = 0;
    std::optional<std::string> warning;
};

/// Known size of the census the bundled table reproduces: 2-bridge
/// knots with at most 10 crossings (all of which have determinant
/// greater than 1). A mismatch is reported as a warning, not an error.
inline constexpr std::size_t kExpectedCensusSize = 95;

/// Runs the reduction-condition pipeline with twist n = 2 over every
/// record. A record's even_cf override contributes its own word; the
/// knot additionally goes through the representative search. Errors
/// are collected per record and do not abort the survey.
inline SurveyReport run_survey(const std::vector<KnotRecord>& records) {
    SurveyReport report;
    for (const KnotRecord& rec : records) {
        SurveyRow row;
        row.name = rec.name;
        row.crossings = rec.crossings;
        row.fraction = rec.fraction;
        try {
            bool accepted = false;
            if (rec.even_cf) {
                row.word = build_word(*rec.even_cf);
                accepted = reduces(row.word).accepted;
            }
            TwoBridgeWordCondition cond = two_bridge_word_condition(rec.fraction);
            if (!rec.even_cf) row.word = cond.word;
            accepted = accepted || cond.accepted;
            row.accepted = accepted;
            row.verdict = detail::two_bridge_verdict(2, accepted, rec.determinant);
        } catch (const Error& e) {
            row.accepted = false;
            row.error = e.what();
        }
        report.rows.push_back(std::move(row));
    }
    std::stable_sort(report.rows.begin(), report.rows.end(),
                     [](const SurveyRow& a, const SurveyRow& b) {
                         return std::tuple(a.crossings, detail::name_index(a.name)) <
                                std::tuple(b.crossings, detail::name_index(b.name));
                     });
    for (const SurveyRow& row : report.rows)
        if (row.accepted) report.qualifying.push_back(row.name);
    report.count = report.qualifying.size();
    if (records.size() != kExpectedCensusSize)
        report.warning = "table has " + std::to_string(records.size()) +
                         " records; the census of 2-bridge knots with at most 10 crossings has " +
                         std::to_string(kExpectedCensusSize);
    return report;
}

enum class ReportFormat { Text, Json, Csv };

namespace detail {

inline nlohmann::ordered_json report_to_json(const SurveyReport& report) {
    nlohmann::ordered_json j;
    j["count"] = report.count;
    j["qualifying"] = report.qualifying;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const SurveyRow& r : report.rows) {
        nlohmann::ordered_json row;
        row["name"] = r.name;
        row["crossings"] = r.crossings;
        row["p"] = r.fraction.numerator().convert_to<long long>();
        row["q"] = r.fraction.denominator().convert_to<long long>();
        row["word"] = r.word;
        row["accepted"] = r.accepted;
        if (r.verdict && r.verdict->lower)
            row["lower"] = *r.verdict->lower;
        else
            row["lower"] = nullptr;
        if (r.verdict && r.verdict->upper)
            row["upper"] = *r.verdict->upper;
        else
            row["upper"] = nullptr;
        row["exact"] = r.verdict ? r.verdict->exact : false;
        if (r.error) row["error"] = *r.error;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

}  // namespace detail

/// Deterministic serialization of a survey report.
inline std::string emit_report(const SurveyReport& report, ReportFormat format) {
    std::ostringstream out;
    switch (format) {
        case ReportFormat::Json:
            out << detail::report_to_json(report).dump(2) << "\n";
            break;
        case ReportFormat::Csv: {
            out << "name,crossings,p,q,word,accepted,lower,upper,exact\n";
            for (const SurveyRow& r : report.rows) {
                out << r.name << ',' << r.crossings << ',' << r.fraction.numerator() << ','
                    << r.fraction.denominator() << ',' << r.word << ','
                    << (r.accepted ? "true" : "false") << ',';
                if (r.verdict && r.verdict->lower) out << *r.verdict->lower;
                out << ',';
                if (r.verdict && r.verdict->upper) out << *r.verdict->upper;
                out << ',' << ((r.verdict && r.verdict->exact) ? "true" : "false") << '\n';
            }
            break;
        }
        case ReportFormat::Text: {
            std::size_t name_w = 4, frac_w = 8, word_w = 4;
            for (const SurveyRow& r : report.rows) {
                name_w = std::max(name_w, r.name.size());
                frac_w = std::max(frac_w, r.fraction.str().size());
                word_w = std::max(word_w, r.word.size());
            }
            auto pad = [&out](const std::string& s, std::size_t w) {
                out << s << std::string(w - std::min(w, s.size()) + 2, ' ');
            };
            pad("name", name_w);
            pad("fraction", frac_w);
            pad("word", word_w);
            out << "accepted  lower  upper  exact\n";
            for (const SurveyRow& r : report.rows) {
                pad(r.name, name_w);
                pad(r.fraction.str(), frac_w);
                pad(r.word, word_w);
                out << (r.accepted ? "yes" : "no ") << "       ";
                out << (r.verdict && r.verdict->lower ? std::to_string(*r.verdict->lower) : "-")
                    << "      ";
                out << (r.verdict && r.verdict->upper ? std::to_string(*r.verdict->upper) : "-")
                    << "      ";
                out << ((r.verdict && r.verdict->exact) ? "yes" : "no");
                if (r.error) out << "  error: " << *r.error;
                out << '\n';
            }
            out << "\nqualifying (" << report.count << "):";
            for (const std::string& name : report.qualifying) out << ' ' << name;
            out << '\n';
            break;
        }
    }
    return out.str();
}

}  // namespace slicedepth
