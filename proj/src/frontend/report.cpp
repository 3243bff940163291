// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#include "frontend/report.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <vector>

namespace compdesign::frontend {

namespace {

std::string fixed4(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", x);
    return buf;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// Fixed-width rows, columns separated by one space; trailing blanks dropped.
class TextTable {
public:
    explicit TextTable(std::vector<std::size_t> widths) : widths_(std::move(widths)) {}

    void row(const std::vector<std::string>& cells, std::size_t bar_after = 0) {
        std::string line;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) line += (bar_after != 0 && i == bar_after) ? " | " : " ";
            line += pad(cells[i], i < widths_.size() ? widths_[i] : 0);
        }
        line.erase(line.find_last_not_of(' ') + 1);
        out_ << line << '\n';
    }

    void rule(const std::vector<std::string>& header, std::size_t bar_after = 0) {
        std::vector<std::string> dashes;
        for (const auto& h : header) dashes.emplace_back(h.size(), '-');
        row(dashes, bar_after);
    }

    std::string str() const { return out_.str(); }

private:
    std::vector<std::size_t> widths_;
    std::ostringstream out_;
};

std::string scalar_line(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "[1] %.4g\n", x);
    return buf;
}

std::string cell(const json& v) {
    if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
    if (v.is_number()) return shortest(v.get<double>());
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_string()) return v.get<std::string>();
    return "NA";
}

std::string table_effectsize_tte(const json& doc) {
    const std::vector<std::string> head{"Effect measure", "Effect value", "Group measure", "Reference", "Treated"};
    TextTable t({14, 12, 13, 9, 7});
    t.row(head, 2);
    t.rule(head, 2);
    const json& c = doc["control"];
    const json& e = doc["treated"];
    auto v = [](const json& x) { return fixed4(x.get<double>()); };
    t.row({"gAHR", v(doc["gahr"]), "", "", ""}, 2);
    t.row({"AHR", v(doc["ahr"]), "", "", ""}, 2);
    t.row({"RMST ratio", v(doc["rmst_ratio"]), "RMST", v(c["rmst"]), v(e["rmst"])}, 2);
    t.row({"Median ratio", v(doc["median_ratio"]), "Median", v(c["median"]), v(e["median"])}, 2);
    t.row({"", "", "Prob. E1", v(c["prob_e1"]), v(e["prob_e1"])}, 2);
    t.row({"", "", "Prob. E2", v(c["prob_e2"]), v(e["prob_e2"])}, 2);
    t.row({"", "", "Prob. CE", v(c["prob_ce"]), v(e["prob_ce"])}, 2);
    std::string out = t.str();
    for (const char* arm : {"control", "treated"}) {
        if (doc[arm]["median_beyond_followup"].get<bool>()) {
            out += std::string("Note: the ") + (arm[0] == 'c' ? "reference" : "treated") +
                   " arm median lies beyond the follow-up time.\n";
        }
    }
    return out;
}

std::string table_samplesize_tte(const json& doc) {
    const std::vector<std::string> head{"Endpoint", "Total sample size"};
    TextTable t({18, 17});
    t.row(head);
    t.rule(head);
    t.row({"Endpoint 1", cell(doc["endpoint1"])});
    t.row({"Endpoint 2", cell(doc["endpoint2"])});
    t.row({"Composite endpoint", cell(doc["composite"])});
    return t.str();
}

std::string table_curves_tte(const json& doc) {
    const std::vector<std::string> head{"Time", "S* reference", "S* treated", "HR*"};
    TextTable t({10, 12, 10, 6});
    t.row(head);
    t.rule(head);
    const json& time = doc["time"];
    for (std::size_t i = 0; i < time.size(); ++i) {
        t.row({fixed4(time[i]), fixed4(doc["survival"]["control"][i]), fixed4(doc["survival"]["treated"][i]),
               fixed4(doc["hr_star"][i])});
    }
    const std::vector<std::string> shead{"Correlation", "ARE", "Composite sample size"};
    TextTable s({11, 7, 21});
    s.row(shead);
    s.rule(shead);
    const json& sens = doc["sensitivity"];
    for (std::size_t i = 0; i < sens["rho"].size(); ++i) {
        s.row({fixed4(sens["rho"][i]), fixed4(sens["are"][i]), cell(sens["n_composite"][i])});
    }
    return t.str() + "\n" + s.str();
}

std::string table_effectsize_cbe(const json& doc) {
    const std::vector<std::string> head{"Endpoint", "Reference", "Treated"};
    TextTable t({18, 9, 7});
    t.row(head);
    t.rule(head);
    const json& c = doc["control"];
    const json& e = doc["treated"];
    t.row({"Endpoint 1", fixed4(c["e1"]), fixed4(e["e1"])});
    t.row({"Endpoint 2", fixed4(c["e2"]), fixed4(e["e2"])});
    t.row({"Composite endpoint", fixed4(c["composite"]), fixed4(e["composite"])});
    return t.str() + "Effect (" + doc["effm_ce"].get<std::string>() + "): " + fixed4(doc["effect"]) + "\n";
}

std::string table_samplesize_cbe(const json& doc) {
    TextTable t({19, 0});
    t.row({"Sample size per arm", cell(doc["per_arm"])});
    t.row({"Total sample size", cell(doc["total"])});
    return t.str();
}

std::string table_corr_bounds(const json& doc) {
    const std::vector<std::string> head{"Lower bound", "Upper bound"};
    TextTable t({11, 11});
    t.row(head);
    t.rule(head);
    t.row({fixed4(doc["lower"]), fixed4(doc["upper"])});
    return t.str();
}

// Columns right-aligned to their widest entry, like a printed data frame.
std::string table_dataset(const json& doc) {
    const json& cols = doc["columns"];
    const json& rows = doc["rows"];
    std::vector<std::vector<std::string>> cells;
    cells.emplace_back();
    for (const auto& c : cols) cells.back().push_back(c.get<std::string>());
    for (const auto& r : rows) {
        cells.emplace_back();
        for (const auto& v : r) {
            if (v.is_number_float()) {
                char buf[32];
                std::snprintf(buf, sizeof(buf), "%.7f", v.get<double>());
                cells.back().emplace_back(buf);
            } else {
                cells.back().push_back(cell(v));
            }
        }
    }
    std::vector<std::size_t> widths(cols.size(), 0);
    for (const auto& r : cells) {
        for (std::size_t i = 0; i < r.size(); ++i) widths[i] = std::max(widths[i], r[i].size());
    }
    const std::size_t index_width = std::to_string(rows.size()).size();
    std::ostringstream out;
    for (std::size_t r = 0; r < cells.size(); ++r) {
        const std::string index = r == 0 ? "" : std::to_string(r);
        out << std::string(index_width - index.size(), ' ') << index;
        for (std::size_t i = 0; i < cells[r].size(); ++i) {
            out << ' ' << std::string(widths[i] - cells[r][i].size(), ' ') << cells[r][i];
        }
        out << '\n';
    }
    return out.str();
}

void flatten(const json& doc, const std::string& prefix, std::ostringstream& out) {
    for (const auto& [key, value] : doc.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) {
            flatten(value, name, out);
        } else if (!value.is_array()) {
            out << name << ',' << cell(value) << '\n';
        }
    }
}

std::string csv_rows(const std::vector<std::string>& header, const std::vector<const json*>& columns) {
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    const std::size_t n = columns.empty() ? 0 : columns.front()->size();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << cell((*columns[i])[r]);
        out << '\n';
    }
    return out.str();
}

std::string csv(Operation op, const json& doc, CurvesPanel panel) {
    if (op == Operation::SimulateTTE || op == Operation::SimulateCBE) {
        std::ostringstream out;
        const json& cols = doc["columns"];
        for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i].get<std::string>();
        out << '\n';
        for (const auto& r : doc["rows"]) {
            for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << cell(r[i]);
            out << '\n';
        }
        return out.str();
    }
    if (op == Operation::CurvesTTE) {
        if (panel == CurvesPanel::Sensitivity) {
            const json& s = doc["sensitivity"];
            return csv_rows({"rho", "are", "n_composite"}, {&s["rho"], &s["are"], &s["n_composite"]});
        }
        return csv_rows({"time", "s1_control", "s1_treated", "s2_control", "s2_treated", "survival_control",
                         "survival_treated", "hr_star"},
                        {&doc["time"], &doc["s1"]["control"], &doc["s1"]["treated"], &doc["s2"]["control"],
                         &doc["s2"]["treated"], &doc["survival"]["control"], &doc["survival"]["treated"],
                         &doc["hr_star"]});
    }
    std::ostringstream out;
    out << "field,value\n";
    flatten(doc, "", out);
    return out.str();
}

std::string table(Operation op, const json& doc) {
    switch (op) {
    case Operation::EffectsizeTTE: return table_effectsize_tte(doc);
    case Operation::SamplesizeTTE: return table_samplesize_tte(doc);
    case Operation::AreTTE: return scalar_line(doc["are"]);
    case Operation::CurvesTTE: return table_curves_tte(doc);
    case Operation::ProbCBE: return scalar_line(doc["prob"]);
    case Operation::CorrBounds: return table_corr_bounds(doc);
    case Operation::EffectsizeCBE: return table_effectsize_cbe(doc);
    case Operation::SamplesizeCBE: return table_samplesize_cbe(doc);
    case Operation::AreCBE: return scalar_line(doc["are"]);
    case Operation::SimulateTTE:
    case Operation::SimulateCBE: return table_dataset(doc);
    }
    return doc.dump(2) + "\n";
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
    if (name == "table") return OutputFormat::Table;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    return std::nullopt;
}

std::optional<CurvesPanel> parse_curves_panel(std::string_view name) {
    if (name == "survival") return CurvesPanel::Survival;
    if (name == "sensitivity") return CurvesPanel::Sensitivity;
    return std::nullopt;
}

std::string shortest(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string render(Operation op, const json& doc, OutputFormat format, CurvesPanel panel) {
    switch (format) {
    case OutputFormat::Table: return table(op, doc);
    case OutputFormat::Json: return doc.dump(2) + "\n";
    case OutputFormat::Csv: return csv(op, doc, panel);
    }
    return {};
}

}  // namespace compdesign::frontend
