#include "loewner/table.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace loewner {

void Table::add_row(std::vector<std::string> row) {
    if (row.size() != columns.size())
        throw std::logic_error("Table::add_row: column count mismatch");
    rows.push_back(std::move(row));
}

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    if (name == "text") return OutputFormat::text;
    throw std::invalid_argument("unknown output format '" + name + "' (want csv|json|text)");
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_int(long long v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld", v);
    return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

}  // namespace

std::string to_csv(const Table& t) {
    std::string out;
    for (const auto& [k, v] : t.meta) out += "# " + k + "=" + v + "\n";
    for (size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(t.columns[i]);
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += csv_escape(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& t) {
    std::string out = "{\n  \"meta\": {";
    for (size_t i = 0; i < t.meta.size(); ++i) {
        out += i ? ",\n    " : "\n    ";
        out += "\"" + json_escape(t.meta[i].first) + "\": \"" + json_escape(t.meta[i].second) + "\"";
    }
    out += "\n  },\n  \"columns\": [";
    for (size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ", ";
        out += "\"" + json_escape(t.columns[i]) + "\"";
    }
    out += "],\n  \"rows\": [";
    for (size_t r = 0; r < t.rows.size(); ++r) {
        out += r ? ",\n    " : "\n    ";
        out += "[";
        for (size_t i = 0; i < t.rows[r].size(); ++i) {
            if (i) out += ", ";
            out += "\"" + json_escape(t.rows[r][i]) + "\"";
        }
        out += "]";
    }
    out += "\n  ]\n}\n";
    return out;
}

std::string to_text(const Table& t) {
    std::vector<size_t> width(t.columns.size());
    for (size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
    for (const auto& row : t.rows)
        for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    std::string out;
    for (const auto& [k, v] : t.meta) out += "# " + k + " = " + v + "\n";
    auto emit_row = [&](const std::vector<std::string>& row) {
        for (size_t i = 0; i < row.size(); ++i) {
            out += row[i];
            if (i + 1 < row.size()) out += std::string(width[i] - row[i].size() + 2, ' ');
        }
        out += '\n';
    };
    emit_row(t.columns);
    for (const auto& row : t.rows) emit_row(row);
    return out;
}

std::string render(const Table& t, OutputFormat f) {
    switch (f) {
        case OutputFormat::csv: return to_csv(t);
        case OutputFormat::json: return to_json(t);
        case OutputFormat::text: return to_text(t);
    }
    throw std::logic_error("render: bad format");
}

void write_artifact(const std::string& path, const std::string& content) {
    if (path == "-" || path.empty()) {
        std::cout << content;
        return;
    }
    std::string full = path;
    if (path.front() != '/') {
        if (const char* dir = std::getenv("LOEWNER_OUT_DIR"); dir && *dir)
            full = std::string(dir) + "/" + path;
    }
    std::ofstream out(full, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + full + "'");
    out << content;
    if (!out) throw std::runtime_error("write failed for output file '" + full + "'");
}

}  // namespace loewner
