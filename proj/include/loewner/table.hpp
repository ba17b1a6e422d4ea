#ifndef LOEWNER_TABLE_HPP
#define LOEWNER_TABLE_HPP

#include <string>
#include <vector>

namespace loewner {

// Row-major string table; all numeric formatting happens before insertion so
// emission is bit-stable across runs.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> meta;  // echoed config, hash, notes

    void add_row(std::vector<std::string> row);
};

enum class OutputFormat { csv, json, text };

OutputFormat parse_format(const std::string& name);

// Round-trip-exact double formatting (17 significant digits, C locale).
std::string fmt_double(double v);
std::string fmt_int(long long v);

std::string to_csv(const Table& t);
std::string to_json(const Table& t);
std::string to_text(const Table& t);
std::string render(const Table& t, OutputFormat f);

// Writes content to path ("-" means stdout); surfaces I/O failures with the
// path in the message.  Relative paths honor the LOEWNER_OUT_DIR override.
void write_artifact(const std::string& path, const std::string& content);

}  // namespace loewner

#endif
