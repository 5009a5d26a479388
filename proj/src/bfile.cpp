#include "chebseq/bfile.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace chebseq {

namespace {

std::string issues_to_string(const std::string& what, const std::vector<BFileIssue>& issues) {
    std::ostringstream out;
    out << what;
    for (const auto& issue : issues) out << "\n  line " << issue.line << ": " << issue.message;
    return out.str();
}

bool parse_integer(const std::string& token, Integer& out) {
    if (token.empty()) return false;
    return mpz_set_str(out.get_mpz_t(), token.c_str(), 10) == 0;
}

}  // namespace

BFileError::BFileError(std::string what, std::vector<BFileIssue> issues)
    : std::runtime_error(issues_to_string(what, issues)), issues_(std::move(issues)) {}

BFile parse_bfile(std::istream& in, std::string id) {
    BFile b;
    b.id = std::move(id);
    std::vector<BFileIssue> issues;
    std::string line;
    int lineno = 0;
    bool have_prev = false;
    long long prev_index = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (line[0] == '#') {
            b.comments.push_back(line);
            continue;
        }
        std::istringstream ls(line);
        std::string tok_index, tok_value, extra;
        ls >> tok_index >> tok_value;
        if (tok_value.empty()) {
            issues.push_back({lineno, "expected \"index value\""});
            continue;
        }
        if (ls >> extra) {
            issues.push_back({lineno, "trailing token: " + extra});
            continue;
        }
        Integer index_big, value;
        if (!parse_integer(tok_index, index_big) || !index_big.fits_slong_p()) {
            issues.push_back({lineno, "bad index: " + tok_index});
            continue;
        }
        if (!parse_integer(tok_value, value)) {
            issues.push_back({lineno, "bad value: " + tok_value});
            continue;
        }
        long long index = index_big.get_si();
        if (have_prev && index == prev_index) {
            issues.push_back({lineno, "duplicate index " + std::to_string(index)});
            continue;
        }
        if (have_prev && index < prev_index) {
            issues.push_back({lineno, "decreasing index " + std::to_string(index)});
            continue;
        }
        prev_index = index;
        have_prev = true;
        b.entries.emplace_back(index, std::move(value));
    }
    if (!issues.empty()) throw BFileError("b-file parse failed", std::move(issues));
    return b;
}

BFile parse_bfile_text(const std::string& text, std::string id) {
    std::istringstream in(text);
    return parse_bfile(in, std::move(id));
}

BFile load_bfile(const std::string& path, std::string id) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open b-file: " + path);
    return parse_bfile(in, std::move(id));
}

std::string serialize_bfile(const BFile& b) {
    std::ostringstream out;
    for (const auto& c : b.comments) out << c << "\n";
    for (const auto& [index, value] : b.entries) out << index << " " << value.get_str() << "\n";
    return out.str();
}

CrossCheckReport cross_check(const std::vector<std::pair<long long, Integer>>& generated,
                             const BFile& bfile, long long lo, long long hi) {
    if (hi < lo) throw std::invalid_argument("cross_check: empty index range");
    std::map<long long, const Integer*> file_values;
    for (const auto& [index, value] : bfile.entries)
        if (index >= lo && index <= hi) file_values[index] = &value;

    CrossCheckReport report;
    std::map<long long, const Integer*> gen_values;
    for (const auto& [index, value] : generated) {
        if (index < lo || index > hi) continue;
        gen_values[index] = &value;
        auto it = file_values.find(index);
        if (it == file_values.end()) {
            report.missing_in_bfile.push_back(index);
        } else if (*it->second != value) {
            report.mismatches.push_back({index, *it->second, value});
        }
    }
    for (const auto& [index, value] : file_values)
        if (!gen_values.count(index)) report.missing_in_generated.push_back(index);
    return report;
}

BFile fetch_bfile(const std::string& id, const FetchHook& fetch) {
    if (!fetch) throw std::invalid_argument("fetch_bfile: no hook provided");
    return parse_bfile_text(fetch(id), id);
}

}  // namespace chebseq
