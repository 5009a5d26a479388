#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "chebseq/integer.hpp"

namespace chebseq {

/// OEIS b-file: optional leading '#' comment lines, then "index value"
/// pairs with strictly increasing indices, LF line endings.
struct BFile {
    std::string id;  // e.g. "A002315"; informational
    std::vector<std::string> comments;
    std::vector<std::pair<long long, Integer>> entries;
};

struct BFileIssue {
    int line = 0;
    std::string message;
};

class BFileError : public std::runtime_error {
public:
    BFileError(std::string what, std::vector<BFileIssue> issues);
    const std::vector<BFileIssue>& issues() const { return issues_; }

private:
    std::vector<BFileIssue> issues_;
};

/// Parse; throws BFileError listing every malformed line (with numbers),
/// duplicate index, or decreasing index.
BFile parse_bfile(std::istream& in, std::string id = {});
BFile parse_bfile_text(const std::string& text, std::string id = {});
BFile load_bfile(const std::string& path, std::string id = {});

/// Inverse of parsing for canonical files (all comments leading).
std::string serialize_bfile(const BFile& b);

struct CrossCheckMismatch {
    long long index;
    Integer expected;  // b-file value
    Integer got;       // generated value
};

struct CrossCheckReport {
    std::vector<CrossCheckMismatch> mismatches;
    std::vector<long long> missing_in_bfile;     // generated but absent from the file
    std::vector<long long> missing_in_generated; // in the file but not generated
    bool pass() const {
        return mismatches.empty() && missing_in_bfile.empty() && missing_in_generated.empty();
    }
};

/// Compare generated (index, value) pairs against the b-file over
/// [lo, hi]; coverage gaps are reported in both directions.
CrossCheckReport cross_check(const std::vector<std::pair<long long, Integer>>& generated,
                             const BFile& bfile, long long lo, long long hi);

/// Hook for refreshing fixtures from an external source; the tests never
/// exercise it (fixtures are vendored).
using FetchHook = std::function<std::string(const std::string& id)>;
BFile fetch_bfile(const std::string& id, const FetchHook& fetch);

}  // namespace chebseq
