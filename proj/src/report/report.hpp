#pragma once

// Verification reports: a flat list of checks, each carrying the claim, the
// source anchor, the computed value and a pass flag.  JSON serialization is
// deterministic (fixed key order, no timing data) so reports are diffable.

#include <map>
#include <string>
#include <vector>

namespace legv::rep {

struct Check {
    std::string claim;
    std::string anchor;
    std::string computed;
    bool pass = false;
    std::string margin; // optional: slack for inequality checks
};

class VerificationReport {
public:
    explicit VerificationReport(std::string theorem_id, long precision = 0)
        : theorem_(std::move(theorem_id)), precision_(precision) {}

    void add(bool pass, const std::string& claim, const std::string& anchor,
             const std::string& computed, const std::string& margin = "");
    void set_fixture_hash(const std::string& name, const std::string& sha256);
    void merge(const VerificationReport& other);

    bool pass() const;
    const std::string& theorem() const { return theorem_; }
    long precision() const { return precision_; }
    const std::vector<Check>& checks() const { return checks_; }
    const std::map<std::string, std::string>& fixture_hashes() const { return hashes_; }
    // First failing check, empty when everything passed.
    std::string first_failure() const;

    std::string to_json() const;
    std::string summary() const;

private:
    std::string theorem_;
    long precision_;
    std::vector<Check> checks_;
    std::map<std::string, std::string> hashes_;
};

// SHA-256 digest as a lowercase hex string (used for fixture hashes).
std::string sha256_hex(const std::string& data);

} // namespace legv::rep
