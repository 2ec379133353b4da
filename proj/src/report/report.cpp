#include "report/report.hpp"

#include <cstdint>
#include <cstring>
#include <sstream>

#include "json.hpp"

namespace legv::rep {

void VerificationReport::add(bool pass, const std::string& claim, const std::string& anchor,
                             const std::string& computed, const std::string& margin) {
    checks_.push_back({claim, anchor, computed, pass, margin});
}

void VerificationReport::set_fixture_hash(const std::string& name, const std::string& sha) {
    hashes_[name] = sha;
}

void VerificationReport::merge(const VerificationReport& other) {
    for (const auto& c : other.checks_) checks_.push_back(c);
    for (const auto& [k, v] : other.hashes_) hashes_[k] = v;
}

bool VerificationReport::pass() const {
    for (const auto& c : checks_)
        if (!c.pass) return false;
    return true;
}

std::string VerificationReport::first_failure() const {
    for (const auto& c : checks_)
        if (!c.pass) return c.claim;
    return {};
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["theorem"] = theorem_;
    j["precision"] = precision_;
    j["status"] = pass() ? "pass" : "fail";
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks_) {
        nlohmann::ordered_json e;
        e["claim"] = c.claim;
        e["anchor"] = c.anchor;
        e["computed"] = c.computed;
        e["status"] = c.pass ? "pass" : "fail";
        if (!c.margin.empty()) e["margin"] = c.margin;
        j["checks"].push_back(e);
    }
    j["fixture_hashes"] = nlohmann::ordered_json(hashes_);
    return j.dump(2) + "\n";
}

std::string VerificationReport::summary() const {
    std::ostringstream os;
    size_t npass = 0;
    for (const auto& c : checks_)
        if (c.pass) ++npass;
    os << "[" << (pass() ? "PASS" : "FAIL") << "] " << theorem_ << ": " << npass << "/"
       << checks_.size() << " checks";
    if (!pass()) os << " (first failure: " << first_failure() << ")";
    os << "\n";
    for (const auto& c : checks_) {
        os << "  " << (c.pass ? "ok   " : "FAIL ") << c.claim;
        if (!c.computed.empty()) os << "  => " << c.computed;
        if (!c.margin.empty()) os << "  [margin " << c.margin << "]";
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Compact SHA-256

namespace {

struct Sha256 {
    uint32_t h[8] = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                     0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};
    uint64_t len = 0;
    uint8_t buf[64];
    size_t fill = 0;

    static uint32_t rotr(uint32_t x, int n) { return (x >> n) | (x << (32 - n)); }

    void block(const uint8_t* p) {
        static const uint32_t K[64] = {
            0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1,
            0x923f82a4, 0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3,
            0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786,
            0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
            0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147,
            0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13,
            0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
            0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
            0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a,
            0x5b9cca4f, 0x682e6ff3, 0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208,
            0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};
        uint32_t w[64];
        for (int i = 0; i < 16; ++i)
            w[i] = (uint32_t)p[4 * i] << 24 | (uint32_t)p[4 * i + 1] << 16 |
                   (uint32_t)p[4 * i + 2] << 8 | p[4 * i + 3];
        for (int i = 16; i < 64; ++i) {
            uint32_t s0 = rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
            uint32_t s1 = rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
            w[i] = w[i - 16] + s0 + w[i - 7] + s1;
        }
        uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4], f = h[5], g = h[6],
                 hh = h[7];
        for (int i = 0; i < 64; ++i) {
            uint32_t S1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
            uint32_t ch = (e & f) ^ (~e & g);
            uint32_t t1 = hh + S1 + ch + K[i] + w[i];
            uint32_t S0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
            uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
            uint32_t t2 = S0 + maj;
            hh = g; g = f; f = e; e = d + t1; d = c; c = b; b = a; a = t1 + t2;
        }
        h[0] += a; h[1] += b; h[2] += c; h[3] += d;
        h[4] += e; h[5] += f; h[6] += g; h[7] += hh;
    }

    void update(const uint8_t* p, size_t n) {
        len += n;
        while (n > 0) {
            size_t take = std::min(n, (size_t)64 - fill);
            std::memcpy(buf + fill, p, take);
            fill += take;
            p += take;
            n -= take;
            if (fill == 64) {
                block(buf);
                fill = 0;
            }
        }
    }

    void finish(uint8_t out[32]) {
        uint64_t bits = len * 8;
        uint8_t pad = 0x80;
        update(&pad, 1);
        uint8_t zero = 0;
        while (fill != 56) update(&zero, 1);
        uint8_t lenb[8];
        for (int i = 0; i < 8; ++i) lenb[i] = (uint8_t)(bits >> (56 - 8 * i));
        update(lenb, 8);
        for (int i = 0; i < 8; ++i) {
            out[4 * i] = (uint8_t)(h[i] >> 24);
            out[4 * i + 1] = (uint8_t)(h[i] >> 16);
            out[4 * i + 2] = (uint8_t)(h[i] >> 8);
            out[4 * i + 3] = (uint8_t)h[i];
        }
    }
};

} // namespace

std::string sha256_hex(const std::string& data) {
    Sha256 s;
    s.update((const uint8_t*)data.data(), data.size());
    uint8_t out[32];
    s.finish(out);
    static const char* hex = "0123456789abcdef";
    std::string r;
    r.reserve(64);
    for (uint8_t b : out) {
        r.push_back(hex[b >> 4]);
        r.push_back(hex[b & 15]);
    }
    return r;
}

} // namespace legv::rep
