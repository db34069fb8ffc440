#include "sk2/cache.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>

#include "sk2/errors.hpp"

namespace sk2 {

std::string fnv1a64(std::string_view payload) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

std::string rat_pair(const Rat& x) {
    return x.get_num().get_str() + " " + x.get_den().get_str();
}

Rat parse_rat(std::istringstream& in, const char* what) {
    std::string num, den;
    if (!(in >> num >> den)) throw CacheError(std::string(what) + ": truncated rational");
    try {
        Rat r{Int(num), Int(den)};
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw CacheError(std::string(what) + ": malformed rational");
    }
}

std::map<std::string, std::string> parse_header(const std::string& line, const char* magic) {
    std::istringstream in(line);
    std::string tag;
    in >> tag;
    if (tag != magic) throw CacheError(std::string("cache: expected ") + magic + " header");
    std::map<std::string, std::string> fields;
    std::string kv;
    while (in >> kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw CacheError("cache: malformed header field " + kv);
        fields[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return fields;
}

const std::string& field(const std::map<std::string, std::string>& fields, const std::string& key) {
    auto it = fields.find(key);
    if (it == fields.end()) throw CacheError("cache: missing header field " + key);
    return it->second;
}

long parse_long(const std::string& s, const char* what) {
    try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw CacheError(std::string("cache: bad integer in ") + what);
    }
}

void write_file(const std::filesystem::path& path, const std::string& header,
                const std::string& payload) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cache: cannot open " + path.string() + " for writing");
    out << header << "\n" << payload;
    if (!out) throw CacheError("cache: write failed for " + path.string());
}

// Returns the header line and the hash-validated payload.
std::pair<std::string, std::string> read_file(const std::filesystem::path& path,
                                              const char* magic) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheError("cache: cannot open " + path.string());
    std::string header;
    if (!std::getline(in, header)) throw CacheError("cache: empty file " + path.string());
    std::stringstream rest;
    rest << in.rdbuf();
    std::string payload = rest.str();
    auto fields = parse_header(header, magic);
    if (fnv1a64(payload) != field(fields, "hash"))
        throw CacheError("cache: content hash mismatch in " + path.string());
    return {header, payload};
}

}  // namespace

void write_siegel_cache(const SiegelExpansion& F, const std::filesystem::path& path) {
    std::ostringstream payload;
    if (F.has_singular) {
        payload << "a0 " << rat_pair(F.a0) << "\n";
        for (size_t c = 1; c < F.rank1.size(); ++c)
            payload << "r1 " << c << " " << rat_pair(F.rank1[c]) << "\n";
    }
    for (const auto& [key, val] : F.coeffs)
        payload << key.n << " " << key.r << " " << key.m << " " << rat_pair(val) << "\n";
    std::string body = payload.str();
    std::ostringstream header;
    header << "siegel-v1 weight=" << F.weight << " detmax4=" << F.detmax4 << " box=" << F.box
           << " kind=" << (F.has_singular ? "eis" : "cusp") << " hash=" << fnv1a64(body);
    write_file(path, header.str(), body);
}

SiegelExpansion read_siegel_cache(const std::filesystem::path& path) {
    auto [header, payload] = read_file(path, "siegel-v1");
    auto fields = parse_header(header, "siegel-v1");
    SiegelExpansion F;
    F.weight = static_cast<int>(parse_long(field(fields, "weight"), "weight"));
    F.detmax4 = parse_long(field(fields, "detmax4"), "detmax4");
    F.box = parse_long(field(fields, "box"), "box");
    const std::string& kind = field(fields, "kind");
    if (kind != "cusp" && kind != "eis") throw CacheError("cache: unknown kind " + kind);
    F.has_singular = kind == "eis";
    std::istringstream lines(payload);
    std::string line;
    std::vector<std::pair<size_t, Rat>> rank1_rows;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        std::istringstream in(line);
        std::string first;
        in >> first;
        if (first == "a0") {
            if (!F.has_singular) throw CacheError("cache: a0 row in a cusp file");
            F.a0 = parse_rat(in, "a0");
        } else if (first == "r1") {
            if (!F.has_singular) throw CacheError("cache: r1 row in a cusp file");
            long c = 0;
            if (!(in >> c) || c < 1) throw CacheError("cache: bad r1 index");
            rank1_rows.emplace_back(static_cast<size_t>(c), parse_rat(in, "r1"));
        } else {
            long n = parse_long(first, "matrix row");
            long r = 0, m = 0;
            if (!(in >> r >> m)) throw CacheError("cache: truncated matrix row");
            F.coeffs.emplace(HalfIntMatrix{n, r, m}, parse_rat(in, "matrix row"));
        }
        std::string extra;
        if (in >> extra) throw CacheError("cache: trailing tokens in row");
    }
    if (F.has_singular) {
        size_t len = 1;
        for (const auto& [c, v] : rank1_rows) len = std::max(len, c + 1);
        F.rank1.assign(len, Rat(0));
        for (const auto& [c, v] : rank1_rows) F.rank1[c] = v;
    }
    // structural re-validation: exactly the canonical keys of the region
    std::vector<HalfIntMatrix> keys = canonical_keys(F.detmax4, F.box);
    if (keys.size() != F.coeffs.size())
        throw CacheError("cache: key set does not match the declared region");
    for (const HalfIntMatrix& key : keys)
        if (F.coeffs.find(key) == F.coeffs.end())
            throw CacheError("cache: missing canonical key in payload");
    return F;
}

void write_qseries_cache(const QSeriesFile& f, const std::filesystem::path& path) {
    if (f.coeffs.empty()) throw std::invalid_argument("write_qseries_cache: empty series");
    if (f.label.empty() || f.label.find(' ') != std::string::npos)
        throw std::invalid_argument("write_qseries_cache: label must be nonempty, no spaces");
    std::ostringstream payload;
    for (size_t n = 0; n < f.coeffs.size(); ++n)
        payload << n << " " << rat_pair(f.coeffs[n]) << "\n";
    std::string body = payload.str();
    std::ostringstream header;
    header << "qseries-v1 label=" << f.label << " weight=" << f.weight
           << " precision=" << f.coeffs.size() - 1 << " hash=" << fnv1a64(body);
    write_file(path, header.str(), body);
}

QSeriesFile read_qseries_cache(const std::filesystem::path& path) {
    auto [header, payload] = read_file(path, "qseries-v1");
    auto fields = parse_header(header, "qseries-v1");
    QSeriesFile f;
    f.label = field(fields, "label");
    f.weight = static_cast<int>(parse_long(field(fields, "weight"), "weight"));
    long precision = parse_long(field(fields, "precision"), "precision");
    if (precision < 0) throw CacheError("cache: negative precision");
    f.coeffs.assign(static_cast<size_t>(precision) + 1, Rat(0));
    std::istringstream lines(payload);
    std::string line;
    long expected = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        std::istringstream in(line);
        long n = 0;
        if (!(in >> n) || n != expected) throw CacheError("cache: qseries rows out of order");
        if (n > precision) throw CacheError("cache: row index beyond precision");
        f.coeffs[static_cast<size_t>(n)] = parse_rat(in, "qseries row");
        ++expected;
    }
    if (expected != precision + 1) throw CacheError("cache: qseries row count mismatch");
    return f;
}

}  // namespace sk2
