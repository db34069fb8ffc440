#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "sk2/maass.hpp"
#include "sk2/qseries.hpp"

namespace sk2 {

// FNV-1a 64-bit content hash, 16 hex digits.
std::string fnv1a64(std::string_view payload);

// siegel-v1: one header line
//   siegel-v1 weight=K detmax4=D box=B kind={cusp|eis} hash=H
// then, for kind=eis, `a0 num den` and `r1 c num den` rows, then `n r m num
// den` rows in (det4, n, r, m) order. H is the hash of everything after the
// header line. Loading re-hashes and re-validates; any mismatch or parse
// failure throws CacheError.
void write_siegel_cache(const SiegelExpansion& F, const std::filesystem::path& path);
SiegelExpansion read_siegel_cache(const std::filesystem::path& path);

// qseries-v1: header `qseries-v1 label=L weight=K precision=N hash=H` then
// `n num den` rows for n = 0..N.
struct QSeriesFile {
    std::string label;
    int weight = 0;
    std::vector<Rat> coeffs;  // index n = 0..precision
};
void write_qseries_cache(const QSeriesFile& f, const std::filesystem::path& path);
QSeriesFile read_qseries_cache(const std::filesystem::path& path);

}  // namespace sk2
