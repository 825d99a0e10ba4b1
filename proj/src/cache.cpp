#include "omex/cache.hpp"

#include <unistd.h>

#include <cstdlib>
#include <cstring>
#include <fstream>

namespace omex {

namespace {

constexpr char kMagic[8] = {'O', 'M', 'E', 'X', 'T', 'A', 'B', '1'};

std::uint64_t fnv1a64(const std::uint8_t* data, std::size_t len) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= data[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

template <typename T>
void put(std::vector<std::uint8_t>& buf, T v) {
    // little-endian fixed-width fields
    for (std::size_t i = 0; i < sizeof(T); ++i)
        buf.push_back(static_cast<std::uint8_t>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xff));
}

struct Reader {
    const std::uint8_t* data;
    std::size_t size;
    std::size_t pos = 0;

    template <typename T>
    T get() {
        if (pos + sizeof(T) > size) throw CorruptCache("cache file truncated");
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < sizeof(T); ++i)
            v |= static_cast<std::uint64_t>(data[pos + i]) << (8 * i);
        pos += sizeof(T);
        return static_cast<T>(v);
    }

    std::string get_string(std::size_t len) {
        if (pos + len > size) throw CorruptCache("cache file truncated");
        std::string s(reinterpret_cast<const char*>(data + pos), len);
        pos += len;
        return s;
    }
};

std::vector<std::uint8_t> serialize(const CacheEntry& entry) {
    std::vector<std::uint8_t> buf;
    buf.insert(buf.end(), kMagic, kMagic + sizeof(kMagic));
    put<std::uint32_t>(buf, entry.format_version);
    put<std::int64_t>(buf, entry.key.r);
    put<std::int64_t>(buf, entry.key.T);
    put<std::uint8_t>(buf, static_cast<std::uint8_t>(entry.key.mode));
    put<std::int32_t>(buf, entry.key.k);
    put<std::uint64_t>(buf, entry.payload.size());
    for (const std::string& coeff : entry.payload) {
        put<std::uint32_t>(buf, static_cast<std::uint32_t>(coeff.size()));
        buf.insert(buf.end(), coeff.begin(), coeff.end());
    }
    put<std::uint64_t>(buf, fnv1a64(buf.data(), buf.size()));
    return buf;
}

}  // namespace

std::string CacheKey::file_name() const {
    std::string name = "sigma-r" + std::to_string(r) + "-T" + std::to_string(T);
    name += (mode == CacheMode::exact) ? "-exact" : ("-mod2e" + std::to_string(k));
    return name + ".omextab";
}

void cache_store(const std::filesystem::path& dir, const CacheEntry& entry) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create cache directory " + dir.string() + ": " + ec.message());

    const auto buf = serialize(entry);
    const auto final_path = dir / entry.key.file_name();
    const auto tmp_path = final_path.string() + ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp_path + " for writing");
        out.write(reinterpret_cast<const char*>(buf.data()),
                  static_cast<std::streamsize>(buf.size()));
        if (!out) throw IoError("short write to " + tmp_path);
    }
    std::filesystem::rename(tmp_path, final_path, ec);
    if (ec) throw IoError("cannot move cache file into place: " + ec.message());
}

CacheEntry cache_load_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError("cannot open cache file " + file.string());
    std::vector<std::uint8_t> buf((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());

    if (buf.size() < sizeof(kMagic) + sizeof(std::uint64_t)) throw CorruptCache("cache file truncated");
    if (std::memcmp(buf.data(), kMagic, sizeof(kMagic)) != 0)
        throw CorruptCache("bad magic in cache file " + file.string());

    const std::size_t body_len = buf.size() - sizeof(std::uint64_t);
    Reader checksum_reader{buf.data(), buf.size(), body_len};
    const std::uint64_t stored = checksum_reader.get<std::uint64_t>();
    if (stored != fnv1a64(buf.data(), body_len))
        throw CorruptCache("checksum mismatch in cache file " + file.string());

    Reader r{buf.data(), body_len, sizeof(kMagic)};
    CacheEntry entry;
    entry.format_version = r.get<std::uint32_t>();
    if (entry.format_version != kCacheFormatVersion)
        throw VersionMismatch("cache file " + file.string() + " has format_version " +
                              std::to_string(entry.format_version) + ", expected " +
                              std::to_string(kCacheFormatVersion));
    entry.key.r = r.get<std::int64_t>();
    entry.key.T = r.get<std::int64_t>();
    entry.key.mode = static_cast<CacheMode>(r.get<std::uint8_t>());
    entry.key.k = r.get<std::int32_t>();
    const std::uint64_t count = r.get<std::uint64_t>();
    if (count != static_cast<std::uint64_t>(entry.key.T) + 1)
        throw CorruptCache("payload length disagrees with key in " + file.string());
    entry.payload.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        const auto len = r.get<std::uint32_t>();
        entry.payload.push_back(r.get_string(len));
    }
    if (r.pos != body_len) throw CorruptCache("trailing bytes in cache file " + file.string());
    return entry;
}

std::optional<CacheEntry> cache_load(const std::filesystem::path& dir, const CacheKey& key) {
    const auto path = dir / key.file_name();
    if (!std::filesystem::exists(path)) return std::nullopt;
    CacheEntry entry = cache_load_file(path);
    if (!(entry.key == key)) throw CorruptCache("cache key mismatch in " + path.string());
    return entry;
}

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("OMEX_CACHE_DIR"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "omex";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "omex";
    return std::filesystem::temp_directory_path() / "omex-cache";
}

}  // namespace omex
