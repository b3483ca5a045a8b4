#include "nhq/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

namespace nhq {

namespace {

constexpr uint32_t kMagic = 0x4e485142;  // "NHQB"

uint64_t fnv1a(const std::vector<uint8_t>& data) {
    uint64_t h = 1469598103934665603ull;
    for (uint8_t b : data) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(uint64_t v) {
    std::ostringstream os;
    os << std::hex << v;
    return os.str();
}

struct Writer {
    std::vector<uint8_t> buf;
    void u32(uint32_t v) {
        for (int i = 0; i < 4; ++i) buf.push_back((v >> (8 * i)) & 0xff);
    }
    void u64(uint64_t v) {
        for (int i = 0; i < 8; ++i) buf.push_back((v >> (8 * i)) & 0xff);
    }
    void i32(int v) { u32((uint32_t)v); }
    void ints(const std::vector<int>& v) {
        u32((uint32_t)v.size());
        for (int x : v) i32(x);
    }
    void mat(const MatFp& m) {
        u32((uint32_t)m.rows());
        u32((uint32_t)m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) u32(m.at(i, j));
    }
};

struct Reader {
    const std::vector<uint8_t>& buf;
    std::size_t pos = 0;
    uint32_t u32() {
        if (pos + 4 > buf.size()) throw std::runtime_error("truncated blob");
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= (uint32_t)buf[pos++] << (8 * i);
        return v;
    }
    uint64_t u64() {
        if (pos + 8 > buf.size()) throw std::runtime_error("truncated blob");
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= (uint64_t)buf[pos++] << (8 * i);
        return v;
    }
    int i32() { return (int)u32(); }
    std::vector<int> ints() {
        std::vector<int> v(u32());
        for (auto& x : v) x = i32();
        return v;
    }
    MatFp mat(uint32_t p) {
        uint32_t r = u32(), c = u32();
        MatFp m(r, c, p);
        for (uint32_t i = 0; i < r; ++i)
            for (uint32_t j = 0; j < c; ++j) m.at(i, j) = u32();
        return m;
    }
};

std::string blob_name(int n, int l, uint32_t p, uint32_t version) {
    std::ostringstream os;
    os << "nh_n" << n << "_l" << l << "_p" << p << ".v" << version;
    return os.str();
}

}  // namespace

// serializes the full built state of a representation so that a load
// reconstructs it without redoing any linear algebra
struct CacheIO {
    static void put(Writer& w, const NHRep& A) {
        const PolyQuotient& P = A.P_;
        w.i32(A.n_);
        w.i32(A.l_);
        w.u32(A.p_);
        w.i32(P.max_deg_);
        w.u32((uint32_t)P.basis_.size());
        for (auto& m : P.basis_) w.ints(m);
        w.ints(P.deg_);
        w.u32((uint32_t)P.overflow_.size());
        for (auto& [m, v] : P.overflow_) {
            w.ints(m);
            w.u32((uint32_t)v.size());
            for (uint32_t x : v) w.u32(x);
        }
        w.u32((uint32_t)P.yop_.size());
        for (auto& m : P.yop_) w.mat(m);
        w.u32((uint32_t)P.psiop_.size());
        for (auto& m : P.psiop_) w.mat(m);
        w.u32((uint32_t)A.basis_.size());
        for (auto& b : A.basis_) {
            w.ints(b.a);
            w.ints(b.w);
            w.i32(b.deg);
        }
        for (auto& m : A.basis_mat_) w.mat(m);
        w.u32((uint32_t)A.pivot_rows_.size());
        for (auto r : A.pivot_rows_) w.u64(r);
        w.mat(A.sinv_);
        w.mat(A.dmat_);
        w.mat(A.star_mat_);
    }

    static std::unique_ptr<NHRep> get(Reader& r) {
        auto A = std::unique_ptr<NHRep>(new NHRep());
        PolyQuotient& P = A->P_;
        A->n_ = P.n_ = r.i32();
        A->l_ = P.l_ = r.i32();
        A->p_ = P.p_ = r.u32();
        P.max_deg_ = r.i32();
        P.basis_.resize(r.u32());
        for (auto& m : P.basis_) m = r.ints();
        for (std::size_t i = 0; i < P.basis_.size(); ++i)
            P.index_[P.basis_[i]] = (int)i;
        P.deg_ = r.ints();
        for (uint32_t k = r.u32(); k-- > 0;) {
            Mono m = r.ints();
            std::vector<uint32_t> v(r.u32());
            for (auto& x : v) x = r.u32();
            P.overflow_[m] = std::move(v);
        }
        P.yop_.resize(r.u32());
        for (auto& m : P.yop_) m = r.mat(P.p_);
        P.psiop_.resize(r.u32());
        for (auto& m : P.psiop_) m = r.mat(P.p_);
        A->basis_.resize(r.u32());
        for (auto& b : A->basis_) {
            b.a = r.ints();
            b.w = r.ints();
            b.deg = r.i32();
        }
        A->basis_mat_.resize(A->basis_.size());
        for (auto& m : A->basis_mat_) m = r.mat(A->p_);
        A->pivot_rows_.resize(r.u32());
        for (auto& x : A->pivot_rows_) x = (std::size_t)r.u64();
        A->sinv_ = r.mat(A->p_);
        A->dmat_ = r.mat(A->p_);
        A->star_mat_ = r.mat(A->p_);
        return A;
    }
};

std::filesystem::path cache_directory(const std::string& explicit_dir) {
    if (!explicit_dir.empty()) return explicit_dir;
    if (const char* env = std::getenv("NHQ_CACHE_DIR"))
        if (*env) return env;
    return {};
}

bool save_rep(const NHRep& A, const std::filesystem::path& dir,
              uint32_t version) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    Writer payload;
    CacheIO::put(payload, A);
    uint64_t sum = fnv1a(payload.buf);

    Writer head;
    head.u32(kMagic);
    head.u32(version);
    head.i32(A.n());
    head.i32(A.l());
    head.u32(A.p());
    head.u64(payload.buf.size());
    head.u64(sum);

    std::string name = blob_name(A.n(), A.l(), A.p(), version);
    auto tmp = dir / (name + ".tmp");
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) return false;
        f.write((const char*)head.buf.data(), (std::streamsize)head.buf.size());
        f.write((const char*)payload.buf.data(),
                (std::streamsize)payload.buf.size());
        if (!f) return false;
    }
    std::filesystem::rename(tmp, dir / (name + ".bin"), ec);
    if (ec) return false;

    nlohmann::json man;
    man["schema"] = 1;
    man["format"] = version;
    man["n"] = A.n();
    man["l"] = A.l();
    man["p"] = A.p();
    man["poly_dim"] = A.N();
    man["word_dim"] = A.dim();
    man["bytes"] = payload.buf.size();
    man["checksum"] = hex64(sum);
    auto jtmp = dir / (name + ".json.tmp");
    {
        std::ofstream f(jtmp, std::ios::trunc);
        if (!f) return false;
        f << man.dump(2) << "\n";
    }
    std::filesystem::rename(jtmp, dir / (name + ".json"), ec);
    return !ec;
}

std::unique_ptr<NHRep> load_rep(int n, int l, uint32_t p,
                                const std::filesystem::path& dir,
                                uint32_t version) {
    std::string name = blob_name(n, l, p, version);
    std::ifstream f(dir / (name + ".bin"), std::ios::binary);
    if (!f) return nullptr;
    std::vector<uint8_t> raw((std::istreambuf_iterator<char>(f)),
                             std::istreambuf_iterator<char>());
    try {
        Reader h{raw};
        if (h.u32() != kMagic || h.u32() != version) return nullptr;
        if (h.i32() != n || h.i32() != l || h.u32() != p) return nullptr;
        uint64_t bytes = h.u64(), sum = h.u64();
        if (raw.size() - h.pos != bytes) return nullptr;
        std::vector<uint8_t> payload(raw.begin() + (long)h.pos, raw.end());
        if (fnv1a(payload) != sum) return nullptr;
        // cross-check the manifest when present
        std::ifstream mf(dir / (name + ".json"));
        if (mf) {
            auto man = nlohmann::json::parse(mf, nullptr, false);
            if (man.is_discarded() ||
                man.value("checksum", std::string()) != hex64(sum))
                return nullptr;
        }
        Reader r{payload};
        auto A = CacheIO::get(r);
        if (r.pos != payload.size()) return nullptr;
        return A;
    } catch (const std::exception&) {
        return nullptr;
    }
}

std::unique_ptr<NHRep> cached_rep(int n, int l, uint32_t p,
                                  const std::filesystem::path& dir) {
    if (!dir.empty())
        if (auto A = load_rep(n, l, p, dir)) return A;
    auto A = std::make_unique<NHRep>(n, l, p);
    if (!dir.empty()) save_rep(*A, dir);
    return A;
}

}  // namespace nhq
