#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "nhq/cache.hpp"

using namespace nhq;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const char* tag) {
    fs::path d = fs::temp_directory_path() / tag;
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

std::vector<char> slurp(const fs::path& f) {
    std::ifstream in(f, std::ios::binary);
    REQUIRE(in);
    return {std::istreambuf_iterator<char>(in),
            std::istreambuf_iterator<char>()};
}

bool same_rep(const NHRep& A, const NHRep& B) {
    if (A.n() != B.n() || A.l() != B.l() || A.p() != B.p()) return false;
    if (A.N() != B.N() || A.dim() != B.dim()) return false;
    for (int i = 1; i <= A.n(); ++i)
        if (!(A.y(i) == B.y(i))) return false;
    for (int i = 1; i < A.n(); ++i)
        if (!(A.psi(i) == B.psi(i))) return false;
    for (int i = 0; i < A.dim(); ++i) {
        if (A.basis()[i].a != B.basis()[i].a) return false;
        if (A.basis()[i].w != B.basis()[i].w) return false;
        if (A.basis()[i].deg != B.basis()[i].deg) return false;
        if (!(A.basis_mat(i) == B.basis_mat(i))) return false;
    }
    if (!(A.differential_coords() == B.differential_coords())) return false;
    return A.coords(A.e_thick(0, A.n())) == B.coords(B.e_thick(0, B.n()));
}

}  // namespace

TEST_CASE("save and load round-trip bit-identically") {
    auto d1 = fresh_dir("nhq_cache_rt1"), d2 = fresh_dir("nhq_cache_rt2");
    NHRep A(2, 3, 3);
    REQUIRE(save_rep(A, d1));
    auto B = load_rep(2, 3, 3, d1);
    REQUIRE(B);
    CHECK(same_rep(A, *B));
    // re-serializing the loaded copy reproduces the blob byte for byte
    REQUIRE(save_rep(*B, d2));
    CHECK(slurp(d1 / "nh_n2_l3_p3.v1.bin") == slurp(d2 / "nh_n2_l3_p3.v1.bin"));
    CHECK(slurp(d1 / "nh_n2_l3_p3.v1.json") ==
          slurp(d2 / "nh_n2_l3_p3.v1.json"));
    fs::remove_all(d1);
    fs::remove_all(d2);
}

TEST_CASE("missing cache rebuilds silently and then hits") {
    auto d = fresh_dir("nhq_cache_miss");
    CHECK(load_rep(2, 3, 3, d) == nullptr);
    auto A = cached_rep(2, 3, 3, d);
    REQUIRE(A);
    CHECK(fs::exists(d / "nh_n2_l3_p3.v1.bin"));
    auto B = load_rep(2, 3, 3, d);
    REQUIRE(B);
    CHECK(same_rep(*A, *B));
    fs::remove_all(d);
}

TEST_CASE("corrupted blob is discarded and rebuilt") {
    auto d = fresh_dir("nhq_cache_corrupt");
    NHRep A(2, 3, 3);
    REQUIRE(save_rep(A, d));
    auto path = d / "nh_n2_l3_p3.v1.bin";
    {
        auto bytes = slurp(path);
        bytes[bytes.size() / 2] ^= 0x5a;
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out.write(bytes.data(), (std::streamsize)bytes.size());
    }
    CHECK(load_rep(2, 3, 3, d) == nullptr);
    auto B = cached_rep(2, 3, 3, d);
    REQUIRE(B);
    CHECK(same_rep(A, *B));
    CHECK(load_rep(2, 3, 3, d) != nullptr);
    fs::remove_all(d);
}

TEST_CASE("manifest checksum mismatch invalidates the entry") {
    auto d = fresh_dir("nhq_cache_manifest");
    NHRep A(2, 3, 3);
    REQUIRE(save_rep(A, d));
    {
        std::ofstream out(d / "nh_n2_l3_p3.v1.json", std::ios::trunc);
        out << "{\"schema\":1,\"checksum\":\"0\"}\n";
    }
    CHECK(load_rep(2, 3, 3, d) == nullptr);
    fs::remove_all(d);
}

TEST_CASE("format version bump ignores old blobs") {
    auto d = fresh_dir("nhq_cache_version");
    NHRep A(2, 3, 3);
    REQUIRE(save_rep(A, d, 1));
    CHECK(load_rep(2, 3, 3, d, 2) == nullptr);
    REQUIRE(save_rep(A, d, 2));
    CHECK(load_rep(2, 3, 3, d, 2) != nullptr);
    CHECK(load_rep(2, 3, 3, d, 1) != nullptr);
    fs::remove_all(d);
}

TEST_CASE("cache directory resolution") {
    CHECK(cache_directory("/x/y") == fs::path("/x/y"));
    setenv("NHQ_CACHE_DIR", "/tmp/nhq_env_dir", 1);
    CHECK(cache_directory() == fs::path("/tmp/nhq_env_dir"));
    unsetenv("NHQ_CACHE_DIR");
    CHECK(cache_directory().empty());
}
