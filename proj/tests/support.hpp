#pragma once

#include <cytoric/cytoric.hpp>

#include <random>

namespace testsupport {

using namespace cytoric;

inline std::string data_path(const std::string& name) {
    return std::string(CYTORIC_DATA_DIR) + "/" + name;
}

inline std::vector<PolytopeRecord> dim3_records() {
    return load_datafile(data_path("dim3.polytopes"));
}

inline std::vector<PolytopeRecord> example_records() {
    return load_datafile(data_path("examples.polytopes"));
}

inline PolytopeRecord record_by_id(const std::string& id) {
    for (const auto& r : dim3_records())
        if (r.id == id) return r;
    for (const auto& r : example_records())
        if (r.id == id) return r;
    throw std::runtime_error("no bundled record " + id);
}

inline Polytope bundled(const std::string& id) { return record_by_id(id).polytope(); }

// All bundled smooth Fano polytopes (the projection counterexample is
// deliberately not smooth and is skipped).
inline std::vector<std::pair<std::string, Polytope>> bundled_smooth() {
    std::vector<std::pair<std::string, Polytope>> out;
    for (const auto& recs : {dim3_records(), example_records()})
        for (const auto& r : recs) {
            Polytope p = r.polytope();
            if (p.is_smooth()) out.emplace_back(r.id, std::move(p));
        }
    return out;
}

inline IntVec iv(std::initializer_list<long> xs) { return int_vec(xs); }

inline IntMat im(std::initializer_list<std::initializer_list<long>> rows) {
    IntMat m;
    for (const auto& r : rows) m.push_back(int_vec(r));
    return m;
}

inline std::mt19937 rng(unsigned seed) { return std::mt19937(seed); }

inline Int rand_int(std::mt19937& gen, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return Int(d(gen));
}

inline IntVec rand_vec(std::mt19937& gen, std::size_t n, long lo, long hi) {
    IntVec v(n);
    for (auto& x : v) x = rand_int(gen, lo, hi);
    return v;
}

}  // namespace testsupport
