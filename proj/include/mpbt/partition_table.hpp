#pragma once

// PartitionTable: all height-<= d partitions of n with their irrep
// dimensions d_lambda and Schur-Weyl multiplicities m_lambda, in strongly
// decreasing lexicographic order. Tables are immutable once built and
// memoized in-process; an optional on-disk JSON cache is keyed by (n,d).

#include "mpbt/bigint.hpp"
#include "mpbt/partition.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mpbt {

struct TableEntry {
    Partition shape;
    BigInt dim;   // d_lambda
    BigInt mult;  // m_lambda
};

class PartitionTable {
  public:
    PartitionTable(int n, int d) : n_(n), d_(d) {
        for (const Partition& p : enumerate_partitions(n, d))
            entries_.push_back({p, dim_sym(p), mult_sw(p, d)});
        BigInt total = 0;
        for (const auto& e : entries_) total += e.mult * e.dim;
        if (total != pow_int(d, static_cast<unsigned>(n)))
            throw std::logic_error("PartitionTable: sum m*d != d^n");
    }

    int n() const { return n_; }
    int d() const { return d_; }
    const std::vector<TableEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    const TableEntry& at(std::size_t i) const { return entries_.at(i); }

    const TableEntry& find(const Partition& p) const {
        for (const auto& e : entries_)
            if (e.shape == p) return e;
        throw std::out_of_range("PartitionTable: partition not in table " + p.str());
    }

    std::optional<std::size_t> index_of(const Partition& p) const {
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (entries_[i].shape == p) return i;
        return std::nullopt;
    }

    // sum of m_lambda^2, the g(N) denominator
    BigInt sum_squared_mults() const {
        BigInt s = 0;
        for (const auto& e : entries_) s += e.mult * e.mult;
        return s;
    }

    nlohmann::json to_json() const {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& e : entries_)
            entries.push_back({{"rows", e.shape.rows()},
                               {"dim", e.dim.str()},
                               {"mult", e.mult.str()}});
        return {{"version", 1}, {"n", n_}, {"d", d_}, {"entries", entries}};
    }

    static PartitionTable from_json(const nlohmann::json& j) {
        if (j.at("version").get<int>() != 1)
            throw std::runtime_error("PartitionTable: unsupported cache version");
        PartitionTable t;
        t.n_ = j.at("n").get<int>();
        t.d_ = j.at("d").get<int>();
        for (const auto& e : j.at("entries")) {
            TableEntry entry;
            entry.shape = Partition(e.at("rows").get<std::vector<int>>());
            entry.dim = BigInt(e.at("dim").get<std::string>());
            entry.mult = BigInt(e.at("mult").get<std::string>());
            t.entries_.push_back(std::move(entry));
        }
        return t;
    }

  private:
    PartitionTable() = default;

    int n_ = 0;
    int d_ = 0;
    std::vector<TableEntry> entries_;
};

namespace detail {

inline std::optional<std::filesystem::path> cache_file(int n, int d) {
    const char* dir = std::getenv("MPBT_CACHE_DIR");
    if (!dir || !*dir) return std::nullopt;
    return std::filesystem::path(dir) /
           ("ptable_n" + std::to_string(n) + "_d" + std::to_string(d) + ".json");
}

}  // namespace detail

// Shared, immutable table for (n,d). Thread-safe; construction of distinct
// tables may proceed concurrently from the caller's side.
inline std::shared_ptr<const PartitionTable> partition_table(int n, int d) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const PartitionTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, d);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    std::shared_ptr<const PartitionTable> table;
    if (auto file = detail::cache_file(n, d)) {
        if (std::ifstream in{*file}) {
            try {
                table = std::make_shared<PartitionTable>(
                    PartitionTable::from_json(nlohmann::json::parse(in)));
            } catch (const std::exception&) {
                table.reset();  // corrupt cache entry: rebuild
            }
        }
    }
    if (!table) {
        table = std::make_shared<PartitionTable>(n, d);
        if (auto file = detail::cache_file(n, d)) {
            std::error_code ec;
            std::filesystem::create_directories(file->parent_path(), ec);
            if (std::ofstream out{*file}) out << table->to_json().dump();
        }
    }
    cache.emplace(key, table);
    return table;
}

}  // namespace mpbt
