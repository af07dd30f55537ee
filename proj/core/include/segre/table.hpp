#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "segre/integrals.hpp"

namespace segre {

enum class OutputFormat { json, csv, text };

std::optional<OutputFormat> parse_format(const std::string& s);

// One table-building run of the integral pipeline.
struct RunConfig {
    int n_max = 0;
    // Empty = symbolic d; otherwise one column per listed degree.
    std::vector<int> fixed_d;
    int threads = 1;
    bool pruning = true;
    bool theta1_rule = false;
    std::string cache_dir;  // empty = no persistent cache
    OutputFormat format = OutputFormat::text;

    bool symbolic() const { return fixed_d.empty(); }
    OpConfig op_config(std::optional<int> d = std::nullopt) const;
};

struct IntegralTable {
    RunConfig config;
    // Symbolic: rows[n] is a polynomial in d. Fixed: rows[n] is constant for
    // each requested degree, aligned with config.fixed_d.
    std::vector<DPoly> sym_rows;
    std::vector<std::vector<Rational>> fixed_rows;
    std::vector<std::size_t> chain_counts;
};

// Computes (or loads from the persistent cache, when configured) all rows up
// to n_max, writing newly computed entries back.
IntegralTable compute_table(const RunConfig& cfg);

// Deterministic rendering; equal tables produce identical bytes.
std::string render_table(const IntegralTable& table);

// Rational pair encoding used by the JSON surfaces: [["num","den"], ...]
// ascending in powers of d.
std::string dpoly_to_json(const DPoly& p);

// Versioned persistent cache, one file per directory. Unknown versions are
// ignored wholesale: the operator formulas are the contract.
class IntegralCache {
  public:
    static constexpr int kVersion = 1;

    explicit IntegralCache(std::string dir);

    std::optional<DPoly> lookup(const std::string& key) const;
    void store(const std::string& key, const DPoly& value);
    bool dirty() const { return dirty_; }

    void load();
    void save() const;

    static std::string key_for(int n, const std::string& dmode, bool pruning,
                               bool theta1_rule);

  private:
    std::string path_;
    std::map<std::string, DPoly> entries_;
    bool dirty_ = false;
};

}  // namespace segre
