#include "segre/table.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace segre {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::optional<OutputFormat> parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "text") return OutputFormat::text;
    return std::nullopt;
}

OpConfig RunConfig::op_config(std::optional<int> d) const {
    OpConfig cfg;
    cfg.d = d ? DPoly(Rational(*d)) : DPoly::var();
    cfg.norm.dimension_pruning = pruning;
    cfg.norm.kill_theta1 = theta1_rule;
    cfg.threads = threads;
    return cfg;
}

namespace {

ordered_json dpoly_json_value(const DPoly& p) {
    ordered_json arr = ordered_json::array();
    for (int i = 0; i <= p.degree(); ++i) {
        arr.push_back({p.coeff(i).num().get_str(), p.coeff(i).den().get_str()});
    }
    return arr;
}

DPoly dpoly_from_json(const ordered_json& arr) {
    std::vector<Rational> coeffs;
    for (const auto& pair : arr) {
        coeffs.push_back(Rational::from_string(pair.at(0).get<std::string>() + "/" +
                                               pair.at(1).get<std::string>()));
    }
    return DPoly(std::move(coeffs));
}

std::string dmode_tag(std::optional<int> d) { return d ? std::to_string(*d) : "sym"; }

}  // namespace

std::string dpoly_to_json(const DPoly& p) { return dpoly_json_value(p).dump(); }

IntegralTable compute_table(const RunConfig& cfg) {
    if (cfg.n_max < 0) throw std::invalid_argument("compute_table: negative n_max");
    IntegralTable table;
    table.config = cfg;
    table.chain_counts.assign(static_cast<std::size_t>(cfg.n_max) + 1, 0);

    std::optional<IntegralCache> cache;
    if (!cfg.cache_dir.empty()) {
        cache.emplace(cfg.cache_dir);
        cache->load();
    }

    auto compute_column = [&](std::optional<int> d) {
        std::vector<DPoly> rows;
        IntegralEngine engine(cfg.op_config(d));
        for (int n = 0; n <= cfg.n_max; ++n) {
            const std::string key =
                IntegralCache::key_for(n, dmode_tag(d), cfg.pruning, cfg.theta1_rule);
            if (cache) {
                if (auto hit = cache->lookup(key)) {
                    rows.push_back(*hit);
                    continue;
                }
            }
            IntegralRecord rec = engine.integral(n);
            table.chain_counts[static_cast<std::size_t>(n)] =
                std::max(table.chain_counts[static_cast<std::size_t>(n)], rec.chain_count);
            if (cache) cache->store(key, rec.value);
            rows.push_back(rec.value);
        }
        return rows;
    };

    if (cfg.symbolic()) {
        table.sym_rows = compute_column(std::nullopt);
    } else {
        table.fixed_rows.assign(static_cast<std::size_t>(cfg.n_max) + 1, {});
        for (int d : cfg.fixed_d) {
            auto rows = compute_column(d);
            for (int n = 0; n <= cfg.n_max; ++n) {
                // fixed-degree runs produce constants
                table.fixed_rows[static_cast<std::size_t>(n)].push_back(
                    rows[static_cast<std::size_t>(n)].coeff(0));
            }
        }
    }

    if (cache && cache->dirty()) cache->save();
    return table;
}

std::string render_table(const IntegralTable& table) {
    const RunConfig& cfg = table.config;
    std::ostringstream os;
    switch (cfg.format) {
        case OutputFormat::json: {
            ordered_json out = ordered_json::array();
            for (int n = 0; n <= cfg.n_max; ++n) {
                ordered_json row;
                row["n"] = n;
                if (cfg.symbolic()) {
                    row["poly"] = dpoly_json_value(table.sym_rows[static_cast<std::size_t>(n)]);
                } else {
                    ordered_json vals = ordered_json::array();
                    for (std::size_t i = 0; i < cfg.fixed_d.size(); ++i) {
                        vals.push_back(
                            {{"d", cfg.fixed_d[i]},
                             {"value",
                              table.fixed_rows[static_cast<std::size_t>(n)][i].to_string()}});
                    }
                    row["values"] = vals;
                }
                out.push_back(row);
            }
            os << out.dump(2) << "\n";
            break;
        }
        case OutputFormat::csv: {
            if (cfg.symbolic()) {
                int width = 1;
                for (const auto& p : table.sym_rows) width = std::max(width, p.degree() + 1);
                os << "n";
                for (int i = 0; i < width; ++i) os << ",c" << i;
                os << "\n";
                for (int n = 0; n <= cfg.n_max; ++n) {
                    os << n;
                    for (int i = 0; i < width; ++i) {
                        os << ","
                           << table.sym_rows[static_cast<std::size_t>(n)].coeff(i).to_string();
                    }
                    os << "\n";
                }
            } else {
                os << "n";
                for (int d : cfg.fixed_d) os << ",d=" << d;
                os << "\n";
                for (int n = 0; n <= cfg.n_max; ++n) {
                    os << n;
                    for (std::size_t i = 0; i < cfg.fixed_d.size(); ++i) {
                        os << ","
                           << table.fixed_rows[static_cast<std::size_t>(n)][i].to_string();
                    }
                    os << "\n";
                }
            }
            break;
        }
        case OutputFormat::text: {
            for (int n = 0; n <= cfg.n_max; ++n) {
                os << "n=" << n << ": ";
                if (cfg.symbolic()) {
                    os << table.sym_rows[static_cast<std::size_t>(n)].to_string();
                } else {
                    for (std::size_t i = 0; i < cfg.fixed_d.size(); ++i) {
                        if (i) os << "  ";
                        os << "d=" << cfg.fixed_d[i] << ": "
                           << table.fixed_rows[static_cast<std::size_t>(n)][i].to_string();
                    }
                }
                os << "\n";
            }
            break;
        }
    }
    return os.str();
}

IntegralCache::IntegralCache(std::string dir) {
    path_ = (fs::path(dir) / "integrals-cache.json").string();
}

std::string IntegralCache::key_for(int n, const std::string& dmode, bool pruning,
                                   bool theta1_rule) {
    std::ostringstream os;
    os << "n=" << n << ";d=" << dmode << ";prune=" << (pruning ? 1 : 0)
       << ";t1=" << (theta1_rule ? 1 : 0);
    return os.str();
}

std::optional<DPoly> IntegralCache::lookup(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void IntegralCache::store(const std::string& key, const DPoly& value) {
    auto [it, inserted] = entries_.insert({key, value});
    if (inserted) {
        dirty_ = true;
    } else if (it->second != value) {
        throw std::runtime_error("cache: conflicting value for key " + key);
    }
}

void IntegralCache::load() {
    std::ifstream in(path_);
    if (!in) return;
    try {
        ordered_json doc;
        in >> doc;
        if (!doc.is_object() || doc.value("version", -1) != kVersion) return;
        if (!doc.contains("entries") || !doc["entries"].is_object()) return;
        for (const auto& [key, val] : doc["entries"].items()) {
            entries_[key] = dpoly_from_json(val);
        }
    } catch (const std::exception&) {
        entries_.clear();  // unreadable cache is just a cold cache
    }
}

void IntegralCache::save() const {
    ordered_json doc;
    doc["version"] = kVersion;
    ordered_json entries = ordered_json::object();
    for (const auto& [key, val] : entries_) entries[key] = dpoly_json_value(val);
    doc["entries"] = entries;

    fs::create_directories(fs::path(path_).parent_path());
    const std::string tmp = path_ + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cache: cannot write " + tmp);
        out << doc.dump(2) << "\n";
    }
    fs::rename(tmp, path_);
}

}  // namespace segre
