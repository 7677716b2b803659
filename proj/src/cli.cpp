#include "qpchar/cli.hpp"

#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qpchar {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

}  // namespace

std::optional<Method> parse_method(const std::string& text) {
    if (text == "direct") return Method::direct;
    if (text == "fermionic") return Method::fermionic;
    if (text == "bosonic") return Method::bosonic;
    if (text == "pbw") return Method::pbw;
    return std::nullopt;
}

std::string method_name(Method method) {
    switch (method) {
        case Method::direct: return "direct";
        case Method::fermionic: return "fermionic";
        case Method::bosonic: return "bosonic";
        case Method::pbw: return "pbw";
    }
    throw std::logic_error("unreachable method tag");
}

std::optional<OutputFormat> parse_format(const std::string& text) {
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    if (text == "text") return OutputFormat::text;
    return std::nullopt;
}

std::string format_name(OutputFormat format) {
    switch (format) {
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
        case OutputFormat::text: return "text";
    }
    throw std::logic_error("unreachable format tag");
}

std::optional<Level> parse_level(const std::string& text) {
    if (text == "verma") {
        return Level::verma();
    }
    if (text.empty()) {
        return std::nullopt;
    }
    int value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') {
            return std::nullopt;
        }
        if (value > 100000000) {
            return std::nullopt;
        }
        value = value * 10 + (c - '0');
    }
    if (value < 1) {
        return std::nullopt;
    }
    return Level::finite(value);
}

std::string level_name(const Level& level) {
    return level.is_verma() ? "verma" : std::to_string(level.k());
}

namespace {

// Validation shared by every command; returns an error message or empty.
std::string config_error(const RunConfig& cfg) {
    try {
        validate_root_system({cfg.family, cfg.rank});
    } catch (const std::invalid_argument& e) {
        return e.what();
    }
    if (cfg.command == Command::roots) {
        return "";
    }
    if (cfg.qmax < 0) {
        return "qmax must be >= 0";
    }
    auto method_ok = [&](Method m) -> std::string {
        if ((m == Method::bosonic || m == Method::pbw) && !cfg.level.is_verma()) {
            return method_name(m) + " requires --level verma";
        }
        return "";
    };
    if (cfg.command == Command::character) {
        if (!cfg.method) {
            return "char requires --method";
        }
        return method_ok(*cfg.method);
    }
    if (cfg.command == Command::verify) {
        if (!cfg.method_a || !cfg.method_b) {
            return "verify requires --method-a and --method-b";
        }
        if (auto err = method_ok(*cfg.method_a); !err.empty()) {
            return err;
        }
        return method_ok(*cfg.method_b);
    }
    return "";
}

TruncatedSeries compute_series(const RunConfig& cfg, Method method) {
    switch (method) {
        case Method::direct:
            return graded_dimension_series({cfg.family, cfg.rank, cfg.level}, cfg.qmax);
        case Method::fermionic:
            return fermionic_character({cfg.family, cfg.rank, cfg.level}, cfg.qmax);
        case Method::bosonic:
            return bosonic_character_verma({cfg.family, cfg.rank}, cfg.qmax);
        case Method::pbw:
            return pbw_monomial_count_verma({cfg.family, cfg.rank}, cfg.qmax);
    }
    throw std::logic_error("unreachable method tag");
}

ordered_json series_header(const RunConfig& cfg, Method method) {
    ordered_json j;
    j["family"] = family_name(cfg.family);
    j["rank"] = cfg.rank;
    j["level"] = cfg.level.is_verma() ? ordered_json("verma") : ordered_json(cfg.level.k());
    j["qmax"] = cfg.qmax;
    j["method"] = method_name(method);
    return j;
}

ordered_json terms_to_json(const TruncatedSeries& s) {
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : s.terms()) {
        ordered_json t;
        t["q"] = e.dq;
        t["y"] = e.dy;
        t["c"] = c.str();
        terms.push_back(std::move(t));
    }
    return terms;
}

// One monomial like "3*y1^2*y3"; the bare coefficient when y is trivial.
std::string monomial_text(const std::vector<int>& dy, const Coeff& c) {
    std::string ypart;
    for (size_t i = 0; i < dy.size(); ++i) {
        if (dy[i] == 0) {
            continue;
        }
        if (!ypart.empty()) {
            ypart += "*";
        }
        ypart += "y" + std::to_string(i + 1);
        if (dy[i] > 1) {
            ypart += "^" + std::to_string(dy[i]);
        }
    }
    if (ypart.empty()) {
        return c.str();
    }
    if (c == 1) {
        return ypart;
    }
    return c.str() + "*" + ypart;
}

std::string series_text(const RunConfig& cfg, Method method, const TruncatedSeries& s) {
    std::ostringstream out;
    out << "family " << family_name(cfg.family) << " rank " << cfg.rank << " level "
        << level_name(cfg.level) << " qmax " << cfg.qmax << " method " << method_name(method)
        << "\n";
    auto it = s.terms().begin();
    for (int m = 0; m <= s.qmax(); ++m) {
        std::string line;
        while (it != s.terms().end() && it->first.dq == m) {
            if (!line.empty()) {
                line += " + ";
            }
            line += monomial_text(it->first.dy, it->second);
            ++it;
        }
        if (!line.empty()) {
            out << "q^" << m << ": " << line << "\n";
        }
    }
    return out.str();
}

std::string series_csv(const TruncatedSeries& s) {
    std::ostringstream out;
    out << "q";
    for (int i = 1; i <= s.rank(); ++i) {
        out << ",y" << i;
    }
    out << ",c\n";
    for (const auto& [e, c] : s.terms()) {
        out << e.dq;
        for (int v : e.dy) {
            out << "," << v;
        }
        out << "," << c.str() << "\n";
    }
    return out.str();
}

// Writes the buffered payload to the configured destination. Returns the
// exit code to use (payload_code on success, usage error if the file
// cannot be written).
int emit(const RunConfig& cfg, const std::string& payload, int payload_code, std::ostream& out,
         std::ostream& diag) {
    if (cfg.output_path) {
        std::ofstream file(*cfg.output_path, std::ios::binary);
        if (!file) {
            diag << "error: cannot open output file: " << *cfg.output_path << "\n";
            return kExitUsage;
        }
        file << payload;
        if (!file.flush()) {
            diag << "error: failed writing output file: " << *cfg.output_path << "\n";
            return kExitUsage;
        }
        return payload_code;
    }
    out << payload;
    out.flush();
    return payload_code;
}

}  // namespace

std::string serialize_series(const RunConfig& cfg, Method method, const TruncatedSeries& series) {
    switch (cfg.format) {
        case OutputFormat::json: {
            ordered_json j = series_header(cfg, method);
            j["terms"] = terms_to_json(series);
            return j.dump(2) + "\n";
        }
        case OutputFormat::csv:
            return series_csv(series);
        case OutputFormat::text:
            return series_text(cfg, method, series);
    }
    throw std::logic_error("unreachable format tag");
}

TruncatedSeries parse_series_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("series JSON is unparsable: ") + e.what());
    }
    try {
        const int rank = j.at("rank").get<int>();
        const int qmax = j.at("qmax").get<int>();
        TruncatedSeries s(rank, qmax);
        for (const auto& t : j.at("terms")) {
            const ExponentVector e{t.at("q").get<int>(), t.at("y").get<std::vector<int>>()};
            s.add_term(e, Coeff(t.at("c").get<std::string>()));
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("series JSON has a bad field: ") + e.what());
    }
}

int run_char(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
    if (auto err = config_error(cfg); !err.empty()) {
        diag << "error: " << err << "\n";
        return kExitUsage;
    }
    TruncatedSeries series = compute_series(cfg, *cfg.method);
    if (cfg.specialize) {
        series = specialize_y(series);
    }
    return emit(cfg, serialize_series(cfg, *cfg.method, series), kExitOk, out, diag);
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
    if (auto err = config_error(cfg); !err.empty()) {
        diag << "error: " << err << "\n";
        return kExitUsage;
    }
    TruncatedSeries a = compute_series(cfg, *cfg.method_a);
    TruncatedSeries b = compute_series(cfg, *cfg.method_b);
    if (cfg.specialize) {
        a = specialize_y(a);
        b = specialize_y(b);
    }
    const ComparisonReport report = verify_equal(a, b);

    std::string payload;
    if (cfg.format == OutputFormat::json) {
        ordered_json j;
        j["family"] = family_name(cfg.family);
        j["rank"] = cfg.rank;
        j["level"] = cfg.level.is_verma() ? ordered_json("verma") : ordered_json(cfg.level.k());
        j["qmax"] = cfg.qmax;
        j["method_a"] = method_name(*cfg.method_a);
        j["method_b"] = method_name(*cfg.method_b);
        j["equal"] = report.equal;
        if (report.first_mismatch) {
            const auto& [e, ca, cb] = *report.first_mismatch;
            ordered_json m;
            m["q"] = e.dq;
            m["y"] = e.dy;
            m["a"] = ca.str();
            m["b"] = cb.str();
            j["mismatch"] = std::move(m);
        }
        payload = j.dump(2) + "\n";
    } else if (cfg.format == OutputFormat::csv) {
        std::ostringstream s;
        s << "equal,q,y,a,b\n";
        if (report.first_mismatch) {
            const auto& [e, ca, cb] = *report.first_mismatch;
            s << "false," << e.dq << ",";
            for (size_t i = 0; i < e.dy.size(); ++i) {
                s << (i ? " " : "") << e.dy[i];
            }
            s << "," << ca.str() << "," << cb.str() << "\n";
        } else {
            s << "true,,,,\n";
        }
        payload = s.str();
    } else {
        std::ostringstream s;
        s << "family " << family_name(cfg.family) << " rank " << cfg.rank << " level "
          << level_name(cfg.level) << " qmax " << cfg.qmax << " "
          << method_name(*cfg.method_a) << " vs " << method_name(*cfg.method_b) << "\n";
        if (report.first_mismatch) {
            const auto& [e, ca, cb] = *report.first_mismatch;
            s << "mismatch at q^" << e.dq << " " << monomial_text(e.dy, 1) << ": " << ca.str()
              << " vs " << cb.str() << "\n";
        } else {
            s << "equal\n";
        }
        payload = s.str();
    }
    return emit(cfg, payload, report.equal ? kExitOk : kExitMismatch, out, diag);
}

int run_enum(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
    if (auto err = config_error(cfg); !err.empty()) {
        diag << "error: " << err << "\n";
        return kExitUsage;
    }
    const SubspaceSpec spec{cfg.family, cfg.rank, cfg.level};
    const auto monomials = enumerate_admissible(spec, cfg.qmax);

    std::string payload;
    if (cfg.format == OutputFormat::json) {
        ordered_json j;
        j["family"] = family_name(cfg.family);
        j["rank"] = cfg.rank;
        j["level"] = cfg.level.is_verma() ? ordered_json("verma") : ordered_json(cfg.level.k());
        j["qmax"] = cfg.qmax;
        j["count"] = monomials.size();
        ordered_json list = ordered_json::array();
        for (const auto& mono : monomials) {
            const GradedWeight w = graded_weight(mono);
            ordered_json m;
            m["degree"] = w.total_degree;
            m["color_type"] = w.color_type;
            ordered_json colors = ordered_json::array();
            for (const auto& color : mono.colors) {
                ordered_json pairs = ordered_json::array();
                for (const auto& particle : color) {
                    pairs.push_back({particle.charge, particle.energy});
                }
                colors.push_back(std::move(pairs));
            }
            m["colors"] = std::move(colors);
            list.push_back(std::move(m));
        }
        j["monomials"] = std::move(list);
        payload = j.dump(2) + "\n";
    } else if (cfg.format == OutputFormat::csv) {
        std::ostringstream s;
        s << "degree,color_type,particles\n";
        for (const auto& mono : monomials) {
            const GradedWeight w = graded_weight(mono);
            s << w.total_degree << ",";
            for (size_t i = 0; i < w.color_type.size(); ++i) {
                s << (i ? " " : "") << w.color_type[i];
            }
            s << ",";
            for (size_t i = 0; i < mono.colors.size(); ++i) {
                if (i) {
                    s << ";";
                }
                for (const auto& particle : mono.colors[i]) {
                    s << "(" << particle.charge << " " << particle.energy << ")";
                }
            }
            s << "\n";
        }
        payload = s.str();
    } else {
        std::ostringstream s;
        s << "family " << family_name(cfg.family) << " rank " << cfg.rank << " level "
          << level_name(cfg.level) << " qmax " << cfg.qmax << " monomials " << monomials.size()
          << "\n";
        for (const auto& mono : monomials) {
            const GradedWeight w = graded_weight(mono);
            s << "degree " << w.total_degree << "  colors";
            for (size_t i = 0; i < mono.colors.size(); ++i) {
                s << " " << (i + 1) << ":[";
                for (size_t p = 0; p < mono.colors[i].size(); ++p) {
                    if (p) {
                        s << " ";
                    }
                    s << "(" << mono.colors[i][p].charge << "," << mono.colors[i][p].energy << ")";
                }
                s << "]";
            }
            s << "\n";
        }
        payload = s.str();
    }
    return emit(cfg, payload, kExitOk, out, diag);
}

int run_roots(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
    if (auto err = config_error(cfg); !err.empty()) {
        diag << "error: " << err << "\n";
        return kExitUsage;
    }
    const RootSystem rs{cfg.family, cfg.rank};
    const auto roots = positive_roots(rs);

    std::string payload;
    if (cfg.format == OutputFormat::json) {
        ordered_json j;
        j["family"] = family_name(cfg.family);
        j["rank"] = cfg.rank;
        j["count"] = roots.size();
        j["roots"] = roots;
        j["highest"] = highest_root(rs);
        payload = j.dump(2) + "\n";
    } else if (cfg.format == OutputFormat::csv) {
        std::ostringstream s;
        for (int i = 1; i <= cfg.rank; ++i) {
            s << (i > 1 ? "," : "") << "c" << i;
        }
        s << "\n";
        for (const auto& root : roots) {
            for (size_t i = 0; i < root.size(); ++i) {
                s << (i ? "," : "") << root[i];
            }
            s << "\n";
        }
        payload = s.str();
    } else {
        std::ostringstream s;
        s << "family " << family_name(cfg.family) << " rank " << cfg.rank << " positive roots "
          << roots.size() << "\n";
        for (const auto& root : roots) {
            s << "(";
            for (size_t i = 0; i < root.size(); ++i) {
                s << (i ? "," : "") << root[i];
            }
            s << ")\n";
        }
        payload = s.str();
    }
    return emit(cfg, payload, kExitOk, out, diag);
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
    switch (cfg.command) {
        case Command::character: return run_char(cfg, out, diag);
        case Command::verify: return run_verify(cfg, out, diag);
        case Command::enumerate_basis: return run_enum(cfg, out, diag);
        case Command::roots: return run_roots(cfg, out, diag);
    }
    throw std::logic_error("unreachable command tag");
}

}  // namespace qpchar
