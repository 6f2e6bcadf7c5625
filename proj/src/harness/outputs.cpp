#include "goatopt/harness.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace goatopt::harness {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string summary_csv(const SuiteResults& results) {
    std::string out = "function,algorithm,best_fitness,mean_fitness,std_dev\n";
    for (const auto& row : results.summary) {
        out += row.function + ',' + row.algorithm + ',' + format_double(row.best_fitness) + ',' +
               format_double(row.mean_fitness) + ',' + format_double(row.std_dev) + '\n';
    }
    return out;
}

std::string wilcoxon_csv(const SuiteResults& results) {
    std::string out = "function,algorithm_a,algorithm_b,statistic,p_value,method\n";
    for (const auto& c : results.comparisons) {
        out += c.function + ',' + c.algorithm_a + ',' + c.algorithm_b + ',' + format_double(c.test.statistic) +
               ',' + format_double(c.test.p_value) + ',' + std::string(stats::to_string(c.test.method)) + '\n';
    }
    return out;
}

std::string convergence_csv(const SuiteResults& results) {
    std::string out = "function,algorithm,run,iteration,best_so_far\n";
    for (const Cell& cell : results.cells) {
        for (const RunRecord& run : cell.runs) {
            if (!run.ok) continue;
            const std::string prefix = cell.function + ',' + cell.algorithm + ',' + std::to_string(run.run_index) + ',';
            for (std::size_t t = 0; t < run.result.trace.size(); ++t) {
                out += prefix + std::to_string(t) + ',' + format_double(run.result.trace[t]) + '\n';
            }
        }
    }
    return out;
}

std::string run_meta_json(const SuiteResults& results) {
    using nlohmann::json;
    json meta;
    meta["software_version"] = software_version;
    meta["config"] = json::parse(config_to_json(results.config));
    meta["seeding"] = "run r of every cell uses seed base_seed + r";
    meta["statistic"] = "rank sum W of algorithm_a; Mann-Whitney U = W - n1(n1+1)/2";
    json cells = json::array();
    for (const Cell& cell : results.cells) {
        json runs = json::array();
        for (const RunRecord& run : cell.runs) {
            json r = {{"run", run.run_index}, {"seed", run.seed}, {"ok", run.ok}};
            if (run.ok) {
                r["evaluations"] = run.result.evaluations;
                r["iterations"] = run.result.trace.size() - 1;
                r["termination"] = std::string(to_string(run.result.termination));
                r["final_best"] = format_double(rank_key(run.result.best.fitness));
            } else {
                r["error"] = run.error;
            }
            runs.push_back(std::move(r));
        }
        cells.push_back({{"function", cell.function}, {"algorithm", cell.algorithm}, {"runs", std::move(runs)}});
    }
    meta["cells"] = std::move(cells);
    meta["warnings"] = results.warnings;
    return meta.dump(2) + "\n";
}

std::vector<std::filesystem::path> write_outputs(const SuiteResults& results,
                                                 const std::filesystem::path& output_dir) {
    if (results.cells.empty()) throw ValidationError("no results to write");
    std::error_code ec;
    std::filesystem::create_directories(output_dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory " + output_dir.string() + ": " + ec.message());

    const std::pair<const char*, std::string> files[] = {
        {"summary.csv", summary_csv(results)},
        {"wilcoxon.csv", wilcoxon_csv(results)},
        {"convergence.csv", convergence_csv(results)},
        {"run_meta.json", run_meta_json(results)},
    };
    std::vector<std::filesystem::path> written;
    for (const auto& [name, body] : files) {
        const auto path = output_dir / name;
        std::ofstream out(path, std::ios::binary);
        out << body;
        if (!out) throw std::runtime_error("cannot write " + path.string());
        written.push_back(path);
    }
    return written;
}

std::string trace_csv(const RunResult& result) {
    std::string out = "iteration,best_so_far\n";
    for (std::size_t t = 0; t < result.trace.size(); ++t) {
        out += std::to_string(t) + ',' + format_double(result.trace[t]) + '\n';
    }
    return out;
}

namespace {

std::vector<std::string> split_row(std::string_view line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        std::string cell(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
        while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
        cells.push_back(std::move(cell));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return cells;
}

}  // namespace

std::vector<double> read_csv_column(std::string_view text, std::string_view column) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw ValidationError("CSV input is empty");
    const auto header = split_row(line);
    std::size_t col = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == column) col = i;
    }
    if (col == header.size()) throw NotFoundError("CSV has no column '" + std::string(column) + "'");

    std::vector<double> values;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto cells = split_row(line);
        if (col >= cells.size() || cells[col].empty()) continue;
        // strtod rather than stod: subnormals must parse, not throw.
        char* end = nullptr;
        const double v = std::strtod(cells[col].c_str(), &end);
        if (end != cells[col].c_str() + cells[col].size()) {
            throw ValidationError("line " + std::to_string(line_no) + ": '" + cells[col] + "' is not a number");
        }
        values.push_back(v);
    }
    return values;
}

}  // namespace goatopt::harness
