#include "staticflow/report_io.hpp"

#include <charconv>
#include <fstream>
#include <json.hpp>

namespace staticflow {

std::string format_double(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string flow_csv(const FlowReport& report) {
    std::string out = "t,weighted_dev,min_lapse,as_defect_2,residual_sup\n";
    for (std::size_t i = 0; i < report.times.size(); ++i) {
        out += format_double(report.times[i]);
        out += ',';
        out += format_double(report.weighted_dev[i]);
        out += ',';
        out += format_double(report.min_lapse[i]);
        out += ',';
        out += format_double(report.as_defect[i]);
        out += ',';
        out += format_double(report.residual_norms[i]);
        out += '\n';
    }
    return out;
}

void emit_flow_csv(const FlowReport& report, const std::filesystem::path& path) {
    atomic_write(path, flow_csv(report));
}

std::string expansion_json(const ExpansionResult& res) {
    nlohmann::ordered_json j;
    j["n"] = res.n;
    j["scal"] = res.scal;
    j["max_order"] = res.max_order;
    j["c"] = std::vector<double>(res.c.coeffs().begin(), res.c.coeffs().begin() + res.max_order + 1);
    j["u"] = std::vector<double>(res.u.coeffs().begin(), res.u.coeffs().begin() + res.max_order + 1);
    j["determinants"] = res.determinants;
    j["parity_ok"] = parity_check(res);
    return j.dump(2) + "\n";
}

void emit_expansion_json(const ExpansionResult& res, const std::filesystem::path& path) {
    atomic_write(path, expansion_json(res));
}

ExpansionResult parse_expansion_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    const nlohmann::json j = nlohmann::json::parse(in);

    ExpansionResult res;
    res.n = j.at("n").get<int>();
    res.scal = j.at("scal").get<double>();
    res.max_order = j.at("max_order").get<std::size_t>();
    res.c = TruncatedSeries(j.at("c").get<std::vector<double>>());
    res.u = TruncatedSeries(j.at("u").get<std::vector<double>>());
    res.determinants = j.at("determinants").get<std::vector<double>>();
    return res;
}

} // namespace staticflow
