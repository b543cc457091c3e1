#include "bcnqkit/serialize.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace bcnq {

json to_json(const Partition& lambda) {
    json arr = json::array();
    for (int p : lambda.padded()) arr.push_back(p);
    return arr;
}

Partition partition_from_json(const json& j, int context_n) {
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(v.get<int>());
    return Partition(std::move(parts), context_n);
}

json to_json(const SymPoly& p) {
    json terms = json::array();
    for (const auto& [mu, c] : p.coeffs()) {
        json term;
        term["mu"] = to_json(mu);
        term["coeff"] = c.str();
        terms.push_back(std::move(term));
    }
    json out;
    out["basis"] = basis_name(p.basis());
    out["n"] = p.n_vars();
    out["terms"] = std::move(terms);
    return out;
}

json to_json(const OperatorMatrix& m) {
    json order = json::array();
    for (const Partition& mu : m.order) order.push_back(to_json(mu));
    json rows = json::array();
    for (const auto& row : m.entries) {
        json r = json::array();
        for (const Rat& c : row) r.push_back(c.str());
        rows.push_back(std::move(r));
    }
    json out;
    out["family"] = family_name(m.family);
    out["top"] = to_json(m.top);
    out["order"] = std::move(order);
    out["rows"] = std::move(rows);
    return out;
}

json to_json(const DimRecord& rec) {
    json out;
    out["space"] = space_name(rec.space);
    out["n"] = rec.n;
    out["d"] = rec.d;
    out["lambda"] = to_json(rec.lambda);
    json params;
    for (const auto& [name, value] : rec.live_params) params[name] = value.str();
    out["params"] = std::move(params);
    out["value"] = rec.value.str();
    out["approx20"] = rec.value.approx_decimal(20);
    out["method"] = rec.method;
    out["crosscheck"] = rec.crosscheck;
    out["crosscheck_ok"] = rec.crosscheck_ok;
    return out;
}

namespace {

std::string lambda_label(const Partition& lambda) {
    std::string s;
    for (int p : lambda.padded()) {
        if (!s.empty()) s += ' ';
        s += std::to_string(p);
    }
    return s;
}

}  // namespace

std::string dim_records_to_csv(const std::vector<DimRecord>& records) {
    std::ostringstream os;
    os << "lambda,value,approx20,method,crosscheck,crosscheck_ok\n";
    for (const DimRecord& rec : records) {
        os << '"' << lambda_label(rec.lambda) << '"' << ',' << rec.value.str() << ',' << rec.value.approx_decimal(20)
           << ',' << rec.method << ',' << rec.crosscheck << ',' << (rec.crosscheck_ok ? "true" : "false") << '\n';
    }
    return os.str();
}

std::string dim_records_to_table(const std::vector<DimRecord>& records) {
    std::size_t lam_w = 6, val_w = 5;
    for (const DimRecord& rec : records) {
        lam_w = std::max(lam_w, rec.lambda.str().size());
        val_w = std::max(val_w, rec.value.str().size());
    }
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(lam_w) + 2) << "lambda" << std::setw(static_cast<int>(val_w) + 2)
       << "value"
       << "approx (20 digits, approximate)  check\n";
    for (const DimRecord& rec : records) {
        os << std::left << std::setw(static_cast<int>(lam_w) + 2) << rec.lambda.str()
           << std::setw(static_cast<int>(val_w) + 2) << rec.value.str() << std::setw(34)
           << rec.value.approx_decimal(20) << (rec.crosscheck_ok ? "ok" : "FAIL") << '\n';
    }
    return os.str();
}

}  // namespace bcnq
