#include "abacus/json_io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace abacus {

namespace {

using Json = nlohmann::ordered_json;

template <class Tag>
std::string dump(const PartitionSeries<Tag>& f) {
    Json arr = Json::array();
    for (const auto& [idx, c] : f.terms()) {
        Json rec;
        rec["index"] = idx.vec();
        rec["num"] = c.get_num().get_str();
        rec["den"] = c.get_den().get_str();
        arr.push_back(std::move(rec));
    }
    return arr.dump();
}

template <class Tag>
PartitionSeries<Tag> load(const std::string& text) {
    const auto arr = Json::parse(text);
    if (!arr.is_array()) throw std::invalid_argument("expected a JSON array of terms");
    PartitionSeries<Tag> out;
    for (const auto& rec : arr) {
        Rational c(BigInt(rec.at("num").get<std::string>()), BigInt(rec.at("den").get<std::string>()));
        c.canonicalize();
        out.add(Partition(rec.at("index").get<std::vector<int>>()), c);
    }
    return out;
}

}  // namespace

std::string to_json(const PowerSumPolynomial& f) { return dump(f); }
std::string to_json(const SchurExpansion& s) { return dump(s); }

PowerSumPolynomial power_sum_from_json(const std::string& text) { return load<PowerSumTag>(text); }
SchurExpansion schur_from_json(const std::string& text) { return load<SchurTag>(text); }

}  // namespace abacus
