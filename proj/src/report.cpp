#include "ringrep/report.hpp"

#include <sstream>

namespace ringrep {

Report::Report(std::string check_name) { set("check", check_name); }

void Report::set(const std::string& key, const std::string& value) {
    for (auto& [k, v] : fields_) {
        if (k == key) {
            v = value;
            return;
        }
    }
    fields_.emplace_back(key, value);
}

void Report::set(const std::string& key, long long value) { set(key, std::to_string(value)); }

void Report::add_point(PointClass cls, const std::string& label) {
    auto i = static_cast<std::size_t>(cls);
    ++counts_[i];
    if (witnesses_[i].size() < kMaxWitnesses) witnesses_[i].push_back(label);
}

std::size_t Report::count(PointClass cls) const { return counts_[static_cast<std::size_t>(cls)]; }

const std::vector<std::string>& Report::witnesses(PointClass cls) const {
    return witnesses_[static_cast<std::size_t>(cls)];
}

void Report::force_verdict(Verdict v) {
    forced_ = true;
    forced_verdict_ = v;
}

Report::Verdict Report::verdict() const {
    if (forced_) return forced_verdict_;
    if (count(PointClass::Violated) > 0) return Verdict::Fail;
    if (!has_points()) return Verdict::Pass;
    if (count(PointClass::Verified) > 0) return Verdict::Pass;
    return Verdict::InconclusiveOnly;
}

const char* Report::verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::InconclusiveOnly: return "inconclusive-only";
    }
    return "?";
}

std::string Report::value_of(const std::string& key) const {
    for (const auto& [k, v] : fields_) {
        if (k == key) return v;
    }
    return "";
}

std::string Report::render() const {
    std::ostringstream out;
    for (const auto& [k, v] : fields_) out << k << ": " << v << "\n";
    if (has_points()) {
        static const char* names[3] = {"verified", "violated", "inconclusive"};
        for (int i = 0; i < 3; ++i) out << names[i] << ": " << counts_[i] << "\n";
        for (int i = 0; i < 3; ++i) {
            if (witnesses_[i].empty()) continue;
            out << "witness." << names[i] << ":";
            for (const std::string& w : witnesses_[i]) out << " " << w;
            out << "\n";
        }
    }
    out << "verdict: " << verdict_name(verdict()) << "\n";
    return out.str();
}

} // namespace ringrep
