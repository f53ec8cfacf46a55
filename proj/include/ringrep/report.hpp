#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ringrep {

// Structured verdict of a check. Renders to a line-oriented key/value text
// with stable ordering: preamble pairs in insertion order, then point counts,
// then up to ten witness points per class, then the verdict.
class Report {
public:
    enum class Verdict { Pass, Fail, InconclusiveOnly };
    enum class PointClass { Verified, Violated, Inconclusive };

    static constexpr std::size_t kMaxWitnesses = 10;

    explicit Report(std::string check_name);

    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, long long value);

    void add_point(PointClass cls, const std::string& label);
    std::size_t count(PointClass cls) const;
    const std::vector<std::string>& witnesses(PointClass cls) const;
    bool has_points() const { return counts_[0] + counts_[1] + counts_[2] > 0; }

    // Classification-style reports carry no point sets; they may force a verdict.
    void force_verdict(Verdict v);
    Verdict verdict() const;
    static const char* verdict_name(Verdict v);

    std::string value_of(const std::string& key) const; // "" if absent
    std::string render() const;

private:
    std::vector<std::pair<std::string, std::string>> fields_;
    std::size_t counts_[3] = {0, 0, 0};
    std::vector<std::string> witnesses_[3];
    bool forced_ = false;
    Verdict forced_verdict_ = Verdict::Pass;
};

} // namespace ringrep
