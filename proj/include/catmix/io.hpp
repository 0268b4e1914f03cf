#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace catmix {

/// Shortest text that round-trips the double ("%.17g").
inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/**
 * CSV with '#'-prefixed metadata lines, then a mandatory header row.
 * Separator ',', decimal '.', one row per record. Output is byte-stable
 * for a fixed config and seed.
 */
class CsvWriter {
public:
    CsvWriter(std::ostream& os, std::vector<std::string> header) : os_(os), header_(std::move(header)) {}

    void meta(const std::string& key, const std::string& value) { os_ << "# " << key << " " << value << "\n"; }

    void start_rows() {
        for (size_t i = 0; i < header_.size(); ++i) os_ << (i ? "," : "") << header_[i];
        os_ << "\n";
    }

    class Row {
    public:
        explicit Row(std::ostream& os) : os_(os) {}
        Row& col(const std::string& s) { sep(); os_ << s; return *this; }
        Row& col(double v) { return col(fmt_double(v)); }
        Row& col(std::int64_t v) { sep(); os_ << v; return *this; }
        ~Row() { os_ << "\n"; }

    private:
        void sep() { if (!first_) os_ << ','; first_ = false; }
        std::ostream& os_;
        bool first_ = true;
    };

    Row row() { return Row(os_); }

private:
    std::ostream& os_;
    std::vector<std::string> header_;
};

} // namespace catmix
