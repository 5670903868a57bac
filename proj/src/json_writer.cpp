#include "zetasum/json_writer.hpp"

#include <cmath>
#include <cstdio>

namespace zetasum {

std::string JsonWriter::format_double(double d) {
    if (std::isnan(d)) return "null";
    if (std::isinf(d)) return d > 0 ? "1e999" : "-1e999";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", d);
    return buf;
}

void JsonWriter::open(char c) {
    element_prefix();
    out_ += c;
    first_stack_.push_back(true);
}

void JsonWriter::close(char c) {
    out_ += c;
    first_stack_.pop_back();
}

void JsonWriter::element_prefix() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (!first_stack_.empty()) {
        if (!first_stack_.back()) out_ += ',';
        first_stack_.back() = false;
    }
}

void JsonWriter::raw(const std::string& s) {
    element_prefix();
    out_ += s;
}

void JsonWriter::key(const std::string& k) {
    element_prefix();
    out_ += '"';
    for (char c : k) {
        if (c == '"' || c == '\\') out_ += '\\';
        out_ += c;
    }
    out_ += "\":";
    pending_key_ = true;
}

void JsonWriter::value(const std::string& s) {
    element_prefix();
    out_ += '"';
    for (char c : s) {
        if (c == '"' || c == '\\')
            out_ += '\\', out_ += c;
        else if (c == '\n')
            out_ += "\\n";
        else
            out_ += c;
    }
    out_ += '"';
}

void JsonWriter::value(double d) { raw(format_double(d)); }
void JsonWriter::value(long long i) { raw(std::to_string(i)); }
void JsonWriter::value(bool b) { raw(b ? "true" : "false"); }
void JsonWriter::value_null() { raw("null"); }

}  // namespace zetasum
