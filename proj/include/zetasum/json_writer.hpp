#pragma once

#include <string>
#include <vector>

namespace zetasum {

// Minimal ordered JSON emitter with fixed 17-significant-digit float
// formatting, so identical runs serialize byte-identically.
class JsonWriter {
  public:
    std::string str() const { return out_; }

    void begin_object() { open('{'); }
    void end_object() { close('}'); }
    void begin_array() { open('['); }
    void end_array() { close(']'); }

    void key(const std::string& k);
    void value(const std::string& s);
    void value(double d);
    void value(long long i);
    void value(bool b);
    void value_null();

    static std::string format_double(double d);

  private:
    void open(char c);
    void close(char c);
    void element_prefix();
    void raw(const std::string& s);

    std::string out_;
    std::vector<bool> first_stack_{};
    bool pending_key_ = false;
};

}  // namespace zetasum
