#pragma once
// Surface files (.fs), versioned `flatstrata v1`.
//
//   flatstrata v1
//   mode exact            (optional; "exact" or "float", default exact)
//   tri a b -c            (three directed edge labels, minus = reversed)
//   edge a 1/2 -3/4       (holonomy of the positive direction)
//   marked: a -b          (optional; start vertices of these labels are marked)
//
// Multi-component files concatenate components with `---` separator lines.

#include "flatstrata/surface.hpp"

#include <iosfwd>
#include <string>

namespace flatstrata {

struct io_error : flatstrata_error {
    using flatstrata_error::flatstrata_error;
};

enum class NumericMode { exact, floating };

// Scans the header block; files without a mode line are exact.
NumericMode detect_mode(const std::string& path);
NumericMode detect_mode_text(const std::string& text);

template <class K>
Surface<K> parse_surface(const std::string& text);
template <class K>
MultiSurface<K> parse_multisurface(const std::string& text);

template <class K>
Surface<K> load_surface(const std::string& path);
template <class K>
MultiSurface<K> load_multisurface(const std::string& path);

template <class K>
std::string format_surface(const Surface<K>& s);
template <class K>
std::string format_multisurface(const MultiSurface<K>& m);

template <class K>
void save_surface(const std::string& path, const Surface<K>& s);
template <class K>
void save_multisurface(const std::string& path, const MultiSurface<K>& m);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

const char* version_string();

}  // namespace flatstrata
